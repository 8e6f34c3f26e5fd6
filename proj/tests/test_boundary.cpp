#include <doctest.h>

#include "hooklab/boundary.hpp"
#include "hooklab/tableaux.hpp"

using namespace hooklab;

namespace {
Partition P(const char* text) { return Partition::parse(text); }
StrictPartition S(const char* text) { return StrictPartition::parse(text); }
}  // namespace

TEST_CASE("boundary words of small partitions") {
    BoundaryWord empty = BoundaryWord::encode(P("-"));
    CHECK(empty.window().empty());
    CHECK(empty.bit(-1) == 0);
    CHECK(empty.bit(0) == 1);

    BoundaryWord one = BoundaryWord::encode(P("1"));
    CHECK(one.window_start() == -1);
    CHECK(one.window_string() == "10");

    // profile of (6,3,3,1) read from bottom-left, 1 = horizontal
    BoundaryWord w = BoundaryWord::encode(P("6,3,3,1"));
    CHECK(w.window_start() == -4);
    CHECK(w.window_string() == "1011001110");
    CHECK(w.inversion_multiset().count() == 13);
}

TEST_CASE("hook lengths are the 1-before-0 inversion gaps") {
    for (int n = 0; n <= 15; ++n)
        for (const Partition& p : enumerate_partitions(PartitionKind::usual, n)) {
            BoundaryWord w = BoundaryWord::encode(p);
            CHECK(w.decode() == p);
            CHECK(w.inversion_multiset() == cell_statistics(p).hooks);
        }
}

TEST_CASE("window validation") {
    CHECK(BoundaryWord::from_window({0, 1, 0, 1, 1}, -2).decode() == P("1"));
    CHECK(BoundaryWord::from_window({1, 0, 0}, -2).decode() == P("1,1"));
    CHECK_THROWS_AS(BoundaryWord::from_window({1, 0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(BoundaryWord::from_window({1, 0, 1, 0}, -1), std::invalid_argument);
    CHECK_THROWS_AS(BoundaryWord::from_window({1, 2}, 0), std::invalid_argument);
}

TEST_CASE("b offsets") {
    CHECK(b_offsets(P("-"), 3) == std::vector<long long>{0, 1, 2});
    CHECK(b_offsets(P("1"), 2) == std::vector<long long>{2, -1});
    CHECK(b_offsets(P("2"), 3) == std::vector<long long>{0, 4, -1});
}

TEST_CASE("littlewood decomposition worked cases") {
    Decomposition d = littlewood_decompose(P("4,1,1"), 3);
    CHECK(d.core == P("-"));
    CHECK(d.quotient == std::vector<Partition>{P("2"), P("-"), P("-")});
    DDView v = dd_view(d);
    CHECK(v.bar0 == S("1"));
    CHECK(v.quots == std::vector<Partition>{P("-")});
    CHECK(littlewood_recompose(d) == P("4,1,1"));

    Decomposition d22 = littlewood_decompose(P("2,2"), 2);
    CHECK(d22.core == P("-"));
    CHECK(d22.quotient == std::vector<Partition>{P("1"), P("1")});
    SCView v22 = sc_view(d22);
    CHECK(v22.quots == std::vector<Partition>{P("1")});

    Decomposition d33 = littlewood_decompose(P("3,3"), 3);
    CHECK(d33.core == P("-"));
    DDView v33 = dd_view(d33);
    CHECK(v33.bar0 == S("-"));
    CHECK(v33.quots == std::vector<Partition>{P("1")});

    // any t-core decomposes to itself with empty quotient
    for (int t : {2, 3, 4})
        for (int n = 0; n <= 8; ++n)
            for (const Partition& p : enumerate_partitions(PartitionKind::usual, n)) {
                if (!hooks_divisible(p, t).empty()) continue;
                Decomposition dc = littlewood_decompose(p, t);
                CHECK(dc.core == p);
                for (const Partition& q : dc.quotient) CHECK(q.empty());
            }
}

TEST_CASE("littlewood round-trip with P2 and P3") {
    for (int n = 0; n <= 15; ++n)
        for (const Partition& p : enumerate_partitions(PartitionKind::usual, n))
            for (int t = 1; t <= 5; ++t) {
                Decomposition d = littlewood_decompose(p, t);
                CHECK(hooks_divisible(d.core, t).empty());
                CHECK(littlewood_recompose(d) == p);
                int qsize = 0;
                IntMultiset quot_hooks;
                for (const Partition& q : d.quotient) {
                    qsize += q.size();
                    quot_hooks = quot_hooks.united(cell_statistics(q).hooks);
                }
                CHECK(p.size() == d.core.size() + t * qsize);
                IntMultiset scaled;
                IntMultiset divisible = hooks_divisible(p, t);
                for (const auto& [h, mult] : divisible.runs()) scaled.add(h / t, mult);
                CHECK(scaled == quot_hooks);
            }
}

TEST_CASE("recompose rejects a non-core") {
    Decomposition d;
    d.t = 2;
    d.core = P("2");  // hook 2 is divisible by 2
    d.quotient = {P("-"), P("-")};
    CHECK_THROWS_AS(littlewood_recompose(d), std::invalid_argument);
}

TEST_CASE("recompose of worked quotients") {
    CHECK(littlewood_recompose({3, P("-"), {P("2"), P("-"), P("-")}, {}}) == P("4,1,1"));
    CHECK(littlewood_recompose({3, P("-"), {P("-"), P("-"), P("-")}, {}}) == P("-"));
    CHECK(littlewood_recompose({2, P("-"), {P("1"), P("1")}, {}}) == P("2,2"));
}

TEST_CASE("quotient symmetry for the dd and sc families") {
    for (int n = 0; n <= 16; ++n) {
        for (const Partition& p : enumerate_partitions(PartitionKind::dd, n))
            for (int t : {1, 3, 5}) {
                Decomposition d = littlewood_decompose(p, t);
                DDView v = dd_view(d);  // throws on violation
                CHECK(is_doubled_distinct(d.core));
                CHECK(is_doubled_distinct(d.quotient[0]));
                CHECK(double_distinct(v.bar0) == d.quotient[0]);
            }
        for (const Partition& p : enumerate_partitions(PartitionKind::sc, n))
            for (int t : {2, 4}) {
                Decomposition d = littlewood_decompose(p, t);
                SCView v = sc_view(d);
                CHECK(is_self_conjugate(d.core));
                CHECK(static_cast<int>(v.quots.size()) == t / 2);
            }
    }
    // a non-dd partition fails the symmetric view
    CHECK_THROWS_AS(dd_view(littlewood_decompose(P("2,1"), 3)), std::invalid_argument);
}

TEST_CASE("size and divisible-hook count detect the empty core") {
    for (int t = 1; t <= 4; ++t)
        for (int n = 1; 2 * n * t <= 20; ++n)
            for (const Partition& p : enumerate_partitions(PartitionKind::usual, 2 * n * t)) {
                bool empty_core = littlewood_decompose(p, t).core.empty();
                bool match = hooks_divisible(p, t).count() == 2 * n;
                CHECK(empty_core == match);
            }
}

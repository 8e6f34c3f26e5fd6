#include <doctest.h>

#include "hooklab/corners.hpp"

using namespace hooklab;

namespace {
Partition P(const char* text) { return Partition::parse(text); }
StrictPartition S(const char* text) { return StrictPartition::parse(text); }
}  // namespace

TEST_CASE("corner contents of usual diagrams") {
    Corners c0 = corners(P("-"));
    CHECK(c0.xs == std::vector<long long>{0});
    CHECK(c0.ys.empty());

    Corners c = corners(P("6,3,3,1"));
    CHECK(c.xs == std::vector<long long>{-4, -2, 2, 6});
    CHECK(c.ys == std::vector<long long>{-3, 0, 5});

    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : enumerate_partitions(PartitionKind::usual, n)) {
            Corners cc = corners(p);
            REQUIRE(cc.xs.size() == cc.ys.size() + 1);
            for (size_t i = 0; i < cc.ys.size(); ++i) {
                CHECK(cc.xs[i] < cc.ys[i]);
                CHECK(cc.ys[i] < cc.xs[i + 1]);
            }
        }
}

TEST_CASE("corner contents of shifted diagrams") {
    Corners c = corners(S("7,5,4,1"));
    CHECK(c.xs == std::vector<long long>{1, 2, 6, 8});
    CHECK(c.ys == std::vector<long long>{1, 4, 7});
    CHECK(c.row0_blocked);

    Corners c21 = corners(S("2,1"));
    CHECK(c21.xs == std::vector<long long>{1, 3});
    CHECK(c21.ys == std::vector<long long>{1});
    CHECK(c21.row0_blocked);

    Corners c2 = corners(S("2"));
    CHECK(c2.xs == std::vector<long long>{1, 3});
    CHECK(c2.ys == std::vector<long long>{2});
    CHECK_FALSE(c2.row0_blocked);

    for (int n = 0; n <= 14; ++n)
        for (const StrictPartition& s : strict_partitions_of(n)) {
            Corners cc = corners(s);
            REQUIRE(cc.xs.size() == cc.ys.size() + 1);
            CHECK(cc.xs[0] == 1);
            if (!cc.ys.empty()) CHECK(cc.xs[0] <= cc.ys[0]);
            for (size_t i = 0; i < cc.ys.size(); ++i) {
                if (i > 0) CHECK(cc.xs[i] < cc.ys[i]);
                CHECK(cc.ys[i] < cc.xs[i + 1]);
            }
            CHECK(cc.row0_blocked == (!s.empty() && s.parts().back() == 1));
            CHECK(cc.row0_blocked == (!cc.ys.empty() && cc.ys[0] == 1));
        }
}

TEST_CASE("box insertion by content") {
    CHECK(add_box(P("-"), 0) == P("1"));
    CHECK(add_box(P("3,3"), 3) == P("4,3"));
    CHECK(add_box(P("3,3"), -2) == P("3,3,1"));  // new-row corner
    CHECK_THROWS_AS(add_box(P("3,3"), 2), std::invalid_argument);

    CHECK(add_box(S("2,1"), 3) == S("3,1"));
    CHECK_THROWS_AS(add_box(S("2,1"), 1), std::invalid_argument);  // row 0 blocked
    CHECK(add_box(S("2"), 1) == S("2,1"));
    CHECK_THROWS_AS(add_box(S("2"), 2), std::invalid_argument);

    // every reported inner corner really inserts, and corners update by the
    // four-case analysis (checked through the multiset identity)
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : enumerate_partitions(PartitionKind::usual, n)) {
            Corners c = corners(p);
            for (long long x : c.xs) {
                Partition plus = add_box(p, x);
                CHECK(plus.size() == p.size() + 1);
                Corners cp = corners(plus);
                IntMultiset lhs = IntMultiset::of({});
                for (long long v : cp.xs) lhs.add(v);
                lhs.add(x, 2);
                for (long long v : c.ys) lhs.add(v);
                IntMultiset rhs = IntMultiset::of({});
                for (long long v : c.xs) rhs.add(v);
                rhs.add(x + 1);
                rhs.add(x - 1);
                for (long long v : cp.ys) rhs.add(v);
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("corners of the doubled diagram against shifted corners") {
    for (int n = 0; n <= 12; ++n)
        for (const StrictPartition& s : strict_partitions_of(n)) {
            Corners cs = corners(s);
            Corners cd = corners(double_distinct(s));
            IntMultiset lhs = IntMultiset::of({});
            for (long long v : cd.xs) lhs.add(v);
            IntMultiset rhs = IntMultiset::of({0});
            for (long long v : cd.ys) rhs.add(v);
            for (int j = 1; j <= cs.m(); ++j) {
                lhs.add(cs.ys[j - 1]);
                lhs.add(1 - cs.ys[j - 1]);
                rhs.add(cs.xs[j]);
                rhs.add(1 - cs.xs[j]);
            }
            CHECK(lhs == rhs);
        }
}

TEST_CASE("strict insertion ratios") {
    InsertionResult r1 = strict_insertion(S("2,1"), 1);
    CHECK(r1.inserted == S("3,1"));
    CHECK(r1.ratio == make_rational(1, 2));
    CHECK(shifted_hook_product(S("2,1")) == 6);
    CHECK(shifted_hook_product(S("3,1")) == 12);

    InsertionResult r0 = strict_insertion(S("2"), 0);
    CHECK(r0.inserted == S("2,1"));
    CHECK(r0.ratio == make_rational(1, 3));

    InsertionResult r2 = strict_insertion(S("1"), 1);
    CHECK(r2.inserted == S("2"));
    CHECK(r2.ratio == make_rational(1, 2));

    CHECK_THROWS_AS(strict_insertion(S("2,1"), 0), std::invalid_argument);
    CHECK_THROWS_AS(strict_insertion(S("2"), 5), std::invalid_argument);
}

TEST_CASE("strict insertion hook identity across the range") {
    for (int n = 0; n <= 10; ++n)
        for (const StrictPartition& s : strict_partitions_of(n)) {
            Corners c = corners(s);
            for (int i = 0; i <= c.m(); ++i) {
                if (i == 0 && c.row0_blocked) continue;
                InsertionResult res = strict_insertion(s, i);  // witness self-checks
                CHECK(res.witness.lhs == res.witness.rhs);
                CHECK(res.ratio == make_rational(shifted_hook_product(s),
                                                 shifted_hook_product(res.inserted)));
            }
        }
}

#include <doctest.h>

#include "hooklab/diffops.hpp"

using namespace hooklab;

namespace {

Partition P(const char* text) { return Partition::parse(text); }
StrictPartition S(const char* text) { return StrictPartition::parse(text); }

StrictFn inv_h() {
    return [](const StrictPartition& s) {
        return make_rational(BigInt(1), shifted_hook_product(s));
    };
}

StrictFn p1_over_h() {
    return [](const StrictPartition& s) -> Rational {
        return p_delta(s, Partition(std::vector<int>{1})) / Rational(shifted_hook_product(s));
    };
}

std::vector<StrictPartition> strict_up_to(int maxsize) {
    std::vector<StrictPartition> out;
    for (int n = 0; n <= maxsize; ++n)
        for (const StrictPartition& s : strict_partitions_of(n)) out.push_back(s);
    return out;
}

}  // namespace

TEST_CASE("dbar on worked cases") {
    CHECK(dbar(inv_h(), S("2")) == 0);
    CHECK(dbar(p1_over_h(), S("2")) == make_rational(29, 2));
    CHECK(p1_over_h()(S("3")) == make_rational(55, 6));
    CHECK(p1_over_h()(S("2,1")) == make_rational(43, 6));
    CHECK(p1_over_h()(S("2")) == 11);
}

TEST_CASE("dbar annihilates 1/H") {
    for (const StrictPartition& s : strict_up_to(12)) CHECK(dbar(inv_h(), s) == 0);
}

TEST_CASE("dbar chain on p1/H") {
    for (const StrictPartition& s : strict_up_to(10)) {
        DbarOperator op(p1_over_h());
        Rational h(shifted_hook_product(s));
        CHECK(h * op.power(s, 1) == make_rational(12 * s.size() + 5));
        CHECK(h * op.power(s, 2) == 12);
    }
    for (const StrictPartition& s : strict_up_to(8)) {
        DbarOperator op(p1_over_h());
        CHECK(op.power(s, 3) == 0);
    }
}

TEST_CASE("dbar nullity for products of hook powers and corner statistics") {
    // r = |delta| + len(delta) + |nu| + 1 kills p^delta * Phi^nu / H
    std::vector<std::pair<Partition, Partition>> cases;
    for (const Partition& delta :
         {P("-"), P("1"), P("2")})
        for (const Partition& nu : {P("-"), P("1"), P("2"), P("3"), P("1,1")}) {
            int r = delta.size() + delta.length() + nu.size() + 1;
            if (r > 4) continue;
            cases.emplace_back(delta, nu);
        }
    for (const auto& [delta, nu] : cases) {
        int r = delta.size() + delta.length() + nu.size() + 1;
        StrictFn g = [delta, nu](const StrictPartition& s) -> Rational {
            return p_delta(s, delta) * phi(s, nu) / Rational(shifted_hook_product(s));
        };
        for (const StrictPartition& s : strict_up_to(8)) {
            DbarOperator op(g);
            CHECK(op.power(s, r) == 0);
        }
    }
}

TEST_CASE("member construction and one-step extensions") {
    Member m = Member::of(P("4,1,1"), FamilyTag(Family::dd, 3));
    CHECK(m.bar0 == S("1"));
    CHECK(m.quotient_mass() == 1);
    CHECK(m.G() == make_rational(1, 3));

    Member empty = Member::of(P("-"), FamilyTag(Family::dd, 3));
    std::vector<Member> ups = one_step_extensions(empty);
    REQUIRE(ups.size() == 2);  // bar0 <- (1), or a box in the conjugate pair
    CHECK(ups[0].whole == P("4,1,1"));
    CHECK(ups[1].whole == P("3,3"));

    Member sc_empty = Member::of(P("-"), FamilyTag(Family::sc, 2));
    std::vector<Member> sc_ups = one_step_extensions(sc_empty);
    REQUIRE(sc_ups.size() == 1);
    CHECK(sc_ups[0].whole == P("2,2"));

    CHECK_THROWS_AS(Member::of(P("2,1"), FamilyTag(Family::dd, 3)), std::invalid_argument);
}

TEST_CASE("dt annihilates G") {
    CHECK(dt(g_weight_G(), Member::of(P("-"), FamilyTag(Family::dd, 3))) == 0);
    CHECK(dt(g_weight_G(), Member::of(P("-"), FamilyTag(Family::sc, 2))) == 0);
    for (auto [fam, t, maxn] : std::vector<std::tuple<Family, int, int>>{
             {Family::dd, 1, 5}, {Family::dd, 3, 3}, {Family::sc, 2, 4}, {Family::sc, 4, 2}}) {
        Member mu = Member::of(P("-"), FamilyTag(fam, t));
        for (int n = 0; n <= maxn; ++n)
            for (const Member& m : superelements(mu, n)) CHECK(dt(g_weight_G(), m) == 0);
    }
}

TEST_CASE("dt chain for G times content squares") {
    for (auto [fam, t] : std::vector<std::pair<Family, int>>{
             {Family::dd, 1}, {Family::dd, 3}, {Family::sc, 2}}) {
        MemberFn g = g_product(g_weight_G(), g_expr(StatisticExpr::parse("csum(2)")));
        long long tt = t;
        Rational constant = fam == Family::dd ? make_rational(tt * (tt * tt + 2), 3)
                                              : make_rational(tt * (tt * tt - 1), 3);
        Member mu = Member::of(P("-"), FamilyTag(fam, t));
        for (int n = 0; 2 * n * tt <= 12; ++n)
            for (const Member& m : superelements(mu, n)) {
                DtOperator op(g);
                Rational G = m.G();
                CHECK(op.power(m, 1) / G == make_rational(2 * tt * m.whole.size()) + constant);
                CHECK(op.power(m, 2) / G == make_rational(4 * tt * tt));
                CHECK(op.power(m, 3) == 0);
            }
    }
    // the smallest concrete value: one box from empty at t = 1
    MemberFn g = g_product(g_weight_G(), g_expr(StatisticExpr::parse("csum(2)")));
    CHECK(dt(g, Member::of(P("-"), FamilyTag(Family::dd, 1))) == 1);
}

TEST_CASE("partition sums") {
    CHECK(partition_sum_P_strict(S("-"), inv_h(), 3) == 1);

    MemberFn g_h2 = g_product(g_weight_G(), g_expr(StatisticExpr::parse("hsum(1)")));
    Member mu1 = Member::of(P("-"), FamilyTag(Family::dd, 1));
    CHECK(partition_sum_P(mu1, g_h2, 1) == 5);
    CHECK(partition_sum_P(mu1, g_h2, 2) == 22);
    CHECK(partition_sum_P(mu1, g_h2, 3) == 51);

    // P(mu, G; n) telescopes to G_mu for every family
    for (auto [fam, t, mu_text] : std::vector<std::tuple<Family, int, const char*>>{
             {Family::dd, 1, "2"}, {Family::dd, 3, "2"}, {Family::sc, 2, "2,1"}}) {
        Member mu = Member::of(P(mu_text), FamilyTag(fam, t));
        for (int n = 0; n <= 3; ++n) CHECK(partition_sum_P(mu, g_weight_G(), n) == mu.G());
    }
}

TEST_CASE("telescope identities") {
    Member dd3 = Member::of(P("-"), FamilyTag(Family::dd, 3));
    TelescopeReport r1 = telescope_verify(dd3, g_weight_G(), 2);
    CHECK(r1.pass);

    TelescopeReport r2 = telescope_verify_strict(S("2,1"), inv_h(), 2);
    CHECK(r2.pass);

    MemberFn g_h2 = g_product(g_weight_G(), g_expr(StatisticExpr::parse("hsum(1)")));
    Member dd1 = Member::of(P("-"), FamilyTag(Family::dd, 1));
    TelescopeReport r3 = telescope_verify(dd1, g_h2, 3);
    CHECK(r3.pass);
    // the same sequence is the quadratic 12*C(n,2) + 5n
    for (int n = 0; n <= 4; ++n)
        CHECK(partition_sum_P(dd1, g_h2, n) ==
              make_rational(6) * make_rational(n) * make_rational(n) - make_rational(n));
}

TEST_CASE("polynomial printing and evaluation") {
    PolynomialQ p{{make_rational(0), make_rational(-1), make_rational(6)}};
    CHECK(p.str() == "6n^2 - n");
    CHECK(p.eval(make_rational(3)) == 51);
    CHECK(p.degree() == 2);

    PolynomialQ zero{};
    CHECK(zero.str() == "0");
    CHECK(zero.degree() == -1);

    PolynomialQ mixed{{make_rational(5), make_rational(1), make_rational(-3, 2)}};
    CHECK(mixed.str() == "-(3/2)n^2 + n + 5");

    PolynomialQ trailing{{make_rational(2), make_rational(0), make_rational(0)}};
    trailing.trim();
    CHECK(trailing.degree() == 0);
    CHECK(trailing.str() == "2");
}

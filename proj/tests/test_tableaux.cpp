#include <doctest.h>

#include "hooklab/diffops.hpp"
#include "hooklab/tableaux.hpp"

using namespace hooklab;

namespace {
Partition P(const char* text) { return Partition::parse(text); }
StrictPartition S(const char* text) { return StrictPartition::parse(text); }
}  // namespace

TEST_CASE("straight and skew tableau counts") {
    CHECK(count_syt(P("-")) == 1);
    CHECK(count_syt_shifted(S("-")) == 1);
    CHECK(count_syt_shifted(S("3,1")) == 2);  // 4!/12
    CHECK(count_syt(P("2,1"), P("1")) == 2);
    CHECK(count_syt(P("3,2")) == 5);
    CHECK_THROWS_AS(count_syt(P("2"), P("1,1")), std::invalid_argument);
    CHECK_THROWS_AS(count_syt_shifted(S("2"), S("3")), std::invalid_argument);
}

TEST_CASE("chain counting agrees with the hook formulas on straight shapes") {
    for (int n = 0; n <= 10; ++n) {
        for (const Partition& p : enumerate_partitions(PartitionKind::usual, n))
            CHECK(count_syt_by_chains(p) == count_syt(p));
        for (const StrictPartition& s : strict_partitions_of(n))
            CHECK(count_syt_shifted_by_chains(s) == count_syt_shifted(s));
    }
}

TEST_CASE("squared shifted counts sum to n! over strict partitions") {
    for (int n = 0; n <= 10; ++n) {
        BigInt sum = 0;
        for (const StrictPartition& s : strict_partitions_of(n)) {
            BigInt f = count_syt_shifted(s);
            sum += int_pow(BigInt(2), static_cast<unsigned long>(n - s.length())) * f * f;
        }
        CHECK(sum == factorial(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("family tags enforce parity") {
    CHECK_NOTHROW(FamilyTag(Family::dd, 3));
    CHECK_NOTHROW(FamilyTag(Family::sc, 4));
    CHECK_THROWS_AS(FamilyTag(Family::dd, 2), std::invalid_argument);
    CHECK_THROWS_AS(FamilyTag(Family::sc, 3), std::invalid_argument);
    CHECK_THROWS_AS(FamilyTag(Family::dd, 0), std::invalid_argument);
}

TEST_CASE("skew weight F, worked cases") {
    FamilyTag dd3(Family::dd, 3);
    CHECK(skew_weight_F(P("4,1,1"), P("-"), dd3) == 1);
    CHECK(skew_weight_F(P("3,3"), P("3,3"), dd3) == 1);
    CHECK(skew_weight_F(P("2"), P("2"), FamilyTag(Family::dd, 1)) == 1);
    // dd at t = 1 reduces to the shifted count of bar0
    for (int n = 0; n <= 6; ++n)
        for (const Partition& p : enumerate_partitions(PartitionKind::dd, 2 * n))
            CHECK(skew_weight_F(p, P("-"), FamilyTag(Family::dd, 1)) ==
                  count_syt_shifted(strict_from_double_distinct(p)));
    CHECK_THROWS_AS(skew_weight_F(P("2"), P("3,3"), FamilyTag(Family::dd, 1)),
                    std::invalid_argument);
    // different cores are not comparable
    CHECK_THROWS_AS(skew_weight_F(P("4,1,1"), P("2"), dd3), std::invalid_argument);
}

TEST_CASE("closed multinomial F equals its defining recursion") {
    FamilyTag dd3(Family::dd, 3);
    for (const char* mu_text : {"-", "2"}) {
        Partition mu = P(mu_text);
        Member base = Member::of(mu, dd3);
        for (int n = 0; n <= 2; ++n)
            for (const Member& lam : superelements(base, n))
                CHECK(skew_weight_F(lam.whole, mu, dd3) ==
                      skew_weight_F_recursive(lam.whole, mu, dd3));
    }
    FamilyTag sc2(Family::sc, 2);
    Member base = Member::of(P("-"), sc2);
    for (int n = 0; n <= 3; ++n)
        for (const Member& lam : superelements(base, n))
            CHECK(skew_weight_F(lam.whole, P("-"), sc2) ==
                  skew_weight_F_recursive(lam.whole, P("-"), sc2));
}

TEST_CASE("weight G, worked cases") {
    FamilyTag dd3(Family::dd, 3);
    CHECK(weight_G(P("2"), dd3) == 1);  // a 3-core
    CHECK(weight_G(P("4,1,1"), dd3) == make_rational(1, 3));
    CHECK(weight_G(P("3,3"), dd3) == make_rational(2, 3));
    CHECK(weight_G(P("2,2"), FamilyTag(Family::sc, 2)) == 1);
    CHECK(weight_G(P("-"), dd3) == 1);
    CHECK_THROWS_AS(weight_G(P("2,1"), dd3), std::invalid_argument);  // not dd
}

TEST_CASE("bridging identity F*G = (2t)^n n! / H_t on empty cores") {
    for (auto [fam, t] : std::vector<std::pair<Family, int>>{
             {Family::dd, 1}, {Family::dd, 3}, {Family::sc, 2}, {Family::sc, 4}}) {
        FamilyTag tag(fam, t);
        Member mu = Member::of(P("-"), tag);
        for (int n = 0; n <= 3; ++n)
            for (const Member& lam : superelements(mu, n)) {
                Rational fg = Rational(skew_weight_F(lam.whole, P("-"), tag)) * lam.G();
                Rational rhs = make_rational(
                    int_pow(2 * t, static_cast<unsigned long>(n)) *
                        factorial(static_cast<unsigned long>(n)),
                    hook_product_divisible(lam.whole, t));
                CHECK(fg == rhs);
            }
    }
}

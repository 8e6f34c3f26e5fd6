#pragma once

#include <vector>

#include "hooklab/partition.hpp"
#include "hooklab/rational.hpp"

namespace hooklab {

bool contains(const Partition& outer, const Partition& inner);
bool contains(const StrictPartition& outer, const StrictPartition& inner);

// Straight shapes use the hook formula n!/H; skew shapes are counted by
// memoized dynamic programming over one-box chains.  Throws
// std::invalid_argument("not contained") when base is not inside shape.
BigInt count_syt(const Partition& shape, const Partition& base = Partition());
BigInt count_syt_shifted(const StrictPartition& shape, const StrictPartition& base = StrictPartition());

// Chain-counting path exposed on its own, so the straight-shape agreement
// with the hook formula is testable.
BigInt count_syt_by_chains(const Partition& shape, const Partition& base = Partition());
BigInt count_syt_shifted_by_chains(const StrictPartition& shape,
                                   const StrictPartition& base = StrictPartition());

enum class Family { dd, sc };

// dd requires odd t, sc requires even t.
struct FamilyTag {
    Family family;
    int t;
    FamilyTag(Family family, int t);
};

BigInt multinomial(const std::vector<int>& sizes);

// Skew weights over folded quotient components.  n in all weights is the
// total component mass (quotient boxes), never |lambda|.
BigInt skew_F_dd(const StrictPartition& bar0, const std::vector<Partition>& quots,
                 const StrictPartition& mu_bar0, const std::vector<Partition>& mu_quots);
BigInt skew_F_sc(const std::vector<Partition>& quots, const std::vector<Partition>& mu_quots);

Rational weight_G_dd(const StrictPartition& bar0, const std::vector<Partition>& quots, int t);
Rational weight_G_sc(const std::vector<Partition>& quots, int t);

// Partition-level entry points; both partitions are decomposed at t and must
// share their core with componentwise containment ("not >=_t comparable").
BigInt skew_weight_F(const Partition& lam, const Partition& mu, FamilyTag tag);
Rational weight_G(const Partition& lam, FamilyTag tag);

// Defining recursion F(mu/mu) = 1, F(lam/mu) = sum over lam- of F(lam-/mu);
// oracle for the closed multinomial form.
BigInt skew_weight_F_recursive(const Partition& lam, const Partition& mu, FamilyTag tag);

}  // namespace hooklab

#pragma once

#include <string>
#include <vector>

#include "hooklab/multiset.hpp"
#include "hooklab/partition.hpp"

namespace hooklab {

// Canonical bi-infinite 0/1 code of a partition profile, read along the
// profile from bottom-left to top-right with 1 = horizontal and 0 = vertical.
// Implicit 0s precede the window and implicit 1s follow it.  Position 0 is
// the first letter at or after the dot, fixed by the balance condition
// #{i <= -1 : a_i = 1} = #{i >= 0 : a_i = 0}.
//
// The letter at position i is 0 exactly when i = p_j - j for some row j,
// which makes the hook multiset equal the multiset of inversion gaps
// { y - x : x < y, a_x = 1, a_y = 0 }.
class BoundaryWord {
  public:
    BoundaryWord() = default;  // empty partition

    static BoundaryWord encode(const Partition& p);
    // Validates the balance condition; throws std::invalid_argument otherwise.
    static BoundaryWord from_window(std::vector<int> bits, long long start);

    Partition decode() const;

    int bit(long long pos) const;  // with implicit tails
    long long window_start() const { return start_; }
    const std::vector<int>& window() const { return window_; }
    std::string window_string() const;

    IntMultiset inversion_multiset() const;  // equals the hook multiset

    bool operator==(const BoundaryWord&) const = default;

  private:
    std::vector<int> window_;  // minimal: starts with 1, ends with 0
    long long start_ = 0;
};

// t-core plus t-quotient, with the b-offsets of the core word.
struct Decomposition {
    int t = 1;
    Partition core;
    std::vector<Partition> quotient;   // size t
    std::vector<long long> b_offsets;  // b_i = min{ j = i mod t : a_core(j) = 1 }
};

Decomposition littlewood_decompose(const Partition& p, int t);
// Exact inverse; throws std::invalid_argument if d.core is not a t-core.
Partition littlewood_recompose(const Decomposition& d);

std::vector<long long> b_offsets(const Partition& core, int t);

// Folded views for the symmetric families.
struct DDView {
    StrictPartition core_strict;     // core = double_distinct(core_strict)
    StrictPartition bar0;            // quotient[0] = double_distinct(bar0)
    std::vector<Partition> quots;    // quotient[1..t'], t = 2t'+1
};

struct SCView {
    Partition core_sc;
    std::vector<Partition> quots;    // quotient[0..t'-1], t = 2t'
};

// Throw std::invalid_argument ("symmetry violated") when the conjugation
// pattern of the quotient does not match the family.
DDView dd_view(const Decomposition& d);
SCView sc_view(const Decomposition& d);

// Rebuild full decompositions from folded components over a given core.
Decomposition from_dd_view(const Partition& core, const StrictPartition& bar0,
                           const std::vector<Partition>& quots, int t);
Decomposition from_sc_view(const Partition& core, const std::vector<Partition>& quots, int t);

}  // namespace hooklab

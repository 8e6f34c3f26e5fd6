#pragma once

#include <vector>

#include "hooklab/multiset.hpp"
#include "hooklab/partition.hpp"
#include "hooklab/rational.hpp"

namespace hooklab {

enum class DiagramKind { usual, shifted };

// Contents of addable (xs, m+1 of them) and removable (ys, m of them) boxes.
// usual:   x0 < y1 < x1 < ... < ym < xm
// shifted: x0 = 1 <= y1 < x1 < ... < ym < xm, with x0 insertion blocked
//          exactly when the smallest part is 1 (then y1 = 1 too).
struct Corners {
    DiagramKind kind = DiagramKind::usual;
    std::vector<long long> xs;
    std::vector<long long> ys;
    bool row0_blocked = false;

    int m() const { return static_cast<int>(ys.size()); }
};

Corners corners(const Partition& p);
Corners corners(const StrictPartition& s);

// Add the box of content x; throws std::invalid_argument if x is not an inner
// corner (or the shifted row-0 insertion is blocked).
Partition add_box(const Partition& p, long long x);
StrictPartition add_box(const StrictPartition& s, long long x);

// Hook multiset identity relating s and s with one box inserted at corner
// index i, together with the closed-form ratio H(s)/H(s+box).
struct InsertionWitness {
    IntMultiset lhs;  // H(s) side
    IntMultiset rhs;  // H(s+box) side
};

struct InsertionResult {
    StrictPartition inserted;
    Rational ratio;  // H(s)/H(inserted), from the corner closed form
    InsertionWitness witness;
};

// i in [0, m]; throws if the insertion is illegal, or signals std::logic_error
// if the witness multisets fail to agree (implementation bug).
InsertionResult strict_insertion(const StrictPartition& s, int i);

}  // namespace hooklab

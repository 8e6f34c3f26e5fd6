#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hooklab/boundary.hpp"
#include "hooklab/corners.hpp"
#include "hooklab/multiset.hpp"
#include "hooklab/partition.hpp"
#include "hooklab/rational.hpp"

namespace hooklab {

// Exponent multi-index: a plain partition, empty = the empty product.
using IndexPartition = Partition;

// Single power sum of the difference alphabet A - B, with 0^0 = 1, so
// exponent 0 gives |A| - |B|.
Rational psi_power(const std::vector<Rational>& A, const std::vector<Rational>& B, unsigned k);
// Product over the exponents of nu (empty nu = 1).
Rational psi(const std::vector<Rational>& A, const std::vector<Rational>& B,
             const IndexPartition& nu);
// Psi over the inner/outer corner contents of a usual partition.
Rational psi_corners(const Partition& p, const IndexPartition& nu);
// Psi over the binomial-transformed shifted corner contents {C(x,2)},{C(y,2)}.
Rational phi(const StrictPartition& s, const IndexPartition& nu);
// Psi^delta({h^2 : h in H(ss)}, {}) computed both directly and through the
// reduction 2*sum h^{2k} + (4^k-1)*sum parts^{2k}; the two must agree.
Rational p_delta(const StrictPartition& s, const IndexPartition& delta);

// Integer table a_ij with (x-y)^{2k} + (x+y-1)^{2k} = sum a_ij C(x,2)^i C(y,2)^j.
class CoeffTable {
  public:
    CoeffTable() = default;
    explicit CoeffTable(int k, std::map<std::pair<int, int>, BigInt> entries);
    int k() const { return k_; }
    BigInt coeff(int i, int j) const;
    const std::map<std::pair<int, int>, BigInt>& entries() const { return entries_; }
    Rational evaluate(const Rational& cx, const Rational& cy) const;

  private:
    int k_ = 0;
    std::map<std::pair<int, int>, BigInt> entries_;
};

// Construction is checked by evaluation at (2k+2)^2 generic rational points.
CoeffTable pair_power_coeffs(int k);

// sum_i a_i^k prod_j (a_i - b_j) / prod_{j != i} (a_i - a_j), exact.
Rational lagrange_corner_sum(const std::vector<Rational>& a, const std::vector<Rational>& b,
                             int k);

// ---- closed-form hook/content deltas under one quotient-box addition ----

struct HookDeltaMode {
    enum Kind { all, residue_0, residue_pair };
    Kind kind = all;
    int k = 0;  // residue_pair: 1 <= k <= t-1, classes k and t-k together
    static HookDeltaMode All() { return {all, 0}; }
    static HookDeltaMode Residue0() { return {residue_0, 0}; }
    static HookDeltaMode ResiduePair(int k) { return {residue_pair, k}; }
};

// Change of sum of h^{2r} over the selected hook classes when one box of
// content `content` is added to quotient `quotient_index`.  r >= 1 (the
// closed forms contain 0^{2r} terms that are ill-defined at r = 0).
Rational hook_power_delta(const Decomposition& d, int quotient_index, long long content, int r,
                          HookDeltaMode mode);
// Doubled distinct move (t odd): folded_index 0 inserts into bar0 at a
// shifted corner content (two boxes land in quotient 0 at contents c, 1-c);
// folded_index i in 1..t' inserts the conjugate pair into quotients i, t-i.
Rational hook_power_delta_dd(const Decomposition& d, int folded_index, long long content, int r,
                             HookDeltaMode mode);
// Self-conjugate move (t even): folded_index i in 0..t'-1 plus the mirrored
// box in quotient t-1-i at content -c.
Rational hook_power_delta_sc(const Decomposition& d, int folded_index, long long content, int r,
                             HookDeltaMode mode);

// New contents created by the same moves.
IntMultiset content_delta(const Decomposition& d, int quotient_index, long long content);
IntMultiset content_delta_dd(const Decomposition& d, int folded_index, long long content);
IntMultiset content_delta_sc(const Decomposition& d, int folded_index, long long content);

// ---- the statistic-expression language used by the CLI ----
//
//   expr := atom ("*" atom)*
//   atom := name "(" int ("," int)? ")"
//   name := "hsum" | "csum" | "const"
//
// hsum(k, j): sum of h^{2k} over hooks h = +-j (mod t); csum(k, j): sum of
// c^k over contents c = j (mod t); omitted j means no residue filter.

class ExprParseError : public std::runtime_error {
  public:
    ExprParseError(size_t position, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " +
                             message),
          position(position) {}
    size_t position;
};

struct StatAtom {
    enum Kind { hsum, csum, constant };
    Kind kind = constant;
    int k = 0;
    std::optional<int> residue;
    Rational value;  // constant atoms
};

class StatisticExpr {
  public:
    StatisticExpr() = default;
    static StatisticExpr parse(std::string_view text);
    static StatisticExpr from_atoms(std::vector<StatAtom> atoms);

    Rational evaluate(const IntMultiset& hooks, const IntMultiset& contents, int t) const;
    Rational evaluate(const Partition& p, int t) const;
    Rational evaluate_shifted(const StrictPartition& s, int t) const;

    // Degree bound of the fitted polynomial: sum over atoms of k+1 (hsum)
    // and (k+2)/2 (csum); constants contribute 0.
    Rational degree_bound() const;

    const std::vector<StatAtom>& atoms() const { return atoms_; }
    std::string str() const;

  private:
    std::vector<StatAtom> atoms_;
};

}  // namespace hooklab

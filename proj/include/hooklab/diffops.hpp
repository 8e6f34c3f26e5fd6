#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hooklab/boundary.hpp"
#include "hooklab/partition.hpp"
#include "hooklab/rational.hpp"
#include "hooklab/stats.hpp"
#include "hooklab/tableaux.hpp"

namespace hooklab {

// A doubled distinct (t odd) or self-conjugate (t even) partition carried
// with its folded Littlewood components, so weights and one-box moves never
// rescan the full diagram.
struct Member {
    explicit Member(FamilyTag tag_) : tag(tag_) {}

    FamilyTag tag;
    Partition whole;
    Partition core;
    StrictPartition bar0;          // dd only
    std::vector<Partition> quots;  // dd: components 1..t'; sc: components 0..t'-1

    static Member of(const Partition& lam, FamilyTag tag);
    static Member from_components(const Partition& core, const StrictPartition& bar0,
                                  std::vector<Partition> quots, FamilyTag tag);

    Rational G() const;
    int quotient_mass() const;  // folded mass n

    Decomposition decomposition() const;
};

using MemberFn = std::function<Rational(const Member&)>;
using StrictFn = std::function<Rational(const StrictPartition&)>;

MemberFn g_const(Rational q);
MemberFn g_weight_G();
MemberFn g_expr(StatisticExpr expr);  // evaluated on the whole diagram, mod t
MemberFn g_product(MemberFn a, MemberFn b);

// All lam+ >= lam with |lam+ / lam| = 2t: one strict insertion into bar0 or
// one usual box into a folded usual component.
std::vector<Member> one_step_extensions(const Member& m);

// Difference operator for strict diagrams:
//   Dbar g(s) = 2 sum_{i=1..m} g(s^{i+}) + g(s^{0+}) - g(s),
// where the s^{0+} term contributes 0 when the row-0 insertion is blocked.
Rational dbar(const StrictFn& g, const StrictPartition& s);

// Memoizes D^k within one operator instance.
class DbarOperator {
  public:
    explicit DbarOperator(StrictFn g) : g_(std::move(g)) {}
    Rational power(const StrictPartition& s, int k);

  private:
    StrictFn g_;
    std::map<std::pair<std::string, int>, Rational> memo_;
};

// D_t g(lam) = sum over one-step extensions of g - g(lam).
Rational dt(const MemberFn& g, const Member& m);

class DtOperator {
  public:
    explicit DtOperator(MemberFn g) : g_(std::move(g)) {}
    Rational power(const Member& m, int k);

  private:
    MemberFn g_;
    std::map<std::pair<std::string, int>, Rational> memo_;
};

// All lam >=_t mu with folded quotient mass |mu| + n, by distributing n boxes
// over the folded components.
std::vector<Member> superelements(const Member& mu, int n);
// P(mu, g; n) = sum F_{lam/mu} g(lam) over the above.
Rational partition_sum_P(const Member& mu, const MemberFn& g, int n);

std::vector<StrictPartition> strict_superpartitions(const StrictPartition& mu, int n);
// Strict analogue with weight 2^{|l|-|m|-len(l)+len(m)} f_{l/m}.
Rational partition_sum_P_strict(const StrictPartition& mu, const StrictFn& g, int n);

// Coefficients over Q in the variable n, constant term first, trimmed.
struct PolynomialQ {
    std::vector<Rational> coeffs;

    int degree() const;  // -1 for the zero polynomial
    Rational eval(const Rational& n) const;
    std::string str() const;  // "6n^2 - n"
    void trim();

    bool operator==(const PolynomialQ&) const = default;
};

struct TelescopeReport {
    bool pass = true;
    std::vector<std::string> failures;  // one line per failing (identity, n)
};

// Checks, for 0 <= n <= nmax, all three identities:
//   (a) P(mu,g;n+1) - P(mu,g;n) = P(mu, Dg; n)
//   (b) P(mu,g;n)   = sum_k C(n,k) D^k g(mu)
//   (c) D^n g(mu)   = sum_k (-1)^{n+k} C(n,k) P(mu,g;k)
TelescopeReport telescope_verify(const Member& mu, const MemberFn& g, int nmax);
TelescopeReport telescope_verify_strict(const StrictPartition& mu, const StrictFn& g, int nmax);

}  // namespace hooklab

#include "hooklab/diffops.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "hooklab/corners.hpp"

namespace hooklab {

Member Member::of(const Partition& lam, FamilyTag tag) {
    Decomposition d = littlewood_decompose(lam, tag.t);
    Member m(tag);
    m.whole = lam;
    m.core = d.core;
    if (tag.family == Family::dd) {
        DDView v = dd_view(d);
        m.bar0 = v.bar0;
        m.quots = v.quots;
    } else {
        SCView v = sc_view(d);
        m.quots = v.quots;
    }
    return m;
}

Member Member::from_components(const Partition& core, const StrictPartition& bar0,
                               std::vector<Partition> quots, FamilyTag tag) {
    Member m(tag);
    m.core = core;
    m.bar0 = bar0;
    m.quots = std::move(quots);
    m.whole = littlewood_recompose(m.decomposition());
    return m;
}

Decomposition Member::decomposition() const {
    if (tag.family == Family::dd) return from_dd_view(core, bar0, quots, tag.t);
    return from_sc_view(core, quots, tag.t);
}

Rational Member::G() const {
    if (tag.family == Family::dd) return weight_G_dd(bar0, quots, tag.t);
    return weight_G_sc(quots, tag.t);
}

int Member::quotient_mass() const {
    int n = tag.family == Family::dd ? bar0.size() : 0;
    for (const Partition& q : quots) n += q.size();
    return n;
}

MemberFn g_const(Rational q) {
    return [q](const Member&) { return q; };
}

MemberFn g_weight_G() {
    return [](const Member& m) { return m.G(); };
}

MemberFn g_expr(StatisticExpr expr) {
    return [expr = std::move(expr)](const Member& m) { return expr.evaluate(m.whole, m.tag.t); };
}

MemberFn g_product(MemberFn a, MemberFn b) {
    return [a = std::move(a), b = std::move(b)](const Member& m) -> Rational {
        return a(m) * b(m);
    };
}

std::vector<Member> one_step_extensions(const Member& m) {
    std::vector<Member> out;
    if (m.tag.family == Family::dd) {
        Corners c = corners(m.bar0);
        for (int i = 0; i <= c.m(); ++i) {
            if (i == 0 && c.row0_blocked) continue;
            out.push_back(
                Member::from_components(m.core, add_box(m.bar0, c.xs[i]), m.quots, m.tag));
        }
    }
    for (size_t i = 0; i < m.quots.size(); ++i) {
        for (long long x : corners(m.quots[i]).xs) {
            std::vector<Partition> quots = m.quots;
            quots[i] = add_box(quots[i], x);
            out.push_back(Member::from_components(m.core, m.bar0, std::move(quots), m.tag));
        }
    }
    return out;
}

Rational dbar(const StrictFn& g, const StrictPartition& s) {
    Corners c = corners(s);
    Rational out = -g(s);
    for (int i = 1; i <= c.m(); ++i) out += 2 * g(add_box(s, c.xs[i]));
    if (!c.row0_blocked) out += g(add_box(s, 1));
    return out;
}

Rational DbarOperator::power(const StrictPartition& s, int k) {
    if (k < 0) throw std::invalid_argument("DbarOperator: negative power");
    if (k == 0) return g_(s);
    auto key = std::make_pair(s.str(), k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Corners c = corners(s);
    Rational out = -power(s, k - 1);
    for (int i = 1; i <= c.m(); ++i) out += 2 * power(add_box(s, c.xs[i]), k - 1);
    if (!c.row0_blocked) out += power(add_box(s, 1), k - 1);
    memo_[key] = out;
    return out;
}

Rational dt(const MemberFn& g, const Member& m) {
    Rational out = -g(m);
    for (const Member& ext : one_step_extensions(m)) out += g(ext);
    return out;
}

Rational DtOperator::power(const Member& m, int k) {
    if (k < 0) throw std::invalid_argument("DtOperator: negative power");
    if (k == 0) return g_(m);
    auto key = std::make_pair(m.whole.str(), k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Rational out = -power(m, k - 1);
    for (const Member& ext : one_step_extensions(m)) out += power(ext, k - 1);
    memo_[key] = out;
    return out;
}

namespace {

std::vector<Partition> usual_superpartitions(const Partition& mu, int n) {
    std::vector<Partition> out;
    for (const Partition& p : enumerate_partitions(PartitionKind::usual, mu.size() + n))
        if (contains(p, mu)) out.push_back(p);
    return out;
}

// compositions of n into `slots` nonnegative parts, lex order
void for_each_composition(int n, int slots, std::vector<int>& prefix,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (slots == 1) {
        prefix.push_back(n);
        fn(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = 0; first <= n; ++first) {
        prefix.push_back(first);
        for_each_composition(n - first, slots - 1, prefix, fn);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<StrictPartition> strict_superpartitions(const StrictPartition& mu, int n) {
    std::vector<StrictPartition> out;
    for (const StrictPartition& s : strict_partitions_of(mu.size() + n))
        if (contains(s, mu)) out.push_back(s);
    return out;
}

std::vector<Member> superelements(const Member& mu, int n) {
    int slots = static_cast<int>(mu.quots.size()) + (mu.tag.family == Family::dd ? 1 : 0);
    std::vector<Member> out;
    if (slots == 0) {
        if (n == 0) out.push_back(mu);
        return out;
    }
    std::vector<int> prefix;
    for_each_composition(n, slots, prefix, [&](const std::vector<int>& masses) {
        size_t q_begin = 0;
        std::vector<StrictPartition> bar0s{mu.bar0};
        if (mu.tag.family == Family::dd) {
            bar0s = strict_superpartitions(mu.bar0, masses[0]);
            q_begin = 1;
        }
        std::vector<std::vector<Partition>> per_quot;
        for (size_t i = 0; i < mu.quots.size(); ++i)
            per_quot.push_back(usual_superpartitions(mu.quots[i], masses[q_begin + i]));
        // cartesian product over components
        std::vector<size_t> idx(mu.quots.size(), 0);
        for (const StrictPartition& b : bar0s) {
            for (;;) {
                std::vector<Partition> quots;
                for (size_t i = 0; i < idx.size(); ++i) quots.push_back(per_quot[i][idx[i]]);
                out.push_back(Member::from_components(mu.core, b, std::move(quots), mu.tag));
                size_t carry = 0;
                while (carry < idx.size()) {
                    if (++idx[carry] < per_quot[carry].size()) break;
                    idx[carry] = 0;
                    ++carry;
                }
                if (carry == idx.size()) break;
            }
        }
    });
    return out;
}

Rational partition_sum_P(const Member& mu, const MemberFn& g, int n) {
    if (n < 0) throw std::invalid_argument("partition_sum_P: n must be >= 0");
    Rational total = 0;
    for (const Member& lam : superelements(mu, n)) {
        BigInt F = mu.tag.family == Family::dd
                       ? skew_F_dd(lam.bar0, lam.quots, mu.bar0, mu.quots)
                       : skew_F_sc(lam.quots, mu.quots);
        total += Rational(F) * g(lam);
    }
    return total;
}

Rational partition_sum_P_strict(const StrictPartition& mu, const StrictFn& g, int n) {
    if (n < 0) throw std::invalid_argument("partition_sum_P_strict: n must be >= 0");
    Rational total = 0;
    for (const StrictPartition& lam : strict_superpartitions(mu, n)) {
        unsigned long e = static_cast<unsigned long>(lam.size() - mu.size() - lam.length() +
                                                     mu.length());
        BigInt w = int_pow(BigInt(2), e) * count_syt_shifted_by_chains(lam, mu);
        total += Rational(w) * g(lam);
    }
    return total;
}

int PolynomialQ::degree() const { return static_cast<int>(coeffs.size()) - 1; }

void PolynomialQ::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rational PolynomialQ::eval(const Rational& n) const {
    Rational out = 0;
    for (size_t i = coeffs.size(); i-- > 0;) out = out * n + coeffs[i];
    return out;
}

std::string PolynomialQ::str() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (size_t i = coeffs.size(); i-- > 0;) {
        const Rational& c = coeffs[i];
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        bool unit = a == 1 && i > 0;
        if (!unit) {
            std::string lit = to_string(a);
            s += a.get_den() == 1 ? lit : "(" + lit + ")";
        }
        if (i >= 1) s += "n";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

namespace {

TelescopeReport telescope_impl(const std::function<Rational(int)>& P,
                               const std::function<Rational(int)>& Dk, int nmax,
                               const std::function<Rational(int)>& PofDg) {
    TelescopeReport rep;
    std::vector<Rational> Pv;
    for (int n = 0; n <= nmax + 1; ++n) Pv.push_back(P(n));
    for (int n = 0; n <= nmax; ++n) {
        Rational lhs = Pv[n + 1] - Pv[n];
        Rational rhs = PofDg(n);
        if (lhs != rhs) {
            rep.pass = false;
            rep.failures.push_back("(a) n=" + std::to_string(n) + ": " + to_string(lhs) +
                                   " != " + to_string(rhs));
        }
    }
    for (int n = 0; n <= nmax; ++n) {
        Rational rhs = 0;
        for (int k = 0; k <= n; ++k) rhs += Rational(binomial(n, k)) * Dk(k);
        if (Pv[n] != rhs) {
            rep.pass = false;
            rep.failures.push_back("(b) n=" + std::to_string(n) + ": " + to_string(Pv[n]) +
                                   " != " + to_string(rhs));
        }
    }
    for (int n = 0; n <= nmax; ++n) {
        Rational rhs = 0;
        for (int k = 0; k <= n; ++k) {
            Rational term = Rational(binomial(n, k)) * Pv[k];
            rhs += ((n + k) % 2 == 0) ? term : -term;
        }
        if (Dk(n) != rhs) {
            rep.pass = false;
            rep.failures.push_back("(c) n=" + std::to_string(n) + ": " + to_string(Dk(n)) +
                                   " != " + to_string(rhs));
        }
    }
    return rep;
}

}  // namespace

TelescopeReport telescope_verify(const Member& mu, const MemberFn& g, int nmax) {
    auto op = std::make_shared<DtOperator>(g);
    auto P = [&mu, &g](int n) { return partition_sum_P(mu, g, n); };
    auto Dk = [&mu, op](int k) { return op->power(mu, k); };
    auto PofDg = [&mu, &g](int n) {
        return partition_sum_P(mu, [&g](const Member& m) { return dt(g, m); }, n);
    };
    return telescope_impl(P, Dk, nmax, PofDg);
}

TelescopeReport telescope_verify_strict(const StrictPartition& mu, const StrictFn& g, int nmax) {
    auto op = std::make_shared<DbarOperator>(g);
    auto P = [&mu, &g](int n) { return partition_sum_P_strict(mu, g, n); };
    auto Dk = [&mu, op](int k) { return op->power(mu, k); };
    auto PofDg = [&mu, &g](int n) {
        return partition_sum_P_strict(
            mu, [&g](const StrictPartition& s) { return dbar(g, s); }, n);
    };
    return telescope_impl(P, Dk, nmax, PofDg);
}

}  // namespace hooklab

#include "hooklab/stats.hpp"

#include <algorithm>
#include <cctype>

namespace hooklab {

Rational psi_power(const std::vector<Rational>& A, const std::vector<Rational>& B, unsigned k) {
    Rational term = 0;
    for (const Rational& a : A) term += rational_pow(a, k);
    for (const Rational& b : B) term -= rational_pow(b, k);
    return term;
}

Rational psi(const std::vector<Rational>& A, const std::vector<Rational>& B,
             const IndexPartition& nu) {
    Rational prod = 1;
    for (int e : nu.parts()) prod *= psi_power(A, B, static_cast<unsigned>(e));
    return prod;
}

namespace {
std::vector<Rational> to_rationals(const std::vector<long long>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (long long x : v) out.push_back(make_rational(x));
    return out;
}
}  // namespace

Rational psi_corners(const Partition& p, const IndexPartition& nu) {
    Corners c = corners(p);
    return psi(to_rationals(c.xs), to_rationals(c.ys), nu);
}

Rational phi(const StrictPartition& s, const IndexPartition& nu) {
    Corners c = corners(s);
    std::vector<Rational> A, B;
    for (long long x : c.xs) A.push_back(make_rational(choose2(x)));
    for (long long y : c.ys) B.push_back(make_rational(choose2(y)));
    return psi(A, B, nu);
}

Rational p_delta(const StrictPartition& s, const IndexPartition& delta) {
    IntMultiset dd_hooks = cell_statistics(double_distinct(s)).hooks;
    IntMultiset bar_hooks = shifted_cell_statistics(s).hooks;
    Rational direct = 1, reduced = 1;
    for (int e : delta.parts()) {
        unsigned long k = static_cast<unsigned long>(e);
        BigInt dsum = 0;
        for (const auto& run : dd_hooks.runs()) dsum += bigint(run.second) * int_pow(run.first, 2 * k);
        BigInt rsum = 0;
        for (const auto& run : bar_hooks.runs()) rsum += bigint(run.second) * int_pow(run.first, 2 * k);
        rsum *= 2;
        BigInt fourk = int_pow(BigInt(4), k) - 1;
        for (int part : s.parts()) rsum += fourk * int_pow(part, 2 * k);
        direct *= make_rational(dsum, BigInt(1));
        reduced *= make_rational(rsum, BigInt(1));
    }
    if (direct != reduced)
        throw std::logic_error("p_delta: direct and reduced evaluations disagree for " + s.str());
    return direct;
}

// ---- coefficient table ----

CoeffTable::CoeffTable(int k, std::map<std::pair<int, int>, BigInt> entries)
    : k_(k), entries_(std::move(entries)) {}

BigInt CoeffTable::coeff(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? BigInt(0) : it->second;
}

Rational CoeffTable::evaluate(const Rational& cx, const Rational& cy) const {
    Rational out = 0;
    for (const auto& [ij, a] : entries_)
        out += Rational(a) * rational_pow(cx, static_cast<unsigned long>(ij.first)) *
               rational_pow(cy, static_cast<unsigned long>(ij.second));
    return out;
}

namespace {

using Poly2 = std::map<std::pair<int, int>, BigInt>;  // (i,j) -> coeff of X^i Y^j

Poly2 poly_add(const Poly2& a, const Poly2& b) {
    Poly2 out = a;
    for (const auto& [ij, c] : b) {
        out[ij] += c;
        if (out[ij] == 0) out.erase(ij);
    }
    return out;
}

Poly2 poly_mul(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [ij, c] : a)
        for (const auto& [kl, d] : b) {
            auto key = std::make_pair(ij.first + kl.first, ij.second + kl.second);
            out[key] += c * d;
            if (out[key] == 0) out.erase(key);
        }
    return out;
}

Poly2 poly_scale(const Poly2& a, const BigInt& s) {
    Poly2 out;
    if (s == 0) return out;
    for (const auto& [ij, c] : a) out[ij] = c * s;
    return out;
}

}  // namespace

CoeffTable pair_power_coeffs(int k) {
    if (k < 0) throw std::invalid_argument("pair_power_coeffs: k must be >= 0");
    // u = (x-y)^2, v = (x+y-1)^2 satisfy u+v = 4X+4Y+1 and uv = (2X-2Y)^2 in
    // X = C(x,2), Y = C(y,2); Newton recurrence for u^k + v^k.
    Poly2 S{{{1, 0}, 4}, {{0, 1}, 4}, {{0, 0}, 1}};
    Poly2 Q{{{2, 0}, 4}, {{1, 1}, -8}, {{0, 2}, 4}};
    Poly2 p0{{{0, 0}, 2}};
    Poly2 p1 = S;
    Poly2 result = k == 0 ? p0 : p1;
    for (int i = 2; i <= k; ++i) {
        Poly2 next = poly_add(poly_mul(S, p1), poly_scale(poly_mul(Q, p0), -1));
        p0 = std::move(p1);
        p1 = std::move(next);
        result = p1;
    }
    CoeffTable table(k, result);
    // verify at (2k+2)^2 generic rational points
    for (int p = 0; p < 2 * k + 2; ++p)
        for (int q = 0; q < 2 * k + 2; ++q) {
            Rational x = make_rational(3 * p - 2, 3), y = make_rational(3 * q - 4, 3);
            Rational lhs = rational_pow(x - y, static_cast<unsigned long>(2 * k)) +
                           rational_pow(x + y - 1, static_cast<unsigned long>(2 * k));
            Rational cx = x * (x - 1) / 2, cy = y * (y - 1) / 2;
            if (lhs != table.evaluate(cx, cy))
                throw std::logic_error("pair_power_coeffs: verification failed at k=" +
                                       std::to_string(k));
        }
    return table;
}

Rational lagrange_corner_sum(const std::vector<Rational>& a, const std::vector<Rational>& b,
                             int k) {
    if (k < 0) throw std::invalid_argument("lagrange_corner_sum: k must be >= 0");
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j])
                throw std::invalid_argument("lagrange_corner_sum: a values must be distinct");
    Rational total = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        Rational num = rational_pow(a[i], static_cast<unsigned long>(k));
        for (const Rational& bj : b) num *= a[i] - bj;
        Rational den = 1;
        for (size_t j = 0; j < a.size(); ++j)
            if (j != i) den *= a[i] - a[j];
        total += num / den;
    }
    return total;
}

// ---- closed-form deltas ----

namespace {

// Signed multiset of corner contents of one quotient: +inner, -outer.
struct SignedContents {
    std::vector<std::pair<long long, long long>> items;  // (content, signed weight)
};

SignedContents signed_from_usual(const Partition& q) {
    Corners c = corners(q);
    SignedContents s;
    for (long long x : c.xs) s.items.emplace_back(x, 1);
    for (long long y : c.ys) s.items.emplace_back(y, -1);
    return s;
}

// Corner contents of double_distinct(bar0) expressed through the shifted
// corners of bar0: X - Y = {0} + sum_{s>=1} ({x_s} + {1-x_s} - {y_s} - {1-y_s}).
SignedContents signed_from_dd0(const StrictPartition& bar0) {
    Corners c = corners(bar0);
    SignedContents s;
    s.items.emplace_back(0, 1);
    for (int j = 1; j <= c.m(); ++j) {
        s.items.emplace_back(c.xs[j], 1);
        s.items.emplace_back(1 - c.xs[j], 1);
        s.items.emplace_back(c.ys[j - 1], -1);
        s.items.emplace_back(1 - c.ys[j - 1], -1);
    }
    return s;
}

// Corner update of one box at content c: +{c+1} +{c-1} -2{c}.
void bump(SignedContents& s, long long c) {
    s.items.emplace_back(c + 1, 1);
    s.items.emplace_back(c - 1, 1);
    s.items.emplace_back(c, -2);
}

struct DeltaEngine {
    int t;
    int r;
    std::vector<long long> b;
    std::vector<SignedContents> signed_corners;  // per quotient 0..t-1

    Rational S(int j, long long B) const {
        BigInt sum = 0;
        for (const auto& [v, w] : signed_corners[j].items)
            sum += bigint(w) * int_pow(B - t * v - b[j], static_cast<unsigned long>(2 * r));
        return make_rational(sum, BigInt(1));
    }

    Rational one_box(int i, long long c, HookDeltaMode mode) const {
        BigInt tpow = int_pow(t, static_cast<unsigned long>(2 * r));
        long long B = t * c + b[i];
        switch (mode.kind) {
            case HookDeltaMode::all: {
                Rational out = make_rational(tpow, BigInt(1));
                for (int j = 0; j < t; ++j) out += S(j, B);
                return out;
            }
            case HookDeltaMode::residue_0:
                return make_rational(tpow, BigInt(1)) + S(i, B);
            case HookDeltaMode::residue_pair: {
                if (mode.k < 1 || mode.k >= t)
                    throw std::invalid_argument("hook_power_delta: residue pair k out of range");
                int ip = static_cast<int>(mod_floor(i + mode.k, t));
                int im = static_cast<int>(mod_floor(i - mode.k, t));
                return S(ip, B) + S(im, B);
            }
        }
        throw std::logic_error("unreachable");
    }
};

DeltaEngine make_engine(const Decomposition& d, int r, bool dd0) {
    if (r < 1)
        throw std::invalid_argument(
            "hook_power_delta: r must be >= 1 (0^{2r} terms are ill-defined at r = 0; "
            "use the direct multiset difference instead)");
    DeltaEngine e;
    e.t = d.t;
    e.r = r;
    e.b = d.b_offsets.empty() ? b_offsets(d.core, d.t) : d.b_offsets;
    e.signed_corners.resize(d.t);
    for (int j = 0; j < d.t; ++j) {
        if (j == 0 && dd0)
            e.signed_corners[0] = signed_from_dd0(strict_from_double_distinct(d.quotient[0]));
        else
            e.signed_corners[j] = signed_from_usual(d.quotient[j]);
    }
    return e;
}

}  // namespace

Rational hook_power_delta(const Decomposition& d, int quotient_index, long long content, int r,
                          HookDeltaMode mode) {
    if (quotient_index < 0 || quotient_index >= d.t)
        throw std::invalid_argument("hook_power_delta: quotient index out of range");
    DeltaEngine e = make_engine(d, r, false);
    return e.one_box(quotient_index, content, mode);
}

Rational hook_power_delta_dd(const Decomposition& d, int folded_index, long long content, int r,
                             HookDeltaMode mode) {
    if (d.t % 2 == 0) throw std::invalid_argument("hook_power_delta_dd: t must be odd");
    int tp = (d.t - 1) / 2;
    if (folded_index < 0 || folded_index > tp)
        throw std::invalid_argument("hook_power_delta_dd: folded index out of range");
    DeltaEngine e = make_engine(d, r, true);
    if (folded_index == 0) {
        Rational out = e.one_box(0, content, mode);
        bump(e.signed_corners[0], content);
        out += e.one_box(0, 1 - content, mode);
        return out;
    }
    int i = folded_index;
    Rational out = e.one_box(i, content, mode);
    bump(e.signed_corners[i], content);
    out += e.one_box(d.t - i, -content, mode);
    return out;
}

Rational hook_power_delta_sc(const Decomposition& d, int folded_index, long long content, int r,
                             HookDeltaMode mode) {
    if (d.t % 2 != 0) throw std::invalid_argument("hook_power_delta_sc: t must be even");
    int tp = d.t / 2;
    if (folded_index < 0 || folded_index >= tp)
        throw std::invalid_argument("hook_power_delta_sc: folded index out of range");
    DeltaEngine e = make_engine(d, r, false);
    Rational out = e.one_box(folded_index, content, mode);
    bump(e.signed_corners[folded_index], content);
    out += e.one_box(d.t - 1 - folded_index, -content, mode);
    return out;
}

namespace {
IntMultiset class_contents(long long base, int t) {
    IntMultiset m;
    for (int j = 0; j < t; ++j) m.add(base - j);
    return m;
}
}  // namespace

IntMultiset content_delta(const Decomposition& d, int quotient_index, long long content) {
    if (quotient_index < 0 || quotient_index >= d.t)
        throw std::invalid_argument("content_delta: quotient index out of range");
    std::vector<long long> b = d.b_offsets.empty() ? b_offsets(d.core, d.t) : d.b_offsets;
    return class_contents(d.t * content + b[quotient_index], d.t);
}

IntMultiset content_delta_dd(const Decomposition& d, int folded_index, long long content) {
    if (d.t % 2 == 0) throw std::invalid_argument("content_delta_dd: t must be odd");
    std::vector<long long> b = d.b_offsets.empty() ? b_offsets(d.core, d.t) : d.b_offsets;
    if (folded_index == 0)
        return class_contents(d.t * content + b[0], d.t)
            .united(class_contents(d.t * (1 - content) + b[0], d.t));
    int i = folded_index;
    return class_contents(d.t * content + b[i], d.t)
        .united(class_contents(-d.t * content + b[d.t - i], d.t));
}

IntMultiset content_delta_sc(const Decomposition& d, int folded_index, long long content) {
    if (d.t % 2 != 0) throw std::invalid_argument("content_delta_sc: t must be even");
    std::vector<long long> b = d.b_offsets.empty() ? b_offsets(d.core, d.t) : d.b_offsets;
    int i = folded_index;
    return class_contents(d.t * content + b[i], d.t)
        .united(class_contents(-d.t * content + b[d.t - 1 - i], d.t));
}

// ---- expression language ----

namespace {

class ExprParser {
  public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    StatisticExpr parse() {
        StatisticExpr expr;
        std::vector<StatAtom> atoms;
        atoms.push_back(parse_atom());
        skip_ws();
        while (pos_ < text_.size()) {
            if (text_[pos_] != '*') fail("expected '*' or end of input");
            ++pos_;
            atoms.push_back(parse_atom());
            skip_ws();
        }
        return StatisticExpr::from_atoms(std::move(atoms));
    }

  private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) {
        throw ExprParseError(pos_, expected + (pos_ < text_.size()
                                                   ? " (got '" + std::string(1, text_[pos_]) + "')"
                                                   : " (got end of input)"));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    long long parse_int() {
        skip_ws();
        size_t begin = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            pos_ = begin;
            fail("expected integer");
        }
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000000) fail("integer literal too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    StatAtom parse_atom() {
        skip_ws();
        size_t name_pos = pos_;
        std::string name;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            name += text_[pos_++];
        if (name.empty()) fail("expected atom name (hsum, csum or const)");
        StatAtom atom;
        if (name == "hsum")
            atom.kind = StatAtom::hsum;
        else if (name == "csum")
            atom.kind = StatAtom::csum;
        else if (name == "const")
            atom.kind = StatAtom::constant;
        else {
            pos_ = name_pos;
            fail("unknown atom '" + name + "', expected hsum, csum or const");
        }
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
        ++pos_;
        long long first = parse_int();
        skip_ws();
        if (atom.kind == StatAtom::constant) {
            atom.value = make_rational(first);
        } else {
            if (first < 0) fail("power index must be nonnegative");
            atom.k = static_cast<int>(first);
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                long long res = parse_int();
                if (res < 0) fail("residue must be nonnegative");
                atom.residue = static_cast<int>(res);
                skip_ws();
            }
        }
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
        ++pos_;
        return atom;
    }
};

}  // namespace

StatisticExpr StatisticExpr::parse(std::string_view text) { return ExprParser(text).parse(); }

StatisticExpr StatisticExpr::from_atoms(std::vector<StatAtom> atoms) {
    StatisticExpr e;
    e.atoms_ = std::move(atoms);
    return e;
}

Rational StatisticExpr::evaluate(const IntMultiset& hooks, const IntMultiset& contents,
                                 int t) const {
    Rational prod = 1;
    for (const StatAtom& atom : atoms_) {
        if (atom.kind == StatAtom::constant) {
            prod *= atom.value;
            continue;
        }
        BigInt sum = 0;
        if (atom.kind == StatAtom::hsum) {
            for (const auto& [h, mult] : hooks.runs()) {
                if (atom.residue) {
                    long long j = mod_floor(*atom.residue, t);
                    long long hr = mod_floor(h, t);
                    if (hr != j && hr != mod_floor(t - j, t)) continue;
                }
                sum += bigint(mult) * int_pow(h, static_cast<unsigned long>(2 * atom.k));
            }
        } else {
            for (const auto& [c, mult] : contents.runs()) {
                if (atom.residue && mod_floor(c, t) != mod_floor(*atom.residue, t)) continue;
                sum += bigint(mult) * int_pow(c, static_cast<unsigned long>(atom.k));
            }
        }
        prod *= make_rational(sum, BigInt(1));
    }
    return prod;
}

Rational StatisticExpr::evaluate(const Partition& p, int t) const {
    CellStatistics cs = cell_statistics(p);
    return evaluate(cs.hooks, cs.contents, t);
}

Rational StatisticExpr::evaluate_shifted(const StrictPartition& s, int t) const {
    CellStatistics cs = shifted_cell_statistics(s);
    return evaluate(cs.hooks, cs.contents, t);
}

Rational StatisticExpr::degree_bound() const {
    Rational bound = 0;
    for (const StatAtom& atom : atoms_) {
        if (atom.kind == StatAtom::hsum) bound += make_rational(atom.k + 1);
        if (atom.kind == StatAtom::csum) bound += make_rational(atom.k + 2, 2);
    }
    return bound;
}

std::string StatisticExpr::str() const {
    std::string s;
    for (size_t i = 0; i < atoms_.size(); ++i) {
        if (i) s += "*";
        const StatAtom& a = atoms_[i];
        if (a.kind == StatAtom::constant) {
            s += "const(" + to_string(a.value) + ")";
        } else {
            s += a.kind == StatAtom::hsum ? "hsum(" : "csum(";
            s += std::to_string(a.k);
            if (a.residue) s += "," + std::to_string(*a.residue);
            s += ")";
        }
    }
    return s;
}

}  // namespace hooklab

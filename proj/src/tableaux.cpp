#include "hooklab/tableaux.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "hooklab/boundary.hpp"

namespace hooklab {

bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 0; i < inner.length(); ++i)
        if (outer.part(i) < inner.part(i)) return false;
    return true;
}

bool contains(const StrictPartition& outer, const StrictPartition& inner) {
    for (int i = 0; i < inner.length(); ++i)
        if (outer.part(i) < inner.part(i)) return false;
    return true;
}

namespace {

std::vector<Partition> one_box_down(const Partition& p, const Partition& floor_shape) {
    std::vector<Partition> out;
    for (int i = 1; i <= p.length(); ++i) {
        if (p.part(i - 1) > p.part(i)) {
            std::vector<int> parts = p.parts();
            if (--parts[i - 1] == 0) parts.pop_back();
            Partition q(parts);
            if (contains(q, floor_shape)) out.push_back(std::move(q));
        }
    }
    return out;
}

std::vector<StrictPartition> one_box_down(const StrictPartition& s,
                                          const StrictPartition& floor_shape) {
    std::vector<StrictPartition> out;
    int ell = s.length();
    for (int i = 1; i <= ell; ++i) {
        if (i == ell || s.part(i - 1) - 1 > s.part(i)) {
            std::vector<int> parts = s.parts();
            if (--parts[i - 1] == 0) parts.pop_back();
            StrictPartition q(parts);
            if (contains(q, floor_shape)) out.push_back(std::move(q));
        }
    }
    return out;
}

template <typename Shape>
BigInt chain_count(const Shape& shape, const Shape& base) {
    thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> cache;
    if (shape == base) return 1;
    auto key = std::make_pair(shape.parts(), base.parts());
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    BigInt total = 0;
    for (const Shape& down : one_box_down(shape, base)) total += chain_count(down, base);
    cache[key] = total;
    return total;
}

}  // namespace

BigInt count_syt_by_chains(const Partition& shape, const Partition& base) {
    if (!contains(shape, base)) throw std::invalid_argument("count_syt: not contained");
    return chain_count(shape, base);
}

BigInt count_syt_shifted_by_chains(const StrictPartition& shape, const StrictPartition& base) {
    if (!contains(shape, base)) throw std::invalid_argument("count_syt: not contained");
    return chain_count(shape, base);
}

BigInt count_syt(const Partition& shape, const Partition& base) {
    if (!contains(shape, base)) throw std::invalid_argument("count_syt: not contained");
    if (base.empty()) {
        BigInt f = factorial(static_cast<unsigned long>(shape.size()));
        return f / hook_product(shape);
    }
    return chain_count(shape, base);
}

BigInt count_syt_shifted(const StrictPartition& shape, const StrictPartition& base) {
    if (!contains(shape, base)) throw std::invalid_argument("count_syt: not contained");
    if (base.empty()) {
        BigInt f = factorial(static_cast<unsigned long>(shape.size()));
        return f / shifted_hook_product(shape);
    }
    return chain_count(shape, base);
}

FamilyTag::FamilyTag(Family family_, int t_) : family(family_), t(t_) {
    if (t < 1) throw std::invalid_argument("FamilyTag: t must be positive");
    if (family == Family::dd && t % 2 == 0)
        throw std::invalid_argument("FamilyTag: dd requires odd t");
    if (family == Family::sc && t % 2 != 0)
        throw std::invalid_argument("FamilyTag: sc requires even t");
}

BigInt multinomial(const std::vector<int>& sizes) {
    int total = 0;
    BigInt denom = 1;
    for (int s : sizes) {
        total += s;
        denom *= factorial(static_cast<unsigned long>(s));
    }
    return factorial(static_cast<unsigned long>(total)) / denom;
}

BigInt skew_F_dd(const StrictPartition& bar0, const std::vector<Partition>& quots,
                 const StrictPartition& mu_bar0, const std::vector<Partition>& mu_quots) {
    std::vector<int> sizes{bar0.size() - mu_bar0.size()};
    for (size_t i = 0; i < quots.size(); ++i)
        sizes.push_back(quots[i].size() - mu_quots[i].size());
    BigInt f = multinomial(sizes) * count_syt_shifted(bar0, mu_bar0);
    for (size_t i = 0; i < quots.size(); ++i) f *= count_syt(quots[i], mu_quots[i]);
    return f;
}

BigInt skew_F_sc(const std::vector<Partition>& quots, const std::vector<Partition>& mu_quots) {
    std::vector<int> sizes;
    for (size_t i = 0; i < quots.size(); ++i)
        sizes.push_back(quots[i].size() - mu_quots[i].size());
    BigInt f = multinomial(sizes);
    for (size_t i = 0; i < quots.size(); ++i) f *= count_syt(quots[i], mu_quots[i]);
    return f;
}

Rational weight_G_dd(const StrictPartition& bar0, const std::vector<Partition>& quots, int t) {
    int n = bar0.size();
    BigInt hooks = shifted_hook_product(bar0);
    for (const Partition& q : quots) {
        n += q.size();
        hooks *= hook_product(q);
    }
    BigInt num = int_pow(BigInt(2), static_cast<unsigned long>(n - bar0.length()));
    BigInt den = int_pow(BigInt(t), static_cast<unsigned long>(n)) * hooks;
    return make_rational(num, den);
}

Rational weight_G_sc(const std::vector<Partition>& quots, int t) {
    int n = 0;
    BigInt hooks = 1;
    for (const Partition& q : quots) {
        n += q.size();
        hooks *= hook_product(q);
    }
    BigInt num = int_pow(BigInt(2), static_cast<unsigned long>(n));
    BigInt den = int_pow(BigInt(t), static_cast<unsigned long>(n)) * hooks;
    return make_rational(num, den);
}

namespace {

struct FoldedPair {
    // dd components
    StrictPartition bar0, mu_bar0;
    // shared usual components (dd: 1..t'; sc: 0..t'-1)
    std::vector<Partition> quots, mu_quots;
};

FoldedPair folded_components(const Partition& lam, const Partition& mu, FamilyTag tag) {
    Decomposition dl = littlewood_decompose(lam, tag.t);
    Decomposition dm = littlewood_decompose(mu, tag.t);
    if (dl.core != dm.core)
        throw std::invalid_argument("not >=_t comparable: cores differ");
    FoldedPair fp;
    if (tag.family == Family::dd) {
        DDView vl = dd_view(dl), vm = dd_view(dm);
        fp.bar0 = vl.bar0;
        fp.mu_bar0 = vm.bar0;
        fp.quots = vl.quots;
        fp.mu_quots = vm.quots;
        if (!contains(fp.bar0, fp.mu_bar0))
            throw std::invalid_argument("not >=_t comparable: component 0");
    } else {
        SCView vl = sc_view(dl), vm = sc_view(dm);
        fp.quots = vl.quots;
        fp.mu_quots = vm.quots;
    }
    for (size_t i = 0; i < fp.quots.size(); ++i)
        if (!contains(fp.quots[i], fp.mu_quots[i]))
            throw std::invalid_argument("not >=_t comparable: component " + std::to_string(i + 1));
    return fp;
}

}  // namespace

BigInt skew_weight_F(const Partition& lam, const Partition& mu, FamilyTag tag) {
    FoldedPair fp = folded_components(lam, mu, tag);
    if (tag.family == Family::dd)
        return skew_F_dd(fp.bar0, fp.quots, fp.mu_bar0, fp.mu_quots);
    return skew_F_sc(fp.quots, fp.mu_quots);
}

Rational weight_G(const Partition& lam, FamilyTag tag) {
    Decomposition d = littlewood_decompose(lam, tag.t);
    if (tag.family == Family::dd) {
        DDView v = dd_view(d);
        return weight_G_dd(v.bar0, v.quots, tag.t);
    }
    SCView v = sc_view(d);
    return weight_G_sc(v.quots, tag.t);
}

BigInt skew_weight_F_recursive(const Partition& lam, const Partition& mu, FamilyTag tag) {
    FoldedPair fp = folded_components(lam, mu, tag);  // validates comparability
    if (lam == mu) return 1;
    Decomposition dl = littlewood_decompose(lam, tag.t);
    BigInt total = 0;
    if (tag.family == Family::dd) {
        DDView v = dd_view(dl);
        for (const StrictPartition& down : one_box_down(v.bar0, fp.mu_bar0)) {
            Partition prev = littlewood_recompose(from_dd_view(dl.core, down, v.quots, tag.t));
            total += skew_weight_F_recursive(prev, mu, tag);
        }
        for (size_t i = 0; i < v.quots.size(); ++i)
            for (const Partition& down : one_box_down(v.quots[i], fp.mu_quots[i])) {
                std::vector<Partition> quots = v.quots;
                quots[i] = down;
                Partition prev = littlewood_recompose(from_dd_view(dl.core, v.bar0, quots, tag.t));
                total += skew_weight_F_recursive(prev, mu, tag);
            }
    } else {
        SCView v = sc_view(dl);
        for (size_t i = 0; i < v.quots.size(); ++i)
            for (const Partition& down : one_box_down(v.quots[i], fp.mu_quots[i])) {
                std::vector<Partition> quots = v.quots;
                quots[i] = down;
                Partition prev = littlewood_recompose(from_sc_view(dl.core, quots, tag.t));
                total += skew_weight_F_recursive(prev, mu, tag);
            }
    }
    return total;
}

}  // namespace hooklab

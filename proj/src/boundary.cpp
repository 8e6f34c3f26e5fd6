#include "hooklab/boundary.hpp"

#include <algorithm>
#include <stdexcept>

namespace hooklab {

namespace {

// Assemble a partition from its zero positions given per-class charges d_i
// and quotient beta-sets: zeros = U_i { t*(beta + d_i) + i }.
Partition assemble_from_classes(const std::vector<long long>& d,
                                const std::vector<Partition>& quots, int t) {
    long long mass = 0, maxlen = 0, maxd = 0;
    for (int i = 0; i < t; ++i) {
        mass += quots[i].size();
        maxlen = std::max<long long>(maxlen, quots[i].length());
        maxd = std::max<long long>(maxd, std::llabs(d[i]));
    }
    for (long long M = t * mass + maxlen + maxd + 4;; M *= 2) {
        std::vector<long long> zeros;
        zeros.reserve(static_cast<size_t>(M) * t);
        long long covered = t * (d[0] - M);  // merge is complete above this value
        for (int i = 0; i < t; ++i) {
            for (long long j = 1; j <= M; ++j)
                zeros.push_back(t * (quots[i].part(j - 1) - j + d[i]) + i);
            covered = std::max(covered, t * (d[i] - M) + i);
        }
        std::sort(zeros.begin(), zeros.end(), std::greater<>());
        std::vector<int> parts;
        bool stopped = false;
        for (size_t j = 1; j <= zeros.size(); ++j) {
            long long part = zeros[j - 1] + static_cast<long long>(j);
            if (part <= 0) {
                stopped = zeros[j - 1] > covered;
                break;
            }
            parts.push_back(static_cast<int>(part));
        }
        if (stopped) return Partition(parts);
    }
}

}  // namespace

BoundaryWord BoundaryWord::encode(const Partition& p) {
    BoundaryWord w;
    if (p.empty()) return w;
    long long ell = p.length();
    w.start_ = -ell;
    w.window_.assign(static_cast<size_t>(p.part(0) - 1 + ell + 1), 1);
    for (long long j = 1; j <= ell; ++j)
        w.window_[static_cast<size_t>(p.part(j - 1) - j - w.start_)] = 0;
    return w;
}

BoundaryWord BoundaryWord::from_window(std::vector<int> bits, long long start) {
    for (int b : bits)
        if (b != 0 && b != 1) throw std::invalid_argument("boundary word: bits must be 0/1");
    // minimal window: drop implicit leading 0s and trailing 1s
    size_t lo = 0, hi = bits.size();
    while (lo < hi && bits[lo] == 0) ++lo;
    while (hi > lo && bits[hi - 1] == 1) --hi;
    BoundaryWord w;
    w.window_.assign(bits.begin() + lo, bits.begin() + hi);
    w.start_ = start + static_cast<long long>(lo);
    if (w.window_.empty()) w.start_ = 0;

    long long ones_neg = 0, zeros_pos = 0;
    long long end = w.start_ + static_cast<long long>(w.window_.size());  // one past
    for (size_t k = 0; k < w.window_.size(); ++k) {
        long long pos = w.start_ + static_cast<long long>(k);
        if (pos <= -1 && w.window_[k] == 1) ++ones_neg;
        if (pos >= 0 && w.window_[k] == 0) ++zeros_pos;
    }
    if (end < 0) ones_neg += -end;      // implicit 1s in [end, -1]
    if (w.start_ > 0) zeros_pos += w.start_;  // implicit 0s in [0, start)
    if (ones_neg != zeros_pos)
        throw std::invalid_argument("boundary word: balance violated (" +
                                    std::to_string(ones_neg) + " ones left of the dot vs " +
                                    std::to_string(zeros_pos) + " zeros right of it)");
    return w;
}

int BoundaryWord::bit(long long pos) const {
    if (pos < start_) return 0;
    if (pos >= start_ + static_cast<long long>(window_.size())) return 1;
    return window_[static_cast<size_t>(pos - start_)];
}

Partition BoundaryWord::decode() const {
    std::vector<int> parts;
    long long j = 1;
    for (long long k = static_cast<long long>(window_.size()) - 1; k >= 0; --k) {
        if (window_[static_cast<size_t>(k)] == 0) {
            long long part = start_ + k + j;
            if (part < 0) throw std::logic_error("boundary word: corrupt canonical form");
            if (part > 0) {
                parts.push_back(static_cast<int>(part));
                ++j;
            }
        }
    }
    return Partition(parts);
}

std::string BoundaryWord::window_string() const {
    std::string s;
    for (int b : window_) s += static_cast<char>('0' + b);
    return s;
}

IntMultiset BoundaryWord::inversion_multiset() const {
    std::vector<long long> gaps;
    for (size_t y = 0; y < window_.size(); ++y) {
        if (window_[y] != 0) continue;
        for (size_t x = 0; x < y; ++x)
            if (window_[x] == 1) gaps.push_back(static_cast<long long>(y - x));
    }
    return IntMultiset::of(std::move(gaps));
}

std::vector<long long> b_offsets(const Partition& core, int t) {
    if (t < 1) throw std::invalid_argument("b_offsets: t must be >= 1");
    BoundaryWord w = BoundaryWord::encode(core);
    std::vector<long long> b(t);
    for (int i = 0; i < t; ++i) {
        long long k = div_floor(w.window_start() - i, t) - 1;
        while (w.bit(t * k + i) == 0) ++k;
        b[i] = t * k + i;
    }
    return b;
}

Decomposition littlewood_decompose(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("littlewood_decompose: t must be >= 1");
    BoundaryWord w = BoundaryWord::encode(p);
    long long start = w.window_start();
    long long end = start + static_cast<long long>(w.window().size());

    Decomposition d;
    d.t = t;
    d.quotient.resize(t);
    d.b_offsets.resize(t);
    std::vector<long long> charge(t);
    for (int i = 0; i < t; ++i) {
        long long k_min = div_floor(start - i, t) - 1;  // below: implicit zeros
        long long k_max = div_floor(end - i, t) + 1;    // above: implicit ones
        long long zeros_pos = 0, ones_neg = 0;
        for (long long k = 0; k <= k_max; ++k)
            if (w.bit(t * k + i) == 0) ++zeros_pos;
        for (long long k = k_min; k <= -1; ++k)
            if (w.bit(t * k + i) == 1) ++ones_neg;
        charge[i] = zeros_pos - ones_neg;
        d.b_offsets[i] = t * charge[i] + i;

        // canonical subword: zero set shifted by the charge
        std::vector<int> parts;
        long long j = 1;
        for (long long k = k_max; k >= k_min; --k) {
            if (w.bit(t * k + i) == 0) {
                long long part = k - charge[i] + j;
                if (part > 0) {
                    parts.push_back(static_cast<int>(part));
                    ++j;
                }
            }
        }
        d.quotient[i] = Partition(parts);
    }
    d.core = assemble_from_classes(charge, std::vector<Partition>(t), t);
    return d;
}

Partition littlewood_recompose(const Decomposition& d) {
    if (d.t < 1 || static_cast<int>(d.quotient.size()) != d.t)
        throw std::invalid_argument("littlewood_recompose: malformed decomposition");
    if (!hooks_divisible(d.core, d.t).empty())
        throw std::invalid_argument("littlewood_recompose: core is not a " +
                                    std::to_string(d.t) + "-core");
    std::vector<long long> b = b_offsets(d.core, d.t);
    std::vector<long long> charge(d.t);
    for (int i = 0; i < d.t; ++i) charge[i] = (b[i] - i) / d.t;
    return assemble_from_classes(charge, d.quotient, d.t);
}

DDView dd_view(const Decomposition& d) {
    if (d.t % 2 == 0) throw std::invalid_argument("dd_view: t must be odd");
    int tp = (d.t - 1) / 2;
    for (int i = 1; i <= d.t - 1; ++i)
        if (d.quotient[i] != conjugate(d.quotient[d.t - i]))
            throw std::invalid_argument("dd_view: symmetry violated (quotient " +
                                        std::to_string(i) + ")");
    DDView v;
    v.core_strict = strict_from_double_distinct(d.core);
    v.bar0 = strict_from_double_distinct(d.quotient[0]);
    for (int i = 1; i <= tp; ++i) v.quots.push_back(d.quotient[i]);
    return v;
}

SCView sc_view(const Decomposition& d) {
    if (d.t % 2 != 0) throw std::invalid_argument("sc_view: t must be even");
    int tp = d.t / 2;
    for (int i = 0; i < d.t; ++i)
        if (d.quotient[i] != conjugate(d.quotient[d.t - 1 - i]))
            throw std::invalid_argument("sc_view: symmetry violated (quotient " +
                                        std::to_string(i) + ")");
    if (!is_self_conjugate(d.core))
        throw std::invalid_argument("sc_view: core is not self-conjugate");
    SCView v;
    v.core_sc = d.core;
    for (int i = 0; i < tp; ++i) v.quots.push_back(d.quotient[i]);
    return v;
}

Decomposition from_dd_view(const Partition& core, const StrictPartition& bar0,
                           const std::vector<Partition>& quots, int t) {
    if (t % 2 == 0) throw std::invalid_argument("from_dd_view: t must be odd");
    int tp = (t - 1) / 2;
    if (static_cast<int>(quots.size()) != tp)
        throw std::invalid_argument("from_dd_view: expected " + std::to_string(tp) +
                                    " quotient components");
    Decomposition d;
    d.t = t;
    d.core = core;
    d.quotient.resize(t);
    d.quotient[0] = double_distinct(bar0);
    for (int i = 1; i <= tp; ++i) {
        d.quotient[i] = quots[i - 1];
        d.quotient[t - i] = conjugate(quots[i - 1]);
    }
    d.b_offsets = b_offsets(core, t);
    return d;
}

Decomposition from_sc_view(const Partition& core, const std::vector<Partition>& quots, int t) {
    if (t % 2 != 0) throw std::invalid_argument("from_sc_view: t must be even");
    int tp = t / 2;
    if (static_cast<int>(quots.size()) != tp)
        throw std::invalid_argument("from_sc_view: expected " + std::to_string(tp) +
                                    " quotient components");
    Decomposition d;
    d.t = t;
    d.core = core;
    d.quotient.resize(t);
    for (int i = 0; i < tp; ++i) {
        d.quotient[i] = quots[i];
        d.quotient[t - 1 - i] = conjugate(quots[i]);
    }
    d.b_offsets = b_offsets(core, t);
    return d;
}

}  // namespace hooklab

#include "hooklab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hooklab {

namespace {

std::vector<int> parse_parts(std::string_view text, bool strict) {
    std::vector<int> parts;
    if (text == "-" || text.empty()) return parts;
    size_t i = 0;
    while (i < text.size()) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("partition literal: unexpected character '" +
                                        std::string(1, text[i]) + "' at position " +
                                        std::to_string(i));
        long long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000) throw std::invalid_argument("partition literal: part too large");
            ++i;
        }
        if (v == 0) throw std::invalid_argument("partition literal: parts must be positive");
        parts.push_back(static_cast<int>(v));
        if (i < text.size()) {
            if (text[i] != ',')
                throw std::invalid_argument("partition literal: expected ',' at position " +
                                            std::to_string(i));
            ++i;
            if (i == text.size())
                throw std::invalid_argument("partition literal: trailing ','");
        }
    }
    for (size_t j = 0; j + 1 < parts.size(); ++j) {
        if (strict ? parts[j] <= parts[j + 1] : parts[j] < parts[j + 1])
            throw std::invalid_argument(std::string("partition literal: parts must be ") +
                                        (strict ? "strictly" : "weakly") + " decreasing");
    }
    return parts;
}

std::string parts_str(const std::vector<int>& parts) {
    if (parts.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}

// Build a partition from Frobenius coordinates (arms | legs).
Partition from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs) {
    int d = static_cast<int>(arms.size());
    std::vector<int> parts;
    for (int i = 1; i <= d; ++i) parts.push_back(arms[i - 1] + i);
    for (int i = d + 1;; ++i) {
        int row = 0;
        for (int j = 1; j <= d; ++j)
            if (legs[j - 1] + j >= i) ++row;
        if (row == 0) break;
        parts.push_back(row);
    }
    return Partition(parts);
}

void frobenius(const Partition& p, std::vector<int>& arms, std::vector<int>& legs) {
    Partition q = conjugate(p);
    arms.clear();
    legs.clear();
    for (int i = 1; i <= p.length(); ++i) {
        if (p.part(i - 1) < i) break;
        arms.push_back(p.part(i - 1) - i);
        legs.push_back(q.part(i - 1) - i);
    }
}

void gen_partitions(int remaining, int maxpart, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        prefix.push_back(p);
        gen_partitions(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

void gen_strict(int remaining, int maxpart, std::vector<int>& prefix,
                std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        if (static_cast<long long>(p) * (p - 1) / 2 < remaining - p) break;  // can't finish
        prefix.push_back(p);
        gen_strict(remaining - p, p - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) { return Partition(parse_parts(text, false)); }
std::string Partition::str() const { return parts_str(parts_); }
int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("StrictPartition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
            throw std::invalid_argument("StrictPartition: parts must be strictly decreasing");
    }
}

StrictPartition StrictPartition::parse(std::string_view text) {
    return StrictPartition(parse_parts(text, true));
}
std::string StrictPartition::str() const { return parts_str(parts_); }
int StrictPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    if (!p.empty()) {
        cols.assign(p.part(0), 0);
        for (int part : p.parts())
            for (int j = 0; j < part; ++j) ++cols[j];
    }
    return Partition(cols);
}

Partition double_distinct(const StrictPartition& s) {
    std::vector<int> arms = s.parts(), legs = s.parts();
    for (int& l : legs) --l;
    return from_frobenius(arms, legs);
}

bool is_doubled_distinct(const Partition& p) {
    std::vector<int> arms, legs;
    frobenius(p, arms, legs);
    if (arms.empty()) return p.empty();
    for (size_t i = 0; i < arms.size(); ++i)
        if (legs[i] != arms[i] - 1) return false;
    return true;
}

StrictPartition strict_from_double_distinct(const Partition& p) {
    if (!is_doubled_distinct(p))
        throw std::invalid_argument("not a doubled distinct partition: " + p.str());
    std::vector<int> arms, legs;
    frobenius(p, arms, legs);
    return StrictPartition(arms);
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

std::vector<std::vector<long long>> hook_rows(const Partition& p) {
    Partition q = conjugate(p);
    std::vector<std::vector<long long>> rows;
    for (int i = 1; i <= p.length(); ++i) {
        std::vector<long long> row;
        for (int j = 1; j <= p.part(i - 1); ++j)
            row.push_back(p.part(i - 1) - j + q.part(j - 1) - i + 1);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<long long>> content_rows(const Partition& p) {
    std::vector<std::vector<long long>> rows;
    for (int i = 1; i <= p.length(); ++i) {
        std::vector<long long> row;
        for (int j = 1; j <= p.part(i - 1); ++j) row.push_back(j - i);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Shifted rule: boxes to the right in the same row, plus boxes of the same
// column in lower rows, plus the box itself, plus the column-index part.
// (This is the rule that reproduces the worked 4-row example exactly.)
std::vector<std::vector<long long>> shifted_hook_rows(const StrictPartition& s) {
    std::vector<std::vector<long long>> rows;
    int ell = s.length();
    for (int i = 1; i <= ell; ++i) {
        std::vector<long long> row;
        for (int j = i + 1; j <= i + s.part(i - 1); ++j) {
            long long right = s.part(i - 1) + i - j;
            long long below = 0;
            for (int i2 = i + 1; i2 <= ell && i2 + 1 <= j; ++i2)
                if (j <= i2 + s.part(i2 - 1)) ++below;
            row.push_back(right + below + 1 + s.part(j - 1));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<long long>> shifted_content_rows(const StrictPartition& s) {
    std::vector<std::vector<long long>> rows;
    for (int i = 1; i <= s.length(); ++i) {
        std::vector<long long> row;
        for (int c = 1; c <= s.part(i - 1); ++c) row.push_back(c);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {
IntMultiset flatten(const std::vector<std::vector<long long>>& rows) {
    std::vector<long long> all;
    for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
    return IntMultiset::of(std::move(all));
}
}  // namespace

CellStatistics cell_statistics(const Partition& p) {
    return {flatten(hook_rows(p)), flatten(content_rows(p))};
}

CellStatistics shifted_cell_statistics(const StrictPartition& s) {
    return {flatten(shifted_hook_rows(s)), flatten(shifted_content_rows(s))};
}

IntMultiset hooks_divisible(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("hooks_divisible: t must be >= 1");
    return cell_statistics(p).hooks.filter([t](long long h) { return h % t == 0; });
}

BigInt hook_product(const Partition& p) {
    BigInt prod = 1;
    for (const auto& row : hook_rows(p))
        for (long long h : row) prod *= bigint(h);
    return prod;
}

BigInt shifted_hook_product(const StrictPartition& s) {
    BigInt prod = 1;
    for (const auto& row : shifted_hook_rows(s))
        for (long long h : row) prod *= bigint(h);
    return prod;
}

BigInt hook_product_divisible(const Partition& p, int t) {
    BigInt prod = 1;
    IntMultiset divisible = hooks_divisible(p, t);
    for (const auto& r : divisible.runs())
        prod *= int_pow(r.first, static_cast<unsigned long>(r.second));
    return prod;
}

std::vector<StrictPartition> strict_partitions_of(int n) {
    std::vector<StrictPartition> out;
    std::vector<int> prefix;
    gen_strict(n, n, prefix, out);
    return out;
}

std::vector<Partition> enumerate_dd_by_filter(int n) {
    std::vector<Partition> out;
    for (const Partition& p : enumerate_partitions(PartitionKind::usual, n))
        if (is_doubled_distinct(p)) out.push_back(p);
    return out;
}

std::vector<Partition> enumerate_sc_by_filter(int n) {
    std::vector<Partition> out;
    for (const Partition& p : enumerate_partitions(PartitionKind::usual, n))
        if (is_self_conjugate(p)) out.push_back(p);
    return out;
}

std::vector<Partition> enumerate_partitions(PartitionKind kind, int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    switch (kind) {
        case PartitionKind::usual: {
            std::vector<int> prefix;
            gen_partitions(n, n, prefix, out);
            return out;
        }
        case PartitionKind::strict: {
            for (const StrictPartition& s : strict_partitions_of(n))
                out.emplace_back(s.parts());
            break;
        }
        case PartitionKind::dd: {
            if (n % 2 != 0) return out;
            for (const StrictPartition& s : strict_partitions_of(n / 2))
                out.push_back(double_distinct(s));
            break;
        }
        case PartitionKind::sc: {
            // diagonal hooks 2a_i + 1: distinct odd parts summing to n
            for (const StrictPartition& s : strict_partitions_of(n)) {
                bool all_odd = true;
                for (int part : s.parts()) all_odd = all_odd && (part % 2 == 1);
                if (!all_odd) continue;
                std::vector<int> arms;
                for (int part : s.parts()) arms.push_back((part - 1) / 2);
                out.push_back(from_frobenius(arms, arms));
            }
            break;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return b < a; });
    return out;
}

}  // namespace hooklab

#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hooklab/multiset.hpp"
#include "hooklab/rational.hpp"

namespace hooklab {

// Weakly decreasing list of positive parts. The empty diagram is Partition{}.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Canonical text form: "6,3,3,1"; "-" for the empty partition.
    static Partition parse(std::string_view text);
    std::string str() const;

    const std::vector<int>& parts() const { return parts_; }
    int part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }  // 0-based
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

// Strictly decreasing parts; drawn as a shifted diagram (row i starts at column i+1).
class StrictPartition {
  public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    static StrictPartition parse(std::string_view text);
    std::string str() const;

    const std::vector<int>& parts() const { return parts_; }
    int part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    auto operator<=>(const StrictPartition&) const = default;

  private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

// Glue the shifted diagram of s to its reflection: Frobenius coordinates
// (s_i | s_i - 1).  |result| = 2|s|.
Partition double_distinct(const StrictPartition& s);
// Inverse of double_distinct; throws std::invalid_argument if p is not
// doubled distinct.
StrictPartition strict_from_double_distinct(const Partition& p);
bool is_doubled_distinct(const Partition& p);
bool is_self_conjugate(const Partition& p);

struct CellStatistics {
    IntMultiset hooks;
    IntMultiset contents;
};

CellStatistics cell_statistics(const Partition& p);
CellStatistics shifted_cell_statistics(const StrictPartition& s);

// Row-by-row layouts, for printing and for the worked examples.
std::vector<std::vector<long long>> hook_rows(const Partition& p);
std::vector<std::vector<long long>> content_rows(const Partition& p);
std::vector<std::vector<long long>> shifted_hook_rows(const StrictPartition& s);
std::vector<std::vector<long long>> shifted_content_rows(const StrictPartition& s);

IntMultiset hooks_divisible(const Partition& p, int t);

BigInt hook_product(const Partition& p);
BigInt shifted_hook_product(const StrictPartition& s);
BigInt hook_product_divisible(const Partition& p, int t);  // product over hooks = 0 mod t

enum class PartitionKind { usual, strict, dd, sc };

// All qualifying partitions of n, each exactly once, sorted lexicographically
// decreasing on the part lists ((4) before (3,1) before (2,2) ...).
// dd with odd n yields the empty stream.
std::vector<Partition> enumerate_partitions(PartitionKind kind, int n);
std::vector<StrictPartition> strict_partitions_of(int n);

// Oracle paths used to cross-check the constructive dd/sc enumerators.
std::vector<Partition> enumerate_dd_by_filter(int n);
std::vector<Partition> enumerate_sc_by_filter(int n);

}  // namespace hooklab

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hooklab {

// Multiset of integers stored as a sorted run-length list.
// Equality is structural, which makes it bit-exact multiset equality.
class IntMultiset {
  public:
    using Run = std::pair<long long, long long>;  // (value, multiplicity >= 1)

    IntMultiset() = default;
    static IntMultiset of(std::vector<long long> values);

    void add(long long value, long long count = 1);

    IntMultiset united(const IntMultiset& other) const;
    // Exact multiset difference; throws std::domain_error if an element of
    // `other` is missing here.
    IntMultiset minus(const IntMultiset& other) const;
    IntMultiset filter(const std::function<bool(long long)>& pred) const;

    bool contains(long long value) const;
    long long count() const;  // number of elements, with multiplicity
    bool empty() const { return runs_.empty(); }

    const std::vector<Run>& runs() const { return runs_; }
    std::vector<long long> values() const;  // expanded, ascending

    std::string str() const;  // "{1,2,2,6}"

    bool operator==(const IntMultiset&) const = default;

  private:
    std::vector<Run> runs_;
};

}  // namespace hooklab

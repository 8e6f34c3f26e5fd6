#include "hooklab/multiset.hpp"

#include <algorithm>
#include <stdexcept>

namespace hooklab {

IntMultiset IntMultiset::of(std::vector<long long> values) {
    std::sort(values.begin(), values.end());
    IntMultiset m;
    for (long long v : values) {
        if (!m.runs_.empty() && m.runs_.back().first == v) {
            ++m.runs_.back().second;
        } else {
            m.runs_.emplace_back(v, 1);
        }
    }
    return m;
}

void IntMultiset::add(long long value, long long count) {
    if (count <= 0) return;
    auto it = std::lower_bound(runs_.begin(), runs_.end(), value,
                               [](const Run& r, long long v) { return r.first < v; });
    if (it != runs_.end() && it->first == value) {
        it->second += count;
    } else {
        runs_.insert(it, {value, count});
    }
}

IntMultiset IntMultiset::united(const IntMultiset& other) const {
    IntMultiset out;
    auto a = runs_.begin(), b = other.runs_.begin();
    while (a != runs_.end() || b != other.runs_.end()) {
        if (b == other.runs_.end() || (a != runs_.end() && a->first < b->first)) {
            out.runs_.push_back(*a++);
        } else if (a == runs_.end() || b->first < a->first) {
            out.runs_.push_back(*b++);
        } else {
            out.runs_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

IntMultiset IntMultiset::minus(const IntMultiset& other) const {
    IntMultiset out;
    auto a = runs_.begin(), b = other.runs_.begin();
    while (a != runs_.end()) {
        if (b == other.runs_.end() || a->first < b->first) {
            out.runs_.push_back(*a++);
        } else if (b->first < a->first) {
            throw std::domain_error("multiset difference: value " + std::to_string(b->first) +
                                    " not present");
        } else {
            if (a->second < b->second)
                throw std::domain_error("multiset difference: multiplicity underflow at value " +
                                        std::to_string(a->first));
            if (a->second > b->second) out.runs_.emplace_back(a->first, a->second - b->second);
            ++a;
            ++b;
        }
    }
    if (b != other.runs_.end())
        throw std::domain_error("multiset difference: value " + std::to_string(b->first) +
                                " not present");
    return out;
}

IntMultiset IntMultiset::filter(const std::function<bool(long long)>& pred) const {
    IntMultiset out;
    for (const Run& r : runs_)
        if (pred(r.first)) out.runs_.push_back(r);
    return out;
}

bool IntMultiset::contains(long long value) const {
    auto it = std::lower_bound(runs_.begin(), runs_.end(), value,
                               [](const Run& r, long long v) { return r.first < v; });
    return it != runs_.end() && it->first == value;
}

long long IntMultiset::count() const {
    long long n = 0;
    for (const Run& r : runs_) n += r.second;
    return n;
}

std::vector<long long> IntMultiset::values() const {
    std::vector<long long> out;
    out.reserve(static_cast<size_t>(count()));
    for (const Run& r : runs_)
        for (long long i = 0; i < r.second; ++i) out.push_back(r.first);
    return out;
}

std::string IntMultiset::str() const {
    std::string s = "{";
    bool first = true;
    for (const Run& r : runs_)
        for (long long i = 0; i < r.second; ++i) {
            if (!first) s += ",";
            s += std::to_string(r.first);
            first = false;
        }
    return s + "}";
}

}  // namespace hooklab

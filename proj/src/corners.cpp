#include "hooklab/corners.hpp"

#include <algorithm>
#include <stdexcept>

namespace hooklab {

Corners corners(const Partition& p) {
    Corners c;
    c.kind = DiagramKind::usual;
    int ell = p.length();
    // removable: last box of row i where the row below is shorter
    for (int i = 1; i <= ell; ++i)
        if (p.part(i - 1) > p.part(i)) c.ys.push_back(p.part(i - 1) - i);
    // addable: end of row i where the row above is longer (row 0 = infinity)
    c.xs.push_back(-(ell + 1) + 1);  // new row, content -ell
    for (int i = ell; i >= 1; --i)
        if (i == 1 || p.part(i - 2) > p.part(i - 1)) c.xs.push_back(p.part(i - 1) + 1 - i);
    std::sort(c.ys.begin(), c.ys.end());
    return c;
}

Corners corners(const StrictPartition& s) {
    Corners c;
    c.kind = DiagramKind::shifted;
    int ell = s.length();
    for (int i = 1; i <= ell; ++i)
        if (s.part(i - 1) - 1 > s.part(i) || i == ell) c.ys.push_back(s.part(i - 1));
    c.xs.push_back(1);  // x0, reported even when blocked
    for (int i = ell; i >= 1; --i)
        if (i == 1 || s.part(i - 1) + 1 < s.part(i - 2)) c.xs.push_back(s.part(i - 1) + 1);
    c.row0_blocked = ell > 0 && s.part(ell - 1) == 1;
    std::sort(c.ys.begin(), c.ys.end());
    return c;
}

Partition add_box(const Partition& p, long long x) {
    // row i gets a box of content p_i + 1 - i (1-based)
    int ell = p.length();
    for (int i = 1; i <= ell + 1; ++i) {
        if (p.part(i - 1) + 1 - i == x) {
            if (i > 1 && p.part(i - 2) < p.part(i - 1) + 1) break;
            std::vector<int> parts = p.parts();
            if (i == ell + 1)
                parts.push_back(1);
            else
                ++parts[i - 1];
            return Partition(parts);
        }
    }
    throw std::invalid_argument("add_box: " + std::to_string(x) + " is not an inner corner of " +
                                p.str());
}

StrictPartition add_box(const StrictPartition& s, long long x) {
    int ell = s.length();
    if (x == 1) {
        if (ell > 0 && s.part(ell - 1) == 1)
            throw std::invalid_argument("add_box: row-0 insertion blocked for " + s.str());
        std::vector<int> parts = s.parts();
        parts.push_back(1);
        return StrictPartition(parts);
    }
    for (int i = 1; i <= ell; ++i) {
        if (s.part(i - 1) + 1 == x) {
            if (i > 1 && s.part(i - 2) <= s.part(i - 1) + 1) break;
            std::vector<int> parts = s.parts();
            ++parts[i - 1];
            return StrictPartition(parts);
        }
    }
    throw std::invalid_argument("add_box: " + std::to_string(x) + " is not an inner corner of " +
                                s.str() + " (shifted)");
}

InsertionResult strict_insertion(const StrictPartition& s, int i) {
    Corners c = corners(s);
    int m = c.m();
    if (i < 0 || i > m)
        throw std::invalid_argument("strict_insertion: corner index out of range");
    if (i == 0 && c.row0_blocked)
        throw std::invalid_argument("strict_insertion: row-0 insertion blocked");
    long long xi = c.xs[i];
    StrictPartition plus = add_box(s, xi);

    InsertionResult out;
    out.inserted = plus;

    IntMultiset lhs = shifted_cell_statistics(s).hooks;
    IntMultiset rhs = shifted_cell_statistics(plus).hooks;
    Rational num = make_rational(1), den = make_rational(1);
    if (i >= 1) {
        lhs.add(1);
        lhs.add(xi);
        lhs.add(2 * xi - 2);
        for (int j = 1; j <= m; ++j) {
            if (c.xs[j] != xi) {
                lhs.add(std::llabs(xi - c.xs[j]));
                lhs.add(xi + c.xs[j] - 1);
            }
            rhs.add(std::llabs(xi - c.ys[j - 1]));
            rhs.add(xi + c.ys[j - 1] - 1);
        }
        for (int j = 1; j <= m; ++j) num *= make_rational(choose2(xi) - choose2(c.ys[j - 1]));
        for (int j = 0; j <= m; ++j)
            if (j != i) den *= make_rational(choose2(xi) - choose2(c.xs[j]));
        num /= 2;
    } else {
        lhs.add(1);
        for (int j = 1; j <= m; ++j) {
            lhs.add(c.xs[j]);
            lhs.add(c.xs[j] - 1);
            rhs.add(c.ys[j - 1]);
            rhs.add(c.ys[j - 1] - 1);
        }
        for (int j = 1; j <= m; ++j) {
            num *= make_rational(choose2(xi) - choose2(c.ys[j - 1]));
            den *= make_rational(choose2(xi) - choose2(c.xs[j]));
        }
    }
    out.witness = {lhs, rhs};
    if (lhs != rhs)
        throw std::logic_error("strict_insertion: hook multiset identity failed for " + s.str() +
                               " at corner " + std::to_string(i));
    out.ratio = num / den;
    return out;
}

}  // namespace hooklab

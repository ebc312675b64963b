#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace trimres {

// Exponent vector of a monomial in n variables (all entries >= 0).
using ExponentVector = std::vector<int>;

// Strictly increasing sequence of 1-based variable indices.
using IndexSet = std::vector<int>;

inline int degree(const ExponentVector& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

inline ExponentVector lcm_exponents(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("lcm_exponents: length mismatch");
    ExponentVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
    return c;
}

inline bool divides(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("divides: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline ExponentVector exp_sub(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline ExponentVector unit_exponent(int n, int var /*1-based*/) {
    ExponentVector e(n, 0);
    e[var - 1] = 1;
    return e;
}

// Supp(alpha), 1-based.
inline IndexSet support(const ExponentVector& a) {
    IndexSet s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0) s.push_back(static_cast<int>(i) + 1);
    return s;
}

inline int n_alpha(const ExponentVector& a) {
    return static_cast<int>(support(a).size());
}

inline bool is_strictly_increasing(const IndexSet& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

inline bool index_set_valid(const IndexSet& s, int n) {
    if (!is_strictly_increasing(s)) return false;
    return s.empty() || (s.front() >= 1 && s.back() <= n);
}

inline IndexSet complement_set(const IndexSet& s, int n) {
    IndexSet c;
    std::size_t k = 0;
    for (int i = 1; i <= n; ++i) {
        if (k < s.size() && s[k] == i) { ++k; continue; }
        c.push_back(i);
    }
    return c;
}

inline bool set_contains(const IndexSet& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}

// (-1)^{#{t in s : t < x}}: the exterior-algebra sign of x inside s.
inline int sign_in_set(const IndexSet& s, int x) {
    int cnt = 0;
    for (int t : s) { if (t < x) ++cnt; else break; }
    return (cnt % 2 == 0) ? 1 : -1;
}

// Sign of the permutation sorting the concatenation (a, b) of two disjoint
// sorted sets.
inline int merge_sign(const IndexSet& a, const IndexSet& b) {
    long inv = 0;
    for (int x : a)
        for (int y : b)
            if (x > y) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

inline IndexSet set_union_sorted(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline IndexSet set_minus(const IndexSet& a, int x) {
    IndexSet r;
    for (int t : a)
        if (t != x) r.push_back(t);
    return r;
}

inline ExponentVector indicator(const IndexSet& s, int n) {
    ExponentVector e(n, 0);
    for (int i : s) e[i - 1] = 1;
    return e;
}

}  // namespace trimres

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "trimres/exponent.hpp"

namespace trimres {

// C(n, k); zero outside the Pascal triangle. Values in scope stay far below
// int64 overflow.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// dim_k R_j for R = k[x_1..x_n]: C(n+j-1, j) for j >= 0, else 0.
inline std::int64_t graded_dim(int n, int j) {
    if (n < 1) throw std::invalid_argument("graded_dim: n must be >= 1");
    if (j < 0) return 0;
    return binomial(n + j - 1, j);
}

// All k-subsets of {1..n} in lexicographic order.
inline std::vector<IndexSet> subsets_of_size(int n, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > n) return out;
    IndexSet cur(k);
    std::function<void(int, int)> rec = [&](int pos, int next) {
        if (pos == k) { out.push_back(cur); return; }
        for (int v = next; v <= n - (k - pos - 1); ++v) {
            cur[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
    return out;
}

// All k-subsets of an arbitrary sorted ground set, lex order.
inline std::vector<IndexSet> subsets_of(const IndexSet& ground, int k) {
    std::vector<IndexSet> out;
    int n = static_cast<int>(ground.size());
    if (k < 0 || k > n) return out;
    for (auto& pos : subsets_of_size(n, k)) {
        IndexSet s(k);
        for (int i = 0; i < k; ++i) s[i] = ground[pos[i] - 1];
        out.push_back(std::move(s));
    }
    return out;
}

// All exponent vectors of total degree d in n variables, lex order.
inline std::vector<ExponentVector> monomials_of_degree(int n, int d) {
    std::vector<ExponentVector> out;
    if (d < 0) return out;
    ExponentVector cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == n - 1) { cur[pos] = rem; out.push_back(cur); return; }
        for (int v = rem; v >= 0; --v) {
            cur[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    if (n >= 1) rec(0, d);
    return out;
}

// Nondecreasing sequences of length k with values in [1, n] (multiset rows of
// Young tableaux), lex order.
inline std::vector<std::vector<int>> multisets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0) return out;
    std::vector<int> cur(k);
    std::function<void(int, int)> rec = [&](int pos, int low) {
        if (pos == k) { out.push_back(cur); return; }
        for (int v = low; v <= n; ++v) {
            cur[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, 1);
    return out;
}

}  // namespace trimres

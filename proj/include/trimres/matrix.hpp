#pragma once

#include <map>
#include <utility>
#include <vector>

#include "trimres/polynomial.hpp"

namespace trimres {

// Sparse matrix over F_p.
class ScalarMatrix {
public:
    ScalarMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }

    void set(int r, int c, std::int64_t v) {
        check_index(r, c);
        if (v == 0) entries_.erase({r, c});
        else entries_[{r, c}] = v;
    }

    std::int64_t get(int r, int c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? 0 : it->second;
    }

    // Exact rank via sparse Gaussian elimination over F_p.
    int rank(const PrimeField& field) const;

    // Kernel basis (columns of the returned vectors index this matrix's
    // columns); reduced echelon convention, deterministic.
    std::vector<std::vector<std::pair<int, std::int64_t>>> kernel_basis(const PrimeField& field) const;

private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("ScalarMatrix: index out of range");
    }

    int rows_, cols_;
    std::map<std::pair<int, int>, std::int64_t> entries_;
};

// Sparse matrix with polynomial entries; differentials of graded complexes.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, int nvars, const PrimeField& field)
        : rows_(rows), cols_(cols), nvars_(nvars), field_(field) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }
    const PrimeField& field() const { return field_; }
    const std::map<std::pair<int, int>, Polynomial>& entries() const { return entries_; }

    void set(int r, int c, const Polynomial& p) {
        check_index(r, c);
        if (p.is_zero()) entries_.erase({r, c});
        else entries_.insert_or_assign({r, c}, p);
    }

    void add(int r, int c, const Polynomial& p) {
        check_index(r, c);
        auto it = entries_.find({r, c});
        if (it == entries_.end()) {
            if (!p.is_zero()) entries_.emplace(std::make_pair(r, c), p);
        } else {
            Polynomial s = it->second + p;
            if (s.is_zero()) entries_.erase(it);
            else it->second = s;
        }
    }

    Polynomial get(int r, int c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Polynomial::zero(nvars_, field_) : it->second;
    }

    bool is_zero() const { return entries_.empty(); }

    PolyMatrix multiply(const PolyMatrix& o) const;

    // Reduction modulo the maximal ideal: the matrix of constant terms.
    ScalarMatrix tensor_k() const;

    // True when every entry is a constant.
    bool is_scalar() const;

    static PolyMatrix from_scalar(const ScalarMatrix& m, int nvars, const PrimeField& field);

private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("PolyMatrix: index out of range");
    }

    int rows_, cols_, nvars_;
    PrimeField field_;
    std::map<std::pair<int, int>, Polynomial> entries_;
};

}  // namespace trimres

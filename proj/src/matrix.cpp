#include "trimres/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace trimres {

namespace {

// Row-major sparse rows for elimination.
using SparseRow = std::map<int, std::int64_t>;

// Eliminates rows in place; returns pivot map column -> row index into `rows`.
std::unordered_map<int, int> eliminate(std::vector<SparseRow>& rows, const PrimeField& f) {
    std::unordered_map<int, int> pivot_of_col;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SparseRow& row = rows[i];
        while (!row.empty()) {
            int lead = row.begin()->first;
            auto it = pivot_of_col.find(lead);
            if (it == pivot_of_col.end()) break;
            const SparseRow& prow = rows[it->second];
            std::int64_t factor = f.mul(row.begin()->second, f.inv(prow.begin()->second));
            for (auto& [c, v] : prow) {
                auto jt = row.find(c);
                std::int64_t nv = f.sub(jt == row.end() ? 0 : jt->second, f.mul(factor, v));
                if (nv == 0) { if (jt != row.end()) row.erase(jt); }
                else if (jt == row.end()) row.emplace(c, nv);
                else jt->second = nv;
            }
        }
        if (!row.empty()) pivot_of_col[row.begin()->first] = static_cast<int>(i);
    }
    return pivot_of_col;
}

}  // namespace

int ScalarMatrix::rank(const PrimeField& field) const {
    std::vector<SparseRow> rows(rows_);
    for (auto& [rc, v] : entries_) rows[rc.first][rc.second] = field.reduce(v);
    auto pivots = eliminate(rows, field);
    return static_cast<int>(pivots.size());
}

std::vector<std::vector<std::pair<int, std::int64_t>>> ScalarMatrix::kernel_basis(
    const PrimeField& field) const {
    // Column-echelon on the transpose: eliminate columns as rows, tracking the
    // transformation to read off kernel combinations.
    // Work with augmented rows [column | unit vector] over indices shifted by cols_.
    std::vector<SparseRow> rows(cols_);
    for (auto& [rc, v] : entries_) rows[rc.second][rc.first] = field.reduce(v);
    for (int c = 0; c < cols_; ++c) rows[c][rows_ + c] = 1;

    std::unordered_map<int, int> pivot_of_row;  // matrix-row index -> eliminated row
    std::vector<std::vector<std::pair<int, std::int64_t>>> kernel;
    for (int c = 0; c < cols_; ++c) {
        SparseRow& row = rows[c];
        while (!row.empty() && row.begin()->first < rows_) {
            int lead = row.begin()->first;
            auto it = pivot_of_row.find(lead);
            if (it == pivot_of_row.end()) break;
            const SparseRow& prow = rows[it->second];
            std::int64_t factor = field.mul(row.begin()->second, field.inv(prow.begin()->second));
            for (auto& [cc, v] : prow) {
                auto jt = row.find(cc);
                std::int64_t nv = field.sub(jt == row.end() ? 0 : jt->second, field.mul(factor, v));
                if (nv == 0) { if (jt != row.end()) row.erase(jt); }
                else if (jt == row.end()) row.emplace(cc, nv);
                else jt->second = nv;
            }
        }
        if (!row.empty() && row.begin()->first < rows_) {
            pivot_of_row[row.begin()->first] = c;
        } else {
            std::vector<std::pair<int, std::int64_t>> vec;
            for (auto& [cc, v] : row) vec.emplace_back(cc - rows_, v);
            kernel.push_back(std::move(vec));
        }
    }
    return kernel;
}

PolyMatrix PolyMatrix::multiply(const PolyMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("PolyMatrix::multiply: dimension mismatch");
    PolyMatrix r(rows_, o.cols_, nvars_, field_);
    // group o's entries by row for sparse products
    std::vector<std::vector<std::pair<int, const Polynomial*>>> by_row(o.rows_);
    for (auto& [rc, p] : o.entries_) by_row[rc.first].emplace_back(rc.second, &p);
    for (auto& [rc, p] : entries_) {
        for (auto& [c2, p2] : by_row[rc.second]) r.add(rc.first, c2, p * (*p2));
    }
    return r;
}

ScalarMatrix PolyMatrix::tensor_k() const {
    ScalarMatrix m(rows_, cols_);
    for (auto& [rc, p] : entries_) {
        std::int64_t c = p.constant_term();
        if (c != 0) m.set(rc.first, rc.second, c);
    }
    return m;
}

bool PolyMatrix::is_scalar() const {
    for (auto& [rc, p] : entries_)
        for (auto& [e, c] : p.terms())
            if (degree(e) != 0) return false;
    return true;
}

PolyMatrix PolyMatrix::from_scalar(const ScalarMatrix& m, int nvars, const PrimeField& field) {
    PolyMatrix r(m.rows(), m.cols(), nvars, field);
    for (auto& [rc, v] : m.entries())
        r.set(rc.first, rc.second, Polynomial::constant(nvars, field, v));
    return r;
}

}  // namespace trimres

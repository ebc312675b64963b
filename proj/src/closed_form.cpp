#include "trimres/closed_form.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "trimres/base_resolutions.hpp"
#include "trimres/combinatorics.hpp"

namespace trimres {

namespace {

std::string pair_name(int a, int b) {
    return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

ExponentVector content_of_row(const std::vector<int>& row, int n) {
    ExponentVector c(n, 0);
    for (int x : row) c[x - 1] += 1;
    return c;
}

std::vector<int> row_of_content(const ExponentVector& beta) {
    std::vector<int> row;
    for (std::size_t v = 0; v < beta.size(); ++v)
        for (int k = 0; k < beta[v]; ++k) row.push_back(static_cast<int>(v) + 1);
    return row;
}

// For a degree-(d-1) content vector, the unique complement generator s and
// support variable k with content = alpha_s - eps_k, if any. The pairwise
// separation hypothesis makes the pair unique.
bool find_adjacent_generator(const TrimSpec& spec, const ExponentVector& beta, int& s_out,
                             int& k_out) {
    for (int s = 0; s < spec.r(); ++s) {
        const ExponentVector& alpha = spec.monomial_complement[s];
        ExponentVector diff = exp_sub(alpha, beta);
        int var = 0;
        bool unit = true;
        for (std::size_t v = 0; v < diff.size(); ++v) {
            if (diff[v] == 1 && var == 0) var = static_cast<int>(v) + 1;
            else if (diff[v] != 0) { unit = false; break; }
        }
        if (unit && var != 0) {
            s_out = s;
            k_out = var;
            return true;
        }
    }
    return false;
}

std::int64_t pm_one(std::int64_t field_value, const PrimeField& field, const char* where) {
    std::int64_t v = field.lift(field_value);
    if (v != 1 && v != -1) throw std::logic_error(std::string(where) + ": expected a unit entry");
    return v;
}

// Coordinates of an ambient vector with respect to a submodule basis: every
// non-omitted ambient index is the lead of exactly one column, so a single
// sweep reads the coefficients off the leads. With `project` the residual on
// the omitted complement is discarded, otherwise it must vanish.
std::vector<Polynomial> express(const SubmoduleBasis& B, std::map<int, Polynomial>& v,
                                bool project, int nvars, const PrimeField& field) {
    std::vector<Polynomial> out(B.columns.size(), Polynomial::zero(nvars, field));
    for (std::size_t j = 0; j < B.columns.size(); ++j) {
        auto it = v.find(B.lead[j]);
        if (it == v.end() || it->second.is_zero()) continue;
        std::int64_t lc = 0;
        for (auto& [idx, co] : B.columns[j])
            if (idx == B.lead[j]) lc = co;
        // lead coefficients are +-1 by construction
        Polynomial c = it->second.scaled(lc);
        out[j] = c;
        for (auto& [idx, co] : B.columns[j]) {
            auto jt = v.find(idx);
            Polynomial cur = jt == v.end() ? Polynomial::zero(nvars, field) : jt->second;
            v.insert_or_assign(idx, cur - c.scaled(co));
        }
    }
    for (auto& [idx, poly] : v) {
        if (poly.is_zero()) continue;
        if (!std::binary_search(B.omitted.begin(), B.omitted.end(), idx))
            throw std::logic_error("express: residual outside the omitted complement");
        if (!project)
            throw std::logic_error("express: vector does not lie in the submodule");
    }
    return out;
}

// Image of the ambient differential on a submodule column, re-expressed in
// the target submodule basis.
PolyMatrix restrict_differential(const PolyMatrix& amb, const SubmoduleBasis& target,
                                 const SubmoduleBasis& source, bool project) {
    int nvars = amb.nvars();
    const PrimeField& field = amb.field();
    std::vector<std::vector<std::pair<int, const Polynomial*>>> by_col(amb.cols());
    for (auto& [rc, poly] : amb.entries()) by_col[rc.second].emplace_back(rc.first, &poly);
    PolyMatrix out(target.rank(), source.rank(), nvars, field);
    for (int j = 0; j < source.rank(); ++j) {
        std::map<int, Polynomial> v;
        for (auto& [idx, co] : source.columns[j]) {
            for (auto& [ridx, poly] : by_col[idx]) {
                auto it = v.find(ridx);
                Polynomial add = poly->scaled(co);
                if (it == v.end()) v.emplace(ridx, add);
                else it->second = it->second + add;
            }
        }
        std::vector<Polynomial> coords = express(target, v, project, nvars, field);
        for (int i = 0; i < target.rank(); ++i)
            if (!coords[i].is_zero()) out.set(i, j, coords[i]);
    }
    return out;
}

void require_validated(const TrimSpec& spec, const char* who) {
    if (!spec.validated)
        throw std::invalid_argument(std::string(who) + ": spec must pass validate first");
}

// ---- dense exact linear algebra used by the generic extraction ----

using DenseMatrix = std::vector<std::vector<std::int64_t>>;

DenseMatrix to_dense(const ScalarMatrix& m) {
    DenseMatrix d(m.rows(), std::vector<std::int64_t>(m.cols(), 0));
    for (auto& [rc, v] : m.entries()) d[rc.first][rc.second] = v;
    return d;
}

DenseMatrix transpose(const DenseMatrix& m, int rows, int cols) {
    DenseMatrix t(cols, std::vector<std::int64_t>(rows, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

// In-place reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(DenseMatrix& m, const PrimeField& f) {
    std::vector<int> pivots;
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int sel = -1;
        for (int r = pr; r < rows; ++r)
            if (f.reduce(m[r][c]) != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(m[pr], m[sel]);
        std::int64_t inv = f.inv(m[pr][c]);
        for (int j = 0; j < cols; ++j) m[pr][j] = f.mul(m[pr][j], inv);
        for (int r = 0; r < rows; ++r) {
            if (r == pr) continue;
            std::int64_t factor = f.reduce(m[r][c]);
            if (factor == 0) continue;
            for (int j = 0; j < cols; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[pr][j]));
        }
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

// Inverse of a square matrix via row reduction of [m | I].
DenseMatrix dense_inverse(const DenseMatrix& m, const PrimeField& f) {
    int n = static_cast<int>(m.size());
    DenseMatrix aug(n, std::vector<std::int64_t>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    std::vector<int> piv = rref(aug, f);
    if (static_cast<int>(piv.size()) != n || (n > 0 && piv.back() != n - 1))
        throw std::logic_error("dense_inverse: matrix is singular");
    DenseMatrix inv(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

// Product of a constant matrix with a sparse polynomial column vector.
std::map<int, Polynomial> dense_apply(const DenseMatrix& m, const std::map<int, Polynomial>& v,
                                      int nvars, const PrimeField& f) {
    std::map<int, Polynomial> out;
    int rows = static_cast<int>(m.size());
    for (int i = 0; i < rows; ++i) {
        Polynomial acc = Polynomial::zero(nvars, f);
        for (auto& [j, poly] : v) {
            std::int64_t c = m[i][j];
            if (f.reduce(c) != 0) acc = acc + poly.scaled(c);
        }
        if (!acc.is_zero()) out.emplace(i, acc);
    }
    return out;
}

}  // namespace

void validate(TrimSpec& spec) {
    spec.validated = false;
    if (spec.n < 1 || spec.d < 1)
        throw std::invalid_argument("validate: need n >= 1 and d >= 1");
    int r = spec.r();
    if (r < 1) throw std::invalid_argument("validate: complement must be nonempty");
    if (spec.kind == TrimKind::monomial) {
        if (!spec.squarefree_complement.empty())
            throw std::invalid_argument("validate: monomial spec with squarefree complement data");
        for (int i = 0; i < r; ++i) {
            const ExponentVector& a = spec.monomial_complement[i];
            if (static_cast<int>(a.size()) != spec.n)
                throw std::invalid_argument("validate: complement generator " +
                                            std::to_string(i + 1) + " has wrong length");
            for (int e : a)
                if (e < 0)
                    throw std::invalid_argument("validate: complement generator " +
                                                std::to_string(i + 1) +
                                                " has a negative exponent");
            if (degree(a) != spec.d)
                throw std::invalid_argument("validate: complement generator " +
                                            std::to_string(i + 1) + " does not have degree " +
                                            std::to_string(spec.d));
        }
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                if (spec.monomial_complement[i] == spec.monomial_complement[j])
                    throw std::invalid_argument("validate: duplicate complement generators " +
                                                pair_name(i, j));
                if (degree(lcm_exponents(spec.monomial_complement[i],
                                         spec.monomial_complement[j])) < spec.d + 2)
                    throw std::invalid_argument("validate: LCM hypothesis violated for pair " +
                                                pair_name(i, j));
            }
        if (static_cast<std::int64_t>(r) >= binomial(spec.n + spec.d - 1, spec.d))
            throw std::invalid_argument(
                "validate: complement must be a proper subset of the degree-d generating set");
    } else {
        if (!spec.monomial_complement.empty())
            throw std::invalid_argument("validate: squarefree spec with monomial complement data");
        if (spec.d > spec.n)
            throw std::invalid_argument("validate: squarefree spec needs d <= n");
        for (int i = 0; i < r; ++i) {
            const IndexSet& a = spec.squarefree_complement[i];
            if (static_cast<int>(a.size()) != spec.d || !index_set_valid(a, spec.n))
                throw std::invalid_argument("validate: complement generator " +
                                            std::to_string(i + 1) + " is not a " +
                                            std::to_string(spec.d) + "-subset of the variables");
        }
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                const IndexSet& a = spec.squarefree_complement[i];
                const IndexSet& b = spec.squarefree_complement[j];
                if (a == b)
                    throw std::invalid_argument("validate: duplicate complement generators " +
                                                pair_name(i, j));
                IndexSet inter;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(inter));
                if (static_cast<int>(inter.size()) > spec.d - 2)
                    throw std::invalid_argument(
                        "validate: intersection hypothesis violated for pair " + pair_name(i, j));
            }
        if (static_cast<std::int64_t>(r) >= binomial(spec.n, spec.d))
            throw std::invalid_argument(
                "validate: complement must be a proper subset of the degree-d generating set");
    }
    spec.validated = true;
}

MonomialIdeal trimmed_ideal(const TrimSpec& spec) {
    require_validated(spec, "trimmed_ideal");
    std::vector<ExponentVector> gens;
    if (spec.kind == TrimKind::monomial) {
        for (auto& m : monomials_of_degree(spec.n, spec.d)) {
            bool out = false;
            for (auto& a : spec.monomial_complement)
                if (a == m) out = true;
            if (!out) gens.push_back(m);
        }
    } else {
        for (auto& s : subsets_of_size(spec.n, spec.d)) {
            bool out = false;
            for (auto& a : spec.squarefree_complement)
                if (a == s) out = true;
            if (!out) gens.push_back(indicator(s, spec.n));
        }
    }
    return MonomialIdeal(spec.n, gens);
}

namespace {

// Summed reduced rank of the stacked comparison maps in exterior degree l;
// rk_0 = r by convention.
std::int64_t rk_total(const TrimSpec& spec, int l) {
    if (l == 0) return spec.r();
    std::int64_t total = 0;
    if (spec.kind == TrimKind::monomial) {
        for (auto& alpha : spec.monomial_complement) {
            int na = n_alpha(alpha);
            bool pure = na == 1;
            total += pure ? q_rank(QKind::pure, spec.n, spec.d, l, 1)
                          : q_rank(QKind::general, spec.n, spec.d, l, na);
        }
    } else {
        total += static_cast<std::int64_t>(spec.r()) *
                 q_rank(QKind::sqfree, spec.n, spec.d, l, spec.d);
    }
    return total;
}

}  // namespace

BettiTable betti_formula(const TrimSpec& spec) {
    require_validated(spec, "betti_formula");
    int n = spec.n, d = spec.d;
    BettiTable t;
    t.set(0, 0, 1);
    if (spec.kind == TrimKind::monomial) {
        for (int l = 1; l <= n; ++l) {
            std::int64_t top = binomial(n + d - 1, d + l - 1) * binomial(d + l - 2, l - 1) -
                               rk_total(spec, l - 1);
            if (top != 0) t.set(l, l + d - 1, top);
            std::int64_t low = 0;
            for (auto& alpha : spec.monomial_complement) {
                int na = n_alpha(alpha);
                if (na >= 2) low += binomial(n - na, l - na);
            }
            if (low != 0) t.set(l, l + d, low);
        }
    } else {
        for (int l = 1; l <= n - d + 1; ++l) {
            std::int64_t v = binomial(d + l - 2, l - 1) * binomial(n, d + l - 1) -
                             spec.r() * binomial(n - d, l - 1);
            if (v != 0) t.set(l, l + d - 1, v);
        }
    }
    return t;
}

std::pair<std::int64_t, bool> ring_type_and_gorenstein(const TrimSpec& spec) {
    require_validated(spec, "ring_type_and_gorenstein");
    if (spec.kind != TrimKind::monomial || spec.r() != 1 || spec.d < 2)
        throw std::invalid_argument(
            "ring_type_and_gorenstein: stated for a single-generator monomial spec with d >= 2");
    BettiTable t = betti_formula(spec);
    std::int64_t type = t.column_total(t.max_homological_degree());
    // With a pure-power complement no power of that variable lies in the
    // ideal, the quotient is not Artinian and the last Betti number does not
    // measure a socle; only the Artinian case can be Gorenstein.
    bool artinian = n_alpha(spec.monomial_complement[0]) >= 2;
    return {type, artinian && type == 1};
}

SubmoduleBasis build_submodule_L(const TrimSpec& spec, int i, const PrimeField& field) {
    require_validated(spec, "build_submodule_L");
    if (spec.kind != TrimKind::monomial)
        throw std::invalid_argument("build_submodule_L: monomial spec required");
    if (i < 0 || i > spec.n - 1)
        throw std::invalid_argument("build_submodule_L: index out of range");
    int n = spec.n, d = spec.d;
    auto ambient = schur_basis(n, i, d);
    SubmoduleBasis B;
    B.ambient_rank = static_cast<int>(ambient.size());

    if (i == 0) {
        for (std::size_t idx = 0; idx < ambient.size(); ++idx) {
            ExponentVector mono = content_of_row(ambient[idx].row, n);
            mono[ambient[idx].column[0] - 1] += 1;
            bool trimmed = false;
            for (auto& a : spec.monomial_complement)
                if (a == mono) trimmed = true;
            if (trimmed) {
                B.omitted.push_back(static_cast<int>(idx));
            } else {
                B.columns.push_back({{static_cast<int>(idx), 1}});
                B.lead.push_back(static_cast<int>(idx));
            }
        }
        return B;
    }

    std::map<SchurElement, int> pos;
    for (std::size_t idx = 0; idx < ambient.size(); ++idx)
        pos.emplace(ambient[idx], static_cast<int>(idx));
    std::vector<ScalarMatrix> phis;
    std::vector<std::map<IndexSet, int>> rowpos(spec.r());
    for (int s = 0; s < spec.r(); ++s) {
        IndexSet vars = colon_pure(n, d, spec.monomial_complement[s]);
        phis.push_back(phi_map(n, d, i, vars, spec.monomial_complement[s]));
        auto rows = subsets_of(vars, i);
        for (std::size_t k = 0; k < rows.size(); ++k)
            rowpos[s].emplace(rows[k], static_cast<int>(k));
    }

    for (std::size_t idx = 0; idx < ambient.size(); ++idx) {
        const SchurElement& e = ambient[idx];
        int s = -1, k = 0;
        if (!find_adjacent_generator(spec, content_of_row(e.row, n), s, k) ||
            !set_contains(e.column, k)) {
            B.columns.push_back({{static_cast<int>(idx), 1}});
            B.lead.push_back(static_cast<int>(idx));
            continue;
        }
        IndexSet jprime = set_minus(e.column, k);
        IndexSet supp = support(spec.monomial_complement[s]);
        int kt = 0;
        for (int v : supp)
            if (!set_contains(jprime, v)) { kt = v; break; }
        if (kt == k) {
            B.omitted.push_back(static_cast<int>(idx));
            continue;
        }
        SchurElement partner{set_union_sorted(jprime, {kt}),
                             row_of_content(exp_sub(spec.monomial_complement[s],
                                                    unit_exponent(n, kt)))};
        int idx2 = pos.at(partner);
        int rowidx = rowpos[s].at(jprime);
        std::int64_t a = pm_one(phis[s].get(rowidx, static_cast<int>(idx)), field,
                                "build_submodule_L");
        std::int64_t b = pm_one(phis[s].get(rowidx, idx2), field, "build_submodule_L");
        B.columns.push_back({{static_cast<int>(idx), b}, {idx2, -a}});
        B.lead.push_back(static_cast<int>(idx));
    }
    return B;
}

SubmoduleBasis build_submodule_F(const TrimSpec& spec, int i, const PrimeField& field) {
    require_validated(spec, "build_submodule_F");
    if (spec.kind != TrimKind::squarefree)
        throw std::invalid_argument("build_submodule_F: squarefree spec required");
    if (i < 1 || i > spec.n - spec.d + 1)
        throw std::invalid_argument("build_submodule_F: index out of range");
    int n = spec.n, d = spec.d;
    auto ambient = specht_basis(n, d, i - 1);
    SubmoduleBasis B;
    B.ambient_rank = static_cast<int>(ambient.size());

    if (i == 1) {
        for (std::size_t idx = 0; idx < ambient.size(); ++idx) {
            IndexSet mono = set_union_sorted(ambient[idx].column, ambient[idx].row);
            bool trimmed = false;
            for (auto& a : spec.squarefree_complement)
                if (a == mono) trimmed = true;
            if (trimmed) {
                B.omitted.push_back(static_cast<int>(idx));
            } else {
                B.columns.push_back({{static_cast<int>(idx), 1}});
                B.lead.push_back(static_cast<int>(idx));
            }
        }
        return B;
    }

    std::map<SpechtElement, int> pos;
    for (std::size_t idx = 0; idx < ambient.size(); ++idx)
        pos.emplace(ambient[idx], static_cast<int>(idx));
    std::vector<ScalarMatrix> psis;
    std::vector<std::map<IndexSet, int>> rowpos(spec.r());
    for (int s = 0; s < spec.r(); ++s) {
        psis.push_back(psi_map(n, d, i - 1, spec.squarefree_complement[s]));
        auto rows = subsets_of(complement_set(spec.squarefree_complement[s], n), i - 1);
        for (std::size_t k = 0; k < rows.size(); ++k)
            rowpos[s].emplace(rows[k], static_cast<int>(k));
    }

    for (std::size_t idx = 0; idx < ambient.size(); ++idx) {
        const SpechtElement& e = ambient[idx];
        int s = -1, a = 0;
        for (int t = 0; t < spec.r(); ++t) {
            const IndexSet& I = spec.squarefree_complement[t];
            IndexSet missing;
            bool inside = true;
            for (int x : e.row)
                if (!set_contains(I, x)) { inside = false; break; }
            if (!inside) continue;
            for (int x : I)
                if (!set_contains(e.row, x)) missing.push_back(x);
            if (missing.size() == 1) { s = t; a = missing[0]; break; }
        }
        bool unit = true;
        IndexSet jprime;
        if (s >= 0 && set_contains(e.column, a)) {
            jprime = set_minus(e.column, a);
            bool disjoint = true;
            for (int x : jprime)
                if (set_contains(spec.squarefree_complement[s], x)) disjoint = false;
            if (disjoint) unit = false;
        }
        if (unit) {
            B.columns.push_back({{static_cast<int>(idx), 1}});
            B.lead.push_back(static_cast<int>(idx));
            continue;
        }
        const IndexSet& I = spec.squarefree_complement[s];
        if (a == I[0]) {
            B.omitted.push_back(static_cast<int>(idx));
            continue;
        }
        SpechtElement partner{set_union_sorted(jprime, {I[0]}), set_minus(I, I[0])};
        int idx2 = pos.at(partner);
        int rowidx = rowpos[s].at(jprime);
        std::int64_t ca = pm_one(psis[s].get(rowidx, static_cast<int>(idx)), field,
                                 "build_submodule_F");
        std::int64_t cb = pm_one(psis[s].get(rowidx, idx2), field, "build_submodule_F");
        B.columns.push_back({{static_cast<int>(idx), cb}, {idx2, -ca}});
        B.lead.push_back(static_cast<int>(idx));
    }
    return B;
}

namespace {

// The connecting map on one Koszul summand, computed as the composite
// "include the cokernel, apply the Koszul differential, lift through the
// canonical section of the comparison map, apply the ambient differential,
// project onto the kernel submodule".
PolyMatrix theta_block(const TrimSpec& spec, int s, int p, const PrimeField& field,
                       const GradedFreeComplex& L, const SubmoduleBasis& target) {
    int n = spec.n, d = spec.d;
    const ExponentVector& alpha = spec.monomial_complement[s];
    IndexSet supp = support(alpha);
    int m = static_cast<int>(supp.size());
    if (m < 2) return PolyMatrix(target.rank(), 0, n, field);
    auto cols = subsets_of(complement_set(supp, n), p - m);
    PolyMatrix out(target.rank(), static_cast<int>(cols.size()), n, field);
    if (cols.empty()) return out;

    IndexSet vars = colon_pure(n, d, alpha);  // all variables when m >= 2
    ScalarMatrix phi = phi_map(n, d, p - 1, vars, alpha);
    auto rows = subsets_of(vars, p - 1);
    std::map<IndexSet, int> rowpos;
    for (std::size_t k = 0; k < rows.size(); ++k) rowpos.emplace(rows[k], static_cast<int>(k));
    auto ambient = schur_basis(n, p - 1, d);
    std::map<SchurElement, int> pos;
    for (std::size_t idx = 0; idx < ambient.size(); ++idx)
        pos.emplace(ambient[idx], static_cast<int>(idx));
    const PolyMatrix& diff = L.differentials[p - 1];
    std::vector<std::vector<std::pair<int, const Polynomial*>>> by_col(diff.cols());
    for (auto& [rc, poly] : diff.entries()) by_col[rc.second].emplace_back(rc.first, &poly);

    for (std::size_t c = 0; c < cols.size(); ++c) {
        const IndexSet& J = cols[c];
        IndexSet D = set_union_sorted(supp, J);
        int sgnJ = merge_sign(supp, J);
        std::map<int, Polynomial> v;
        for (int k : supp) {
            SchurElement lifted{D, row_of_content(exp_sub(alpha, unit_exponent(n, k)))};
            int idx = pos.at(lifted);
            std::int64_t c2 =
                pm_one(phi.get(rowpos.at(set_minus(D, k)), idx), field, "theta_block");
            std::int64_t c1 = sgnJ * sign_in_set(D, k) * c2;
            Polynomial xk = Polynomial::monomial(n, field, unit_exponent(n, k), c1);
            for (auto& [ridx, poly] : by_col[idx]) {
                Polynomial add = *poly * xk;
                auto it = v.find(ridx);
                if (it == v.end()) v.emplace(ridx, add);
                else it->second = it->second + add;
            }
        }
        std::vector<Polynomial> coords = express(target, v, /*project=*/true, n, field);
        for (int i = 0; i < target.rank(); ++i)
            if (!coords[i].is_zero()) out.set(i, static_cast<int>(c), coords[i]);
    }
    return out;
}

// Koszul differential between cokernel summand levels, transported through
// the identification of the cokernel basis e_{Supp(alpha) u J} with e_J.
PolyMatrix koszul_summand_block(const TrimSpec& spec, int s, int p, const PrimeField& field) {
    int n = spec.n;
    const ExponentVector& alpha = spec.monomial_complement[s];
    IndexSet supp = support(alpha);
    int m = static_cast<int>(supp.size());
    IndexSet comp = complement_set(supp, n);
    auto cols = subsets_of(comp, p - m);
    auto rows = subsets_of(comp, p - 1 - m);
    std::map<IndexSet, int> rowpos;
    for (std::size_t k = 0; k < rows.size(); ++k) rowpos.emplace(rows[k], static_cast<int>(k));
    PolyMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()), n, field);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const IndexSet& J = cols[c];
        for (int j : J) {
            IndexSet Jm = set_minus(J, j);
            int coef = merge_sign(supp, J) * sign_in_set(set_union_sorted(supp, J), j) *
                       merge_sign(supp, Jm);
            out.set(rowpos.at(Jm), static_cast<int>(c),
                    Polynomial::monomial(n, field, unit_exponent(n, j), coef));
        }
    }
    return out;
}

}  // namespace

PolyMatrix theta_map(const TrimSpec& spec, int s, int p, const PrimeField& field) {
    require_validated(spec, "theta_map");
    if (spec.kind != TrimKind::monomial)
        throw std::invalid_argument("theta_map: monomial spec required");
    if (s < 0 || s >= spec.r()) throw std::invalid_argument("theta_map: generator out of range");
    if (p < 2) throw std::invalid_argument("theta_map: need homological degree >= 2");
    GradedFreeComplex L = build_L_complex(spec.n, spec.d, field);
    SubmoduleBasis target = build_submodule_L(spec, p - 2, field);
    return theta_block(spec, s, p, field, L, target);
}

GradedFreeComplex build_minimal_resolution(const TrimSpec& spec, const PrimeField& field) {
    require_validated(spec, "build_minimal_resolution");
    int n = spec.n, d = spec.d;
    GradedFreeComplex c;
    c.nvars = n;
    c.field = field;

    if (spec.kind == TrimKind::squarefree) {
        GradedFreeComplex G = build_galetto(n, d, field);
        int len = n - d + 1;
        std::vector<SubmoduleBasis> sub(len + 1);
        for (int i = 1; i <= len; ++i) sub[i] = build_submodule_F(spec, i, field);
        c.modules.push_back({{0}, {ExponentVector(n, 0)}});
        for (int i = 1; i <= len; ++i) {
            GradedFreeModule mod;
            auto ambient = specht_basis(n, d, i - 1);
            for (int j = 0; j < sub[i].rank(); ++j) {
                mod.generator_degrees.push_back(d + i - 1);
                const SpechtElement& e = ambient[sub[i].lead[j]];
                mod.multidegrees.push_back(
                    indicator(set_union_sorted(e.column, e.row), n));
            }
            c.modules.push_back(std::move(mod));
        }
        {
            PolyMatrix d1(1, sub[1].rank(), n, field);
            for (int j = 0; j < sub[1].rank(); ++j)
                d1.set(0, j, G.differentials[0].get(0, sub[1].lead[j]));
            c.differentials.push_back(std::move(d1));
        }
        for (int i = 2; i <= len; ++i)
            c.differentials.push_back(
                restrict_differential(G.differentials[i - 1], sub[i - 1], sub[i], false));
        while (c.modules.size() > 1 && c.modules.back().rank() == 0) {
            c.modules.pop_back();
            c.differentials.pop_back();
        }
        return c;
    }

    GradedFreeComplex L = build_L_complex(n, d, field);
    std::vector<SubmoduleBasis> sub(n);
    for (int i = 0; i <= n - 1; ++i) sub[i] = build_submodule_L(spec, i, field);
    std::vector<IndexSet> supp(spec.r());
    std::vector<IndexSet> comp(spec.r());
    for (int s = 0; s < spec.r(); ++s) {
        supp[s] = support(spec.monomial_complement[s]);
        comp[s] = complement_set(supp[s], n);
    }
    auto summand_count = [&](int s, int i) -> std::int64_t {
        int m = static_cast<int>(supp[s].size());
        return m >= 2 ? binomial(static_cast<int>(comp[s].size()), i - m) : 0;
    };

    c.modules.push_back({{0}, {ExponentVector(n, 0)}});
    for (int i = 1; i <= n; ++i) {
        GradedFreeModule mod;
        auto ambient = schur_basis(n, i - 1, d);
        for (int j = 0; j < sub[i - 1].rank(); ++j) {
            mod.generator_degrees.push_back(i - 1 + d);
            const SchurElement& e = ambient[sub[i - 1].lead[j]];
            ExponentVector mu = content_of_row(e.row, n);
            for (int x : e.column) mu[x - 1] += 1;
            mod.multidegrees.push_back(mu);
        }
        for (int s = 0; s < spec.r(); ++s) {
            int m = static_cast<int>(supp[s].size());
            if (m < 2) continue;
            for (auto& J : subsets_of(comp[s], i - m)) {
                mod.generator_degrees.push_back(i + d);
                mod.multidegrees.push_back(exp_add(
                    spec.monomial_complement[s],
                    indicator(set_union_sorted(supp[s], J), n)));
            }
        }
        c.modules.push_back(std::move(mod));
    }

    {
        PolyMatrix d1(1, c.modules[1].rank(), n, field);
        for (int j = 0; j < sub[0].rank(); ++j)
            d1.set(0, j, L.differentials[0].get(0, sub[0].lead[j]));
        c.differentials.push_back(std::move(d1));
    }
    for (int i = 2; i <= n; ++i) {
        PolyMatrix D(c.modules[i - 1].rank(), c.modules[i].rank(), n, field);
        PolyMatrix aa = restrict_differential(L.differentials[i - 1], sub[i - 2], sub[i - 1],
                                              /*project=*/false);
        for (auto& [rc, poly] : aa.entries()) D.set(rc.first, rc.second, poly);
        int col_base = sub[i - 1].rank();
        for (int s = 0; s < spec.r(); ++s) {
            std::int64_t cols_here = summand_count(s, i);
            if (cols_here > 0) {
                PolyMatrix th = theta_block(spec, s, i, field, L, sub[i - 2]);
                for (auto& [rc, poly] : th.entries())
                    D.set(rc.first, col_base + rc.second, poly);
                int row_base = sub[i - 2].rank();
                for (int s2 = 0; s2 < s; ++s2)
                    row_base += static_cast<int>(summand_count(s2, i - 1));
                PolyMatrix kz = koszul_summand_block(spec, s, i, field);
                for (auto& [rc, poly] : kz.entries())
                    D.set(row_base + rc.first, col_base + rc.second, poly.negated());
            }
            col_base += static_cast<int>(cols_here);
        }
        c.differentials.push_back(std::move(D));
    }
    while (c.modules.size() > 1 && c.modules.back().rank() == 0) {
        c.modules.pop_back();
        c.differentials.pop_back();
    }
    return c;
}

std::optional<std::string> verify_resolution(const GradedFreeComplex& c, const TrimSpec& spec) {
    require_validated(spec, "verify_resolution");
    MonomialIdeal K = trimmed_ideal(spec);
    if (c.nvars != spec.n) return "variable count mismatch";
    if (!check_complex(c)) return "homogeneity or d^2 = 0 check failed";
    if (!is_minimal(c)) return "complex is not minimal";
    int bound = c.max_generator_degree() + c.nvars;
    if (betti_by_strands(c, bound) != betti_formula(spec))
        return "Betti table differs from the closed formula";
    auto h0 = [&](const ExponentVector& mu) -> std::int64_t { return K.contains(mu) ? 0 : 1; };
    if (auto err = certify_resolution(c, bound, h0)) return *err;
    // first differential must spell exactly the generators of K'
    if (c.length() < 1 || c.modules[0].rank() != 1) return "resolution does not start at R";
    std::vector<ExponentVector> image;
    for (int j = 0; j < c.modules[1].rank(); ++j) {
        Polynomial p = c.differentials[0].get(0, j);
        if (p.term_count() != 1) return "first differential entry is not a monomial";
        image.push_back(p.terms().begin()->first);
    }
    std::sort(image.begin(), image.end());
    if (image != K.generators()) return "first differential image differs from the ideal";
    return std::nullopt;
}

GradedFreeComplex split_cone_extract(const GradedFreeComplex& F,
                                     const std::vector<TrimData>& trims) {
    // reuse the cone builder's validation of the trim data and the commuting
    // squares; the assembled cone itself is discarded
    build_trimming_cone(F, trims);
    int p = F.length();
    int n = F.nvars;
    const PrimeField& field = F.field;
    for (auto& t : trims)
        for (std::size_t k = 0; k < t.q.size(); ++k)
            if (!t.q[k].is_scalar())
                throw std::invalid_argument(
                    "split_cone_extract: comparison map at degree " + std::to_string(k + 1) +
                    " is not constant");

    std::vector<int> trim_degree;
    for (auto& t : trims)
        trim_degree.push_back(F.modules[1].generator_degrees[t.generator_index]);
    auto g_rank = [&](const TrimData& t, int i) {
        return i >= 0 && i <= t.G.length() ? t.G.modules[i].rank() : 0;
    };
    auto stacked_rows = [&](int i) {
        int rows = 0;
        for (auto& t : trims) rows += g_rank(t, i);
        return rows;
    };
    // stacked comparison map F_i -> (+)_s G^s_{i-1}
    auto stacked = [&](int i) {
        DenseMatrix M(stacked_rows(i - 1),
                      std::vector<std::int64_t>(i <= p ? F.modules[i].rank() : 0, 0));
        if (i < 2 || i > p) return M;
        int base = 0;
        for (auto& t : trims) {
            for (auto& [rc, poly] : t.q[i - 2].entries())
                M[base + rc.first][rc.second] = poly.constant_term();
            base += g_rank(t, i - 1);
        }
        return M;
    };

    int top = p;
    for (auto& t : trims) top = std::max(top, t.G.length());

    // per level: kernel data at F_i and cokernel data at (+) G_i
    std::vector<SubmoduleBasis> A(top + 2);
    std::vector<std::vector<int>> coker(top + 2);      // unit indices spanning the cokernel
    std::vector<DenseMatrix> Tinv(top + 2);            // inverse of [image basis | coker units]
    std::vector<std::vector<int>> impivot(top + 2);    // pivot columns of the stacked map
    for (int i = 2; i <= p; ++i) {
        DenseMatrix M = stacked(i);
        DenseMatrix R = M;
        std::vector<int> piv = rref(R, field);
        int cols = i <= p ? F.modules[i].rank() : 0;
        SubmoduleBasis B;
        B.ambient_rank = cols;
        std::vector<bool> is_piv(cols, false);
        for (int pc : piv) is_piv[pc] = true;
        for (int cidx = 0; cidx < cols; ++cidx) {
            if (is_piv[cidx]) {
                B.omitted.push_back(cidx);
                continue;
            }
            std::vector<std::pair<int, std::int64_t>> col = {{cidx, 1}};
            for (std::size_t j = 0; j < piv.size(); ++j) {
                std::int64_t v = field.reduce(R[j][cidx]);
                if (v != 0) col.emplace_back(piv[j], field.neg(v));
            }
            std::sort(col.begin(), col.end());
            B.columns.push_back(std::move(col));
            B.lead.push_back(cidx);
        }
        A[i] = std::move(B);
        impivot[i] = piv;
    }
    for (int i = 1; i <= top; ++i) {
        int gdim = stacked_rows(i);
        if (gdim == 0) { coker[i] = {}; continue; }
        DenseMatrix M = stacked(i + 1);
        int mcols = M.empty() ? 0 : static_cast<int>(M[0].size());
        DenseMatrix Mt = transpose(M, gdim, mcols);
        std::vector<int> piv_rows = rref(Mt, field);
        std::vector<bool> covered(gdim, false);
        for (int g : piv_rows) covered[g] = true;
        for (int g = 0; g < gdim; ++g)
            if (!covered[g]) coker[i].push_back(g);
        if (i == 1 && !coker[1].empty())
            throw std::invalid_argument(
                "split_cone_extract: bottom comparison map is not surjective (degree 1)");
        // square change of basis [M columns at pivots | coker units]
        DenseMatrix M2 = stacked(i + 1);
        DenseMatrix T(gdim, std::vector<std::int64_t>(gdim, 0));
        int r = static_cast<int>(impivot[i + 1].size());
        for (int j = 0; j < r; ++j)
            for (int g = 0; g < gdim; ++g) T[g][j] = M2[g][impivot[i + 1][j]];
        for (std::size_t j = 0; j < coker[i].size(); ++j) T[coker[i][j]][r + j] = 1;
        Tinv[i] = dense_inverse(T, field);
    }

    // retained generators of F_1
    std::vector<int> kept;
    for (int g = 0; g < F.modules[1].rank(); ++g) {
        bool trimmed = false;
        for (auto& t : trims)
            if (t.generator_index == g) trimmed = true;
        if (!trimmed) kept.push_back(g);
    }

    GradedFreeComplex out;
    out.nvars = n;
    out.field = field;
    bool multigraded = true;
    for (auto& m : F.modules) multigraded = multigraded && m.has_multidegrees();
    for (auto& t : trims)
        for (auto& m : t.G.modules) multigraded = multigraded && m.has_multidegrees();
    std::vector<ExponentVector> trim_mult;
    if (multigraded)
        for (auto& t : trims) trim_mult.push_back(F.modules[1].multidegrees[t.generator_index]);

    out.modules.push_back({{0}, {}});
    if (multigraded) out.modules[0].multidegrees = {ExponentVector(n, 0)};
    for (int i = 1; i <= top; ++i) {
        GradedFreeModule mod;
        if (i == 1) {
            for (int g : kept) {
                mod.generator_degrees.push_back(F.modules[1].generator_degrees[g]);
                if (multigraded) mod.multidegrees.push_back(F.modules[1].multidegrees[g]);
            }
        } else if (i <= p) {
            for (int j = 0; j < A[i].rank(); ++j) {
                int deg = -1;
                ExponentVector mu;
                for (auto& [idx, co] : A[i].columns[j]) {
                    int dg = F.modules[i].generator_degrees[idx];
                    if (deg < 0) deg = dg;
                    else if (deg != dg)
                        throw std::logic_error("split_cone_extract: inhomogeneous kernel vector");
                    if (multigraded) {
                        const ExponentVector& mv = F.modules[i].multidegrees[idx];
                        if (mu.empty()) mu = mv;
                        else if (mu != mv) multigraded = false;
                    }
                }
                mod.generator_degrees.push_back(deg);
                if (multigraded) mod.multidegrees.push_back(mu);
            }
        }
        int gbase = 0;
        for (std::size_t s = 0; s < trims.size(); ++s) {
            for (int g : coker[i]) {
                if (g >= gbase && g < gbase + g_rank(trims[s], i)) {
                    mod.generator_degrees.push_back(
                        trims[s].G.modules[i].generator_degrees[g - gbase] + trim_degree[s]);
                    if (multigraded)
                        mod.multidegrees.push_back(exp_add(
                            trims[s].G.modules[i].multidegrees[g - gbase], trim_mult[s]));
                }
            }
            gbase += g_rank(trims[s], i);
        }
        out.modules.push_back(std::move(mod));
    }
    if (!multigraded)
        for (auto& m : out.modules) m.multidegrees.clear();
    while (out.modules.size() > 1 && out.modules.back().rank() == 0) out.modules.pop_back();
    int len = static_cast<int>(out.modules.size()) - 1;

    // big Koszul-side differential (+) G_i -> (+) G_{i-1} as a block diagonal
    auto big_m = [&](int i) {
        PolyMatrix M(stacked_rows(i - 1), stacked_rows(i), n, field);
        int rb = 0, cb = 0;
        for (auto& t : trims) {
            if (i <= t.G.length())
                for (auto& [rc, poly] : t.G.differentials[i - 1].entries())
                    M.set(rb + rc.first, cb + rc.second, poly);
            rb += g_rank(t, i - 1);
            cb += g_rank(t, i);
        }
        return M;
    };

    // coordinates of a polynomial vector over F_{i} in the kernel part of the
    // result basis at position i (i >= 1), projecting away the complement
    auto a_coords = [&](int i, std::map<int, Polynomial> v, bool project) {
        if (i == 1) {
            std::vector<Polynomial> coords;
            std::vector<bool> used(F.modules[1].rank(), false);
            for (int g : kept) {
                auto it = v.find(g);
                coords.push_back(it == v.end() ? Polynomial::zero(n, field) : it->second);
                used[g] = true;
            }
            if (!project)
                for (auto& [idx, poly] : v)
                    if (!used[idx] && !poly.is_zero())
                        throw std::logic_error("split_cone_extract: image hits a trimmed row");
            return coords;
        }
        return express(A[i], v, project, n, field);
    };

    for (int i = 1; i <= len; ++i) {
        int acols = i == 1 ? static_cast<int>(kept.size()) : (i <= p ? A[i].rank() : 0);
        int arows = i == 2 ? static_cast<int>(kept.size())
                           : (i - 1 <= p && i >= 2 ? A[i - 1].rank() : 0);
        if (i == 1) {
            PolyMatrix D(1, out.modules[1].rank(), n, field);
            for (std::size_t j = 0; j < kept.size(); ++j)
                D.set(0, static_cast<int>(j), F.differentials[0].get(0, kept[j]));
            out.differentials.push_back(std::move(D));
            continue;
        }
        PolyMatrix D(out.modules[i - 1].rank(), out.modules[i].rank(), n, field);
        // kernel-to-kernel block
        if (i <= p) {
            std::vector<std::vector<std::pair<int, const Polynomial*>>> by_col(
                F.differentials[i - 1].cols());
            for (auto& [rc, poly] : F.differentials[i - 1].entries())
                by_col[rc.second].emplace_back(rc.first, &poly);
            for (int j = 0; j < A[i].rank(); ++j) {
                std::map<int, Polynomial> v;
                for (auto& [idx, co] : A[i].columns[j])
                    for (auto& [ridx, poly] : by_col[idx]) {
                        Polynomial add = poly->scaled(co);
                        auto it = v.find(ridx);
                        if (it == v.end()) v.emplace(ridx, add);
                        else it->second = it->second + add;
                    }
                std::vector<Polynomial> coords = a_coords(i - 1, std::move(v), false);
                for (std::size_t rr = 0; rr < coords.size(); ++rr)
                    if (!coords[rr].is_zero()) D.set(static_cast<int>(rr), j, coords[rr]);
            }
        }
        // cokernel columns: connecting map into the kernel part and the
        // negated induced Koszul differential
        if (!coker[i].empty()) {
            PolyMatrix mbig = big_m(i);
            int r_prev = static_cast<int>(impivot[i].size());
            for (std::size_t cj = 0; cj < coker[i].size(); ++cj) {
                int g = coker[i][cj];
                std::map<int, Polynomial> w;
                for (int row = 0; row < mbig.rows(); ++row) {
                    Polynomial e = mbig.get(row, g);
                    if (!e.is_zero()) w.emplace(row, e);
                }
                std::map<int, Polynomial> tw =
                    Tinv[i - 1].empty() ? std::map<int, Polynomial>{}
                                        : dense_apply(Tinv[i - 1], w, n, field);
                // coker coordinates -> negated induced differential
                for (std::size_t rj = 0; rj < coker[i - 1].size(); ++rj) {
                    auto it = tw.find(r_prev + static_cast<int>(rj));
                    if (it == tw.end() || it->second.is_zero()) continue;
                    D.set(arows + static_cast<int>(rj),
                          acols + static_cast<int>(cj), it->second.negated());
                }
                // image coordinates -> lift through the section and push down
                std::map<int, Polynomial> u;
                for (int j = 0; j < r_prev; ++j) {
                    auto it = tw.find(j);
                    if (it == tw.end() || it->second.is_zero()) continue;
                    int fcol = impivot[i][j];
                    auto jt = u.find(fcol);
                    if (jt == u.end()) u.emplace(fcol, it->second);
                    else jt->second = jt->second + it->second;
                }
                if (!u.empty() && i <= p) {
                    std::map<int, Polynomial> v;
                    std::vector<std::vector<std::pair<int, const Polynomial*>>> by_col(
                        F.differentials[i - 1].cols());
                    for (auto& [rc, poly] : F.differentials[i - 1].entries())
                        by_col[rc.second].emplace_back(rc.first, &poly);
                    for (auto& [fcol, poly] : u)
                        for (auto& [ridx, dpoly] : by_col[fcol]) {
                            Polynomial add = *dpoly * poly;
                            auto it = v.find(ridx);
                            if (it == v.end()) v.emplace(ridx, add);
                            else it->second = it->second + add;
                        }
                    std::vector<Polynomial> coords = a_coords(i - 1, std::move(v), true);
                    for (std::size_t rr = 0; rr < coords.size(); ++rr)
                        if (!coords[rr].is_zero())
                            D.set(static_cast<int>(rr), acols + static_cast<int>(cj),
                                  coords[rr]);
                }
            }
        }
        out.differentials.push_back(std::move(D));
    }
    return out;
}

}  // namespace trimres

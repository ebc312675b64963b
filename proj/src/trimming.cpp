#include "trimres/trimming.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "trimres/combinatorics.hpp"

namespace trimres {

IndexSet colon_pure(int n, int d, const ExponentVector& alpha) {
    if (static_cast<int>(alpha.size()) != n || degree(alpha) != d)
        throw std::invalid_argument("colon_pure: exponent vector must have total degree d");
    IndexSet s = support(alpha);
    if (s.size() == 1 && alpha[s[0] - 1] == d) return complement_set(s, n);
    return complement_set({}, n);
}

IndexSet colon_sqfree(int n, int d, const IndexSet& J) {
    if (static_cast<int>(J.size()) != d || !index_set_valid(J, n))
        throw std::invalid_argument("colon_sqfree: index set must have d elements in [n]");
    return complement_set(J, n);
}

GradedFreeComplex koszul_complex_on(int n, const IndexSet& vars, const PrimeField& field) {
    GradedFreeComplex c;
    c.nvars = n;
    c.field = field;
    int u = static_cast<int>(vars.size());
    for (int k = 0; k <= u; ++k) {
        GradedFreeModule m;
        for (auto& s : subsets_of(vars, k)) {
            m.generator_degrees.push_back(k);
            m.multidegrees.push_back(indicator(s, n));
        }
        c.modules.push_back(std::move(m));
    }
    for (int k = 1; k <= u; ++k) {
        auto rows = subsets_of(vars, k - 1);
        auto cols = subsets_of(vars, k);
        std::map<IndexSet, int> rowpos;
        for (std::size_t i = 0; i < rows.size(); ++i) rowpos[rows[i]] = static_cast<int>(i);
        PolyMatrix d(static_cast<int>(rows.size()), static_cast<int>(cols.size()), n, field);
        for (std::size_t i = 0; i < cols.size(); ++i)
            for (int v : cols[i])
                d.set(rowpos.at(set_minus(cols[i], v)), static_cast<int>(i),
                      Polynomial::monomial(n, field, unit_exponent(n, v),
                                           sign_in_set(cols[i], v)));
        c.differentials.push_back(std::move(d));
    }
    return c;
}

ScalarMatrix phi_map(int n, int d, int l, const IndexSet& J, const ExponentVector& alpha) {
    if (l < 1) throw std::invalid_argument("phi_map: need l >= 1");
    auto rows = subsets_of(J, l);
    auto cols = schur_basis(n, l, d);
    std::map<IndexSet, int> rowpos;
    for (std::size_t i = 0; i < rows.size(); ++i) rowpos[rows[i]] = static_cast<int>(i);
    ScalarMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const SchurElement& e = cols[c];
        ExponentVector content(n, 0);
        for (int x : e.row) content[x - 1] += 1;
        ExponentVector diff = exp_sub(alpha, content);
        int var = 0;
        bool unit = true;
        for (int v = 0; v < n; ++v) {
            if (diff[v] == 1 && var == 0) var = v + 1;
            else if (diff[v] != 0) { unit = false; break; }
        }
        if (!unit || var == 0 || !set_contains(e.column, var)) continue;
        auto it = rowpos.find(set_minus(e.column, var));
        if (it == rowpos.end()) continue;
        // the extra (-1)^l makes the maps commute strictly with both
        // differentials (pinned by the commuting-square tests)
        int sign = sign_in_set(e.column, var) * (l % 2 == 0 ? 1 : -1);
        m.set(it->second, static_cast<int>(c), sign);
    }
    return m;
}

ScalarMatrix psi_map(int n, int d, int l, const IndexSet& I) {
    if (l < 1) throw std::invalid_argument("psi_map: need l >= 1");
    if (static_cast<int>(I.size()) != d)
        throw std::invalid_argument("psi_map: index set must have d elements");
    IndexSet comp = complement_set(I, n);
    auto rows = subsets_of(comp, l);
    auto cols = specht_basis(n, d, l);
    std::map<IndexSet, int> rowpos;
    for (std::size_t i = 0; i < rows.size(); ++i) rowpos[rows[i]] = static_cast<int>(i);
    ScalarMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const SpechtElement& e = cols[c];
        // the row plus one column entry must equal I
        bool row_inside = true;
        for (int x : e.row)
            if (!set_contains(I, x)) { row_inside = false; break; }
        if (!row_inside) continue;
        IndexSet missing;
        for (int x : I)
            if (!set_contains(e.row, x)) missing.push_back(x);
        if (missing.size() != 1) continue;
        int a = missing[0];
        if (!set_contains(e.column, a)) continue;
        auto it = rowpos.find(set_minus(e.column, a));
        if (it == rowpos.end()) continue;
        // the extra (-1)^l makes the maps commute strictly with both
        // differentials (pinned by the commuting-square tests)
        int sign = sign_in_set(e.column, a) * (l % 2 == 0 ? 1 : -1);
        m.set(it->second, static_cast<int>(c), sign);
    }
    return m;
}

std::int64_t q_rank(QKind kind, int n, int d, int l, int support_size) {
    switch (kind) {
        case QKind::pure:
            return binomial(n - 1, l);
        case QKind::general:
            return binomial(n, l) - binomial(n - support_size, l - support_size);
        case QKind::sqfree:
            return binomial(n - d, l);
    }
    throw std::invalid_argument("q_rank: unknown kind");
}

namespace {

// The monomial d_1(e) for generator index e of F_1; must be a single term.
ExponentVector trimmed_monomial(const GradedFreeComplex& F, int gen, std::int64_t& coef_out) {
    const Polynomial p = F.differentials[0].get(0, gen);
    if (p.term_count() != 1)
        throw std::invalid_argument("build_trimming_cone: first differential entry at trimmed "
                                    "generator is not a single monomial");
    coef_out = p.terms().begin()->second;
    return p.terms().begin()->first;
}

}  // namespace

GradedFreeComplex build_trimming_cone(const GradedFreeComplex& F,
                                      const std::vector<TrimData>& trims) {
    if (trims.empty()) throw std::invalid_argument("build_trimming_cone: need at least one trim");
    if (F.modules.empty() || F.modules[0].rank() != 1 || F.modules[0].generator_degrees[0] != 0)
        throw std::invalid_argument("build_trimming_cone: F must resolve a cyclic quotient of R");
    int p = F.length();
    const PrimeField& field = F.field;
    int n = F.nvars;

    // validate trim data and the commuting squares
    std::vector<ExponentVector> alphas;
    for (std::size_t s = 0; s < trims.size(); ++s) {
        const TrimData& t = trims[s];
        std::string who = "trim " + std::to_string(s);
        if (t.generator_index < 0 || t.generator_index >= F.modules[1].rank())
            throw std::invalid_argument("build_trimming_cone: " + who +
                                        ": generator index out of range");
        for (std::size_t s2 = 0; s2 < s; ++s2)
            if (trims[s2].generator_index == t.generator_index)
                throw std::invalid_argument("build_trimming_cone: duplicate generator index");
        if (t.G.modules.empty() || t.G.modules[0].rank() != 1)
            throw std::invalid_argument("build_trimming_cone: " + who + ": G must start at R");
        if (static_cast<int>(t.q.size()) != std::max(p - 1, 0))
            throw std::invalid_argument("build_trimming_cone: " + who +
                                        ": expected one comparison map per degree 1.." +
                                        std::to_string(p - 1));
        std::int64_t coef;
        alphas.push_back(trimmed_monomial(F, t.generator_index, coef));
        if (coef != 1)
            throw std::invalid_argument("build_trimming_cone: " + who +
                                        ": trimmed generator must be monic");
        auto g_rank = [&](int k) { return k <= t.G.length() ? t.G.modules[k].rank() : 0; };
        for (int k = 1; k <= p - 1; ++k) {
            const PolyMatrix& qk = t.q[k - 1];
            if (qk.rows() != g_rank(k) || qk.cols() != F.modules[k + 1].rank())
                throw std::invalid_argument("build_trimming_cone: " + who +
                                            ": comparison map " + std::to_string(k) +
                                            " has wrong dimensions");
        }
        // bottom square: m_1 . q_1 equals the trimmed row of d_2
        if (p >= 2) {
            PolyMatrix lhs = t.G.differentials.empty()
                                 ? PolyMatrix(1, F.modules[2].rank(), n, field)
                                 : t.G.differentials[0].multiply(t.q[0]);
            PolyMatrix rhs(1, F.modules[2].rank(), n, field);
            for (int c = 0; c < F.modules[2].rank(); ++c)
                rhs.set(0, c, F.differentials[1].get(t.generator_index, c));
            for (int c = 0; c < F.modules[2].rank(); ++c)
                if (!(lhs.get(0, c) == rhs.get(0, c)))
                    throw std::invalid_argument(
                        "build_trimming_cone: " + who +
                        ": bottom square fails at column " + std::to_string(c));
        }
        // higher squares: q_{k-1} . d_{k+1} = m_k . q_k
        for (int k = 2; k <= p - 1; ++k) {
            PolyMatrix lhs = t.q[k - 2].multiply(F.differentials[k]);
            PolyMatrix rhs = (k <= t.G.length())
                                 ? t.G.differentials[k - 1].multiply(t.q[k - 1])
                                 : PolyMatrix(g_rank(k - 1), F.modules[k + 1].rank(), n, field);
            PolyMatrix diff = lhs;
            for (auto& [rc, poly] : rhs.entries()) diff.add(rc.first, rc.second, poly.negated());
            if (!diff.is_zero())
                throw std::invalid_argument("build_trimming_cone: " + who +
                                            ": commuting square fails between degrees " +
                                            std::to_string(k + 1) + " and " + std::to_string(k));
        }
    }

    int top = p;
    for (auto& t : trims) top = std::max(top, t.G.length());

    GradedFreeComplex c;
    c.nvars = n;
    c.field = field;

    // retained generators of F_1
    std::vector<int> kept;
    for (int g = 0; g < F.modules[1].rank(); ++g) {
        bool trimmed = false;
        for (auto& t : trims)
            if (t.generator_index == g) trimmed = true;
        if (!trimmed) kept.push_back(g);
    }

    auto f_rank = [&](int i) { return i <= p ? F.modules[i].rank() : 0; };
    auto g_rank = [&](const TrimData& t, int i) {
        return i <= t.G.length() ? t.G.modules[i].rank() : 0;
    };

    c.modules.push_back({{0}, {}});
    for (int i = 1; i <= top; ++i) {
        GradedFreeModule m;
        if (i == 1) {
            for (int g : kept) m.generator_degrees.push_back(F.modules[1].generator_degrees[g]);
        } else if (i <= p) {
            m.generator_degrees = F.modules[i].generator_degrees;
        }
        for (std::size_t s = 0; s < trims.size(); ++s) {
            int twist = degree(alphas[s]);
            for (int g = 0; g < g_rank(trims[s], i); ++g)
                m.generator_degrees.push_back(trims[s].G.modules[i].generator_degrees[g] + twist);
        }
        c.modules.push_back(std::move(m));
    }

    for (int i = 1; i <= top; ++i) {
        int rows = c.modules[i - 1].rank();
        int cols = c.modules[i].rank();
        PolyMatrix D(rows, cols, n, field);
        int fcols = (i == 1) ? static_cast<int>(kept.size()) : f_rank(i);
        int frows = (i == 2) ? static_cast<int>(kept.size()) : f_rank(i - 1);
        // F block
        if (i == 1) {
            for (std::size_t col = 0; col < kept.size(); ++col)
                D.set(0, static_cast<int>(col), F.differentials[0].get(0, kept[col]));
        } else if (i <= p) {
            for (int col = 0; col < f_rank(i); ++col) {
                for (int row = 0; row < f_rank(i - 1); ++row) {
                    int target_row = row;
                    if (i == 2) {
                        auto it = std::find(kept.begin(), kept.end(), row);
                        if (it == kept.end()) continue;  // trimmed row dropped
                        target_row = static_cast<int>(it - kept.begin());
                    }
                    Polynomial e = F.differentials[i - 1].get(row, col);
                    if (!e.is_zero()) D.set(target_row, col, e.negated());
                }
            }
        }
        // G blocks and comparison blocks
        int col_base = fcols;
        for (std::size_t s = 0; s < trims.size(); ++s) {
            const TrimData& t = trims[s];
            int row_base = frows;
            for (std::size_t s2 = 0; s2 < s; ++s2) row_base += g_rank(trims[s2], i - 1);
            if (i == 1) {
                // bottom row: -m_1(g) * x^alpha
                for (int col = 0; col < g_rank(t, 1); ++col) {
                    Polynomial e = t.G.differentials[0].get(0, col);
                    if (!e.is_zero())
                        D.set(0, col_base + col,
                              e.negated() * Polynomial::monomial(n, field, alphas[s]));
                }
            } else {
                // comparison block q_{i-1} : F_i -> G_{i-1}
                if (i - 1 >= 1 && i <= p) {
                    const PolyMatrix& q = t.q[i - 2];
                    for (auto& [rc, poly] : q.entries())
                        D.set(row_base + rc.first, rc.second, poly);
                }
                // G differential block
                if (i <= t.G.length()) {
                    for (auto& [rc, poly] : t.G.differentials[i - 1].entries())
                        D.set(row_base + rc.first, col_base + rc.second, poly);
                }
            }
            col_base += g_rank(t, i);
        }
        c.differentials.push_back(std::move(D));
    }
    infer_multidegrees(c);
    return c;
}

BettiTable cone_betti_counts(const GradedFreeComplex& F, const std::vector<TrimData>& trims) {
    const PrimeField& field = F.field;
    int p = F.length();
    int top = p;
    for (auto& t : trims) top = std::max(top, t.G.length());

    std::vector<ExponentVector> alphas;
    for (auto& t : trims) {
        std::int64_t coef;
        alphas.push_back(trimmed_monomial(F, t.generator_index, coef));
    }
    auto g_rank = [&](const TrimData& t, int i) {
        return i <= t.G.length() ? t.G.modules[i].rank() : 0;
    };

    // graded rank of the stacked comparison maps q_k (+k across trims) at
    // internal degree j: restrict to source generators of F_{k+1} in degree j
    // and target generators of the twisted G_k in degree j
    auto stacked_rank = [&](int k, int j) -> int {
        if (k < 1 || k > p - 1) return 0;
        std::vector<int> cols;
        for (int g = 0; g < F.modules[k + 1].rank(); ++g)
            if (F.modules[k + 1].generator_degrees[g] == j) cols.push_back(g);
        if (cols.empty()) return 0;
        int rows = 0;
        std::vector<int> rowbase;
        for (std::size_t s = 0; s < trims.size(); ++s) {
            rowbase.push_back(rows);
            rows += g_rank(trims[s], k);
        }
        ScalarMatrix m(rows, static_cast<int>(cols.size()));
        for (std::size_t s = 0; s < trims.size(); ++s) {
            const TrimData& t = trims[s];
            int twist = degree(alphas[s]);
            const PolyMatrix& q = t.q[k - 1];
            for (auto& [rc, poly] : q.entries()) {
                if (t.G.modules[k].generator_degrees[rc.first] + twist != j) continue;
                auto it = std::find(cols.begin(), cols.end(), rc.second);
                if (it == cols.end()) continue;
                std::int64_t v = poly.constant_term();
                if (v != 0)
                    m.set(rowbase[s] + rc.first, static_cast<int>(it - cols.begin()), v);
            }
        }
        return m.rank(field);
    };

    BettiTable t;
    t.set(0, 0, 1);
    int maxdeg = 0;
    for (auto& m : F.modules)
        for (int d : m.generator_degrees) maxdeg = std::max(maxdeg, d);
    for (auto& tr : trims)
        for (auto& m : tr.G.modules)
            for (int d : m.generator_degrees) maxdeg = std::max(maxdeg, d + 3);
    for (auto& a : alphas) maxdeg = std::max(maxdeg, degree(a) + top + 1);

    for (int i = 1; i <= top; ++i) {
        for (int j = 0; j <= maxdeg + top; ++j) {
            std::int64_t count = 0;
            if (i == 1) {
                for (int g = 0; g < F.modules[1].rank(); ++g) {
                    bool trimmed = false;
                    for (auto& tr : trims)
                        if (tr.generator_index == g) trimmed = true;
                    if (!trimmed && F.modules[1].generator_degrees[g] == j) ++count;
                }
            } else if (i <= p) {
                for (int d : F.modules[i].generator_degrees)
                    if (d == j) ++count;
            }
            for (std::size_t s = 0; s < trims.size(); ++s)
                for (int g = 0; g < g_rank(trims[s], i); ++g)
                    if (trims[s].G.modules[i].generator_degrees[g] + degree(alphas[s]) == j)
                        ++count;
            std::int64_t b = count - stacked_rank(i, j) - stacked_rank(i - 1, j);
            if (b < 0) throw std::logic_error("cone_betti_counts: negative entry");
            if (b > 0) t.set(i, j, t.get(i, j) + b);
        }
    }
    return t;
}

TrimData trim_data_for_power(int n, int d, const ExponentVector& alpha,
                             const GradedFreeComplex& F, const PrimeField& field) {
    TrimData t;
    Polynomial target = Polynomial::monomial(n, field, alpha);
    t.generator_index = -1;
    for (int g = 0; g < F.modules[1].rank(); ++g)
        if (F.differentials[0].get(0, g) == target) t.generator_index = g;
    if (t.generator_index < 0)
        throw std::invalid_argument("trim_data_for_power: generator not found");
    IndexSet vars = colon_pure(n, d, alpha);
    t.G = koszul_complex_on(n, vars, field);
    for (int k = 1; k <= F.length() - 1; ++k)
        t.q.push_back(PolyMatrix::from_scalar(phi_map(n, d, k, vars, alpha), n, field));
    return t;
}

TrimData trim_data_for_sqfree(int n, int d, const IndexSet& I, const GradedFreeComplex& F,
                              const PrimeField& field) {
    TrimData t;
    Polynomial target = Polynomial::monomial(n, field, indicator(I, n));
    t.generator_index = -1;
    for (int g = 0; g < F.modules[1].rank(); ++g)
        if (F.differentials[0].get(0, g) == target) t.generator_index = g;
    if (t.generator_index < 0)
        throw std::invalid_argument("trim_data_for_sqfree: generator not found");
    IndexSet vars = colon_sqfree(n, d, I);
    t.G = koszul_complex_on(n, vars, field);
    for (int k = 1; k <= F.length() - 1; ++k)
        t.q.push_back(PolyMatrix::from_scalar(psi_map(n, d, k, I), n, field));
    return t;
}

}  // namespace trimres

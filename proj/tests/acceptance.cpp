// Acceptance battery: run as `acceptance <k>` for k in 1..7; prints exactly
// one "CRITERION k: PASS" or "CRITERION k: FAIL" line. Diagnostics go to
// stderr. All randomness is seeded; all comparisons are exact.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "trimres/base_resolutions.hpp"
#include "trimres/closed_form.hpp"
#include "trimres/combinatorics.hpp"
#include "trimres/monomial_ideal.hpp"
#include "trimres/tableaux.hpp"
#include "trimres/trimming.hpp"

using namespace trimres;

namespace {

const PrimeField kField(32003);
// generating sets above this size go to the Koszul-side Tor oracle; both
// oracles are exact and interchangeable, the Taylor route just scales badly
// past ~2^14 subsets
constexpr int kOracleCap = 14;

bool g_ok = true;

void fail(const std::string& msg) {
    g_ok = false;
    std::cerr << "  FAIL: " << msg << "\n";
}

std::string spec_name(const TrimSpec& s) {
    std::string out = (s.kind == TrimKind::monomial ? "mono n=" : "sqfree n=") +
                      std::to_string(s.n) + " d=" + std::to_string(s.d) + " comp=";
    if (s.kind == TrimKind::monomial) {
        for (auto& a : s.monomial_complement) {
            out += "(";
            for (int e : a) out += std::to_string(e);
            out += ")";
        }
    } else {
        for (auto& a : s.squarefree_complement) {
            out += "{";
            for (int e : a) out += std::to_string(e);
            out += "}";
        }
    }
    return out;
}

// every validated single-generator spec with n <= 5, d <= 3
std::vector<TrimSpec> single_specs() {
    std::vector<TrimSpec> out;
    for (int n = 2; n <= 5; ++n)
        for (int d = 1; d <= 3; ++d) {
            for (auto& a : monomials_of_degree(n, d)) {
                TrimSpec s;
                s.n = n;
                s.d = d;
                s.monomial_complement = {a};
                try {
                    validate(s);
                    out.push_back(s);
                } catch (const std::invalid_argument&) {}
            }
            if (d > n) continue;
            for (auto& I : subsets_of_size(n, d)) {
                TrimSpec s;
                s.n = n;
                s.d = d;
                s.kind = TrimKind::squarefree;
                s.squarefree_complement = {I};
                try {
                    validate(s);
                    out.push_back(s);
                } catch (const std::invalid_argument&) {}
            }
        }
    return out;
}

// >= 25 random validated specs per kind, r <= 3, n <= 5, d <= 3, at most 18
// retained generators
std::vector<TrimSpec> random_specs(TrimKind kind, int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<TrimSpec> out;
    std::set<std::string> seen;
    while (static_cast<int>(out.size()) < count) {
        int n = 2 + static_cast<int>(rng() % 4);
        int d = 1 + static_cast<int>(rng() % 3);
        int r = 1 + static_cast<int>(rng() % 3);
        TrimSpec s;
        s.n = n;
        s.d = d;
        s.kind = kind;
        if (kind == TrimKind::monomial) {
            auto all = monomials_of_degree(n, d);
            if (static_cast<int>(all.size()) - r > 18 || static_cast<int>(all.size()) <= r)
                continue;
            std::set<int> picks;
            while (static_cast<int>(picks.size()) < r)
                picks.insert(static_cast<int>(rng() % all.size()));
            for (int p : picks) s.monomial_complement.push_back(all[p]);
        } else {
            if (d > n) continue;
            auto all = subsets_of_size(n, d);
            if (static_cast<int>(all.size()) <= r) continue;
            std::set<int> picks;
            while (static_cast<int>(picks.size()) < r)
                picks.insert(static_cast<int>(rng() % all.size()));
            for (int p : picks) s.squarefree_complement.push_back(all[p]);
        }
        try {
            validate(s);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (!seen.insert(spec_name(s)).second) continue;
        out.push_back(s);
    }
    return out;
}

std::vector<TrimSpec> all_instances() {
    std::vector<TrimSpec> out = single_specs();
    for (auto& s : random_specs(TrimKind::monomial, 25, 20240517)) out.push_back(s);
    for (auto& s : random_specs(TrimKind::squarefree, 25, 91170)) out.push_back(s);
    return out;
}

std::vector<TrimData> trims_for(const TrimSpec& s, const GradedFreeComplex& F) {
    std::vector<TrimData> trims;
    if (s.kind == TrimKind::monomial)
        for (auto& a : s.monomial_complement)
            trims.push_back(trim_data_for_power(s.n, s.d, a, F, kField));
    else
        for (auto& I : s.squarefree_complement)
            trims.push_back(trim_data_for_sqfree(s.n, s.d, I, F, kField));
    return trims;
}

GradedFreeComplex base_complex(const TrimSpec& s) {
    return s.kind == TrimKind::monomial ? build_L_complex(s.n, s.d, kField)
                                        : build_galetto(s.n, s.d, kField);
}

// ---- criterion 1: base resolutions ----

void criterion1() {
    for (int n = 1; n <= 5; ++n)
        for (int d = 1; d <= 3; ++d) {
            GradedFreeComplex L = build_L_complex(n, d, kField);
            for (int i = 1; i <= L.length(); ++i) {
                int a = i - 1;
                if (L.modules[i].rank() !=
                    binomial(n + d - 1, a + d) * binomial(a + d - 1, a))
                    fail("L-rank n=" + std::to_string(n) + " d=" + std::to_string(d));
            }
            MonomialIdeal md(n, monomials_of_degree(n, d));
            if (betti_by_strands(L, L.max_generator_degree() + n) !=
                oracle_betti_auto(md, kField, kOracleCap))
                fail("L-table n=" + std::to_string(n) + " d=" + std::to_string(d));
            if (d > n) continue;
            GradedFreeComplex G = build_galetto(n, d, kField);
            for (int i = 1; i <= G.length(); ++i) {
                if (G.modules[i].rank() !=
                    binomial(n, d + i - 1) * binomial(d + i - 2, i - 1))
                    fail("sq-rank n=" + std::to_string(n) + " d=" + std::to_string(d));
            }
            std::vector<ExponentVector> gens;
            for (auto& I : subsets_of_size(n, d)) gens.push_back(indicator(I, n));
            if (betti_by_strands(G, G.max_generator_degree() + n) !=
                oracle_betti_auto(MonomialIdeal(n, gens), kField, kOracleCap))
                fail("sq-table n=" + std::to_string(n) + " d=" + std::to_string(d));
        }
}

// ---- criterion 2: rank formulas ----

void criterion2() {
    std::mt19937 rng(31337);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            int d = 1 + static_cast<int>(rng() % 3);
            auto monos = monomials_of_degree(n, d);
            ExponentVector alpha = monos[rng() % monos.size()];
            int na = n_alpha(alpha);
            for (int l = 1; l <= n; ++l) {
                ScalarMatrix phi = phi_map(n, d, l, colon_pure(n, d, alpha), alpha);
                std::int64_t want = na == 1 ? q_rank(QKind::pure, n, d, l, 1)
                                            : q_rank(QKind::general, n, d, l, na);
                std::int64_t direct = na == 1
                                          ? binomial(n - 1, l)
                                          : binomial(n, l) - binomial(n - na, l - na);
                if (want != direct || phi.rank(kField) != want)
                    fail("phi rank n=" + std::to_string(n) + " l=" + std::to_string(l));
            }
            int ds = 1 + static_cast<int>(rng() % std::min(n, 3));
            auto subs = subsets_of_size(n, ds);
            IndexSet I = subs[rng() % subs.size()];
            for (int l = 1; l <= n - ds; ++l) {
                ScalarMatrix psi = psi_map(n, ds, l, I);
                if (psi.rank(kField) != binomial(n - ds, l))
                    fail("psi rank n=" + std::to_string(n) + " l=" + std::to_string(l));
            }
        }
    }
}

// ---- criterion 3: single-trim tables, types, Gorenstein ----

void criterion3() {
    int gorenstein_count = 0;
    for (auto& s : single_specs()) {
        BettiTable formula = betti_formula(s);
        if (formula != oracle_betti_auto(trimmed_ideal(s), kField, kOracleCap))
            fail("table " + spec_name(s));
        if (s.kind == TrimKind::monomial && s.d >= 2) {
            auto [type, gor] = ring_type_and_gorenstein(s);
            if (type != formula.column_total(formula.max_homological_degree()))
                fail("type " + spec_name(s));
            bool expect_gor = s.n == 2 && s.d == 2 &&
                              s.monomial_complement[0] == ExponentVector{1, 1};
            if (gor != expect_gor) fail("gorenstein " + spec_name(s));
            if (gor) ++gorenstein_count;
        }
        if (s.kind == TrimKind::squarefree && !formula.is_linear_with_row(s.d - 1))
            fail("linearity " + spec_name(s));
    }
    if (gorenstein_count != 1) fail("expected exactly one Gorenstein instance");
}

// ---- criterion 4: iterated trims ----

void criterion4() {
    for (auto kind : {TrimKind::monomial, TrimKind::squarefree}) {
        auto specs = random_specs(kind, 25, kind == TrimKind::monomial ? 20240517 : 91170);
        if (specs.size() < 25) fail("not enough random specs");
        for (auto& s : specs) {
            BettiTable formula = betti_formula(s);
            if (formula != oracle_betti_auto(trimmed_ideal(s), kField, kOracleCap))
                fail("table " + spec_name(s));
            if (kind == TrimKind::squarefree && !formula.is_linear_with_row(s.d - 1))
                fail("linearity " + spec_name(s));
        }
    }
}

// ---- criterion 5: explicit resolutions ----

void criterion5() {
    for (auto& s : all_instances()) {
        GradedFreeComplex c = build_minimal_resolution(s, kField);
        if (auto err = verify_resolution(c, s)) fail(spec_name(s) + ": " + *err);
        bool pure = s.kind == TrimKind::monomial && s.r() == 1 &&
                    n_alpha(s.monomial_complement[0]) == 1;
        if (pure) {
            GradedFreeComplex F = base_complex(s);
            GradedFreeComplex sub = split_cone_extract(F, trims_for(s, F));
            if (sub.length() != c.length()) {
                fail(spec_name(s) + ": kernel subcomplex length");
                continue;
            }
            for (int i = 0; i <= c.length(); ++i)
                if (sub.modules[i].generator_degrees != c.modules[i].generator_degrees)
                    fail(spec_name(s) + ": kernel subcomplex degrees at " + std::to_string(i));
            if (auto err = verify_resolution(sub, s))
                fail(spec_name(s) + ": kernel subcomplex: " + *err);
        }
    }
}

// ---- criterion 6: straightening oracles ----

using Ambient = std::map<std::pair<IndexSet, std::vector<int>>, std::int64_t>;

Ambient embed(const IndexSet& column, const std::vector<int>& row, std::int64_t scale) {
    Ambient v;
    for (std::size_t t = 0; t < column.size(); ++t) {
        IndexSet w = column;
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(t));
        std::vector<int> srow = row;
        srow.push_back(column[t]);
        std::sort(srow.begin(), srow.end());
        auto key = std::make_pair(w, srow);
        v[key] = kField.add(v[key], kField.mul(scale, t % 2 == 0 ? 1 : kField.neg(1)));
        if (v[key] == 0) v.erase(key);
    }
    return v;
}

// Naive quotient model of the hook Specht module on a fixed entry set; the
// straightened expression must have the same residue as the input tabloid.
struct TabloidSpace {
    int d, l;
    std::vector<std::pair<IndexSet, std::vector<int>>> basis;
    std::map<std::pair<IndexSet, std::vector<int>>, int> index;
    std::map<int, std::map<int, std::int64_t>> relations;

    TabloidSpace(const IndexSet& ground, int d_, int l_) : d(d_), l(l_) {
        for (auto& col : subsets_of(ground, l + 1)) {
            std::vector<int> rest;
            for (int x : ground)
                if (!set_contains(col, x)) rest.push_back(x);
            std::vector<int> row = rest;
            do {
                basis.emplace_back(col, row);
                index[{col, row}] = static_cast<int>(basis.size()) - 1;
            } while (std::next_permutation(row.begin(), row.end()));
        }
        for (auto& [col, row] : basis) {
            if (d - 1 >= 1) {
                std::map<int, std::int64_t> r = tabloid(col, row, 1);
                for (std::size_t i = 0; i < col.size(); ++i) {
                    IndexSet ncol = col;
                    std::vector<int> nrow = row;
                    std::swap(ncol[i], nrow[0]);
                    axpy(r, tabloid(ncol, nrow, 1), kField.neg(1));
                }
                insert_relation(std::move(r));
            }
            for (int j = 0; j + 1 < d - 1; ++j) {
                std::vector<int> nrow = row;
                std::swap(nrow[j], nrow[j + 1]);
                std::map<int, std::int64_t> r2 = tabloid(col, row, 1);
                axpy(r2, tabloid(col, nrow, 1), kField.neg(1));
                insert_relation(std::move(r2));
            }
        }
    }

    std::map<int, std::int64_t> tabloid(IndexSet col, std::vector<int> row,
                                        std::int64_t scale) const {
        int sign = 1;
        for (std::size_t i = 1; i < col.size(); ++i)
            for (std::size_t j = i; j > 0 && col[j - 1] >= col[j]; --j) {
                if (col[j - 1] == col[j]) return {};
                std::swap(col[j - 1], col[j]);
                sign = -sign;
            }
        return {{index.at({col, row}), kField.reduce(scale * sign)}};
    }

    void axpy(std::map<int, std::int64_t>& target, const std::map<int, std::int64_t>& src,
              std::int64_t scale) const {
        for (auto& [k, v] : src) {
            target[k] = kField.add(target[k], kField.mul(scale, v));
            if (target[k] == 0) target.erase(k);
        }
    }

    void reduce_row(std::map<int, std::int64_t>& row) const {
        bool again = true;
        while (again && !row.empty()) {
            again = false;
            for (auto& [k, v] : row) {
                auto it = relations.find(k);
                if (it != relations.end()) {
                    axpy(row, it->second,
                         kField.neg(kField.mul(v, kField.inv(it->second.begin()->second))));
                    again = true;
                    break;
                }
            }
        }
    }

    void insert_relation(std::map<int, std::int64_t> r) {
        reduce_row(r);
        if (!r.empty()) relations.emplace(r.begin()->first, std::move(r));
    }

    std::map<int, std::int64_t> reduced(const IndexSet& col, const std::vector<int>& row) const {
        auto v = tabloid(col, row, 1);
        reduce_row(v);
        return v;
    }
};

void criterion6() {
    // exhaustive round-trip through the ambient embedding
    for (int n = 1; n <= 5; ++n)
        for (int a = 0; a <= 4; ++a)
            for (int b = 1; b <= 3; ++b)
                for (auto& col : subsets_of_size(n, a + 1))
                    for (auto& row : multisets_of_size(n, b - 1)) {
                        SchurCombo out = straighten_schur(n, col, row, kField);
                        Ambient lhs;
                        for (auto& [e, c] : out)
                            for (auto& [k, v] : embed(e.column, e.row, c)) {
                                lhs[k] = kField.add(lhs[k], v);
                                if (lhs[k] == 0) lhs.erase(k);
                            }
                        if (lhs != embed(col, row, 1)) {
                            fail("schur round-trip n=" + std::to_string(n) +
                                 " a=" + std::to_string(a) + " b=" + std::to_string(b));
                            return;
                        }
                    }
    // every hook shape in at most 6 letters against the quotient model
    for (int n = 2; n <= 6; ++n)
        for (int d = 1; d <= n; ++d)
            for (int l = 0; l <= n - d; ++l)
                for (auto& ground : subsets_of_size(n, d + l)) {
                    TabloidSpace space(ground, d, l);
                    if (static_cast<std::int64_t>(space.basis.size() -
                                                  space.relations.size()) !=
                        binomial(d + l - 1, l))
                        fail("specht dimension n=" + std::to_string(n));
                    for (auto& [col, rowtup] : space.basis) {
                        IndexSet row(rowtup.begin(), rowtup.end());
                        std::sort(row.begin(), row.end());
                        if (row != IndexSet(rowtup.begin(), rowtup.end())) continue;
                        SpechtCombo out = straighten_specht(col, row);
                        std::map<int, std::int64_t> lhs = space.reduced(col, rowtup);
                        std::map<int, std::int64_t> rhs;
                        for (auto& [e, coef] : out)
                            space.axpy(rhs,
                                       space.reduced(e.column,
                                                     std::vector<int>(e.row.begin(),
                                                                      e.row.end())),
                                       kField.reduce(coef));
                        if (lhs != rhs) {
                            fail("specht residue n=" + std::to_string(n) +
                                 " d=" + std::to_string(d));
                            return;
                        }
                    }
                }
}

// ---- criterion 7: trimming cones ----

void criterion7() {
    for (auto& s : all_instances()) {
        GradedFreeComplex F = base_complex(s);
        auto trims = trims_for(s, F);
        GradedFreeComplex cone = build_trimming_cone(F, trims);
        if (!check_complex(cone)) {
            fail("cone structure " + spec_name(s));
            continue;
        }
        MonomialIdeal J = trimmed_ideal(s);
        int bound = cone.max_generator_degree() + cone.nvars;
        auto h0 = [&](const ExponentVector& mu) -> std::int64_t {
            return J.contains(mu) ? 0 : 1;
        };
        if (auto err = certify_resolution(cone, bound, h0))
            fail("cone homology " + spec_name(s) + ": " + *err);
        if (cone_betti_counts(F, trims) != oracle_betti_auto(J, kField, kOracleCap))
            fail("rank-corrected counts " + spec_name(s));
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <criterion 1..7>\n";
        return 2;
    }
    int k = std::atoi(argv[1]);
    switch (k) {
        case 1: criterion1(); break;
        case 2: criterion2(); break;
        case 3: criterion3(); break;
        case 4: criterion4(); break;
        case 5: criterion5(); break;
        case 6: criterion6(); break;
        case 7: criterion7(); break;
        default:
            std::cerr << "usage: acceptance <criterion 1..7>\n";
            return 2;
    }
    std::printf("CRITERION %d: %s\n", k, g_ok ? "PASS" : "FAIL");
    return g_ok ? 0 : 1;
}

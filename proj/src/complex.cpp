#include "trimres/complex.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "trimres/combinatorics.hpp"

namespace trimres {

int GradedFreeComplex::max_generator_degree() const {
    int m = 0;
    for (auto& mod : modules)
        for (int d : mod.generator_degrees) m = std::max(m, d);
    return m;
}

void BettiTable::set(int i, int j, std::int64_t v) {
    if (v < 0) throw std::logic_error("BettiTable: negative entry");
    if (v == 0) grid_.erase({i, j});
    else grid_[{i, j}] = v;
}

std::int64_t BettiTable::get(int i, int j) const {
    auto it = grid_.find({i, j});
    return it == grid_.end() ? 0 : it->second;
}

int BettiTable::max_homological_degree() const {
    int m = 0;
    for (auto& [ij, v] : grid_) m = std::max(m, ij.first);
    return m;
}

std::int64_t BettiTable::column_total(int i) const {
    std::int64_t s = 0;
    for (auto& [ij, v] : grid_)
        if (ij.first == i) s += v;
    return s;
}

bool BettiTable::is_linear_with_row(int row) const {
    for (auto& [ij, v] : grid_) {
        auto [i, j] = ij;
        if (i == 0) {
            if (j != 0) return false;
        } else if (j - i != row) {
            return false;
        }
    }
    return true;
}

std::string BettiTable::to_text() const {
    int imax = max_homological_degree();
    int rmin = 0, rmax = 0;
    for (auto& [ij, v] : grid_) {
        rmin = std::min(rmin, ij.second - ij.first);
        rmax = std::max(rmax, ij.second - ij.first);
    }
    auto cell = [&](std::int64_t v) {
        return v == 0 ? std::string(".") : std::to_string(v);
    };
    std::vector<std::size_t> width(imax + 1, 1);
    for (int i = 0; i <= imax; ++i) {
        width[i] = std::max(width[i], std::to_string(i).size());
        width[i] = std::max(width[i], std::to_string(column_total(i)).size());
        for (int r = rmin; r <= rmax; ++r)
            width[i] = std::max(width[i], cell(get(i, r + i)).size());
    }
    std::ostringstream os;
    auto emit_row = [&](const std::string& label, auto value) {
        os << std::setw(7) << label;
        for (int i = 0; i <= imax; ++i)
            os << " " << std::setw(static_cast<int>(width[i])) << value(i);
        os << "\n";
    };
    emit_row("", [&](int i) { return std::to_string(i); });
    emit_row("total:", [&](int i) { return std::to_string(column_total(i)); });
    for (int r = rmin; r <= rmax; ++r)
        emit_row(std::to_string(r) + ":", [&](int i) { return cell(get(i, r + i)); });
    return os.str();
}

bool check_complex(const GradedFreeComplex& c) {
    int p = c.length();
    if (static_cast<int>(c.differentials.size()) != p)
        throw std::invalid_argument("check_complex: differential count mismatch");
    for (int i = 0; i < p; ++i) {
        const PolyMatrix& d = c.differentials[i];
        if (d.rows() != c.modules[i].rank() || d.cols() != c.modules[i + 1].rank())
            throw std::invalid_argument("check_complex: dimension mismatch at differential " +
                                        std::to_string(i + 1));
        for (auto& [rc, poly] : d.entries()) {
            int want = c.modules[i + 1].generator_degrees[rc.second] -
                       c.modules[i].generator_degrees[rc.first];
            auto deg = poly.homogeneous_degree();
            if (!deg || *deg != want) return false;
        }
    }
    for (int i = 0; i + 1 < p; ++i) {
        if (!c.differentials[i].multiply(c.differentials[i + 1]).is_zero()) return false;
    }
    return true;
}

bool is_minimal(const GradedFreeComplex& c) {
    for (auto& d : c.differentials)
        for (auto& [rc, poly] : d.entries())
            if (poly.constant_term() != 0) return false;
    return true;
}

namespace {

// Multigraded block of a differential at multidegree mu: rows/cols restricted
// to generators whose multidegree divides mu; entries are the coefficients of
// the forced monomial cofactor.
ScalarMatrix multigraded_block(const GradedFreeComplex& c, int i /* differential F_i -> F_{i-1} */,
                               const ExponentVector& mu,
                               const std::vector<int>& rows, const std::vector<int>& cols) {
    const PolyMatrix& d = c.differentials[i - 1];
    std::vector<int> row_pos(c.modules[i - 1].rank(), -1);
    for (std::size_t k = 0; k < rows.size(); ++k) row_pos[rows[k]] = static_cast<int>(k);
    ScalarMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    std::vector<std::vector<std::pair<int, const Polynomial*>>> by_col(c.modules[i].rank());
    for (auto& [rc, poly] : d.entries()) by_col[rc.second].emplace_back(rc.first, &poly);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int cgen = cols[k];
        const ExponentVector& mc = c.modules[i].multidegrees[cgen];
        for (auto& [rgen, poly] : by_col[cgen]) {
            if (row_pos[rgen] < 0) continue;
            const ExponentVector& mr = c.modules[i - 1].multidegrees[rgen];
            ExponentVector diff = exp_sub(mc, mr);
            bool ok = true;
            for (int e : diff) if (e < 0) { ok = false; break; }
            if (!ok) continue;
            std::int64_t v = poly->coefficient(diff);
            if (v != 0) m.set(row_pos[rgen], static_cast<int>(k), v);
        }
    }
    return m;
}

std::vector<int> gens_dividing(const GradedFreeModule& mod, const ExponentVector& mu) {
    std::vector<int> out;
    for (int g = 0; g < mod.rank(); ++g)
        if (divides(mod.multidegrees[g], mu)) out.push_back(g);
    return out;
}

bool complex_has_multidegrees(const GradedFreeComplex& c) {
    for (auto& m : c.modules)
        if (!m.has_multidegrees()) return false;
    return true;
}

// Homology dims h_0..h_p of the multigraded block complex at mu.
std::vector<std::int64_t> block_homology(const GradedFreeComplex& c, const ExponentVector& mu) {
    int p = c.length();
    std::vector<std::vector<int>> bases(p + 1);
    for (int i = 0; i <= p; ++i) bases[i] = gens_dividing(c.modules[i], mu);
    std::vector<int> ranks(p + 2, 0);  // ranks[i] = rank of d_i block, 1-based
    for (int i = 1; i <= p; ++i) {
        if (bases[i].empty() || bases[i - 1].empty()) continue;
        ranks[i] = multigraded_block(c, i, mu, bases[i - 1], bases[i]).rank(c.field);
    }
    std::vector<std::int64_t> h(p + 1, 0);
    for (int i = 0; i <= p; ++i) {
        std::int64_t v = static_cast<std::int64_t>(bases[i].size()) - ranks[i] - ranks[i + 1];
        if (v < 0) throw std::logic_error("block_homology: negative dimension");
        h[i] = v;
    }
    return h;
}

// Total-degree strand matrix of d_i in internal degree j: basis pairs
// (generator, monomial cofactor).
ScalarMatrix total_strand(const GradedFreeComplex& c, int i, int j,
                          int& out_cols) {
    const PolyMatrix& d = c.differentials[i - 1];
    auto index_basis = [&](const GradedFreeModule& mod) {
        std::map<std::pair<int, ExponentVector>, int> idx;
        for (int g = 0; g < mod.rank(); ++g) {
            int cof = j - mod.generator_degrees[g];
            if (cof < 0) continue;
            for (auto& m : monomials_of_degree(c.nvars, cof))
                idx.emplace(std::make_pair(g, m), static_cast<int>(idx.size()));
        }
        return idx;
    };
    auto rows = index_basis(c.modules[i - 1]);
    auto cols = index_basis(c.modules[i]);
    out_cols = static_cast<int>(cols.size());
    ScalarMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (auto& [key, ci] : cols) {
        auto& [cgen, mono] = key;
        for (auto& [rc, poly] : d.entries()) {
            if (rc.second != cgen) continue;
            for (auto& [e, coef] : poly.terms()) {
                auto it = rows.find({rc.first, exp_add(e, mono)});
                if (it != rows.end())
                    m.set(it->second, ci, c.field.add(m.get(it->second, ci), coef));
            }
        }
    }
    return m;
}

std::int64_t strand_dim(const GradedFreeComplex& c, int i, int j) {
    std::int64_t s = 0;
    for (int d : c.modules[i].generator_degrees) s += graded_dim(c.nvars, j - d);
    return s;
}

}  // namespace

std::int64_t strand_homology(const GradedFreeComplex& c, int i, int j) {
    int p = c.length();
    if (i < 0 || i > p) return 0;
    if (complex_has_multidegrees(c)) {
        std::int64_t h = 0;
        for (auto& mu : monomials_of_degree(c.nvars, j)) h += block_homology(c, mu)[i];
        return h;
    }
    int dummy;
    std::int64_t total = strand_dim(c, i, j);
    std::int64_t rank_i = 0, rank_ip1 = 0;
    if (i >= 1) {
        ScalarMatrix m = total_strand(c, i, j, dummy);
        rank_i = m.rank(c.field);
    }
    if (i + 1 <= p) {
        ScalarMatrix m = total_strand(c, i + 1, j, dummy);
        rank_ip1 = m.rank(c.field);
    }
    std::int64_t h = total - rank_i - rank_ip1;
    if (h < 0) throw std::logic_error("strand_homology: negative dimension");
    return h;
}

BettiTable betti_by_strands(const GradedFreeComplex& c, int degree_bound) {
    if (degree_bound < c.max_generator_degree())
        throw std::invalid_argument("betti_by_strands: degree bound below maximum generator degree");
    int p = c.length();
    BettiTable t;
    // C tensor k: per internal degree j, the block of constant terms between
    // generators of degree j on both sides.
    for (int j = 0; j <= degree_bound; ++j) {
        std::vector<std::vector<int>> bases(p + 1);
        for (int i = 0; i <= p; ++i)
            for (int g = 0; g < c.modules[i].rank(); ++g)
                if (c.modules[i].generator_degrees[g] == j) bases[i].push_back(g);
        std::vector<int> ranks(p + 2, 0);
        for (int i = 1; i <= p; ++i) {
            if (bases[i].empty() || bases[i - 1].empty()) continue;
            std::vector<int> row_pos(c.modules[i - 1].rank(), -1);
            for (std::size_t k = 0; k < bases[i - 1].size(); ++k) row_pos[bases[i - 1][k]] = (int)k;
            ScalarMatrix m((int)bases[i - 1].size(), (int)bases[i].size());
            for (std::size_t k = 0; k < bases[i].size(); ++k) {
                for (auto& [rc, poly] : c.differentials[i - 1].entries()) {
                    if (rc.second != bases[i][k] || row_pos[rc.first] < 0) continue;
                    std::int64_t v = poly.constant_term();
                    if (v != 0) m.set(row_pos[rc.first], (int)k, v);
                }
            }
            ranks[i] = m.rank(c.field);
        }
        for (int i = 0; i <= p; ++i) {
            std::int64_t v = static_cast<std::int64_t>(bases[i].size()) - ranks[i] - ranks[i + 1];
            if (v < 0) throw std::logic_error("betti_by_strands: negative dimension");
            if (v > 0) t.set(i, j, v);
        }
    }
    return t;
}

std::optional<std::string> certify_resolution(
    const GradedFreeComplex& c, int degree_bound,
    const std::function<std::int64_t(const ExponentVector&)>& h0_multidegree) {
    GradedFreeComplex work = c;
    if (!complex_has_multidegrees(work)) infer_multidegrees(work);
    if (complex_has_multidegrees(work)) {
        // The block at mu depends only on the set of generators dividing mu,
        // hence only on min(mu, cap) where cap bounds all generator
        // multidegrees. Memoizing on that reduction covers every degree.
        ExponentVector cap(work.nvars, 0);
        for (auto& mod : work.modules)
            for (auto& m : mod.multidegrees) cap = lcm_exponents(cap, m);
        std::map<ExponentVector, std::vector<std::int64_t>> memo;
        for (int j = 0; j <= degree_bound; ++j) {
            for (auto& mu : monomials_of_degree(work.nvars, j)) {
                ExponentVector key(work.nvars);
                for (int v = 0; v < work.nvars; ++v) key[v] = std::min(mu[v], cap[v]);
                auto it = memo.find(key);
                if (it == memo.end()) it = memo.emplace(key, block_homology(work, key)).first;
                const auto& h = it->second;
                for (int i = 1; i <= work.length(); ++i)
                    if (h[i] != 0)
                        return "nonzero H_" + std::to_string(i) + " in degree " + std::to_string(j);
                if (h[0] != h0_multidegree(mu))
                    return "H_0 mismatch in degree " + std::to_string(j);
            }
        }
        return std::nullopt;
    }
    // fallback: total-degree strands (small complexes only)
    for (int j = 0; j <= degree_bound; ++j) {
        for (int i = 1; i <= work.length(); ++i)
            if (strand_homology(work, i, j) != 0)
                return "nonzero H_" + std::to_string(i) + " in degree " + std::to_string(j);
        std::int64_t want = 0;
        for (auto& mu : monomials_of_degree(work.nvars, j)) want += h0_multidegree(mu);
        if (strand_homology(work, 0, j) != want)
            return "H_0 mismatch in degree " + std::to_string(j);
    }
    return std::nullopt;
}

bool infer_multidegrees(GradedFreeComplex& c) {
    int p = c.length();
    std::vector<std::vector<std::optional<ExponentVector>>> md(p + 1);
    for (int i = 0; i <= p; ++i) md[i].resize(c.modules[i].rank());
    // F_0: only the cyclic case R is recognized.
    if (c.modules.empty()) return false;
    if (c.modules[0].rank() == 1 && c.modules[0].generator_degrees[0] == 0)
        md[0][0] = ExponentVector(c.nvars, 0);
    else if (c.modules[0].rank() != 0)
        return false;
    for (auto& d : c.differentials)
        for (auto& [rc, poly] : d.entries())
            if (poly.term_count() > 1) return false;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= p; ++i) {
            for (auto& [rc, poly] : c.differentials[i - 1].entries()) {
                const ExponentVector& e = poly.terms().begin()->first;
                if (md[i - 1][rc.first] && !md[i][rc.second]) {
                    md[i][rc.second] = exp_add(e, *md[i - 1][rc.first]);
                    changed = true;
                } else if (!md[i - 1][rc.first] && md[i][rc.second]) {
                    ExponentVector v = exp_sub(*md[i][rc.second], e);
                    for (int x : v) if (x < 0) return false;
                    md[i - 1][rc.first] = v;
                    changed = true;
                }
            }
        }
    }
    // consistency + completeness
    for (int i = 1; i <= p; ++i) {
        for (auto& [rc, poly] : c.differentials[i - 1].entries()) {
            if (!md[i][rc.second] || !md[i - 1][rc.first]) return false;
            const ExponentVector& e = poly.terms().begin()->first;
            if (exp_add(e, *md[i - 1][rc.first]) != *md[i][rc.second]) return false;
        }
    }
    for (int i = 0; i <= p; ++i)
        for (auto& m : md[i])
            if (!m) return false;
    for (int i = 0; i <= p; ++i) {
        c.modules[i].multidegrees.clear();
        for (auto& m : md[i]) c.modules[i].multidegrees.push_back(*m);
    }
    return true;
}

std::string complex_to_json(const GradedFreeComplex& c) {
    nlohmann::ordered_json out;
    out["modules"] = nlohmann::json::array();
    for (auto& m : c.modules) out["modules"].push_back(m.generator_degrees);
    out["differentials"] = nlohmann::json::array();
    for (auto& d : c.differentials) {
        nlohmann::ordered_json jd;
        jd["rows"] = d.rows();
        jd["cols"] = d.cols();
        jd["entries"] = nlohmann::json::array();
        for (auto& [rc, poly] : d.entries()) {  // map order = row-major ascending
            nlohmann::ordered_json je;
            je["row"] = rc.first;
            je["col"] = rc.second;
            je["terms"] = nlohmann::json::array();
            for (auto& [e, coef] : poly.terms()) {
                nlohmann::ordered_json jt;
                jt["coef"] = c.field.lift(coef);
                jt["exp"] = e;
                je["terms"].push_back(jt);
            }
            jd["entries"].push_back(je);
        }
        out["differentials"].push_back(jd);
    }
    return out.dump(2);
}

GradedFreeComplex complex_from_json(const std::string& text, const PrimeField& field,
                                    int nvars_hint) {
    auto j = nlohmann::json::parse(text);
    GradedFreeComplex c;
    c.field = field;
    int nvars = nvars_hint;
    if (nvars < 0) {
        for (auto& jd : j.at("differentials"))
            for (auto& je : jd.at("entries"))
                for (auto& jt : je.at("terms")) {
                    nvars = static_cast<int>(jt.at("exp").size());
                    break;
                }
        if (nvars < 0) nvars = 0;
    }
    c.nvars = nvars;
    for (auto& jm : j.at("modules")) {
        GradedFreeModule m;
        m.generator_degrees = jm.get<std::vector<int>>();
        c.modules.push_back(std::move(m));
    }
    for (auto& jd : j.at("differentials")) {
        PolyMatrix d(jd.at("rows").get<int>(), jd.at("cols").get<int>(), nvars, field);
        for (auto& je : jd.at("entries")) {
            Polynomial p(nvars, field);
            for (auto& jt : je.at("terms"))
                p.add_term(jt.at("exp").get<ExponentVector>(), jt.at("coef").get<std::int64_t>());
            d.set(je.at("row").get<int>(), je.at("col").get<int>(), p);
        }
        c.differentials.push_back(std::move(d));
    }
    infer_multidegrees(c);
    return c;
}

std::string betti_to_json(const BettiTable& t) {
    int imax = t.max_homological_degree();
    int rmin = 0, rmax = 0;
    for (auto& [ij, v] : t.grid()) {
        rmin = std::min(rmin, ij.second - ij.first);
        rmax = std::max(rmax, ij.second - ij.first);
    }
    nlohmann::ordered_json out;
    out["rows"] = nlohmann::json::array();
    for (int r = rmin; r <= rmax; ++r) {
        nlohmann::ordered_json jr;
        jr["degree"] = r;
        std::vector<std::int64_t> entries;
        for (int i = 0; i <= imax; ++i) entries.push_back(t.get(i, r + i));
        jr["entries"] = entries;
        out["rows"].push_back(jr);
    }
    std::vector<std::int64_t> total;
    for (int i = 0; i <= imax; ++i) total.push_back(t.column_total(i));
    out["total"] = total;
    return out.dump(2);
}

}  // namespace trimres

#include "trimres/monomial_ideal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "trimres/combinatorics.hpp"

namespace trimres {

MonomialIdeal::MonomialIdeal(int nvars, std::vector<ExponentVector> generators) : n_(nvars) {
    for (auto& g : generators) {
        if (static_cast<int>(g.size()) != nvars)
            throw std::invalid_argument("MonomialIdeal: wrong exponent length");
        for (int e : g)
            if (e < 0) throw std::invalid_argument("MonomialIdeal: negative exponent");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
            if (j != i && divides(generators[j], generators[i]) &&
                (generators[j] != generators[i] || j < i))
                redundant = true;
        if (!redundant) gens_.push_back(generators[i]);
    }
}

bool MonomialIdeal::contains(const ExponentVector& mono) const {
    for (auto& g : gens_)
        if (divides(g, mono)) return true;
    return false;
}

std::optional<int> MonomialIdeal::generator_degree() const {
    std::optional<int> d;
    for (auto& g : gens_) {
        int dg = degree(g);
        if (!d) d = dg;
        else if (*d != dg) return std::nullopt;
    }
    return gens_.empty() ? std::nullopt : d;
}

std::int64_t MonomialIdeal::quotient_dim(int j) const {
    if (j < 0) return 0;
    std::int64_t c = 0;
    for (auto& m : monomials_of_degree(n_, j))
        if (!contains(m)) ++c;
    return c;
}

ExponentVector MonomialIdeal::exponent_cap() const {
    ExponentVector cap(n_, 0);
    for (auto& g : gens_) cap = lcm_exponents(cap, g);
    return cap;
}

namespace {

// Homology dims of a short piece a --f--> b --g--> c of scalar matrices:
// dim b - rank f - rank g.
std::int64_t middle_homology(const ScalarMatrix& f, const ScalarMatrix& g,
                             const PrimeField& field) {
    std::int64_t h = f.cols() - f.rank(field) - g.rank(field);
    if (h < 0) throw std::logic_error("middle_homology: negative dimension");
    return h;
}

}  // namespace

BettiTable oracle_betti(const MonomialIdeal& K, const PrimeField& field, int cap) {
    int r = static_cast<int>(K.generators().size());
    if (r > cap)
        throw std::invalid_argument("oracle_betti: generator count " + std::to_string(r) +
                                    " exceeds cap " + std::to_string(cap));
    BettiTable t;
    t.set(0, 0, 1);
    if (r == 0) return t;
    const auto& gens = K.generators();

    // lcm per subset, built incrementally from the subset without its lowest
    // member. The reduced Taylor differential only connects subsets with the
    // same lcm, so homology splits along lcm multidegrees.
    std::vector<ExponentVector> lcm(std::size_t(1) << r);
    lcm[0] = ExponentVector(K.nvars(), 0);
    std::map<ExponentVector, std::vector<std::uint32_t>> groups;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << r); ++mask) {
        int low = __builtin_ctz(mask);
        lcm[mask] = lcm_exponents(lcm[mask & (mask - 1)], gens[low]);
        groups[lcm[mask]].push_back(mask);
    }

    for (auto& [mu, masks] : groups) {
        int j = degree(mu);
        std::map<std::uint32_t, int> pos;  // mask -> index within group
        for (std::size_t k = 0; k < masks.size(); ++k) pos[masks[k]] = static_cast<int>(k);
        int imax = 0;
        for (auto m : masks) imax = std::max(imax, __builtin_popcount(m));
        // per homological degree i, the block of the reduced differential
        // d_i : (size i, lcm mu) -> (size i-1, lcm mu)
        std::vector<std::vector<std::uint32_t>> by_size(imax + 1);
        for (auto m : masks) by_size[__builtin_popcount(m)].push_back(m);
        std::vector<ScalarMatrix> blocks;  // blocks[i] = d_{i+1} within group
        for (int i = 0; i + 1 <= imax; ++i) {
            ScalarMatrix m(static_cast<int>(by_size[i].size()),
                           static_cast<int>(by_size[i + 1].size()));
            std::map<std::uint32_t, int> rowpos;
            for (std::size_t k = 0; k < by_size[i].size(); ++k)
                rowpos[by_size[i][k]] = static_cast<int>(k);
            for (std::size_t k = 0; k < by_size[i + 1].size(); ++k) {
                std::uint32_t sigma = by_size[i + 1][k];
                int sign = 1;
                for (std::uint32_t rest = sigma; rest; rest &= rest - 1) {
                    std::uint32_t tau = sigma & ~(rest & (std::uint32_t)(-(std::int32_t)rest));
                    if (lcm[tau] == mu) {
                        auto it = rowpos.find(tau);
                        if (it != rowpos.end())
                            m.set(it->second, static_cast<int>(k), field.reduce(sign));
                    }
                    sign = -sign;
                }
            }
            blocks.push_back(std::move(m));
        }
        for (int i = 1; i <= imax; ++i) {
            std::int64_t h;
            if (i < imax)
                h = middle_homology(blocks[i - 1], blocks[i], field);
            else
                h = static_cast<std::int64_t>(by_size[i].size()) - blocks[i - 1].rank(field);
            if (h < 0) throw std::logic_error("oracle_betti: negative dimension");
            if (h > 0) t.set(i, j, t.get(i, j) + h);
        }
    }
    return t;
}

BettiTable koszul_betti(const MonomialIdeal& K, const PrimeField& field) {
    int n = K.nvars();
    BettiTable t;
    if (K.generators().empty()) {
        t.set(0, 0, 1);
        return t;
    }
    if (K.contains(ExponentVector(n, 0)))
        throw std::invalid_argument("koszul_betti: ideal is the unit ideal");
    ExponentVector cap = K.exponent_cap();

    // All multidegrees of nonzero Tor divide the lcm of the generators.
    std::vector<ExponentVector> mus;
    ExponentVector mu(n, 0);
    while (true) {
        mus.push_back(mu);
        int v = n - 1;
        while (v >= 0 && mu[v] == cap[v]) mu[v--] = 0;
        if (v < 0) break;
        ++mu[v];
    }

    for (auto& m : mus) {
        int j = degree(m);
        // Koszul complex on the variables with coefficients in R/K, degree-m
        // piece: basis in homological degree i is {S : |S|=i, x^{m - eps_S}
        // outside K}.
        std::vector<std::vector<IndexSet>> bases(n + 1);
        for (int i = 0; i <= n; ++i) {
            for (auto& S : subsets_of_size(n, i)) {
                ExponentVector e = exp_sub(m, indicator(S, n));
                bool ok = true;
                for (int x : e)
                    if (x < 0) { ok = false; break; }
                if (ok && !K.contains(e)) bases[i].push_back(S);
            }
        }
        std::vector<int> ranks(n + 2, 0);
        for (int i = 1; i <= n; ++i) {
            if (bases[i].empty() || bases[i - 1].empty()) continue;
            std::map<IndexSet, int> rowpos;
            for (std::size_t k = 0; k < bases[i - 1].size(); ++k)
                rowpos[bases[i - 1][k]] = static_cast<int>(k);
            ScalarMatrix mat(static_cast<int>(bases[i - 1].size()),
                             static_cast<int>(bases[i].size()));
            for (std::size_t k = 0; k < bases[i].size(); ++k) {
                for (int v : bases[i][k]) {
                    auto it = rowpos.find(set_minus(bases[i][k], v));
                    if (it != rowpos.end())
                        mat.set(it->second, static_cast<int>(k),
                                field.reduce(sign_in_set(bases[i][k], v)));
                }
            }
            ranks[i] = mat.rank(field);
        }
        for (int i = 0; i <= n; ++i) {
            std::int64_t h =
                static_cast<std::int64_t>(bases[i].size()) - ranks[i] - ranks[i + 1];
            if (h < 0) throw std::logic_error("koszul_betti: negative dimension");
            if (h > 0) t.set(i, j, t.get(i, j) + h);
        }
    }
    return t;
}

BettiTable oracle_betti_auto(const MonomialIdeal& K, const PrimeField& field, int cap) {
    if (static_cast<int>(K.generators().size()) <= cap) return oracle_betti(K, field, cap);
    return koszul_betti(K, field);
}

}  // namespace trimres

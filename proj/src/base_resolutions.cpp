#include "trimres/base_resolutions.hpp"

#include <map>
#include <stdexcept>

#include "trimres/tableaux.hpp"

namespace trimres {

GradedFreeComplex build_L_complex(int n, int d, const PrimeField& field) {
    if (n < 1 || d < 1) throw std::invalid_argument("build_L_complex: need n, d >= 1");
    GradedFreeComplex c;
    c.nvars = n;
    c.field = field;
    c.modules.push_back({{0}, {}});

    std::vector<std::vector<SchurElement>> bases(n + 1);
    for (int a = 0; a <= n - 1; ++a) {
        bases[a + 1] = schur_basis(n, a, d);
        GradedFreeModule m;
        m.generator_degrees.assign(bases[a + 1].size(), a + d);
        c.modules.push_back(std::move(m));
    }

    // first differential: a one-column tableau spells its monomial
    {
        PolyMatrix d1(1, static_cast<int>(bases[1].size()), n, field);
        for (std::size_t col = 0; col < bases[1].size(); ++col) {
            ExponentVector e(n, 0);
            e[bases[1][col].column[0] - 1] += 1;
            for (int x : bases[1][col].row) e[x - 1] += 1;
            d1.set(0, static_cast<int>(col), Polynomial::monomial(n, field, e));
        }
        c.differentials.push_back(std::move(d1));
    }

    for (int a = 1; a <= n - 1; ++a) {
        std::map<SchurElement, int> target;
        for (std::size_t k = 0; k < bases[a].size(); ++k)
            target.emplace(bases[a][k], static_cast<int>(k));
        PolyMatrix dm(static_cast<int>(bases[a].size()), static_cast<int>(bases[a + 1].size()),
                      n, field);
        for (std::size_t col = 0; col < bases[a + 1].size(); ++col) {
            const SchurElement& src = bases[a + 1][col];
            for (std::size_t t = 0; t < src.column.size(); ++t) {
                int var = src.column[t];
                std::int64_t sign = (t % 2 == 0) ? 1 : field.neg(1);
                for (auto& [e, coef] :
                     straighten_schur(n, set_minus(src.column, var), src.row, field))
                    dm.add(target.at(e), static_cast<int>(col),
                           Polynomial::monomial(n, field, unit_exponent(n, var),
                                                field.mul(sign, coef)));
            }
        }
        c.differentials.push_back(std::move(dm));
    }
    infer_multidegrees(c);
    return c;
}

GradedFreeComplex build_galetto(int n, int d, const PrimeField& field) {
    if (d < 1 || d > n) throw std::invalid_argument("build_galetto: need 1 <= d <= n");
    GradedFreeComplex c;
    c.nvars = n;
    c.field = field;
    c.modules.push_back({{0}, {}});

    int top = n - d + 1;
    std::vector<std::vector<SpechtElement>> bases(top + 1);
    for (int i = 1; i <= top; ++i) {
        bases[i] = specht_basis(n, d, i - 1);
        GradedFreeModule m;
        m.generator_degrees.assign(bases[i].size(), d + i - 1);
        c.modules.push_back(std::move(m));
    }

    {
        PolyMatrix d1(1, static_cast<int>(bases[1].size()), n, field);
        for (std::size_t col = 0; col < bases[1].size(); ++col) {
            ExponentVector e(n, 0);
            e[bases[1][col].column[0] - 1] += 1;
            for (int x : bases[1][col].row) e[x - 1] += 1;
            d1.set(0, static_cast<int>(col), Polynomial::monomial(n, field, e));
        }
        c.differentials.push_back(std::move(d1));
    }

    for (int i = 2; i <= top; ++i) {
        std::map<SpechtElement, int> target;
        for (std::size_t k = 0; k < bases[i - 1].size(); ++k)
            target.emplace(bases[i - 1][k], static_cast<int>(k));
        PolyMatrix dm(static_cast<int>(bases[i - 1].size()), static_cast<int>(bases[i].size()),
                      n, field);
        for (std::size_t col = 0; col < bases[i].size(); ++col) {
            const SpechtElement& src = bases[i][col];
            for (std::size_t j = 0; j < src.column.size(); ++j) {
                int var = src.column[j];
                std::int64_t sign = (j % 2 == 0) ? 1 : field.neg(1);
                for (auto& [e, coef] : straighten_specht(set_minus(src.column, var), src.row))
                    dm.add(target.at(e), static_cast<int>(col),
                           Polynomial::monomial(n, field, unit_exponent(n, var),
                                                field.mul(sign, field.reduce(coef))));
            }
        }
        c.differentials.push_back(std::move(dm));
    }
    infer_multidegrees(c);
    return c;
}

}  // namespace trimres

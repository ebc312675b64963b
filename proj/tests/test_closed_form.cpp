#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trimres/base_resolutions.hpp"
#include "trimres/closed_form.hpp"
#include "trimres/combinatorics.hpp"
#include "trimres/monomial_ideal.hpp"

using namespace trimres;

namespace {

TrimSpec mono_spec(int n, int d, std::vector<ExponentVector> comp) {
    TrimSpec s;
    s.n = n;
    s.d = d;
    s.kind = TrimKind::monomial;
    s.monomial_complement = std::move(comp);
    validate(s);
    return s;
}

TrimSpec sq_spec(int n, int d, std::vector<IndexSet> comp) {
    TrimSpec s;
    s.n = n;
    s.d = d;
    s.kind = TrimKind::squarefree;
    s.squarefree_complement = std::move(comp);
    validate(s);
    return s;
}

}  // namespace

TEST_CASE("validation of separation hypotheses") {
    CHECK_NOTHROW(mono_spec(3, 2, {{2, 0, 0}, {0, 2, 0}}));
    CHECK_NOTHROW(mono_spec(3, 2, {{1, 1, 0}}));
    CHECK_NOTHROW(mono_spec(4, 3, {{2, 1, 0, 0}, {0, 0, 1, 2}}));
    // deg lcm(x1 x2, x2 x3) = 3 < d + 2
    CHECK_THROWS_WITH_AS(mono_spec(3, 2, {{1, 1, 0}, {0, 1, 1}}),
                         doctest::Contains("LCM hypothesis violated for pair (1,2)"),
                         std::invalid_argument);
    CHECK_THROWS_AS(mono_spec(3, 2, {{1, 1, 0}, {1, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(mono_spec(3, 2, {{1, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(mono_spec(3, 2, {}), std::invalid_argument);
    // removing every degree-2 generator of k[x] leaves nothing to resolve
    CHECK_THROWS_AS(mono_spec(1, 2, {{2}}), std::invalid_argument);

    CHECK_NOTHROW(sq_spec(4, 2, {{1, 2}, {3, 4}}));
    CHECK_NOTHROW(sq_spec(6, 3, {{1, 2, 3}, {3, 4, 5}}));
    CHECK_THROWS_WITH_AS(sq_spec(5, 2, {{1, 2}, {1, 3}}),
                         doctest::Contains("intersection hypothesis violated for pair (1,2)"),
                         std::invalid_argument);
    CHECK_THROWS_AS(sq_spec(4, 2, {{1, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(sq_spec(2, 2, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("trimmed ideal enumeration") {
    TrimSpec s = mono_spec(2, 2, {{1, 1}});
    MonomialIdeal K = trimmed_ideal(s);
    CHECK(K.generators() == std::vector<ExponentVector>{{0, 2}, {2, 0}});
    TrimSpec t = sq_spec(4, 2, {{1, 2}});
    CHECK(trimmed_ideal(t).generators().size() == 5);
    CHECK_FALSE(trimmed_ideal(t).contains({1, 1, 0, 0}));
    CHECK(trimmed_ideal(t).contains({1, 0, 1, 0}));
}

TEST_CASE("closed Betti formulas against the oracle on small cases") {
    std::vector<TrimSpec> specs = {
        mono_spec(2, 2, {{1, 1}}),
        mono_spec(2, 2, {{2, 0}}),
        mono_spec(3, 2, {{0, 0, 2}}),
        mono_spec(3, 2, {{1, 1, 0}}),
        mono_spec(3, 2, {{2, 0, 0}, {0, 2, 0}}),
        mono_spec(3, 3, {{1, 1, 1}}),
        mono_spec(3, 3, {{3, 0, 0}, {0, 1, 2}}),
        mono_spec(4, 2, {{1, 0, 0, 1}}),
        sq_spec(4, 2, {{1, 2}}),
        sq_spec(5, 2, {{1, 2}, {3, 4}}),
        sq_spec(6, 3, {{1, 2, 3}, {4, 5, 6}}),
    };
    for (auto& s : specs) {
        CAPTURE(s.n);
        CAPTURE(s.d);
        // dispatch bigger generating sets to the Koszul-side oracle
        CHECK(betti_formula(s) == oracle_betti_auto(trimmed_ideal(s), PrimeField(32003), 14));
    }
    // pinned values
    BettiTable t = betti_formula(mono_spec(3, 2, {{0, 0, 2}}));
    CHECK(t.get(1, 2) == 5);
    CHECK(t.get(2, 3) == 6);
    CHECK(t.get(3, 4) == 2);
    BettiTable u = betti_formula(mono_spec(3, 2, {{1, 1, 0}}));
    CHECK(u.get(2, 3) == 5);
    CHECK(u.get(2, 4) == 1);
    CHECK(u.get(3, 5) == 1);
}

TEST_CASE("type and Gorenstein classification for a single trim") {
    auto [t1, g1] = ring_type_and_gorenstein(mono_spec(2, 2, {{1, 1}}));
    CHECK(t1 == 1);
    CHECK(g1);
    auto [t2, g2] = ring_type_and_gorenstein(mono_spec(2, 2, {{2, 0}}));
    CHECK(t2 == 1);
    CHECK_FALSE(g2);  // not Artinian: no power of x1 lies in the ideal
    auto [t3, g3] = ring_type_and_gorenstein(mono_spec(3, 2, {{1, 1, 0}}));
    CHECK(t3 == 2);
    CHECK_FALSE(g3);
    auto [t4, g4] = ring_type_and_gorenstein(mono_spec(3, 3, {{3, 0, 0}}));
    CHECK(t4 == 5);
    CHECK_FALSE(g4);
    TrimSpec two = mono_spec(3, 2, {{2, 0, 0}, {0, 2, 0}});
    CHECK_THROWS_AS(ring_type_and_gorenstein(two), std::invalid_argument);
    TrimSpec sq = sq_spec(4, 2, {{1, 2}});
    CHECK_THROWS_AS(ring_type_and_gorenstein(sq), std::invalid_argument);
}

TEST_CASE("kernel submodule ranks match the counting formula") {
    PrimeField f(32003);
    {
        SubmoduleBasis B = build_submodule_L(mono_spec(2, 2, {{1, 1}}), 1, f);
        CHECK(B.ambient_rank == 2);
        CHECK(B.rank() == 0);
    }
    {
        SubmoduleBasis B = build_submodule_L(mono_spec(3, 2, {{0, 0, 2}}), 1, f);
        CHECK(B.ambient_rank == 8);
        CHECK(B.rank() == 6);
    }
    for (auto& s : {mono_spec(3, 2, {{1, 1, 0}}), mono_spec(4, 2, {{2, 0, 0, 0}, {0, 0, 1, 1}}),
                    mono_spec(4, 3, {{1, 2, 0, 0}, {0, 0, 2, 1}})}) {
        for (int i = 0; i <= s.n - 1; ++i) {
            SubmoduleBasis B = build_submodule_L(s, i, f);
            std::int64_t rk = 0;
            if (i == 0) rk = s.r();
            else
                for (auto& a : s.monomial_complement) {
                    int na = n_alpha(a);
                    rk += na == 1 ? q_rank(QKind::pure, s.n, s.d, i, 1)
                                  : q_rank(QKind::general, s.n, s.d, i, na);
                }
            CHECK(B.ambient_rank ==
                  binomial(s.n + s.d - 1, i + s.d) * binomial(s.d + i - 1, i));
            CHECK(B.rank() == B.ambient_rank - rk);
            CHECK(static_cast<int>(B.omitted.size()) == rk);
        }
    }
    {
        TrimSpec s = sq_spec(4, 2, {{1, 2}});
        SubmoduleBasis B1 = build_submodule_F(s, 1, f);
        CHECK(B1.ambient_rank == 6);
        CHECK(B1.rank() == 5);
        SubmoduleBasis B3 = build_submodule_F(s, 3, f);
        CHECK(B3.ambient_rank == 3);
        CHECK(B3.rank() == 2);
    }
    for (auto& s : {sq_spec(5, 2, {{1, 2}, {3, 4}}), sq_spec(6, 3, {{1, 2, 3}, {3, 4, 5}})}) {
        for (int i = 1; i <= s.n - s.d + 1; ++i) {
            SubmoduleBasis B = build_submodule_F(s, i, f);
            CHECK(B.rank() == binomial(s.n, s.d + i - 1) * binomial(s.d + i - 2, i - 1) -
                                  s.r() * binomial(s.n - s.d, i - 1));
        }
    }
}

TEST_CASE("kernel submodule columns are killed by every comparison map") {
    PrimeField f(32003);
    TrimSpec s = mono_spec(4, 2, {{1, 1, 0, 0}, {0, 0, 2, 0}});
    for (int i = 1; i <= 3; ++i) {
        SubmoduleBasis B = build_submodule_L(s, i, f);
        for (auto& alpha : s.monomial_complement) {
            ScalarMatrix phi = phi_map(s.n, s.d, i, colon_pure(s.n, s.d, alpha), alpha);
            for (auto& col : B.columns)
                for (int row = 0; row < phi.rows(); ++row) {
                    std::int64_t acc = 0;
                    for (auto& [idx, co] : col) acc = f.add(acc, f.mul(phi.get(row, idx), co));
                    CHECK(acc == 0);
                }
        }
    }
    TrimSpec t = sq_spec(5, 2, {{1, 2}, {3, 4}});
    for (int i = 2; i <= 4; ++i) {
        SubmoduleBasis B = build_submodule_F(t, i, f);
        for (auto& I : t.squarefree_complement) {
            ScalarMatrix psi = psi_map(t.n, t.d, i - 1, I);
            for (auto& col : B.columns)
                for (int row = 0; row < psi.rows(); ++row) {
                    std::int64_t acc = 0;
                    for (auto& [idx, co] : col) acc = f.add(acc, f.mul(psi.get(row, idx), co));
                    CHECK(acc == 0);
                }
        }
    }
}

TEST_CASE("connecting map entries are quadratic on the support variables") {
    PrimeField f(32003);
    TrimSpec s = mono_spec(4, 2, {{1, 1, 0, 0}});
    for (int p = 2; p <= 4; ++p) {
        PolyMatrix th = theta_map(s, 0, p, f);
        CHECK(th.cols() == binomial(2, p - 2));
        bool any = false;
        for (auto& [rc, poly] : th.entries()) {
            any = true;
            CHECK(poly.homogeneous_degree() == 2);
            for (auto& [e, c] : poly.terms()) {
                CHECK(e[2] == 0);
                CHECK(e[3] == 0);
            }
        }
        CHECK(any);
    }
    // support size 1 contributes no Koszul summand: empty block
    TrimSpec pure = mono_spec(3, 2, {{0, 0, 2}});
    CHECK(theta_map(pure, 0, 2, f).cols() == 0);
}

TEST_CASE("closed-form minimal resolutions verify completely") {
    PrimeField f(32003);
    std::vector<TrimSpec> specs = {
        mono_spec(2, 2, {{1, 1}}),
        mono_spec(2, 2, {{2, 0}}),
        mono_spec(3, 2, {{0, 0, 2}}),
        mono_spec(3, 2, {{1, 1, 0}}),
        mono_spec(3, 2, {{2, 0, 0}, {0, 2, 0}}),
        mono_spec(3, 3, {{1, 1, 1}}),
        mono_spec(3, 3, {{3, 0, 0}, {0, 1, 2}}),
        mono_spec(4, 2, {{1, 0, 0, 1}}),
        mono_spec(4, 2, {{2, 0, 0, 0}, {0, 1, 0, 1}}),
        sq_spec(4, 2, {{1, 2}}),
        sq_spec(5, 2, {{1, 2}, {3, 4}}),
        sq_spec(5, 3, {{1, 2, 3}}),
        sq_spec(6, 3, {{1, 2, 3}, {4, 5, 6}}),
    };
    for (auto& s : specs) {
        CAPTURE(s.n);
        CAPTURE(s.d);
        GradedFreeComplex c = build_minimal_resolution(s, f);
        auto err = verify_resolution(c, s);
        CHECK_MESSAGE(!err, (err ? *err : std::string()));
    }
}

TEST_CASE("verification rejects a broken complex") {
    PrimeField f(32003);
    TrimSpec s = mono_spec(3, 2, {{0, 0, 2}});
    GradedFreeComplex c = build_minimal_resolution(s, f);
    GradedFreeComplex broken = c;
    broken.differentials[1].set(0, 0, Polynomial::zero(3, f));
    CHECK(verify_resolution(broken, s).has_value());
    GradedFreeComplex wrong = build_minimal_resolution(mono_spec(3, 2, {{2, 0, 0}}), f);
    CHECK(verify_resolution(wrong, s).has_value());
}

TEST_CASE("generic split extraction agrees with the closed-form resolution") {
    PrimeField f(32003);
    std::vector<TrimSpec> specs = {
        mono_spec(3, 2, {{0, 0, 2}}),
        mono_spec(3, 2, {{1, 1, 0}}),
        mono_spec(4, 2, {{2, 0, 0, 0}, {0, 1, 0, 1}}),
        mono_spec(3, 3, {{1, 1, 1}}),
        sq_spec(5, 2, {{1, 2}, {3, 4}}),
    };
    for (auto& s : specs) {
        CAPTURE(s.n);
        CAPTURE(s.d);
        GradedFreeComplex F;
        std::vector<TrimData> trims;
        if (s.kind == TrimKind::monomial) {
            F = build_L_complex(s.n, s.d, f);
            for (auto& a : s.monomial_complement)
                trims.push_back(trim_data_for_power(s.n, s.d, a, F, f));
        } else {
            F = build_galetto(s.n, s.d, f);
            for (auto& a : s.squarefree_complement)
                trims.push_back(trim_data_for_sqfree(s.n, s.d, a, F, f));
        }
        GradedFreeComplex c = split_cone_extract(F, trims);
        auto err = verify_resolution(c, s);
        CHECK_MESSAGE(!err, (err ? *err : std::string()));
        GradedFreeComplex direct = build_minimal_resolution(s, f);
        REQUIRE(c.length() == direct.length());
        for (int i = 0; i <= c.length(); ++i)
            CHECK(c.modules[i].generator_degrees == direct.modules[i].generator_degrees);
    }
}

TEST_CASE("split extraction refuses non-constant comparison maps") {
    PrimeField f(32003);
    GradedFreeComplex F = build_L_complex(3, 2, f);
    TrimData t = trim_data_for_power(3, 2, {0, 0, 2}, F, f);
    // scale a comparison entry by a variable and fix the commuting square by
    // hand is impossible, so perturb q and expect either the cone validation
    // or the constant check to refuse
    t.q[0].set(0, 0, Polynomial::monomial(3, f, {1, 0, 0}, 1));
    CHECK_THROWS_AS(split_cone_extract(F, {t}), std::invalid_argument);
}

TEST_CASE("squarefree resolutions are linear") {
    for (auto& s : {sq_spec(4, 2, {{1, 2}}), sq_spec(5, 2, {{1, 2}, {3, 4}}),
                    sq_spec(6, 3, {{1, 2, 3}, {4, 5, 6}})}) {
        CHECK(betti_formula(s).is_linear_with_row(s.d - 1));
    }
}

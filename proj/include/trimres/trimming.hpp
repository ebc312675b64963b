#pragma once

#include <string>
#include <vector>

#include "trimres/complex.hpp"
#include "trimres/tableaux.hpp"

namespace trimres {

// (K' : x^alpha) for K' = all degree-d monomials except x^alpha: every
// variable, except that a pure power x_i^d omits x_i.
IndexSet colon_pure(int n, int d, const ExponentVector& alpha);

// (K' : x^J) for K' = all squarefree degree-d monomials except x^J: the
// variables outside J.
IndexSet colon_sqfree(int n, int d, const IndexSet& J);

// Koszul resolution of R/(x_v : v in vars): module k has basis the k-subsets
// of `vars` in enumeration order, generators in degree k.
GradedFreeComplex koszul_complex_on(int n, const IndexSet& vars, const PrimeField& field);

// Matrix of the comparison map from hook module (column length l+1, row
// length d-1) to the l-th exterior power on the variables of J: rows indexed
// by subsets_of(J, l), columns by schur_basis(n, l, d). A standard basis
// element maps to sgn(i) * (column minus i) when removing i from the column
// makes the row spell alpha - eps_i ... precisely: when the element's row
// content plus eps_i equals alpha, i lies in the column, and the rest of the
// column lies in J.
ScalarMatrix phi_map(int n, int d, int l, const IndexSet& J, const ExponentVector& alpha);

// Squarefree analog on the hook Specht basis: rows indexed by subsets of the
// complement of I of size l, columns by specht_basis(n, d, l). A tabloid maps
// to sgn(a) * (column minus a) when its row together with a column entry a
// equals I and the remaining column entries avoid I.
ScalarMatrix psi_map(int n, int d, int l, const IndexSet& I);

enum class QKind { pure, general, sqfree };

// Predicted rank of the comparison map reduced mod the maximal ideal:
// pure power -> C(n-1, l); general alpha -> C(n, l) - C(n - n_a, l - n_a)
// with n_a the support size; squarefree -> C(n-d, l).
std::int64_t q_rank(QKind kind, int n, int d, int l, int support_size);

// One trimmed generator: which generator of F_1 is dropped, a resolution G of
// R / (colon ideal) with G_0 = R, and comparison maps q[k-1] : F_{k+1} -> G_k
// for k = 1 .. length(F) - 1 (rows may be empty past the length of G).
struct TrimData {
    int generator_index = -1;
    GradedFreeComplex G;
    std::vector<PolyMatrix> q;
};

// Mapping-cone resolution of R/J, J = (untrimmed generators) + sum_s a_s *
// (trimmed generator s): C_0 = R, C_1 = F_1' + sum G^s_1, C_i = F_i + sum
// G^s_i, with every G^s twisted by the degree of its trimmed generator. All
// commuting squares are verified first; violations throw with a report naming
// the trim and the homological degree. Generally non-minimal.
GradedFreeComplex build_trimming_cone(const GradedFreeComplex& F,
                                      const std::vector<TrimData>& trims);

// Betti numbers predicted by rank-counting on the cone without building it:
// generator counts of F_i and the twisted G^s_i minus the graded ranks of the
// stacked comparison maps in homological degrees i and i-1.
BettiTable cone_betti_counts(const GradedFreeComplex& F, const std::vector<TrimData>& trims);

// TrimData for removing the degree-d generator x^alpha from the resolution
// built by build_L_complex(n, d): Koszul G on the colon variables and
// phi-matrices as comparison maps.
TrimData trim_data_for_power(int n, int d, const ExponentVector& alpha,
                             const GradedFreeComplex& F, const PrimeField& field);

// Squarefree analog for build_galetto(n, d) and the generator x^I.
TrimData trim_data_for_sqfree(int n, int d, const IndexSet& I, const GradedFreeComplex& F,
                              const PrimeField& field);

}  // namespace trimres

#pragma once

#include "trimres/complex.hpp"

namespace trimres {

// Minimal free resolution of R/(x_1..x_n)^d: homological degree a+1 is the
// hook module with column length a+1 and row length d-1, twisted by -(a+d).
// The differential drops a column entry t with sign (-1)^t and coefficient
// x_t, then straightens; the first differential sends a basis element to the
// degree-d monomial it spells.
GradedFreeComplex build_L_complex(int n, int d, const PrimeField& field = PrimeField(32003));

// Minimal free resolution of R/(squarefree degree-d monomials): homological
// degree i >= 1 is the hook Specht module with column length i and row length
// d-1, twisted by -(d+i-1); differential analogous to the one above.
GradedFreeComplex build_galetto(int n, int d, const PrimeField& field = PrimeField(32003));

}  // namespace trimres

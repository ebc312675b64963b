#pragma once

#include <optional>
#include <vector>

#include "trimres/complex.hpp"
#include "trimres/exponent.hpp"

namespace trimres {

// Monomial ideal given by its minimal generating set (no generator divides
// another); generators are stored lex-sorted.
class MonomialIdeal {
public:
    // Minimalizes and sorts the given generators.
    MonomialIdeal(int nvars, std::vector<ExponentVector> generators);

    int nvars() const { return n_; }
    const std::vector<ExponentVector>& generators() const { return gens_; }

    bool contains(const ExponentVector& mono) const;

    // Common generator degree, or nullopt when generators have mixed degrees
    // (the zero ideal reports nullopt as well).
    std::optional<int> generator_degree() const;

    // dim_k (R/K)_j: monomials of degree j outside the ideal.
    std::int64_t quotient_dim(int j) const;

    // Componentwise max of all generators (all-zero for the zero ideal).
    ExponentVector exponent_cap() const;

private:
    int n_;
    std::vector<ExponentVector> gens_;
};

// Graded Betti numbers of R/K from the Taylor complex tensored with k: basis
// elements are generator subsets graded by their lcm, and the reduced
// differential connects subsets with equal lcm. Homology is computed per lcm
// multidegree. Throws when the generator count exceeds `cap`.
BettiTable oracle_betti(const MonomialIdeal& K, const PrimeField& field = PrimeField(32003),
                        int cap = 18);

// Independent oracle: Tor_*(R/K, k) as homology of the Koszul complex on the
// variables with coefficients in R/K, computed one multidegree at a time.
// Scales with the exponent cap, not the generator count.
BettiTable koszul_betti(const MonomialIdeal& K, const PrimeField& field = PrimeField(32003));

// oracle_betti when the generator count permits, otherwise koszul_betti.
BettiTable oracle_betti_auto(const MonomialIdeal& K, const PrimeField& field = PrimeField(32003),
                             int cap = 18);

}  // namespace trimres

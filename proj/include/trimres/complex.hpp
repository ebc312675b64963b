#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trimres/matrix.hpp"

namespace trimres {

// Free graded module described by its generator twists. Multidegrees are
// optional bookkeeping used to split strand computations into multigraded
// blocks; empty means unknown.
struct GradedFreeModule {
    std::vector<int> generator_degrees;
    std::vector<ExponentVector> multidegrees;

    int rank() const { return static_cast<int>(generator_degrees.size()); }
    bool has_multidegrees() const {
        return multidegrees.size() == generator_degrees.size();
    }
};

// Complex of free modules F_0 <- F_1 <- ... <- F_p with differentials[i]
// the map F_{i+1} -> F_i.
struct GradedFreeComplex {
    int nvars = 0;
    PrimeField field{32003};
    std::vector<GradedFreeModule> modules;
    std::vector<PolyMatrix> differentials;

    int length() const { return static_cast<int>(modules.size()) - 1; }
    int max_generator_degree() const;
};

// Graded Betti numbers beta_{i,j}, keyed by (homological degree i, internal
// degree j). Zero entries are not stored.
class BettiTable {
public:
    void set(int i, int j, std::int64_t v);
    std::int64_t get(int i, int j) const;
    const std::map<std::pair<int, int>, std::int64_t>& grid() const { return grid_; }

    bool operator==(const BettiTable& o) const { return grid_ == o.grid_; }
    bool operator!=(const BettiTable& o) const { return !(*this == o); }

    int max_homological_degree() const;
    std::int64_t column_total(int i) const;
    // True when nonzero only at (0,0) and on the single row j - i = row.
    bool is_linear_with_row(int row) const;

    // Macaulay-style text rendering (columns = homological degree, rows = j-i).
    std::string to_text() const;

private:
    std::map<std::pair<int, int>, std::int64_t> grid_;
};

// Structural and algebraic validation: matching dimensions (violations
// throw), homogeneous entries of the correct degree and d_{i} . d_{i+1} = 0
// (violations return false).
bool check_complex(const GradedFreeComplex& c);

// True iff no differential entry has a nonzero constant term.
bool is_minimal(const GradedFreeComplex& c);

// dim_k H_i(C)_j for the degree-j strand of the complex over the polynomial
// ring. Uses multigraded block decomposition when available.
std::int64_t strand_homology(const GradedFreeComplex& c, int i, int j);

// Betti numbers of C via H(C tensor k): beta_{i,j} = dim H_i(C (x) k)_j.
// For minimal complexes this reads off the generator degrees.
BettiTable betti_by_strands(const GradedFreeComplex& c, int degree_bound);

// Full degreewise exactness certificate for a complex expected to resolve a
// cyclic module with Hilbert function h (h(j) = expected dim H_0 in degree j):
// checks H_i = 0 for all i >= 1 and H_0 degree dims equal h, in every degree
// up to `degree_bound` (and, via multidegree reduction, beyond). Returns a
// human-readable failure description or nullopt on success.
std::optional<std::string> certify_resolution(
    const GradedFreeComplex& c, int degree_bound,
    const std::function<std::int64_t(const ExponentVector&)>& h0_multidegree);

// Fill in module multidegrees by propagating through single-term monomial
// differential entries, starting from F_0 = R. Returns false when the complex
// is not monomial-multigraded (multidegrees left untouched in that case).
bool infer_multidegrees(GradedFreeComplex& c);

// Shared JSON wire format (bit-exact, deterministic ordering).
std::string complex_to_json(const GradedFreeComplex& c);
GradedFreeComplex complex_from_json(const std::string& text, const PrimeField& field,
                                    int nvars_hint = -1);
std::string betti_to_json(const BettiTable& t);

}  // namespace trimres

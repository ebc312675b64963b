#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trimres/complex.hpp"
#include "trimres/monomial_ideal.hpp"
#include "trimres/trimming.hpp"

namespace trimres {

enum class TrimKind { monomial, squarefree };

// An equigenerated monomial ideal K' described by its complement inside the
// full degree-d generating set: all monomials of degree d (monomial kind) or
// all squarefree monomials of degree d (squarefree kind), minus the listed
// generators. The closed-form results require the complement generators to be
// pairwise "spread out"; `validate` enforces that.
struct TrimSpec {
    int n = 0;
    int d = 0;
    TrimKind kind = TrimKind::monomial;
    std::vector<ExponentVector> monomial_complement;  // kind == monomial
    std::vector<IndexSet> squarefree_complement;      // kind == squarefree
    bool validated = false;

    int r() const {
        return static_cast<int>(kind == TrimKind::monomial ? monomial_complement.size()
                                                           : squarefree_complement.size());
    }
};

// Checks the structural invariants and the separation hypotheses:
//  - monomial kind: deg lcm(x^a, x^b) >= d+2 for every complement pair a, b;
//  - squarefree kind: |A intersect B| <= d-2 for every complement pair A, B;
//  - all complement generators distinct, of degree (size) d, and a proper
//    subset of the full generating set.
// Throws std::invalid_argument naming the offending generator pair; marks the
// spec validated on success.
void validate(TrimSpec& spec);

// The ideal K' itself: the full degree-d generating set minus the complement.
MonomialIdeal trimmed_ideal(const TrimSpec& spec);

// Graded Betti numbers of R/K' by the closed formulas: beta_{0,0} = 1; the
// degree-(d-1) row at column l is
//   C(n+d-1, d+l-1) * C(d+l-2, l-1) - rk_{l-1}    (monomial)
//   C(d+l-2, l-1) * C(n, d+l-1) - r * C(n-d, l-1) (squarefree)
// with rk_l the summed reduced rank of the comparison maps (q_rank) and
// rk_0 = r; the monomial kind additionally has a degree-d row with column-l
// entry sum_s C(n - n_s, l - n_s) over complement generators with support
// size n_s >= 2. Zero entries are omitted.
BettiTable betti_formula(const TrimSpec& spec);

// Cohen-Macaulay type read off the last nonzero column of betti_formula, and
// the Gorenstein classification. Only stated for a single-generator monomial
// spec with d >= 2; other inputs are refused.
std::pair<std::int64_t, bool> ring_type_and_gorenstein(const TrimSpec& spec);

// Basis of a free direct summand of an ambient free module. Each column is a
// sparse integer vector over the ambient standard basis with a distinguished
// unit-coefficient lead index; the omitted ambient unit vectors listed in
// `omitted` span a complement. Leads and omitted indices partition the
// ambient index range.
struct SubmoduleBasis {
    int ambient_rank = 0;
    std::vector<std::vector<std::pair<int, std::int64_t>>> columns;
    std::vector<int> lead;
    std::vector<int> omitted;

    int rank() const { return static_cast<int>(columns.size()); }
};

// Kernel of the stacked comparison maps inside the hook-Schur module with
// column length i+1 (ambient basis schur_basis(n, i, d)): unit vectors for
// the basis elements all comparison maps kill, plus two-term combinations
// pairing each remaining element with a canonical partner; the partners
// themselves are omitted. For i = 0 the basis consists of the unit vectors
// spelling the generators of K'. Rank = ambient rank - rk_i.
SubmoduleBasis build_submodule_L(const TrimSpec& spec, int i,
                                 const PrimeField& field = PrimeField(32003));

// Squarefree analog inside the hook-Specht module at homological position i
// (ambient basis specht_basis(n, d, i-1)). Rank = ambient - r * C(n-d, i-1).
SubmoduleBasis build_submodule_F(const TrimSpec& spec, int i,
                                 const PrimeField& field = PrimeField(32003));

// Connecting map of the extracted minimal resolution, restricted to the
// Koszul summand of complement generator s (0-based, support size >= 2) in
// homological degree p >= 2: columns indexed by the (p - n_s)-subsets of the
// non-support variables, rows by the retained basis of the kernel submodule
// two steps down. All entries are quadratic and supported on the support
// variables of generator s.
PolyMatrix theta_map(const TrimSpec& spec, int s, int p,
                     const PrimeField& field = PrimeField(32003));

// Minimal free resolution of R/K' assembled in closed form: position i holds
// the kernel submodule basis one step down plus, for the monomial kind, one
// shifted Koszul summand per complement generator with support size >= 2.
// Differentials are the restricted ambient differentials, the theta maps, and
// the negated Koszul differentials on the summands.
GradedFreeComplex build_minimal_resolution(const TrimSpec& spec,
                                           const PrimeField& field = PrimeField(32003));

// Full verification battery for a claimed minimal resolution of R/K':
// structural checks and d^2 = 0, minimality, Betti table equal to
// betti_formula, degreewise exactness with H_0 = R/K', and first-differential
// image equal to K' as a monomial set. Returns a failure description or
// nullopt.
std::optional<std::string> verify_resolution(const GradedFreeComplex& c, const TrimSpec& spec);

// Generic extraction of the minimal summand of a trimming mapping cone when
// every comparison map is constant: position i holds ker(stacked q) inside
// F_i plus coker(stacked q) inside the twisted G_i sum, with the connecting
// map computed by lifting through a section of the stacked q. Refuses
// non-constant comparison maps and a non-surjective bottom comparison map.
GradedFreeComplex split_cone_extract(const GradedFreeComplex& F,
                                     const std::vector<TrimData>& trims);

}  // namespace trimres

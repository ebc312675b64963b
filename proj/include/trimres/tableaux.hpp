#pragma once

#include <compare>
#include <map>
#include <vector>

#include "trimres/exponent.hpp"
#include "trimres/field.hpp"

namespace trimres {

// Hook tableau indexing a basis vector of L^a_b(F): strictly increasing
// column of a+1 entries and a nondecreasing row multiset of b-1 entries.
// Standard means column[0] <= row[0].
struct SchurElement {
    IndexSet column;
    std::vector<int> row;

    auto operator<=>(const SchurElement&) const = default;
};

// Hook tabloid indexing a basis vector of the Specht module for (d, 1^l):
// strictly increasing column of l+1 entries, strictly increasing row of d-1
// entries, all distinct. Standard means column[0] < row[0].
struct SpechtElement {
    IndexSet column;
    IndexSet row;

    auto operator<=>(const SpechtElement&) const = default;
};

using SchurCombo = std::map<SchurElement, std::int64_t>;
using SpechtCombo = std::map<SpechtElement, std::int64_t>;

// All standard elements with entries in [n], lex order;
// count = C(n+b-1, a+b) * C(a+b-1, a). Empty when a is out of [0, n-1].
std::vector<SchurElement> schur_basis(int n, int a, int b);

// All standard hook tabloids with entries in [n], lex order;
// count = C(n, d+l) * C(d+l-1, l). Empty when l is out of [0, n-d].
std::vector<SpechtElement> specht_basis(int n, int d, int l);

// Expression of the (possibly nonstandard) element with the given column and
// row in the standard basis, exact over the field. The column may arrive
// unsorted (alternating sign) and is zero on repeats; the row is sorted.
// Computed by solving against the ambient embedding
//   column (x) row  |->  sum_t (-1)^t  (column minus t-th entry) (x) (t-th entry * row),
// whose standard-basis images are linearly independent. Solves are cached per
// shape.
SchurCombo straighten_schur(int n, const IndexSet& column, const std::vector<int>& row,
                            const PrimeField& field);

// Expression of a hook tabloid in the standard basis via single-box shuffle
// relations: a nonstandard tabloid (column head above the row head) expands as
// the sum of the tabloids obtained by swapping the row head with each column
// entry. Coefficients are integers, independent of characteristic. Throws on
// an entry shared between column and row.
SpechtCombo straighten_specht(const IndexSet& column, const IndexSet& row);

}  // namespace trimres

#include "trimres/tableaux.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "trimres/combinatorics.hpp"

namespace trimres {

namespace {

// Sorts `v` in place, returning the sign of the permutation used, or 0 when
// two entries coincide.
int sort_with_sign(std::vector<int>& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
            if (v[j - 1] == v[j]) return 0;
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

bool schur_standard(const SchurElement& e) {
    return e.row.empty() || e.column.front() <= e.row.front();
}

// Ambient basis element of wedge^a F (x) S_b F.
struct AmbientKey {
    IndexSet wedge;
    std::vector<int> sym;

    auto operator<=>(const AmbientKey&) const = default;
};

using AmbientVector = std::map<AmbientKey, std::int64_t>;

// kappa(column (x) row) = sum_t (-1)^t (column minus t-th) (x) (t-th * row),
// for a sorted repeat-free column.
AmbientVector kappa_image(const IndexSet& column, const std::vector<int>& row) {
    AmbientVector v;
    for (std::size_t t = 0; t < column.size(); ++t) {
        AmbientKey k;
        k.wedge = column;
        k.wedge.erase(k.wedge.begin() + static_cast<std::ptrdiff_t>(t));
        k.sym = row;
        k.sym.push_back(column[t]);
        std::sort(k.sym.begin(), k.sym.end());
        v[k] += (t % 2 == 0) ? 1 : -1;
        if (v[k] == 0) v.erase(k);
    }
    return v;
}

// Cached solve data for one shape: express an ambient vector in the images of
// the standard basis.
struct SchurCache {
    std::vector<SchurElement> basis;
    std::map<AmbientKey, int> ambient_index;
    // row-reduction transform E with E*M = [I; 0], stored densely
    std::vector<std::vector<std::int64_t>> transform;
};

const SchurCache& schur_cache(int n, int a, int b, const PrimeField& field) {
    static std::map<std::tuple<int, int, int, std::int64_t>, SchurCache> caches;
    auto key = std::make_tuple(n, a, b, field.characteristic());
    auto it = caches.find(key);
    if (it != caches.end()) return it->second;

    SchurCache c;
    c.basis = schur_basis(n, a, b);
    for (auto& s : subsets_of_size(n, a))
        for (auto& m : multisets_of_size(n, b))
            c.ambient_index.emplace(AmbientKey{s, m}, static_cast<int>(c.ambient_index.size()));
    int amb = static_cast<int>(c.ambient_index.size());
    int ns = static_cast<int>(c.basis.size());

    // dense augmented matrix [M | I]
    std::vector<std::vector<std::int64_t>> rows(amb, std::vector<std::int64_t>(ns + amb, 0));
    for (int s = 0; s < ns; ++s)
        for (auto& [k, coef] : kappa_image(c.basis[s].column, c.basis[s].row))
            rows[c.ambient_index.at(k)][s] = field.reduce(coef);
    for (int r = 0; r < amb; ++r) rows[r][ns + r] = 1;

    int lead = 0;
    for (int col = 0; col < ns && lead < amb; ++col) {
        int piv = -1;
        for (int r = lead; r < amb; ++r)
            if (rows[r][col] != 0) { piv = r; break; }
        if (piv < 0)
            throw std::logic_error("schur_cache: dependent standard basis images");
        std::swap(rows[lead], rows[piv]);
        std::int64_t inv = field.inv(rows[lead][col]);
        for (auto& x : rows[lead]) x = field.mul(x, inv);
        for (int r = 0; r < amb; ++r) {
            if (r == lead || rows[r][col] == 0) continue;
            std::int64_t f = rows[r][col];
            for (int x = 0; x < ns + amb; ++x)
                rows[r][x] = field.sub(rows[r][x], field.mul(f, rows[lead][x]));
        }
        ++lead;
    }
    if (lead != ns) throw std::logic_error("schur_cache: dependent standard basis images");
    c.transform.assign(amb, std::vector<std::int64_t>(amb, 0));
    for (int r = 0; r < amb; ++r)
        for (int x = 0; x < amb; ++x) c.transform[r][x] = rows[r][ns + x];
    return caches.emplace(key, std::move(c)).first->second;
}

}  // namespace

std::vector<SchurElement> schur_basis(int n, int a, int b) {
    std::vector<SchurElement> out;
    if (a < 0 || a > n - 1 || b < 1) return out;
    for (auto& col : subsets_of_size(n, a + 1))
        for (auto& row : multisets_of_size(n, b - 1)) {
            SchurElement e{col, row};
            if (schur_standard(e)) out.push_back(std::move(e));
        }
    return out;
}

std::vector<SpechtElement> specht_basis(int n, int d, int l) {
    std::vector<SpechtElement> out;
    if (d < 1 || d > n || l < 0 || l > n - d) return out;
    for (auto& col : subsets_of_size(n, l + 1))
        for (auto& row : subsets_of_size(n, d - 1)) {
            bool disjoint = true;
            for (int x : row)
                if (set_contains(col, x)) { disjoint = false; break; }
            if (!disjoint) continue;
            if (!row.empty() && col.front() >= row.front()) continue;
            out.push_back(SpechtElement{col, row});
        }
    return out;
}

SchurCombo straighten_schur(int n, const IndexSet& column, const std::vector<int>& row,
                            const PrimeField& field) {
    IndexSet col = column;
    std::vector<int> rw = row;
    int sign = sort_with_sign(col);
    if (sign == 0) return {};
    std::sort(rw.begin(), rw.end());
    SchurElement e{col, rw};
    if (schur_standard(e)) return {{e, field.reduce(sign)}};

    int a = static_cast<int>(col.size()) - 1;
    int b = static_cast<int>(rw.size()) + 1;
    const SchurCache& cache = schur_cache(n, a, b, field);
    int amb = static_cast<int>(cache.transform.size());
    int ns = static_cast<int>(cache.basis.size());
    std::vector<std::int64_t> v(amb, 0);
    for (auto& [k, coef] : kappa_image(col, rw))
        v[cache.ambient_index.at(k)] = field.reduce(coef);
    SchurCombo out;
    for (int r = 0; r < amb; ++r) {
        std::int64_t w = 0;
        for (int x = 0; x < amb; ++x)
            if (v[x] != 0) w = field.add(w, field.mul(cache.transform[r][x], v[x]));
        if (r < ns) {
            w = field.mul(w, sign);
            if (w != 0) out.emplace(cache.basis[r], w);
        } else if (w != 0) {
            throw std::logic_error("straighten_schur: vector outside the image lattice");
        }
    }
    return out;
}

SpechtCombo straighten_specht(const IndexSet& column, const IndexSet& row) {
    IndexSet col = column;
    IndexSet rw = row;
    int sign = sort_with_sign(col);
    if (sign == 0) return {};
    std::vector<int> rv(rw.begin(), rw.end());
    if (sort_with_sign(rv) == 0)
        throw std::invalid_argument("straighten_specht: repeated row entry");
    rw.assign(rv.begin(), rv.end());
    for (int x : rw)
        if (set_contains(col, x))
            throw std::invalid_argument("straighten_specht: entry shared by column and row");
    if (rw.empty() || col.front() < rw.front()) return {{SpechtElement{col, rw}, sign}};

    // Shuffle relation: exchange the row head with each column entry. Every
    // summand's column then starts with the global minimum, so one round of
    // expansion suffices; recursion handles renormalization uniformly.
    SpechtCombo out;
    for (std::size_t i = 0; i < col.size(); ++i) {
        IndexSet ncol = col;
        IndexSet nrow = rw;
        std::swap(ncol[i], nrow[0]);
        for (auto& [e, c] : straighten_specht(ncol, nrow)) {
            auto it = out.find(e);
            std::int64_t nv = (it == out.end() ? 0 : it->second) + sign * c;
            if (nv == 0) {
                if (it != out.end()) out.erase(it);
            } else if (it == out.end()) {
                out.emplace(e, nv);
            } else {
                it->second = nv;
            }
        }
    }
    return out;
}

}  // namespace trimres

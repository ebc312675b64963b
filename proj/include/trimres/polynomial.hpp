#pragma once

#include <map>
#include <optional>
#include <string>

#include "trimres/exponent.hpp"
#include "trimres/field.hpp"

namespace trimres {

// Sparse multivariate polynomial over F_p with exponent vectors as keys
// (lex term order via std::map on vectors). Zero coefficients are never
// stored.
class Polynomial {
public:
    Polynomial(int nvars, const PrimeField& field) : nvars_(nvars), field_(field) {}

    static Polynomial zero(int nvars, const PrimeField& field) { return Polynomial(nvars, field); }

    static Polynomial monomial(int nvars, const PrimeField& field,
                               const ExponentVector& e, std::int64_t coef = 1) {
        Polynomial p(nvars, field);
        p.add_term(e, coef);
        return p;
    }

    static Polynomial constant(int nvars, const PrimeField& field, std::int64_t c) {
        return monomial(nvars, field, ExponentVector(nvars, 0), c);
    }

    int nvars() const { return nvars_; }
    const PrimeField& field() const { return field_; }
    const std::map<ExponentVector, std::int64_t>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const ExponentVector& e, std::int64_t coef) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("Polynomial::add_term: wrong exponent length");
        auto it = terms_.find(e);
        std::int64_t c = field_.reduce(coef + (it == terms_.end() ? 0 : it->second));
        if (c == 0) {
            if (it != terms_.end()) terms_.erase(it);
        } else if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = c;
        }
    }

    std::int64_t coefficient(const ExponentVector& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    std::int64_t constant_term() const { return coefficient(ExponentVector(nvars_, 0)); }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r(*this);
        for (auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        Polynomial r(*this);
        for (auto& [e, c] : o.terms_) r.add_term(e, field_.neg(c));
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial r(nvars_, field_);
        for (auto& [e1, c1] : terms_)
            for (auto& [e2, c2] : o.terms_)
                r.add_term(exp_add(e1, e2), field_.mul(c1, c2));
        return r;
    }

    Polynomial scaled(std::int64_t c) const {
        Polynomial r(nvars_, field_);
        for (auto& [e, cc] : terms_) r.add_term(e, field_.mul(cc, c));
        return r;
    }

    Polynomial negated() const { return scaled(field_.neg(1)); }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    // The common total degree of all terms, or nullopt when the polynomial is
    // inhomogeneous. Zero reports degree via the supplied default.
    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (auto& [e, c] : terms_) {
            int de = degree(e);
            if (!d) d = de;
            else if (*d != de) return std::nullopt;
        }
        return d;
    }

    std::string to_string() const;

private:
    int nvars_;
    PrimeField field_;
    std::map<ExponentVector, std::int64_t> terms_;
};

}  // namespace trimres

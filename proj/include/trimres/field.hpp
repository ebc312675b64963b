#pragma once

#include <cstdint>
#include <stdexcept>

namespace trimres {

// Arithmetic in the prime field F_p. The modulus is kept small enough that
// products of two reduced elements fit in int64.
class PrimeField {
public:
    explicit PrimeField(std::int64_t p = 32003) : p_(p) {
        if (p < 2 || p > (1LL << 31))
            throw std::invalid_argument("field characteristic out of range");
        for (std::int64_t q = 2; q * q <= p; ++q)
            if (p % q == 0)
                throw std::invalid_argument("field characteristic must be prime");
    }

    std::int64_t characteristic() const { return p_; }

    std::int64_t reduce(std::int64_t a) const {
        a %= p_;
        return a < 0 ? a + p_ : a;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(a + b); }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(reduce(a) * reduce(b)); }
    std::int64_t neg(std::int64_t a) const { return reduce(-a); }

    std::int64_t inv(std::int64_t a) const {
        a = reduce(a);
        if (a == 0) throw std::domain_error("inverse of zero");
        // extended Euclid
        std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t r2 = r0 - q * r1; r0 = r1; r1 = r2;
            std::int64_t s2 = s0 - q * s1; s0 = s1; s1 = s2;
        }
        return reduce(s0);
    }

    // Symmetric representative in (-p/2, p/2], used for human-readable output.
    std::int64_t lift(std::int64_t a) const {
        a = reduce(a);
        return a > p_ / 2 ? a - p_ : a;
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::int64_t p_;
};

}  // namespace trimres

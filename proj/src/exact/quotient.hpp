#pragma once

// Arithmetic in Q[t]/(m(t)) for a nonconstant modulus m.

#include <optional>

#include "exact/poly.hpp"

namespace legv::exact {

// f mod m, both univariate in `var`; exact.
ExactPoly quotient_ring_reduce(const ExactPoly& f, const ExactPoly& m, int var = 0);

class QuotientRing {
public:
    explicit QuotientRing(ExactPoly modulus, int var = 0);

    const ExactPoly& modulus() const { return m_; }
    ExactPoly reduce(const ExactPoly& f) const;
    ExactPoly mul(const ExactPoly& a, const ExactPoly& b) const;
    ExactPoly pow(const ExactPoly& a, unsigned e) const;
    // nullopt when gcd(f, m) is nonconstant.
    std::optional<ExactPoly> inverse(const ExactPoly& f) const;

private:
    ExactPoly m_;
    int var_;
};

} // namespace legv::exact

#pragma once

// Validated special values: log-Gamma and Gamma at rational points via
// argument-shifted Stirling with a rigorous remainder, Kronecker symbols,
// and Dirichlet L-values L(chi,1), L'(chi,1)/L(chi,1) for the quadratic
// character of a negative fundamental discriminant.

#include <utility>
#include <vector>

#include "numeric/real.hpp"

namespace legv::num {

// Exact Bernoulli number B_n (even index; B_odd = 0 for n >= 3).
const BigRat& bernoulli(unsigned n);

// log Gamma(x) for an enclosure with positive lower endpoint.
ValidatedReal log_gamma(const ValidatedReal& x, mpfr_prec_t prec);

// Gamma(q) for rational q in (0, 1); radius below 2^(4-prec) * value.
ValidatedReal gamma_at(const BigRat& q, mpfr_prec_t prec);

// Kronecker symbol (a | n).
int kronecker(const BigInt& a, const BigInt& n);

bool is_fundamental_discriminant(const BigInt& delta);

struct DirichletCharacter {
    BigInt delta; // fundamental discriminant, delta < 0

    explicit DirichletCharacter(BigInt d);
    int operator()(const BigInt& n) const { return kronecker(delta, n); }
    unsigned long modulus() const;
};

// (L(chi, 1), L'(chi,1)/L(chi,1)) with validated enclosures.
// Requires |delta| <= 10^6.
std::pair<ValidatedReal, ValidatedReal>
L_value_and_log_derivative(const DirichletCharacter& chi, mpfr_prec_t prec);

} // namespace legv::num

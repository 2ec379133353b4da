#pragma once

// Exact polynomial arithmetic over the rationals, in one or two variables.
//
// ExactPoly stores a sparse map from exponent pairs to nonzero rational
// coefficients.  Univariate polynomials keep the second exponent at zero.
// The heavy integer factorization machinery lives in zpoly.{hpp,cpp} on a
// dense representation; this type is the exact workhorse for certificates,
// resultants, division polynomials and quotient-ring arithmetic.

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "support/errors.hpp"

namespace legv::exact {

using BigInt = mpz_class;
using BigRat = mpq_class;

bool is_pow2_up_to_sign(const BigInt& v);

// Canonicalized rational (mpq_class(n, d) alone does not reduce).
inline BigRat rat(long n, long d = 1) {
    BigRat q(n, d);
    q.canonicalize();
    return q;
}
inline BigRat rat(const BigInt& n, const BigInt& d) {
    BigRat q(n, d);
    q.canonicalize();
    return q;
}

class ExactPoly {
public:
    using Mono = std::pair<unsigned, unsigned>;

    ExactPoly() = default;
    explicit ExactPoly(std::string v0, std::string v1 = "y")
        : vars_{std::move(v0), std::move(v1)} {}

    static ExactPoly constant(const BigRat& c);
    static ExactPoly variable(int var);
    // Univariate in `var`, coefficient of X^i at c[i].
    static ExactPoly from_coeffs(const std::vector<BigRat>& c, int var = 0);
    static ExactPoly monomial(const BigRat& c, unsigned e0, unsigned e1 = 0);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;
    bool is_univariate_in(int var) const;
    // -1 for the zero polynomial.
    int degree(int var) const;
    int total_terms() const { return (int)c_.size(); }
    BigRat coeff(unsigned e0, unsigned e1 = 0) const;
    // Coefficient of X_var^k as a polynomial in the other variable.
    ExactPoly coeff_of(int var, unsigned k) const;
    ExactPoly leading_coeff(int var) const;
    BigRat constant_term() const { return coeff(0, 0); }
    // Dense coefficient list for a univariate polynomial, ascending powers.
    std::vector<BigRat> univariate_coeffs(int var) const;

    ExactPoly operator+(const ExactPoly& o) const;
    ExactPoly operator-(const ExactPoly& o) const;
    ExactPoly operator*(const ExactPoly& o) const;
    ExactPoly operator-() const;
    bool operator==(const ExactPoly& o) const { return c_ == o.c_; }
    ExactPoly mul_scalar(const BigRat& s) const;
    ExactPoly mul_mono(const BigRat& s, unsigned e0, unsigned e1) const;
    ExactPoly pow(unsigned e) const;

    ExactPoly derivative(int var) const;
    ExactPoly eval_var(int var, const BigRat& v) const;
    BigRat eval(const BigRat& x) const;
    BigRat eval2(const BigRat& x, const BigRat& y) const;
    ExactPoly subst(int var, const ExactPoly& g) const;
    // Swap the roles of the two variables.
    ExactPoly swap_vars() const;

    // Exact division over Q; both polynomials univariate in `var`.
    // Throws DomainError when g is zero.
    static void divmod(const ExactPoly& f, const ExactPoly& g, int var,
                       ExactPoly& quo, ExactPoly& rem);
    static ExactPoly rem(const ExactPoly& f, const ExactPoly& g, int var);
    // Exact division, asserts zero remainder (univariate case).
    static ExactPoly divexact(const ExactPoly& f, const ExactPoly& g, int var);
    static ExactPoly gcd_univ(const ExactPoly& f, const ExactPoly& g, int var);

    // Rational content: f = content * primitive with primitive integral,
    // coprime integer coefficients and positive leading coefficient
    // (lexicographic leading term when bivariate).
    BigRat content_rational() const;
    std::pair<BigRat, ExactPoly> primitive_z() const;

    std::string to_string() const;
    const std::string& var_name(int var) const { return vars_[var]; }
    void set_var_names(std::string v0, std::string v1);

    const std::map<Mono, BigRat>& terms() const { return c_; }

private:
    std::array<std::string, 2> vars_{"x", "y"};
    std::map<Mono, BigRat> c_;
    void put(unsigned e0, unsigned e1, const BigRat& v);
    friend ExactPoly resultant(const ExactPoly&, const ExactPoly&, int);
};

// Subresultant-PRS resultant eliminating `var`; the result is a polynomial
// in the other variable (a constant when both inputs are univariate).
// Throws DomainError when both inputs are constant in `var`.
ExactPoly resultant(const ExactPoly& f, const ExactPoly& g, int var);

} // namespace legv::exact

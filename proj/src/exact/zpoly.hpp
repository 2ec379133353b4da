#pragma once

// Dense polynomials over Z and F_p, and factorization over the integers.
//
// The factorization pipeline is Zassenhaus-style: Yun squarefree split,
// factorization modulo a small prime (distinct-degree then equal-degree),
// quadratic multifactor Hensel lifting past the Landau-Mignotte bound, and
// bounded subset recombination.  When the recombination budget is exceeded a
// PartialFactorization is thrown carrying the certified part and the
// unresolved cofactor, so callers can fall back to fixture-assisted mode.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "support/errors.hpp"

namespace legv::exact {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct ZPoly {
    std::vector<BigInt> c; // ascending powers, normalized (back() != 0)

    ZPoly() = default;
    explicit ZPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { normalize(); }
    static ZPoly from_longs(std::initializer_list<long> coeffs);
    static ZPoly x_power(unsigned k);

    void normalize();
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
    const BigInt& lc() const { return c.back(); }
    BigInt coeff(size_t i) const { return i < c.size() ? c[i] : BigInt(0); }
    bool operator==(const ZPoly& o) const { return c == o.c; }

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator-() const;
    ZPoly mul_scalar(const BigInt& s) const;
    ZPoly shifted(unsigned k) const; // multiply by x^k

    ZPoly derivative() const;
    BigInt content() const;          // nonnegative gcd of coefficients
    ZPoly primitive_part() const;    // content removed, positive leading coeff
    BigInt eval_z(const BigInt& x) const;
    BigRat eval_q(const BigRat& x) const;
    BigInt max_norm() const;
    // Upper bound on the 2-norm (ceiling of sqrt of the sum of squares).
    BigInt l2_norm_bound() const;

    std::string to_string(const std::string& var = "x") const;
};

// Quotient of exact division in Q[x] restricted to an integral result;
// returns nothing when g does not divide f over Z.
std::optional<ZPoly> divide_exact_z(const ZPoly& f, const ZPoly& g);
// gcd in Z[x] (primitive PRS), positive leading coefficient.
ZPoly gcd_z(const ZPoly& f, const ZPoly& g);
// Yun squarefree decomposition: f = sign * content * prod part[i]^mult[i].
struct SquarefreePart {
    ZPoly poly;
    int multiplicity;
};
std::vector<SquarefreePart> squarefree_decompose(const ZPoly& f);

// --------------------------------------------------------------------------
// F_p[x]

struct FpPoly {
    uint64_t p = 0;
    std::vector<uint64_t> c; // ascending, normalized

    FpPoly() = default;
    FpPoly(uint64_t prime, std::vector<uint64_t> coeffs) : p(prime), c(std::move(coeffs)) { normalize(); }

    void normalize();
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    bool operator==(const FpPoly& o) const { return p == o.p && c == o.c; }
    std::string to_string(const std::string& var = "x") const;
};

FpPoly fp_reduce(const ZPoly& f, uint64_t p);
FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul_scalar(const FpPoly& a, uint64_t s);
FpPoly fp_make_monic(const FpPoly& a);
void fp_divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly fp_rem(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b); // monic
// g, u with u*a ≡ g mod b (used to seed Hensel Bezout data)
void fp_xgcd(const FpPoly& a, const FpPoly& b, FpPoly& g, FpPoly& s, FpPoly& t);
FpPoly fp_powmod(const FpPoly& base, const BigInt& e, const FpPoly& mod);
FpPoly fp_derivative(const FpPoly& a);
uint64_t fp_eval(const FpPoly& a, uint64_t x);

struct FpFactor {
    FpPoly poly; // monic irreducible
    int multiplicity;
};
// Full factorization over F_p (any p >= 2, p prime).  Deterministically
// seeded internally, so results are reproducible.
std::vector<FpFactor> fp_factor(const FpPoly& f);

// --------------------------------------------------------------------------
// Factorization over Z

struct ZFactor {
    ZPoly poly; // primitive irreducible, positive leading coefficient
    int multiplicity;
};

struct Factorization {
    BigRat content;              // including sign
    std::vector<ZFactor> factors;
    bool complete = true;
};

struct FactorBudget {
    int max_subset_size = 10;
    uint64_t max_subset_tests = 4000000;
};

// Thrown when recombination exceeds its budget.  Carries what was certified
// so far plus the unresolved (squarefree) cofactor.
struct PartialFactorization : CertificateError {
    Factorization partial;
    ZPoly unresolved;            // squarefree part that resisted recombination
    int unresolved_multiplicity; // multiplicity of that part in the input
    std::vector<int> modular_degrees;
    PartialFactorization(Factorization p, ZPoly u, int mult, std::vector<int> degs)
        : CertificateError("factor recombination budget exceeded"),
          partial(std::move(p)), unresolved(std::move(u)),
          unresolved_multiplicity(mult), modular_degrees(std::move(degs)) {}
};

Factorization factor_over_Z(const ZPoly& f, const FactorBudget& budget = {});

// Degree-set irreducibility certificate: reduce f modulo several good primes
// and intersect the achievable factor-degree subset sums.  Returns true when
// the intersection is {0, deg f}.
bool certify_irreducible_by_degrees(const ZPoly& f, int num_primes = 5,
                                    std::vector<uint64_t>* primes_used = nullptr);

} // namespace legv::exact

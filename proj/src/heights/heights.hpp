#pragma once

// Heights: absolute logarithmic Weil heights via certified root enclosures,
// the Bezout-pair height certificates with their length bounds, the explicit
// Faltings-height chain for CM curves, and the closing bound arithmetic in
// extended-logarithm representation.

#include <string>
#include <vector>

#include "exact/exact.hpp"
#include "numeric/functions.hpp"
#include "report/report.hpp"

namespace legv::ht {

using exact::AlgebraicNumber;
using exact::BigInt;
using exact::BigRat;
using exact::ZPoly;
using num::ValidatedReal;

ValidatedReal weil_height_rational(const BigRat& x, mpfr_prec_t prec);
// Height of an algebraic number; exact zero for roots of unity.
ValidatedReal weil_height(const AlgebraicNumber& a, mpfr_prec_t prec);
bool is_cyclotomic(const ZPoly& monic);

// L(P): sum of |coefficients| over all terms (bivariate allowed).
BigInt poly_length(const exact::ExactPoly& p);

struct ResCertificate {
    ZPoly A, B, P0, Q0, Pinf, Qinf;
    BigInt r;
    int d = 0;       // max(deg A, deg B)
    BigInt C;        // max(L(P0)+L(Q0), L(Pinf)+L(Qinf))
};

struct BoundParams {
    int d;
    ValidatedReal logC;
};

// Exact verification of both Bezout identities, the degree constraints and
// the stated C; throws CertificateError on any mismatch.
BoundParams verify_res_certificate(const ResCertificate& cert, mpfr_prec_t prec);

// The duplication certificate over Z[t] with r = 4 t^2 (t-1)^2 and length
// sums 44 + 14 = 58 on both sides.
rep::VerificationReport verify_duplication_certificate();

// Quadruplication: parse and exactly verify the fixture, rederive the same
// data from the division polynomials, and check agreement up to sign.
struct QuadruplicationResult {
    ResCertificate fixture;
    ResCertificate derived;
    std::string fixture_hash;
};
QuadruplicationResult quadruplication_certificate(const std::string& fixture_path,
                                                  rep::VerificationReport& rpt);

// h(t) <= (3 log C + log 58) / 19 from the certificate chain.
ValidatedReal derive_height_bound(const ResCertificate& quad, mpfr_prec_t prec);

// Stable Faltings height of a CM elliptic curve with order discriminant
// Delta f^2 (Delta fundamental, < 0).
ValidatedReal faltings_formula(const BigInt& delta, unsigned long f, mpfr_prec_t prec);
// Exact rational e_f(p).
BigRat e_f_term(const BigInt& delta, uint64_t p, int n);

struct FaltingsLower {
    ValidatedReal precise; // sqrt5/20 log|D| + log f/2 - 3 log(1+log f) - gamma - log(2pi)/2
    ValidatedReal simple;  // sqrt5/20 log(|D| f^2) - 5.93
};
FaltingsLower faltings_lower_bound(const BigInt& delta, unsigned long f, mpfr_prec_t prec);

// The -4.431 / -5.93 constants, the minimizing argument, and the
// sum_{p|f} e_f(p) log p <= 6 log(1 + log f) sweep.
rep::VerificationReport verify_faltings_auxiliary(mpfr_prec_t prec, unsigned long f_max = 10000);

rep::VerificationReport local_product_bound(mpfr_prec_t prec);

// Extended-range numbers: sign * value, sign * 10^m, or sign * 10^(10^m).
class ExtendedLogNumber {
public:
    static ExtendedLogNumber from_value(ValidatedReal v);
    static ExtendedLogNumber from_log10(ValidatedReal mantissa);
    static ExtendedLogNumber from_loglog10(ValidatedReal mantissa);

    int level() const { return level_; }
    ExtendedLogNumber mul(const ExtendedLogNumber& o) const;
    bool certainly_less(const ExtendedLogNumber& o) const;
    std::string to_string() const;
    // log10 of a certainly-positive value, as a level-1 mantissa.
    ValidatedReal log10_mantissa() const;

private:
    int level_ = 0;
    ValidatedReal m_{64};
};

rep::VerificationReport closing_bounds(const ResCertificate& quad, mpfr_prec_t prec);

} // namespace legv::ht

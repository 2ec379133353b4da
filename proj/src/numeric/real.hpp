#pragma once

// Validated real and complex arithmetic.
//
// ValidatedReal is a closed interval [lo, hi] with mpfr endpoints and
// outward rounding on every operation, so the true value of an expression
// is always contained in the computed enclosure.  The midpoint/radius view
// required by callers is derived from the endpoints.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "support/errors.hpp"

namespace legv::num {

using BigInt = mpz_class;
using BigRat = mpq_class;

class ValidatedReal {
public:
    explicit ValidatedReal(mpfr_prec_t prec = 128);
    ValidatedReal(const ValidatedReal& o);
    ValidatedReal(ValidatedReal&& o) noexcept;
    ValidatedReal& operator=(const ValidatedReal& o);
    ValidatedReal& operator=(ValidatedReal&& o) noexcept;
    ~ValidatedReal();

    mpfr_prec_t prec() const { return prec_; }

    // Exact constructors (outward rounding where the value is not representable).
    static ValidatedReal from_long(long v, mpfr_prec_t prec);
    static ValidatedReal from_bigint(const BigInt& v, mpfr_prec_t prec);
    static ValidatedReal from_rational(const BigRat& v, mpfr_prec_t prec);
    static ValidatedReal from_interval(const BigRat& lo, const BigRat& hi, mpfr_prec_t prec);
    // Parse a decimal literal; the enclosure is one ulp wide around it.
    static ValidatedReal from_decimal(const std::string& s, mpfr_prec_t prec);

    static ValidatedReal pi(mpfr_prec_t prec);
    static ValidatedReal euler_gamma(mpfr_prec_t prec);

    ValidatedReal operator+(const ValidatedReal& o) const;
    ValidatedReal operator-(const ValidatedReal& o) const;
    ValidatedReal operator*(const ValidatedReal& o) const;
    ValidatedReal operator/(const ValidatedReal& o) const;
    ValidatedReal operator-() const;

    ValidatedReal& operator+=(const ValidatedReal& o) { *this = *this + o; return *this; }
    ValidatedReal& operator-=(const ValidatedReal& o) { *this = *this - o; return *this; }
    ValidatedReal& operator*=(const ValidatedReal& o) { *this = *this * o; return *this; }
    ValidatedReal& operator/=(const ValidatedReal& o) { *this = *this / o; return *this; }

    ValidatedReal abs() const;
    // Dependency-aware square: never dips below zero on straddling inputs.
    ValidatedReal sq() const;
    ValidatedReal sqrt() const;           // requires lo >= 0
    ValidatedReal exp() const;
    ValidatedReal log() const;            // requires lo > 0
    ValidatedReal log10() const;
    ValidatedReal sin() const;
    ValidatedReal cos() const;
    ValidatedReal pow_long(long e) const; // e may be negative
    ValidatedReal min(const ValidatedReal& o) const;
    ValidatedReal max(const ValidatedReal& o) const;

    // Hull of this interval and o.
    ValidatedReal hull(const ValidatedReal& o) const;
    // Widen both endpoints by eps (a nonnegative rational).
    ValidatedReal widened(const BigRat& eps) const;

    bool contains_zero() const;
    bool contains(const BigRat& v) const;
    bool contains(const ValidatedReal& o) const;     // o subseteq this
    bool is_positive() const;                        // lo > 0
    bool is_negative() const;                        // hi < 0
    bool certainly_less(const ValidatedReal& o) const;   // hi < o.lo
    bool certainly_less(const BigRat& c) const;
    bool certainly_greater(const BigRat& c) const;
    bool overlaps(const ValidatedReal& o) const;

    // Midpoint (rounded to nearest) and radius (rounded up, accounts for the
    // midpoint rounding as well).
    double mid_double() const;
    BigRat mid_rational() const;
    BigRat rad_rational() const;
    double rad_double() const;
    // log2 of the radius, or very negative when the interval is a point.
    long rad_exponent2() const;

    std::string to_string(int digits = 20) const;
    // Decimal midpoint with the stated number of significant digits.
    std::string mid_string(int digits = 20) const;

    // Raw endpoint access for the few routines that need directed data.
    const mpfr_t& lo_raw() const { return lo_; }
    const mpfr_t& hi_raw() const { return hi_; }
    void set_endpoints_raw(const mpfr_t lo, const mpfr_t hi);

private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
    void check_consistent(const char* op) const;
};

ValidatedReal log_of_long(long v, mpfr_prec_t prec);
ValidatedReal log_of_bigint(const BigInt& v, mpfr_prec_t prec);

class ValidatedComplex {
public:
    ValidatedReal re, im;

    explicit ValidatedComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    ValidatedComplex(ValidatedReal r, ValidatedReal i) : re(std::move(r)), im(std::move(i)) {}
    static ValidatedComplex from_real(ValidatedReal r);

    mpfr_prec_t prec() const { return re.prec(); }

    ValidatedComplex operator+(const ValidatedComplex& o) const;
    ValidatedComplex operator-(const ValidatedComplex& o) const;
    ValidatedComplex operator*(const ValidatedComplex& o) const;
    ValidatedComplex operator/(const ValidatedComplex& o) const;
    ValidatedComplex operator-() const;
    ValidatedComplex conj() const;
    ValidatedReal abs2() const;
    ValidatedReal abs() const;
    ValidatedComplex sqrt() const;   // principal branch; enclosure must not straddle the cut
    ValidatedComplex exp() const;    // exp(re) * (cos im + i sin im)
    ValidatedComplex pow_ulong(unsigned long e) const;

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    std::string to_string(int digits = 20) const;
};

} // namespace legv::num

#include "numeric/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace legv::num {

ValidatedReal::ValidatedReal(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

ValidatedReal::ValidatedReal(const ValidatedReal& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

ValidatedReal::ValidatedReal(ValidatedReal&& o) noexcept : prec_(o.prec_) {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    // leave o in a destructible state
    mpfr_init2(o.lo_, MPFR_PREC_MIN);
    mpfr_init2(o.hi_, MPFR_PREC_MIN);
}

ValidatedReal& ValidatedReal::operator=(const ValidatedReal& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

ValidatedReal& ValidatedReal::operator=(ValidatedReal&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

ValidatedReal::~ValidatedReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void ValidatedReal::check_consistent(const char* op) const {
    if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_) || mpfr_cmp(lo_, hi_) > 0)
        throw PrecisionError(std::string("inconsistent interval after ") + op);
}

ValidatedReal ValidatedReal::from_long(long v, mpfr_prec_t prec) {
    ValidatedReal r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::from_bigint(const BigInt& v, mpfr_prec_t prec) {
    ValidatedReal r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::from_rational(const BigRat& v, mpfr_prec_t prec) {
    ValidatedReal r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::from_interval(const BigRat& lo, const BigRat& hi, mpfr_prec_t prec) {
    ValidatedReal r(prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    r.check_consistent("from_interval");
    return r;
}

ValidatedReal ValidatedReal::from_decimal(const std::string& s, mpfr_prec_t prec) {
    ValidatedReal r(prec);
    mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD);
    mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::pi(mpfr_prec_t prec) {
    ValidatedReal r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::euler_gamma(mpfr_prec_t prec) {
    ValidatedReal r(prec);
    mpfr_const_euler(r.lo_, MPFR_RNDD);
    mpfr_const_euler(r.hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::operator+(const ValidatedReal& o) const {
    ValidatedReal r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::operator-(const ValidatedReal& o) const {
    ValidatedReal r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::operator*(const ValidatedReal& o) const {
    ValidatedReal r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lo: min of the four products rounded down
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi: max of the four products rounded up
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

ValidatedReal ValidatedReal::operator/(const ValidatedReal& o) const {
    if (o.contains_zero())
        throw PrecisionError("interval division by an enclosure containing zero");
    ValidatedReal r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

ValidatedReal ValidatedReal::operator-() const {
    ValidatedReal r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::abs() const {
    ValidatedReal r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    // straddles zero
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::sq() const {
    ValidatedReal r(prec_);
    mpfr_t a, b;
    mpfr_init2(a, prec_);
    mpfr_init2(b, prec_);
    mpfr_sqr(a, lo_, MPFR_RNDU);
    mpfr_sqr(b, hi_, MPFR_RNDU);
    mpfr_max(r.hi_, a, b, MPFR_RNDU);
    if (mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0) {
        mpfr_set_zero(r.lo_, 1);
    } else {
        mpfr_sqr(a, lo_, MPFR_RNDD);
        mpfr_sqr(b, hi_, MPFR_RNDD);
        mpfr_min(r.lo_, a, b, MPFR_RNDD);
    }
    mpfr_clear(a);
    mpfr_clear(b);
    return r;
}

ValidatedReal ValidatedReal::sqrt() const {
    if (mpfr_sgn(lo_) < 0)
        throw DomainError("sqrt of interval with negative lower endpoint");
    ValidatedReal r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::exp() const {
    ValidatedReal r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::log() const {
    if (mpfr_sgn(lo_) <= 0)
        throw DomainError("log of interval with nonpositive lower endpoint");
    ValidatedReal r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::log10() const {
    if (mpfr_sgn(lo_) <= 0)
        throw DomainError("log10 of interval with nonpositive lower endpoint");
    ValidatedReal r(prec_);
    mpfr_log10(r.lo_, lo_, MPFR_RNDD);
    mpfr_log10(r.hi_, hi_, MPFR_RNDU);
    return r;
}

namespace {

// Enclosure of k*pi/2 for integer k at precision prec.
void half_pi_multiple(mpfr_t out_lo, mpfr_t out_hi, long k, mpfr_prec_t prec) {
    mpfr_t pi_lo, pi_hi;
    mpfr_init2(pi_lo, prec);
    mpfr_init2(pi_hi, prec);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    if (k >= 0) {
        mpfr_mul_si(out_lo, pi_lo, k, MPFR_RNDD);
        mpfr_mul_si(out_hi, pi_hi, k, MPFR_RNDU);
    } else {
        mpfr_mul_si(out_lo, pi_hi, k, MPFR_RNDD);
        mpfr_mul_si(out_hi, pi_lo, k, MPFR_RNDU);
    }
    mpfr_div_2ui(out_lo, out_lo, 1, MPFR_RNDD);
    mpfr_div_2ui(out_hi, out_hi, 1, MPFR_RNDU);
    mpfr_clear(pi_lo);
    mpfr_clear(pi_hi);
}

} // namespace

// sin/cos: evaluate at the endpoints with directed rounding and include the
// extremum +-1 whenever a critical point k*pi/2 may lie inside the interval.
ValidatedReal ValidatedReal::sin() const {
    ValidatedReal r(prec_);
    mpfr_t a, b, t;
    mpfr_init2(a, prec_);
    mpfr_init2(b, prec_);
    mpfr_init2(t, prec_);
    // width guard: if wider than 2*pi the image is [-1, 1]
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp_d(t, 6.2831853) > 0) {
        mpfr_set_si(r.lo_, -1, MPFR_RNDD);
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
        mpfr_clears(a, b, t, (mpfr_ptr) nullptr);
        return r;
    }
    mpfr_sin(a, lo_, MPFR_RNDD);
    mpfr_sin(b, lo_, MPFR_RNDU); // a <= sin(lo) <= b
    mpfr_t c, d;
    mpfr_init2(c, prec_);
    mpfr_init2(d, prec_);
    mpfr_sin(c, hi_, MPFR_RNDD);
    mpfr_sin(d, hi_, MPFR_RNDU);
    mpfr_min(r.lo_, a, c, MPFR_RNDD);
    mpfr_max(r.hi_, b, d, MPFR_RNDU);
    // candidate critical points k*pi/2 with k odd (extrema of sin)
    double lod = mpfr_get_d(lo_, MPFR_RNDD), hid = mpfr_get_d(hi_, MPFR_RNDU);
    long kmin = (long)std::floor(lod / 1.5707963267948966) - 2;
    long kmax = (long)std::ceil(hid / 1.5707963267948966) + 2;
    mpfr_t m_lo, m_hi;
    mpfr_init2(m_lo, prec_);
    mpfr_init2(m_hi, prec_);
    for (long k = kmin; k <= kmax; ++k) {
        if ((k % 2 + 2) % 2 != 1) continue;
        half_pi_multiple(m_lo, m_hi, k, prec_);
        // if [m_lo, m_hi] possibly intersects [lo, hi]
        if (mpfr_cmp(m_hi, lo_) >= 0 && mpfr_cmp(m_lo, hi_) <= 0) {
            long km = ((k % 4) + 4) % 4; // 1 -> max, 3 -> min
            if (km == 1) mpfr_set_si(r.hi_, 1, MPFR_RNDU);
            else mpfr_set_si(r.lo_, -1, MPFR_RNDD);
        }
    }
    mpfr_clears(a, b, c, d, t, m_lo, m_hi, (mpfr_ptr) nullptr);
    r.check_consistent("sin");
    return r;
}

ValidatedReal ValidatedReal::cos() const {
    ValidatedReal r(prec_);
    mpfr_t a, b, c, d, t;
    mpfr_inits2(prec_, a, b, c, d, t, (mpfr_ptr) nullptr);
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp_d(t, 6.2831853) > 0) {
        mpfr_set_si(r.lo_, -1, MPFR_RNDD);
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
        mpfr_clears(a, b, c, d, t, (mpfr_ptr) nullptr);
        return r;
    }
    mpfr_cos(a, lo_, MPFR_RNDD);
    mpfr_cos(b, lo_, MPFR_RNDU);
    mpfr_cos(c, hi_, MPFR_RNDD);
    mpfr_cos(d, hi_, MPFR_RNDU);
    mpfr_min(r.lo_, a, c, MPFR_RNDD);
    mpfr_max(r.hi_, b, d, MPFR_RNDU);
    double lod = mpfr_get_d(lo_, MPFR_RNDD), hid = mpfr_get_d(hi_, MPFR_RNDU);
    long kmin = (long)std::floor(lod / 1.5707963267948966) - 2;
    long kmax = (long)std::ceil(hid / 1.5707963267948966) + 2;
    mpfr_t m_lo, m_hi;
    mpfr_init2(m_lo, prec_);
    mpfr_init2(m_hi, prec_);
    for (long k = kmin; k <= kmax; ++k) {
        if ((k % 2 + 2) % 2 != 0) continue; // extrema of cos at k*pi/2, k even
        half_pi_multiple(m_lo, m_hi, k, prec_);
        if (mpfr_cmp(m_hi, lo_) >= 0 && mpfr_cmp(m_lo, hi_) <= 0) {
            long km = ((k % 4) + 4) % 4; // 0 -> max, 2 -> min
            if (km == 0) mpfr_set_si(r.hi_, 1, MPFR_RNDU);
            else mpfr_set_si(r.lo_, -1, MPFR_RNDD);
        }
    }
    mpfr_clears(a, b, c, d, t, m_lo, m_hi, (mpfr_ptr) nullptr);
    r.check_consistent("cos");
    return r;
}

ValidatedReal ValidatedReal::pow_long(long e) const {
    if (e == 0) return from_long(1, prec_);
    if (e < 0) return from_long(1, prec_) / pow_long(-e);
    // square-and-multiply on intervals
    ValidatedReal acc = from_long(1, prec_), base = *this;
    unsigned long u = (unsigned long)e;
    while (u) {
        if (u & 1) acc = acc * base;
        u >>= 1;
        if (u) base = base.sq();
    }
    return acc;
}

ValidatedReal ValidatedReal::min(const ValidatedReal& o) const {
    ValidatedReal r(std::max(prec_, o.prec_));
    mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::max(const ValidatedReal& o) const {
    ValidatedReal r(std::max(prec_, o.prec_));
    mpfr_max(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::hull(const ValidatedReal& o) const {
    ValidatedReal r(std::max(prec_, o.prec_));
    mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::widened(const BigRat& eps) const {
    ValidatedReal r(prec_);
    mpfr_t e;
    mpfr_init2(e, prec_);
    mpfr_set_q(e, eps.get_mpq_t(), MPFR_RNDU);
    mpfr_sub(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, e, MPFR_RNDU);
    mpfr_clear(e);
    return r;
}

bool ValidatedReal::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool ValidatedReal::contains(const BigRat& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool ValidatedReal::contains(const ValidatedReal& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
}

bool ValidatedReal::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool ValidatedReal::is_negative() const { return mpfr_sgn(hi_) < 0; }

bool ValidatedReal::certainly_less(const ValidatedReal& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

bool ValidatedReal::certainly_less(const BigRat& c) const {
    return mpfr_cmp_q(hi_, c.get_mpq_t()) < 0;
}

bool ValidatedReal::certainly_greater(const BigRat& c) const {
    return mpfr_cmp_q(lo_, c.get_mpq_t()) > 0;
}

bool ValidatedReal::overlaps(const ValidatedReal& o) const {
    return !(mpfr_cmp(hi_, o.lo_) < 0 || mpfr_cmp(o.hi_, lo_) < 0);
}

double ValidatedReal::mid_double() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

BigRat ValidatedReal::mid_rational() const {
    BigRat a, b;
    mpfr_get_q(a.get_mpq_t(), lo_);
    mpfr_get_q(b.get_mpq_t(), hi_);
    return (a + b) / 2;
}

BigRat ValidatedReal::rad_rational() const {
    BigRat a, b;
    mpfr_get_q(a.get_mpq_t(), lo_);
    mpfr_get_q(b.get_mpq_t(), hi_);
    return (b - a) / 2;
}

double ValidatedReal::rad_double() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_sub(m, hi_, lo_, MPFR_RNDU);
    mpfr_div_2ui(m, m, 1, MPFR_RNDU);
    double d = mpfr_get_d(m, MPFR_RNDU);
    mpfr_clear(m);
    return d;
}

long ValidatedReal::rad_exponent2() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_sub(m, hi_, lo_, MPFR_RNDU);
    long e = mpfr_zero_p(m) ? -(long)prec_ * 64 : mpfr_get_exp(m);
    mpfr_clear(m);
    return e;
}

void ValidatedReal::set_endpoints_raw(const mpfr_t lo, const mpfr_t hi) {
    mpfr_set(lo_, lo, MPFR_RNDD);
    mpfr_set(hi_, hi, MPFR_RNDU);
    check_consistent("set_endpoints_raw");
}

std::string ValidatedReal::to_string(int digits) const {
    char* s = nullptr;
    int n = mpfr_asprintf(&s, "[%.*Rg, %.*Rg]", digits, lo_, digits, hi_);
    std::string out = n >= 0 ? std::string(s) : std::string("[?]");
    mpfr_free_str(s);
    return out;
}

std::string ValidatedReal::mid_string(int digits) const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, m);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(m);
    return out;
}

ValidatedReal log_of_long(long v, mpfr_prec_t prec) {
    return ValidatedReal::from_long(v, prec).log();
}

ValidatedReal log_of_bigint(const BigInt& v, mpfr_prec_t prec) {
    return ValidatedReal::from_bigint(v, prec).log();
}

// ---------------------------------------------------------------------------
// ValidatedComplex

ValidatedComplex ValidatedComplex::from_real(ValidatedReal r) {
    ValidatedReal z = ValidatedReal::from_long(0, r.prec());
    return ValidatedComplex(std::move(r), std::move(z));
}

ValidatedComplex ValidatedComplex::operator+(const ValidatedComplex& o) const {
    return {re + o.re, im + o.im};
}

ValidatedComplex ValidatedComplex::operator-(const ValidatedComplex& o) const {
    return {re - o.re, im - o.im};
}

ValidatedComplex ValidatedComplex::operator*(const ValidatedComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
}

ValidatedComplex ValidatedComplex::operator/(const ValidatedComplex& o) const {
    ValidatedReal d = o.abs2();
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

ValidatedComplex ValidatedComplex::operator-() const { return {-re, -im}; }

ValidatedComplex ValidatedComplex::conj() const { return {re, -im}; }

ValidatedReal ValidatedComplex::abs2() const { return re.sq() + im.sq(); }

ValidatedReal ValidatedComplex::abs() const { return abs2().sqrt(); }

ValidatedComplex ValidatedComplex::sqrt() const {
    // principal branch via re(w) = sqrt((|z|+a)/2); requires the box to stay
    // off the cut (-inf, 0]
    ValidatedReal r = abs();
    ValidatedReal two = ValidatedReal::from_long(2, prec());
    if (!re.is_positive() && im.contains_zero())
        throw PrecisionError("complex sqrt enclosure straddles the branch cut");
    ValidatedReal rp = ((r + re).max(ValidatedReal::from_long(0, prec())) / two).sqrt();
    ValidatedReal rm = ((r - re).max(ValidatedReal::from_long(0, prec())) / two).sqrt();
    if (re.is_positive()) {
        // im(w) = b / (2 re(w)), re(w) >= sqrt(a/2) > 0
        ValidatedReal rew = rp;
        return {rew, im / (two * rew)};
    }
    // im sign-definite
    if (im.is_positive()) return {rp, rm};
    return {rp, -rm};
}

ValidatedComplex ValidatedComplex::exp() const {
    ValidatedReal m = re.exp();
    return {m * im.cos(), m * im.sin()};
}

ValidatedComplex ValidatedComplex::pow_ulong(unsigned long e) const {
    ValidatedComplex acc = from_real(ValidatedReal::from_long(1, prec()));
    ValidatedComplex base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

std::string ValidatedComplex::to_string(int digits) const {
    return re.to_string(digits) + " + i*" + im.to_string(digits);
}

} // namespace legv::num

#include "exact/quotient.hpp"

namespace legv::exact {

ExactPoly quotient_ring_reduce(const ExactPoly& f, const ExactPoly& m, int var) {
    if (m.degree(var) < 1) throw DomainError("quotient_ring_reduce: constant modulus");
    return ExactPoly::rem(f, m, var);
}

QuotientRing::QuotientRing(ExactPoly modulus, int var) : m_(std::move(modulus)), var_(var) {
    if (m_.degree(var_) < 1) throw DomainError("QuotientRing: constant modulus");
}

ExactPoly QuotientRing::reduce(const ExactPoly& f) const {
    return ExactPoly::rem(f, m_, var_);
}

ExactPoly QuotientRing::mul(const ExactPoly& a, const ExactPoly& b) const {
    return reduce(a * b);
}

ExactPoly QuotientRing::pow(const ExactPoly& a, unsigned e) const {
    ExactPoly acc = ExactPoly::constant(1);
    ExactPoly base = reduce(a);
    while (e) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

std::optional<ExactPoly> QuotientRing::inverse(const ExactPoly& f) const {
    // extended Euclid over Q
    ExactPoly r0 = m_, r1 = reduce(f);
    if (r1.is_zero()) return std::nullopt;
    ExactPoly t0, t1 = ExactPoly::constant(1);
    while (!r1.is_zero()) {
        ExactPoly q, r;
        ExactPoly::divmod(r0, r1, var_, q, r);
        ExactPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = reduce(t2);
    }
    if (r0.degree(var_) > 0) return std::nullopt;
    BigRat c = r0.constant_term();
    return t0.mul_scalar(1 / c);
}

} // namespace legv::exact

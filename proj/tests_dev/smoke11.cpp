#include <iostream>
#include "modular/modular.hpp"
using namespace legv;
using namespace legv::exact;

struct RatFun {
    ExactPoly n, d;
    RatFun() : n(), d(ExactPoly::constant(1)) {}
    RatFun(ExactPoly num, ExactPoly den) : n(std::move(num)), d(std::move(den)) {}
    static RatFun poly(ExactPoly p) { return {std::move(p), ExactPoly::constant(1)}; }
    static RatFun constant(const BigRat& c) { return poly(ExactPoly::constant(c)); }
    RatFun operator+(const RatFun& o) const { return {n * o.d + o.n * d, d * o.d}; }
    RatFun operator-(const RatFun& o) const { return {n * o.d - o.n * d, d * o.d}; }
    RatFun operator*(const RatFun& o) const { return {n * o.n, d * o.d}; }
    RatFun operator/(const RatFun& o) const { return {n * o.d, d * o.n}; }
    RatFun operator-() const { return {-n, d}; }
    bool is_zero() const { return n.is_zero(); }
    BigRat eval(const BigRat& x) const { return n.eval(x) / d.eval(x); }
};
struct SElem {
    RatFun c, d;
    const ExactPoly* sigma;
    SElem(RatFun cc, RatFun dd, const ExactPoly* s) : c(std::move(cc)), d(std::move(dd)), sigma(s) {}
    SElem mul(const SElem& o) const {
        return {c * o.c + RatFun::poly(*sigma) * d * o.d, c * o.d + d * o.c, sigma};
    }
    SElem div(const SElem& o) const {
        RatFun den = o.c * o.c - RatFun::poly(*sigma) * o.d * o.d;
        SElem conj{o.c, -o.d, sigma};
        SElem prod = mul(conj);
        return {prod.c / den, prod.d / den, sigma};
    }
};
SElem eval_poly_selem(const ExactPoly& p, const SElem& z) {
    SElem acc{RatFun::constant(0), RatFun::constant(0), z.sigma};
    int deg = p.degree(0);
    for (int i = deg; i >= 0; --i) {
        acc = acc.mul(z);
        acc.c = acc.c + RatFun::poly(p.coeff_of(0, (unsigned)i));
    }
    return acc;
}
SElem eval_ratfun_selem(const RatFun& r, const SElem& z) {
    return eval_poly_selem(r.n, z).div(eval_poly_selem(r.d, z));
}

int main() {
    ExactPoly u = ExactPoly::variable(0);
    ExactPoly one = ExactPoly::constant(1);
    ExactPoly sigma1 = one - u * u;
    auto [Rn, Rd] = mod::R_pair();
    RatFun R{Rn, Rd};
    SElem zneg{-(RatFun::poly(u + one)), -RatFun::constant(1), &sigma1};
    SElem znegc{-(RatFun::poly(u + one)), RatFun::constant(1), &sigma1};
    SElem prod = eval_ratfun_selem(R, zneg).mul(eval_ratfun_selem(R, znegc));
    std::cout << "prod.d zero? " << prod.d.is_zero() << " (num terms " << prod.d.n.total_terms() << ")\n";
    SElem zt{RatFun::poly(u + one), RatFun::constant(1), &sigma1};
    SElem Rt = eval_ratfun_selem(R, zt);
    SElem Rtc = eval_ratfun_selem(R, SElem{RatFun::poly(u + one), -RatFun::constant(1), &sigma1});
    RatFun Rt2 = Rt.mul(Rtc).c;
    RatFun lhs = prod.c - Rt2;
    ExactPoly d45 = u.mul_scalar(BigRat(4)) + ExactPoly::constant(5);
    RatFun scaled = lhs * RatFun{(u + one) * d45.pow(2), ExactPoly::constant(-65536)};
    std::cout << "deg num " << scaled.n.degree(0) << " deg den " << scaled.d.degree(0) << "\n";
    ExactPoly q, r;
    ExactPoly::divmod(scaled.n, scaled.d, 0, q, r);
    std::cout << "rem zero? " << r.is_zero() << "\n";
    BigRat at13 = scaled.eval(rat(-3, 4));
    std::cout << "scaled(-3/4) = " << at13.get_str() << " expect -339/64\n";
    std::cout << "prod.c(-3/4) = " << prod.c.eval(rat(-3,4)).get_str() << " expect 351232\n";
    std::cout << "Rt2(-3/4) = " << Rt2.eval(rat(-3,4)).get_str() << " expect 4096\n";
    std::cout << "Rt.c(-3/4) = " << Rt.c.eval(rat(-3,4)).get_str() << " expect -64\n";
    std::cout << "Rt.d zero? " << Rt.d.is_zero() << "\n";
    SElem Rneg1 = eval_ratfun_selem(R, zneg);
    std::cout << "Rneg1.c(-3/4) = " << Rneg1.c.eval(rat(-3,4)).get_str() << "\n";
    std::cout << "Rneg1.d(-3/4) = " << Rneg1.d.eval(rat(-3,4)).get_str() << "\n";
    return 0;
}

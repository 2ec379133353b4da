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
    ExactPoly as_poly() const {
        if (n.is_zero()) return ExactPoly();
        return ExactPoly::divexact(n, d, 0);
    }
};

int main() {
    ExactPoly t = ExactPoly::variable(0);
    ExactPoly one = ExactPoly::constant(1);
    auto [Rn, Rd] = mod::R_pair();
    RatFun R{Rn, Rd};
    RatFun R_neg{Rn.subst(0, -t), Rd.subst(0, -t)};
    RatFun lhs = RatFun::constant(1024) * R - (R_neg - R) * (R_neg - R);
    std::cout << "deg lhs num " << lhs.n.degree(0) << " den " << lhs.d.degree(0) << "\n";
    ExactPoly denpoly = t * (t - one).pow(4) * (t + one).pow(4);
    RatFun scaled = lhs * RatFun{denpoly, ExactPoly::constant(-262144)};
    std::cout << "deg scaled num " << scaled.n.degree(0) << " den " << scaled.d.degree(0) << "\n";
    // check divisibility manually
    ExactPoly q, r;
    ExactPoly::divmod(scaled.n, scaled.d, 0, q, r);
    std::cout << "rem zero? " << r.is_zero() << "\n";
    if (!r.is_zero()) {
        // evaluate both at t=3 to compare with expected -16244
        std::cout << "ratio(3) = " << BigRat(scaled.n.eval(BigRat(3)) / scaled.d.eval(BigRat(3))).get_str() << "\n";
        std::cout << "den(3) = " << scaled.d.eval(BigRat(3)).get_str() << "\n";
    } else {
        std::cout << "P = " << q.to_string() << "\n";
    }
    return 0;
}

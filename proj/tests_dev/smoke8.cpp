#include <iostream>
#include "modular/modular.hpp"
using namespace legv;
using namespace legv::exact;

int main() {
    ExactPoly t = ExactPoly::variable(0);
    ExactPoly one = ExactPoly::constant(1);
    auto [Rn, Rd] = mod::R_pair();
    ExactPoly Rnn = Rn.subst(0, -t), Rdn = Rd.subst(0, -t);
    // lhs = 1024 R - (Rn_neg/Rd_neg - Rn/Rd)^2
    // = [1024 Rn Rd (Rdn)^2 - (Rnn Rd - Rn Rdn)^2] / (Rd^2 Rdn^2)
    ExactPoly diff_num = Rnn * Rd - Rn * Rdn;
    ExactPoly lhs_num = (Rn * Rd).mul_scalar(BigRat(1024)) * (Rdn * Rdn) - diff_num * diff_num;
    ExactPoly lhs_den = (Rd * Rd) * (Rdn * Rdn);
    std::cout << "deg lhs_num " << lhs_num.degree(0) << " deg lhs_den " << lhs_den.degree(0) << "\n";
    ExactPoly denpoly = t * (t - one).pow(4) * (t + one).pow(4);
    ExactPoly full_num = lhs_num * denpoly;
    ExactPoly full_den = lhs_den.mul_scalar(BigRat(-262144));
    ExactPoly q, r;
    ExactPoly::divmod(full_num, full_den, 0, q, r);
    std::cout << "rem zero? " << r.is_zero() << " deg q " << q.degree(0) << "\n";
    if (r.is_zero()) std::cout << "P = " << q.to_string() << "\n";
    // check value at 3
    BigRat v = full_num.eval(BigRat(3)) / full_den.eval(BigRat(3));
    std::cout << "value at 3: " << v.get_str() << "\n";
    return 0;
}

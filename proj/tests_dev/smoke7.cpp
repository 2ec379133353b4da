#include <iostream>
#include "modular/modular.hpp"
using namespace legv;
using namespace legv::exact;

int main() {
    ExactPoly t = ExactPoly::variable(0);
    ExactPoly one = ExactPoly::constant(1);
    // subst check: (t^2 - t + 1) at -t should be t^2 + t + 1
    ExactPoly p = t * t - t + one;
    std::cout << "p(-t) = " << p.subst(0, -t).to_string() << "\n";
    // R(t) at t = 3: 256*(9-3+1)^3/(9*4) = 256*343/36
    auto [num, den] = mod::R_pair();
    std::cout << "R num(3) = " << num.eval(BigRat(3)).get_str() << " den(3) = "
              << den.eval(BigRat(3)).get_str() << "\n";
    std::cout << "expected num 256*343 = " << (256 * 343) << " den 36\n";
    // R(-t) at t = 3 -> R(-3) = 256*(9+3+1)^3/(9*16)
    ExactPoly numn = num.subst(0, -t), denn = den.subst(0, -t);
    std::cout << "R(-t) at 3: " << numn.eval(BigRat(3)).get_str() << "/"
              << denn.eval(BigRat(3)).get_str() << "\n";
    std::cout << "expected " << (256.0 * 13 * 13 * 13) << "/" << (9 * 16) << "\n";
    // now the david1(i) rational function evaluated at t = 3:
    BigRat R3 = num.eval(BigRat(3)) / den.eval(BigRat(3));
    BigRat Rm3 = numn.eval(BigRat(3)) / denn.eval(BigRat(3));
    BigRat lhs = BigRat(1024) * R3 - (Rm3 - R3) * (Rm3 - R3);
    long P3v = 0;
    long cs[11] = {1, -3, -4, 3, 3, 4, 3, 3, -4, -3, 1}; // t^10 .. const
    for (int i = 0; i < 11; ++i) P3v = P3v * 3 + cs[i];
    BigRat rhs = BigRat(-262144) * BigRat(P3v) / (BigRat(3) * BigRat(16) * BigRat(256));
    std::cout << "lhs = " << lhs.get_str() << "\nrhs = " << rhs.get_str() << "\n";
    std::cout << (lhs == rhs ? "IDENTITY OK at t=3" : "MISMATCH") << "\n";
    return 0;
}

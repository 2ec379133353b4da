#include <iostream>
#include "exact/exact.hpp"
using namespace legv::exact;
int main() {
    QuotientRing R(to_exact(ZPoly::from_longs({1, 14, 1})));
    ExactPoly tvar = ExactPoly::variable(0);
    ExactPoly num = (ExactPoly::constant(4) - tvar).pow(2);
    ExactPoly den = (ExactPoly::constant(2) - tvar).mul_scalar(8);
    auto inv = R.inverse(den);
    ExactPoly abscissa = R.mul(num, *inv);
    std::cout << "abscissa = " << abscissa.to_string() << "\n";
    ZPoly mp = minpoly_of_mod_element(abscissa, R.modulus());
    std::cout << "minpoly = " << mp.to_string() << "\n";
    std::cout << "expect  = " << ZPoly::from_longs({5329, -7440, 2112}).to_string() << "\n";
    return 0;
}

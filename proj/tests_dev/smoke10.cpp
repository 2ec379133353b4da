#include <iostream>
#include "modular/modular.hpp"
#include "exact/sturm.hpp"
using namespace legv;
using namespace legv::exact;
int main() {
    auto [Rn, Rd] = mod::R_pair();
    ExactPoly dnum = Rn.derivative(0) * Rd - Rn * Rd.derivative(0);
    std::cout << "dnum = " << dnum.to_string() << "\n";
    try {
        int c = sturm_count(dnum, std::nullopt, rat(-1) - rat(1, 1000000));
        std::cout << "count = " << c << "\n";
    } catch (const std::exception& e) {
        std::cout << "EXC: " << e.what() << "\n";
    }
    // gcd(f, f')
    ExactPoly g = ExactPoly::gcd_univ(dnum, dnum.derivative(0), 0);
    std::cout << "gcd = " << g.to_string() << "\n";
    try {
        ExactPoly q = ExactPoly::divexact(dnum, g, 0);
        std::cout << "sqfree part = " << q.to_string() << "\n";
    } catch (const std::exception& e) {
        std::cout << "EXC in divexact: " << e.what() << "\n";
    }
    return 0;
}

#include <chrono>
#include <iostream>
#include "modular/modular.hpp"
using namespace legv;
using namespace legv::exact;
using Clock = std::chrono::steady_clock;
long ms(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}
int main() {
    auto t0 = Clock::now();
    ExactPoly phi4 = mod::modular_polynomial_phi4();
    std::cout << "phi4: " << ms(t0) << " ms\n";
    t0 = Clock::now();
    ExactPoly F = mod::curve_F();
    ExactPoly res = resultant(F, phi4, 1);
    std::cout << "resultant: " << ms(t0) << " ms, deg " << res.degree(0) << "\n";
    t0 = Clock::now();
    auto [cont, prim] = res.primitive_z();
    Factorization fac = factor_over_Z(to_zpoly(prim, 0));
    std::cout << "factor: " << ms(t0) << " ms, " << fac.factors.size() << " factors\n";
    t0 = Clock::now();
    RootIsolation iso = sturm_isolate(prim, rat(1000000), std::nullopt);
    std::cout << "sturm whole: " << ms(t0) << " ms, count " << iso.count << "\n";
    t0 = Clock::now();
    int cnt = 0;
    for (auto& [g, m] : fac.factors) {
        RootIsolation i2 = sturm_isolate(to_exact(g, 0), rat(1000000), std::nullopt);
        cnt += i2.count;
    }
    std::cout << "sturm per factor: " << ms(t0) << " ms, count " << cnt << "\n";
    return 0;
}

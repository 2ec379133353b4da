// Dev run of the heavyweight verification suites with timing.
#include <chrono>
#include <iostream>

#include "legendre/legendre.hpp"
#include "modular/modular.hpp"
#include "ffield/ffield.hpp"

using namespace legv;

template <typename F>
rep::VerificationReport timed(const char* name, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    rep::VerificationReport r = f();
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << "== " << name << " (" << dt << " ms)\n" << r.summary() << "\n";
    return r;
}

int main(int argc, char** argv) {
    std::string which = argc > 1 ? argv[1] : "all";
    bool ok = true;
    if (which == "all" || which == "R")
        ok &= timed("verify_R_lemmas", [] { return mod::verify_R_lemmas(); }).pass();
    if (which == "all" || which == "F")
        ok &= timed("F_and_identity_checks", [] { return mod::F_and_identity_checks(); }).pass();
    if (which == "all" || which == "i")
        ok &= timed("verify_lemma_inversion_at_i",
                    [] { return mod::verify_lemma_inversion_at_i(256); })
                  .pass();
    if (which == "all" || which == "cusp")
        ok &= timed("verify_lemma_inversion_cusp",
                    [] { return mod::verify_lemma_inversion_cusp(1000, 192); })
                  .pass();
    if (which == "all" || which == "endgame")
        ok &= timed("thm1_endgame", [] { return mod::thm1_endgame(); }).pass();
    if (which == "all" || which == "exp")
        ok &= timed("exponent_analysis", [] { return ff::verify_exponent_divisor_analysis(); })
                  .pass();
    if (which == "all" || which == "cyclo") {
        auto moduli = mod::rational_singular_moduli();
        ok &= timed("cyclo m=3", [&] { return ff::cyclotomic_j_nonintegrality(3, moduli); }).pass();
        ok &= timed("cyclo m=4", [&] { return ff::cyclotomic_j_nonintegrality(4, moduli); }).pass();
        ok &= timed("cyclo m=5", [&] { return ff::cyclotomic_j_nonintegrality(5, moduli); }).pass();
    }
    if (which == "all" || which == "table") {
        std::vector<ff::FrobeniusRecord> rows = {
            {8, 17, 2, 8, 2, -6, -4, -8},       {10, 11, 2, 7, 0, -4, -11, -7},
            {12, 13, 2, 6, 6, 2, -4, -3},       {15, 31, 7, 14, 8, 0, -15, -31},
            {16, 17, 3, 5, -6, 2, -8, -4},      {20, 41, 2, 5, 10, -6, -4, -8},
            {24, 73, 7, 17, 2, -6, -8, -4},     {30, 31, 3, 12, -4, 0, -3, -31},
            {40, 41, 6, 11, 2, -6, -40, -8},    {48, 97, 2, 3, 18, -14, -4, -3},
            {60, 61, 2, 6, -10, -2, -4, -15},   {80, 241, 17, 21, 18, -22, -40, -120},
            {120, 241, 3, 12, -14, -22, -3, -120}, {240, 241, 7, 13, -30, 26, -4, -8},
        };
        ok &= timed("section4 table", [&] { return ff::reproduce_section4_table(rows); }).pass();
    }
    if (which == "all" || which == "thm2") {
        leg::Thm2Options opt;
        ok &= timed("thm2_pipeline", [&] { return leg::thm2_pipeline(opt); }).pass();
    }
    if (which == "all" || which == "phi4") {
        auto t0 = std::chrono::steady_clock::now();
        exact::ExactPoly phi4 = mod::modular_polynomial_phi4();
        auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << "phi4 computed in " << dt << " ms, terms " << phi4.total_terms() << "\n";
        std::cout << "phi4 sha256 = " << rep::sha256_hex(mod::serialize_poly2(phi4)) << "\n";
        ok &= timed("phi4_resultant_checks",
                    [&] { return mod::phi4_resultant_checks(phi4, 256); })
                  .pass();
    }
    std::cout << (ok ? "ALL SUITES PASS\n" : "SOME SUITE FAILED\n");
    return ok ? 0 : 1;
}

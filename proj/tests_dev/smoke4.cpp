// Dev check of the numeric layer against known closed forms.
#include <iostream>

#include "numeric/functions.hpp"

using namespace legv::num;

static int failures = 0;
#define CHECK(cond, msg)                                                \
    do {                                                                \
        if (!(cond)) {                                                  \
            ++failures;                                                 \
            std::cout << "FAIL " << msg << "\n";                        \
        }                                                               \
    } while (0)

int main() {
    mpfr_prec_t prec = 256;
    // Gamma(1/2) = sqrt(pi)
    ValidatedReal g12 = gamma_at(BigRat(1, 2), prec);
    ValidatedReal sp = ValidatedReal::pi(prec).sqrt();
    CHECK(g12.overlaps(sp), "Gamma(1/2) vs sqrt(pi)");
    CHECK(g12.rad_double() < 1e-70, "Gamma(1/2) radius");
    std::cout << "Gamma(1/2) = " << g12.mid_string(30) << " rad " << g12.rad_double() << "\n";
    // Gamma(1/4) = 3.6256099082219083119...
    ValidatedReal g14 = gamma_at(BigRat(1, 4), prec);
    std::cout << "Gamma(1/4) = " << g14.mid_string(30) << " rad " << g14.rad_double() << "\n";
    CHECK(g14.contains(BigRat(36256099, 10000000)) == false, "sanity");
    ValidatedReal lit = ValidatedReal::from_decimal("3.6256099082219083119306851558676720029951676828801", prec);
    CHECK(g14.overlaps(lit.widened(BigRat(BigInt(1), BigInt("1000000000000000000000000000000000000000000000000")))), "Gamma(1/4) literal");
    // reflection: Gamma(1/4) Gamma(3/4) = pi sqrt(2)
    ValidatedReal g34 = gamma_at(BigRat(3, 4), prec);
    ValidatedReal lhs = g14 * g34;
    ValidatedReal rhs = ValidatedReal::pi(prec) * ValidatedReal::from_long(2, prec).sqrt();
    CHECK(lhs.overlaps(rhs), "reflection 1/4");
    // Kronecker
    CHECK(kronecker(BigInt(-4), BigInt(5)) == 1, "(-4|5)");
    CHECK(kronecker(BigInt(-7), BigInt(11)) == 1, "(-7|11)");
    // brute-force Legendre check
    for (long p : {5L, 7L, 11L, 13L, 17L}) {
        for (long d : {-3L, -4L, -7L, -8L, -15L}) {
            if (d % p == 0) continue;
            bool sq = false;
            long dm = ((d % p) + p) % p;
            for (long i = 1; i < p; ++i)
                if (i * i % p == dm) { sq = true; break; }
            CHECK(kronecker(BigInt(d), BigInt(p)) == (sq ? 1 : -1), "legendre brute");
        }
    }
    // L(chi_{-4}, 1) = pi/4
    DirichletCharacter chi4{BigInt(-4)};
    auto [L1, ratio] = L_value_and_log_derivative(chi4, prec);
    ValidatedReal pi4 = ValidatedReal::pi(prec) / ValidatedReal::from_long(4, prec);
    CHECK(L1.overlaps(pi4), "L(chi_-4,1) = pi/4");
    std::cout << "L(chi_-4,1) = " << L1.mid_string(30) << "\n";
    std::cout << "L'/L(chi_-4,1) = " << ratio.mid_string(30) << "\n";
    CHECK(ratio.contains(BigRat(0)) == false, "ratio nonzero");
    // expected ~0.2456095847773141723888166
    ValidatedReal expect = ValidatedReal::from_decimal("0.2456095847773141723888166", 80);
    CHECK(ratio.overlaps(expect.widened(BigRat(1, 1000000000))), "ratio value");
    // L(chi_-3, 1) = pi/(3 sqrt 3)
    DirichletCharacter chi3{BigInt(-3)};
    auto [L13, ratio3] = L_value_and_log_derivative(chi3, prec);
    ValidatedReal want3 = ValidatedReal::pi(prec) /
                          (ValidatedReal::from_long(3, prec) *
                           ValidatedReal::from_long(3, prec).sqrt());
    CHECK(L13.overlaps(want3), "L(chi_-3,1)");
    // h_F for CM by sqrt(-3): (1/4)log 3 + ratio/2 - (gamma + log 2pi)/2
    ValidatedReal hF = ValidatedReal::from_long(3, prec).log() /
                           ValidatedReal::from_long(4, prec) +
                       ratio3 / ValidatedReal::from_long(2, prec) -
                       (ValidatedReal::euler_gamma(prec) +
                        (ValidatedReal::pi(prec) * ValidatedReal::from_long(2, prec)).log()) /
                           ValidatedReal::from_long(2, prec);
    std::cout << "h_F(-3) = " << hF.mid_string(30) << " rad " << hF.rad_double() << "\n";
    ValidatedReal paper = ValidatedReal::from_decimal("-0.7487524855033378279181555201", 120);
    CHECK(hF.overlaps(paper.widened(BigRat(BigInt(1), BigInt("10000000000000000000000000000")))),
          "h_F(-3) matches paper within 1e-28");
    CHECK(hF.rad_double() < 1e-25, "h_F radius");
    // fundamental discriminant recognition
    CHECK(is_fundamental_discriminant(BigInt(-4)), "-4 fundamental");
    CHECK(is_fundamental_discriminant(BigInt(-3)), "-3 fundamental");
    CHECK(!is_fundamental_discriminant(BigInt(-12)), "-12 not fundamental");
    CHECK(is_fundamental_discriminant(BigInt(-120)), "-120 fundamental");
    CHECK(!is_fundamental_discriminant(BigInt(-9)), "-9 not fundamental");

    std::cout << (failures == 0 ? "ALL OK\n" : "FAILURES\n");
    return failures != 0;
}

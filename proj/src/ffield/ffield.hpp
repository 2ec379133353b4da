#pragma once

// Finite-field side: Legendre point counts and traces of Frobenius,
// fundamental discriminants, the order-of-t table machinery, exponent
// combinatorics for (Z/mZ)^x, and the CM exclusions used by the torsion/CM
// classification.

#include <cstdint>
#include <string>
#include <vector>

#include "exact/exact.hpp"
#include "report/report.hpp"

namespace legv::ff {

using exact::BigInt;
using exact::ExactPoly;

bool is_prime_u64(uint64_t n);
uint64_t mult_order(uint64_t a, uint64_t p);

struct FpElement {
    uint64_t residue = 0;
    uint64_t p = 0;

    FpElement(uint64_t r, uint64_t prime);
};

struct CurveCount {
    uint64_t group_order = 0;
    long trace = 0;
};

// |E_t(F_p)| via the quadratic character sum; p >= 3 prime, t != 0, 1.
CurveCount count_points(uint64_t p, const FpElement& t);

// Fundamental discriminant of Q(sqrt(a^2 - 4p)); requires a^2 < 4p.
long fundamental_discriminant(long a, uint64_t p);

// Trace of Frobenius of y^2 + xy = x^3 - 36x/(j-1728) - 1/(j-1728) over F_p.
long trace_of_j_model(uint64_t p, uint64_t j_residue);

// |E_t(F_{p^2})| by brute force (p small); used for the supersingular
// structure check |E(F_{p^2})| = (p -+ 1)^2.
uint64_t count_points_fp2(uint64_t p, uint64_t t);

struct FrobeniusRecord {
    unsigned m = 0;
    uint64_t p = 0;
    uint64_t t1 = 0, t2 = 0;
    long a1 = 0, a2 = 0;
    long d1 = 0, d2 = 0;
};

// Recompute and verify every fixture row: primality, p = 1 mod m, both
// parameters of exact multiplicative order m, traces, fundamental
// discriminants, and d1 != d2.
rep::VerificationReport reproduce_section4_table(const std::vector<FrobeniusRecord>& fixture);

struct ExponentAnalysis {
    std::vector<long> exponent_divides_4;  // m with exp((Z/m)^x) | 4
    std::vector<long> half_totient_strict; // n >= 2 with phi(n)/2 < #N(n)
    long count_sqrt1_mod_120 = 0;          // #N(120)
};

// Brute force over m, n <= limit.
ExponentAnalysis exponent_divisor_analysis(long limit = 5000);
rep::VerificationReport verify_exponent_divisor_analysis(long limit = 5000);

// j-value non-integrality for t a primitive m-th root of unity, m in {3,4,5}.
// The rational singular moduli list is supplied by the caller.
rep::VerificationReport cyclotomic_j_nonintegrality(
    int m, const std::vector<BigInt>& rational_singular_moduli);

// Trace checks excluding CM for roots of J^2 - 1230272 J + 1783774976.
rep::VerificationReport cm_exclusion_for_finalfour3();

// Number of solutions of a^2 = 1 in (Z/n)^x.
long count_sqrt1_units(long n);

} // namespace legv::ff

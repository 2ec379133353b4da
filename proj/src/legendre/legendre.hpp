#pragma once

// The Legendre family E_t : y^2 = x(x-1)(x-t).  Division polynomials (full
// bivariate and specialized at abscissa 2), j-invariants, duplication,
// torsion-order decisions, non-integrality witnesses, and the elimination
// pipeline classifying CM parameters with (2,*) torsion.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exact/exact.hpp"
#include "report/report.hpp"

namespace legv::leg {

using exact::BigInt;
using exact::BigRat;
using exact::ExactPoly;
using exact::ZPoly;

// j(t) = 2^8 (t^2 - t + 1)^3 / (t^2 (1 - t)^2); t not in {0, 1}.
BigRat j_invariant(const BigRat& t);
// j as an element of Q[t]/(m) for an irreducible modulus m (t not 0 or 1,
// i.e. m is not t or t-1).
ExactPoly j_invariant_mod(const exact::QuotientRing& R);
// The relation j t^2 (t-1)^2 - 2^8 (t^2-t+1)^3 with t = var 0 and j = var 1.
ExactPoly j_relation();

// Abscissa of [2](x, *): (x^2 - t)^2 / (4 x (x-1) (x-t)).
// Throws DomainError at the 2-torsion abscissas x in {0, 1, t}.
BigRat double_abscissa(const BigRat& t, const BigRat& x);
ExactPoly double_abscissa_mod(const exact::QuotientRing& R, const BigRat& x);

// psi_n at x = 2 over Q[t]: psi_n = P_n (n odd), psi_n = y P_n (n even),
// with y^2 = 4 - 2t.  B_n(2,t) = psi_n^2, A_n(2,t) the numerator of the
// multiplication-by-n abscissa at x = 2.
class DivisionAt2 {
public:
    const ExactPoly& P(unsigned n);
    // primitive integer B_n(2, t) (content stripped, positive lc)
    ZPoly B_primitive(unsigned n);
    // the abscissa pair (A_n, B_n)(2, t) with common content cancelled
    std::pair<ZPoly, ZPoly> abscissa_pair(unsigned n);

private:
    std::map<unsigned, ExactPoly> cache_;
};

struct DivisionData {
    unsigned n;
    ExactPoly A, B; // bivariate, x = var 0, t = var 1; common content cancelled
};
// Full bivariate division data; practical for n up to ~16.
DivisionData division_data(unsigned n);

struct TorsionResult {
    bool found = false;
    unsigned order = 0;
};
// Least n <= n_max with (2,*) of order n on E_t; exact.
TorsionResult torsion_order_at_2(const BigRat& t, unsigned n_max = 24);
// Same over Q[t]/(m) for an irreducible minimal polynomial of t.
TorsionResult torsion_order_at_2_mod(const ExactPoly& minpoly_t, unsigned n_max = 24);

// For each listed prime, whether some place above p assigns negative
// valuation to alpha (given by its integer minimal polynomial).
std::map<uint64_t, bool> non_integrality_witness(const ZPoly& minpoly_alpha,
                                                 const std::vector<uint64_t>& primes);

struct Thm2Options {
    unsigned n_max = 24;
    std::string assisted_dir;          // directory with <n>.json factor fixtures
    exact::FactorBudget budget{};
    bool force_assisted = false;       // skip direct factorization (for tests)
};

rep::VerificationReport thm2_pipeline(const Thm2Options& opt);

// Canonical serialization of a factor list used in fixture hashes.
std::string serialize_factorization(const BigInt& content,
                                    const std::vector<exact::ZFactor>& factors);

} // namespace legv::leg

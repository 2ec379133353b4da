#pragma once

// Modular side: validated q-expansions of E2, E4, E6, Delta, j and
// theta = 1/(1 - lambda); fundamental-domain reduction; Hilbert class
// polynomials and the rational singular moduli; the modular polynomial
// Phi_4 by evaluation-interpolation; and the explicit certificate checks
// behind the CM/CM classification.

#include <array>
#include <optional>
#include <vector>

#include "exact/exact.hpp"
#include "numeric/functions.hpp"
#include "report/report.hpp"

namespace legv::mod {

using exact::BigInt;
using exact::BigRat;
using exact::ExactPoly;
using exact::ZPoly;
using num::ValidatedComplex;
using num::ValidatedReal;

struct FormsResult {
    ValidatedComplex e2_star; // E2(tau) - 3 / (pi Im tau)
    ValidatedComplex e2;      // plain quasimodular E2
    ValidatedComplex e4, e6;
    ValidatedComplex delta;   // (2 pi)^12 q prod (1-q^n)^24
    ValidatedComplex j;
    ValidatedComplex theta;   // 1 / (1 - lambda)
};

// Requires Im tau >= 1/2 (certified from the enclosure).
FormsResult eval_forms(const ValidatedComplex& tau, mpfr_prec_t prec);

// j alone (cheaper than the full bundle).
ValidatedComplex eval_j(const ValidatedComplex& tau, mpfr_prec_t prec);

// j via E4^3 (2 pi)^12 / Delta with the product-form discriminant; avoids
// the E4^3 - E6^2 cancellation and stays usable on wide enclosures.
ValidatedComplex eval_j_product_form(const ValidatedComplex& tau, mpfr_prec_t prec);

// Translate/invert into |Re| <= 1/2, |tau| >= 1 (up to enclosure width).
ValidatedComplex reduce_to_fundamental_domain(ValidatedComplex tau);

// Reduced binary quadratic forms (a, b, c) of discriminant D < 0.
std::vector<std::array<long, 3>> reduced_forms(long D);
long class_number(long D);

struct ClassPolynomial {
    long D = 0;
    ZPoly H; // monic, degree h(D)
    mpfr_prec_t precision_used = 0;
};
// D < 0, D = 0 or 1 mod 4, |D| <= 10^4.
ClassPolynomial class_polynomial(long D, mpfr_prec_t initial_prec = 0);

// The thirteen j-values of class number one, derived by scanning |D| <= 200.
std::vector<BigInt> rational_singular_moduli();

// Phi_4(x, y) with integer coefficients, computed by interpolation; the
// defining property and symmetry are certified before returning.
ExactPoly modular_polynomial_phi4(mpfr_prec_t initial_prec = 768);
// Canonical serialization ("e0,e1:coeff;..." sorted) used for fixture hashes.
std::string serialize_poly2(const ExactPoly& p);

// F(x, y): the symmetric curve relating j(E_t) and j(E_{-t}).
ExactPoly curve_F();
// R(t) = 2^8 (t^2 - t + 1)^3 / (t^2 (1 - t)^2) as a (num, den) pair.
std::pair<ExactPoly, ExactPoly> R_pair();

// --- certificate suites -----------------------------------------------------

rep::VerificationReport verify_lemma_inversion_cusp(int grid_points, mpfr_prec_t prec);
rep::VerificationReport verify_lemma_inversion_at_i(mpfr_prec_t prec);
rep::VerificationReport verify_R_lemmas();
rep::VerificationReport F_and_identity_checks();
rep::VerificationReport phi4_resultant_checks(const ExactPoly& phi4, mpfr_prec_t prec);
rep::VerificationReport thm1_endgame();

} // namespace legv::mod

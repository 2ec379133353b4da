#pragma once

// Algebraic numbers given by an integer minimal polynomial plus an isolating
// region, and certified complex root enclosures for squarefree integer
// polynomials (Aberth refinement + Weierstrass inclusion disks).

#include <optional>
#include <utility>
#include <vector>

#include "exact/poly.hpp"
#include "exact/zpoly.hpp"
#include "numeric/real.hpp"

namespace legv::exact {

struct ComplexBox {
    BigRat re_lo, re_hi, im_lo, im_hi;

    bool overlaps(const ComplexBox& o) const;
    bool is_real_line() const { return im_lo == 0 && im_hi == 0; }
    BigRat width() const;
};

// Certified enclosures of all complex roots of a squarefree polynomial:
// pairwise disjoint boxes, one root each, every root covered.  Boxes are
// sorted by (real part, imaginary part) midpoints.  Widths are at most eps.
std::vector<ComplexBox> certified_roots(const ZPoly& f, const BigRat& eps);

class AlgebraicNumber {
public:
    static AlgebraicNumber from_rational(const BigRat& v);
    // The polynomial is factored internally; the factor with a root in the
    // given region is selected, so irreducibility of the input is optional.
    static AlgebraicNumber from_poly_real(const ZPoly& f, const BigRat& lo, const BigRat& hi);
    static AlgebraicNumber from_poly_box(const ZPoly& f, const ComplexBox& box);
    // sqrt_rational: the root sign*sqrt(r) of x^2 - r (r > 0 not a square).
    static AlgebraicNumber sqrt_rational(const BigRat& r, int sign);

    const ZPoly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    bool is_rational() const { return minpoly_.degree() == 1; }
    BigRat rational_value() const;
    bool is_algebraic_integer() const { return minpoly_.lc() == 1; }
    bool is_real() const { return real_; }
    const ComplexBox& box() const { return box_; }

    void refine_below(const BigRat& eps);
    num::ValidatedComplex enclosure(mpfr_prec_t prec) const;
    // Same minimal polynomial and overlapping isolating regions after
    // refinement.
    bool equals(const AlgebraicNumber& o) const;

private:
    ZPoly minpoly_;   // primitive irreducible, positive leading coefficient
    ComplexBox box_;  // isolates exactly one root of minpoly_
    bool real_ = false;
};

// Minimal polynomial of the element P(t) of Q[t]/(m(t)), m irreducible.
ZPoly minpoly_of_mod_element(const ExactPoly& P, const ExactPoly& m);

} // namespace legv::exact

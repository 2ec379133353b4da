#pragma once

// Aggregate header for the exact arithmetic kernel.

#include "exact/algebraic.hpp"
#include "exact/poly.hpp"
#include "exact/quotient.hpp"
#include "exact/sturm.hpp"
#include "exact/zpoly.hpp"

namespace legv::exact {

// Conversions between the sparse rational and dense integer representations.
ZPoly to_zpoly(const ExactPoly& f, int var = 0);
ExactPoly to_exact(const ZPoly& f, int var = 0);

// Factorization of a univariate rational polynomial: strips rational content
// and factors the primitive integer part.
Factorization factor_univariate(const ExactPoly& f, int var = 0,
                                const FactorBudget& budget = {});

// Distinct irreducible factors of f mod p; requires p prime not dividing the
// leading coefficient of the primitive part.
std::vector<FpFactor> factor_mod_p(const ExactPoly& f, uint64_t p, int var = 0);

} // namespace legv::exact

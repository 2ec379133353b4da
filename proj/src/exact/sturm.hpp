#pragma once

// Sturm-sequence root counting and isolation for univariate rational
// polynomials, and p-adic Newton polygon valuations for integer polynomials.

#include <optional>
#include <utility>
#include <vector>

#include "exact/poly.hpp"
#include "exact/zpoly.hpp"

namespace legv::exact {

// Half-open bound for root counting; nullopt means -inf / +inf.
using SturmBound = std::optional<BigRat>;

struct RootIsolation {
    int count = 0;
    // pairwise disjoint open intervals, one real root each
    std::vector<std::pair<BigRat, BigRat>> intervals;
};

// Number of distinct real roots of f in (lo, hi]; the squarefree part is
// taken internally.  nullopt bounds mean the infinite endpoint.
int sturm_count(const ExactPoly& f, const SturmBound& lo, const SturmBound& hi, int var = 0);

// Isolating intervals for all distinct real roots of f in (lo, hi].
RootIsolation sturm_isolate(const ExactPoly& f, const SturmBound& lo, const SturmBound& hi,
                            int var = 0);

// Shrink an isolating interval of f below the given width by bisection.
std::pair<BigRat, BigRat> refine_root(const ExactPoly& f, std::pair<BigRat, BigRat> iv,
                                      const BigRat& width, int var = 0);

// p-adic Newton polygon of an integer polynomial.
struct PrimeValuation {
    uint64_t p = 0;
    // (valuation of root, multiplicity), weakly increasing valuations
    std::vector<std::pair<BigRat, int>> root_valuations;

    bool has_negative_slope() const;
    // Sum of valuations times multiplicities; equals v_p(a_0) - v_p(a_n).
    BigRat valuation_sum() const;
};

PrimeValuation newton_valuations(const ZPoly& f, uint64_t p);

} // namespace legv::exact

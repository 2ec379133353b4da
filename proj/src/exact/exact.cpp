#include "exact/exact.hpp"

namespace legv::exact {

ZPoly to_zpoly(const ExactPoly& f, int var) {
    std::vector<BigRat> cs = f.univariate_coeffs(var);
    std::vector<BigInt> zi(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) {
        if (mpz_cmp_ui(mpq_denref(cs[i].get_mpq_t()), 1) != 0)
            throw DomainError("to_zpoly: non-integer coefficient");
        zi[i] = BigInt(cs[i].get_num());
    }
    return ZPoly(std::move(zi));
}

ExactPoly to_exact(const ZPoly& f, int var) {
    std::vector<BigRat> cs(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) cs[i] = BigRat(f.c[i]);
    return ExactPoly::from_coeffs(cs, var);
}

Factorization factor_univariate(const ExactPoly& f, int var, const FactorBudget& budget) {
    if (f.is_zero()) throw DomainError("factor_univariate of zero polynomial");
    auto [cont, prim] = f.primitive_z();
    Factorization out = factor_over_Z(to_zpoly(prim, var), budget);
    out.content *= cont;
    return out;
}

std::vector<FpFactor> factor_mod_p(const ExactPoly& f, uint64_t p, int var) {
    auto [cont, prim] = f.primitive_z();
    ZPoly z = to_zpoly(prim, var);
    if (mpz_divisible_ui_p(z.lc().get_mpz_t(), (unsigned long)p))
        throw DomainError("factor_mod_p: p divides the leading coefficient");
    return fp_factor(fp_reduce(z, p));
}

} // namespace legv::exact

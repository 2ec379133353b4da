// Dev-only fuzz harness: validates the exact kernel against sympy vectors.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "exact/exact.hpp"
#include "json.hpp"

using namespace legv::exact;
using nlohmann::json;

static int failures = 0;
#define CHECK(cond, msg)                                                        \
    do {                                                                        \
        if (!(cond)) {                                                          \
            ++failures;                                                         \
            std::cout << "FAIL " << msg << " at line " << __LINE__ << "\n";     \
        }                                                                       \
    } while (0)

ExactPoly poly_from_ascending(const json& arr, int var = 0) {
    std::vector<BigRat> c;
    for (auto& s : arr) c.emplace_back(BigRat(std::string(s), 10));
    return ExactPoly::from_coeffs(c, var);
}

ZPoly zpoly_from_ascending(const json& arr) {
    std::vector<BigInt> c;
    for (auto& s : arr) c.emplace_back(BigInt(std::string(s), 10));
    return ZPoly(std::move(c));
}

int main() {
    std::ifstream in("/tmp/vectors.json");
    json v;
    in >> v;

    // univariate resultants
    for (auto& tc : v["resultant_uni"]) {
        ExactPoly A = poly_from_ascending(tc["A"]);
        ExactPoly B = poly_from_ascending(tc["B"]);
        ExactPoly r = resultant(A, B, 0);
        BigRat expect(tc["res"].get<std::string>(), 10);
        CHECK(r.is_constant() && r.constant_term() == expect,
              "resultant_uni got " + r.to_string() + " want " + expect.get_str());
    }
    std::cout << "resultant_uni done\n";

    // bivariate
    for (auto& tc : v["resultant_biv"]) {
        ExactPoly A, B;
        for (auto& t : tc["A"]) {
            A = A + ExactPoly::monomial(BigRat(std::string(t[2]), 10), t[0].get<unsigned>(),
                                        t[1].get<unsigned>());
        }
        for (auto& t : tc["B"]) {
            B = B + ExactPoly::monomial(BigRat(std::string(t[2]), 10), t[0].get<unsigned>(),
                                        t[1].get<unsigned>());
        }
        ExactPoly r = resultant(A, B, 0);
        ExactPoly expect = poly_from_ascending(tc["res"], 1);
        CHECK(r == expect, "resultant_biv");
        if (!(r == expect))
            std::cout << "  got " << r.to_string() << "\n  want " << expect.to_string() << "\n";
    }
    std::cout << "resultant_biv done\n";

    // factorization
    for (auto& tc : v["factor"]) {
        ZPoly f = zpoly_from_ascending(tc["f"]);
        Factorization fac = factor_over_Z(f);
        ZPoly prod(std::vector<BigInt>{BigInt(1)});
        for (auto& [g, m] : fac.factors)
            for (int i = 0; i < m; ++i) prod = prod * g;
        BigRat cont = fac.content;
        CHECK(mpz_cmp_ui(mpq_denref(cont.get_mpq_t()), 1) == 0, "integer content");
        ZPoly scaled = prod.mul_scalar(BigInt(cont.get_num()));
        CHECK(scaled == f, "factor product identity");
        std::vector<std::string> got, want;
        for (auto& [g, m] : fac.factors) {
            std::string s;
            for (auto& c : g.c) s += c.get_str() + ",";
            s += "m" + std::to_string(m);
            got.push_back(s);
        }
        for (auto& fl : tc["factors"]) {
            std::string s;
            for (size_t i = 0; i + 1 < fl.size(); ++i) s += std::string(fl[i]) + ",";
            s += "m" + std::string(fl[fl.size() - 1]);
            want.push_back(s);
        }
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want, "factor list");
        if (got != want) {
            std::cout << "  f = " << f.to_string() << "\n  got:";
            for (auto& s : got) std::cout << " [" << s << "]";
            std::cout << "\n  want:";
            for (auto& s : want) std::cout << " [" << s << "]";
            std::cout << "\n";
        }
    }
    std::cout << "factor done\n";

    // sturm
    for (auto& tc : v["sturm"]) {
        ExactPoly f = poly_from_ascending(tc["f"]);
        int cnt = sturm_count(f, BigRat((long)tc["a"]), BigRat((long)tc["b"]));
        CHECK(cnt == tc["count"].get<int>(), "sturm count");
    }
    std::cout << "sturm done\n";

    // spec examples
    {
        ExactPoly f = ExactPoly::variable(0) - ExactPoly::constant(5);
        ExactPoly g = ExactPoly::variable(0) - ExactPoly::constant(3);
        CHECK(resultant(f, g, 0).constant_term() == BigRat(2), "res linear");
        Factorization fc = factor_over_Z(ZPoly::from_longs({-1, 0, 1}));
        CHECK(fc.factors.size() == 2, "x^2-1 two factors");
        ZPoly e = ZPoly::from_longs({-128, 1}) * ZPoly::from_longs({-2048, 1}) *
                  ZPoly::from_longs({-2048, 1});
        e = e.mul_scalar(BigInt(-1024));
        Factorization fe = factor_over_Z(e);
        CHECK(fe.content == BigRat(-1024), "content -1024");
        CHECK(fe.factors.size() == 2, "two distinct factors");
        bool saw128 = false, saw2048 = false;
        for (auto& [g2, m] : fe.factors) {
            if (g2 == ZPoly::from_longs({-128, 1})) saw128 = (m == 1);
            if (g2 == ZPoly::from_longs({-2048, 1})) saw2048 = (m == 2);
        }
        CHECK(saw128 && saw2048, "factors of F(x,x)");
        auto f5 = factor_mod_p(to_exact(ZPoly::from_longs({1, 0, 1})), 5);
        CHECK(f5.size() == 2 && f5[0].poly.degree() == 1, "x^2+1 mod 5");
        auto f17 = factor_mod_p(to_exact(ZPoly::from_longs({1, 0, 0, 0, 1})), 17);
        CHECK(f17.size() == 4, "x^4+1 mod 17");
        CHECK(sturm_count(to_exact(ZPoly::from_longs({-2, 0, 1})), BigRat(0), BigRat(2)) == 1,
              "sturm x^2-2");
        ExactPoly t2 = ExactPoly::monomial(1, 2);
        ExactPoly mod = to_exact(ZPoly::from_longs({16, -16, 1}));
        ExactPoly red = quotient_ring_reduce(t2, mod);
        CHECK(red == to_exact(ZPoly::from_longs({-16, 16})), "quotient reduce");
        PrimeValuation pv = newton_valuations(ZPoly::from_longs({-25, 24}), 2);
        CHECK(pv.root_valuations.size() == 1 && pv.root_valuations[0].first == BigRat(-3),
              "newton 25/24 at 2");
        PrimeValuation pv3 = newton_valuations(ZPoly::from_longs({-25, 24}), 3);
        CHECK(pv3.root_valuations[0].first == BigRat(-1), "newton 25/24 at 3");
        CHECK(newton_valuations(ZPoly::from_longs({-2, 1}), 2).root_valuations[0].first == BigRat(1),
              "newton x-2 p2");
        CHECK(newton_valuations(ZPoly::from_longs({-2, 1}), 5).root_valuations[0].first == BigRat(0),
              "newton x-2 p5");
        ZPoly mp = ZPoly::from_longs({169, -360, 192});
        CHECK(newton_valuations(mp, 2).has_negative_slope(), "neg slope at 2");
        CHECK(newton_valuations(mp, 3).has_negative_slope(), "neg slope at 3");
    }

    // certified roots + algebraic numbers
    {
        auto boxes = certified_roots(ZPoly::from_longs({16, -16, 1}), BigRat(1, 1L << 40));
        CHECK(boxes.size() == 2, "two roots");
        AlgebraicNumber a = AlgebraicNumber::from_poly_real(ZPoly::from_longs({16, -16, 1}),
                                                            BigRat(14), BigRat(15));
        CHECK(a.degree() == 2 && a.is_algebraic_integer(), "alg number basic");
        AlgebraicNumber s3 = AlgebraicNumber::sqrt_rational(BigRat(3), 1);
        CHECK(s3.minpoly() == ZPoly::from_longs({-3, 0, 1}), "sqrt3 minpoly");
        QuotientRing R(to_exact(ZPoly::from_longs({1, 14, 1})));
        ExactPoly tvar = ExactPoly::variable(0);
        ExactPoly num = (ExactPoly::constant(4) - tvar).pow(2);
        ExactPoly den = (ExactPoly::constant(2) - tvar).mul_scalar(8);
        auto inv = R.inverse(den);
        CHECK(inv.has_value(), "invertible");
        ExactPoly abscissa = R.mul(num, *inv);
        ZPoly mp = minpoly_of_mod_element(abscissa, R.modulus());
        BigRat c1 = rat(-155, 44), c0 = rat(24025, 7744) - rat(2523, 4356);
        ExactPoly expect = ExactPoly::from_coeffs({c0, c1, BigRat(1)});
        auto [cont2, prim2] = expect.primitive_z();
        CHECK(to_exact(mp) == prim2, "abscissa minpoly");
        CHECK(newton_valuations(mp, 2).has_negative_slope(), "abscissa neg at 2");
        CHECK(newton_valuations(mp, 3).has_negative_slope(), "abscissa neg at 3");
        CHECK(!newton_valuations(mp, 5).has_negative_slope(), "abscissa ok at 5");
    }

    std::cout << (failures == 0 ? "ALL OK\n" : "FAILURES\n");
    return failures == 0 ? 0 : 1;
}

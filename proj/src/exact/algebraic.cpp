#include "exact/algebraic.hpp"

#include <algorithm>
#include <cmath>

#include "exact/sturm.hpp"

namespace legv::exact {

using num::ValidatedComplex;
using num::ValidatedReal;

bool ComplexBox::overlaps(const ComplexBox& o) const {
    return !(re_hi < o.re_lo || o.re_hi < re_lo || im_hi < o.im_lo || o.im_hi < im_lo);
}

BigRat ComplexBox::width() const {
    BigRat w = re_hi - re_lo;
    BigRat h = im_hi - im_lo;
    return w > h ? w : h;
}

// ---------------------------------------------------------------------------
// Aberth iteration at mpfr midpoint precision, certified by Weierstrass disks:
// all roots of f lie in the union of disks D(z_i, n*|W_i|) with
// W_i = f(z_i) / (lc * prod_{j!=i} (z_i - z_j)); pairwise disjoint disks
// therefore isolate one root each.

namespace {

struct MC { // midpoint complex
    mpfr_t re, im;
};

void mc_init(MC& z, mpfr_prec_t prec) {
    mpfr_init2(z.re, prec);
    mpfr_init2(z.im, prec);
}
void mc_clear(MC& z) {
    mpfr_clear(z.re);
    mpfr_clear(z.im);
}

struct MCVec {
    std::vector<MC> v;
    mpfr_prec_t prec;
    explicit MCVec(size_t n, mpfr_prec_t p) : v(n), prec(p) {
        for (auto& z : v) mc_init(z, p);
    }
    ~MCVec() {
        for (auto& z : v) mc_clear(z);
    }
    MCVec(const MCVec&) = delete;
    MCVec& operator=(const MCVec&) = delete;
};

// out = a*b (complex, round to nearest)
void mc_mul(MC& out, const MC& a, const MC& b, mpfr_t t1, mpfr_t t2) {
    mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_mul(t2, a.re, b.im, MPFR_RNDN);
    mpfr_fma(out.im, a.im, b.re, t2, MPFR_RNDN);
    mpfr_set(out.re, t1, MPFR_RNDN);
}

// out = a / b
void mc_div(MC& out, const MC& a, const MC& b, mpfr_t t1, mpfr_t t2, mpfr_t den) {
    mpfr_mul(den, b.re, b.re, MPFR_RNDN);
    mpfr_fma(den, b.im, b.im, den, MPFR_RNDN);
    mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
    mpfr_fma(t1, a.im, b.im, t1, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.re, MPFR_RNDN);
    mpfr_t t3;
    mpfr_init2(t3, mpfr_get_prec(t1));
    mpfr_mul(t3, a.re, b.im, MPFR_RNDN);
    mpfr_sub(t2, t2, t3, MPFR_RNDN);
    mpfr_clear(t3);
    mpfr_div(out.re, t1, den, MPFR_RNDN);
    mpfr_div(out.im, t2, den, MPFR_RNDN);
}

// Horner evaluation of f at z (midpoint arithmetic)
void mc_eval(MC& out, const ZPoly& f, const MC& z, mpfr_prec_t prec) {
    mpfr_t t1, t2;
    mpfr_init2(t1, prec);
    mpfr_init2(t2, prec);
    mpfr_set_ui(out.re, 0, MPFR_RNDN);
    mpfr_set_ui(out.im, 0, MPFR_RNDN);
    MC tmp;
    mc_init(tmp, prec);
    for (size_t i = f.c.size(); i-- > 0;) {
        mc_mul(tmp, out, z, t1, t2);
        mpfr_add_z(out.re, tmp.re, f.c[i].get_mpz_t(), MPFR_RNDN);
        mpfr_set(out.im, tmp.im, MPFR_RNDN);
    }
    mc_clear(tmp);
    mpfr_clear(t1);
    mpfr_clear(t2);
}

ValidatedComplex point_interval(const MC& z, mpfr_prec_t prec) {
    ValidatedReal re(prec), im(prec);
    re.set_endpoints_raw(z.re, z.re);
    im.set_endpoints_raw(z.im, z.im);
    return {re, im};
}

ValidatedComplex eval_interval(const ZPoly& f, const ValidatedComplex& z) {
    mpfr_prec_t prec = z.prec();
    ValidatedComplex acc(prec);
    for (size_t i = f.c.size(); i-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + ValidatedReal::from_bigint(f.c[i], prec);
    }
    return acc;
}

} // namespace

std::vector<ComplexBox> certified_roots(const ZPoly& fin, const BigRat& eps) {
    ZPoly f = fin.primitive_part();
    int n = f.degree();
    if (n <= 0) throw DomainError("certified_roots: degree < 1");
    if (gcd_z(f, f.derivative()).degree() != 0)
        throw DomainError("certified_roots requires a squarefree polynomial");
    if (n == 1) {
        BigRat r(-f.c[0], f.c[1]);
        r.canonicalize();
        return {ComplexBox{r, r, BigRat(0), BigRat(0)}};
    }

    for (mpfr_prec_t prec = 128;; prec *= 2) {
        if (prec > 1 << 16)
            throw PrecisionError("certified_roots: precision cap exceeded");
        MCVec zs((size_t)n, prec);
        // initial guesses on a circle of radius ~ Cauchy bound
        double radius = 1.0;
        {
            BigRat b = 0;
            for (int i = 0; i < n; ++i) {
                BigRat q(::abs(f.c[(size_t)i]), ::abs(f.lc()));
                q.canonicalize();
                if (q > b) b = q;
            }
            radius = 1.0 + b.get_d();
            if (!(radius > 0) || radius > 1e300) radius = 1e300;
        }
        mpfr_t t1, t2, den;
        mpfr_init2(t1, prec);
        mpfr_init2(t2, prec);
        mpfr_init2(den, prec);
        for (int i = 0; i < n; ++i) {
            double ang = 2.0 * 3.141592653589793 * (i + 0.25) / n + 0.3 / n;
            mpfr_set_d(zs.v[(size_t)i].re, radius * std::cos(ang), MPFR_RNDN);
            mpfr_set_d(zs.v[(size_t)i].im, radius * std::sin(ang), MPFR_RNDN);
        }
        ZPoly fd = f.derivative();
        MC fz, fdz, ratio, corr, sum, diff, inv, one;
        mc_init(fz, prec); mc_init(fdz, prec); mc_init(ratio, prec);
        mc_init(corr, prec); mc_init(sum, prec); mc_init(diff, prec);
        mc_init(inv, prec); mc_init(one, prec);
        mpfr_set_ui(one.re, 1, MPFR_RNDN);
        mpfr_set_ui(one.im, 0, MPFR_RNDN);
        long iters = 100 + (long)prec / 2;
        for (long it = 0; it < iters; ++it) {
            bool moved = false;
            for (int i = 0; i < n; ++i) {
                mc_eval(fz, f, zs.v[(size_t)i], prec);
                if (mpfr_zero_p(fz.re) && mpfr_zero_p(fz.im)) continue;
                mc_eval(fdz, fd, zs.v[(size_t)i], prec);
                mc_div(ratio, fz, fdz, t1, t2, den);
                // Aberth correction: ratio / (1 - ratio * sum_j 1/(z_i-z_j))
                mpfr_set_ui(sum.re, 0, MPFR_RNDN);
                mpfr_set_ui(sum.im, 0, MPFR_RNDN);
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    mpfr_sub(diff.re, zs.v[(size_t)i].re, zs.v[(size_t)j].re, MPFR_RNDN);
                    mpfr_sub(diff.im, zs.v[(size_t)i].im, zs.v[(size_t)j].im, MPFR_RNDN);
                    mc_div(inv, one, diff, t1, t2, den);
                    mpfr_add(sum.re, sum.re, inv.re, MPFR_RNDN);
                    mpfr_add(sum.im, sum.im, inv.im, MPFR_RNDN);
                }
                mc_mul(corr, ratio, sum, t1, t2);
                mpfr_ui_sub(corr.re, 1, corr.re, MPFR_RNDN);
                mpfr_neg(corr.im, corr.im, MPFR_RNDN);
                if (mpfr_zero_p(corr.re) && mpfr_zero_p(corr.im)) continue;
                mc_div(corr, ratio, corr, t1, t2, den);
                // z_i -= corr
                mpfr_sub(zs.v[(size_t)i].re, zs.v[(size_t)i].re, corr.re, MPFR_RNDN);
                mpfr_sub(zs.v[(size_t)i].im, zs.v[(size_t)i].im, corr.im, MPFR_RNDN);
                // movement significant?
                mpfr_abs(t1, corr.re, MPFR_RNDU);
                mpfr_abs(t2, corr.im, MPFR_RNDU);
                mpfr_add(t1, t1, t2, MPFR_RNDU);
                if (!mpfr_zero_p(t1) && mpfr_get_exp(t1) > -(long)prec + 8) moved = true;
            }
            if (!moved) break;
        }
        mc_clear(fz); mc_clear(fdz); mc_clear(ratio);
        mc_clear(corr); mc_clear(sum); mc_clear(diff); mc_clear(inv); mc_clear(one);
        mpfr_clear(t1); mpfr_clear(t2); mpfr_clear(den);

        // certify: Weierstrass disk radii n*|W_i| with interval arithmetic
        std::vector<ComplexBox> boxes((size_t)n);
        std::vector<BigRat> rad((size_t)n);
        bool ok = true;
        ValidatedReal lc_abs = ValidatedReal::from_bigint(::abs(f.lc()), prec);
        std::vector<ValidatedComplex> zints;
        zints.reserve((size_t)n);
        for (int i = 0; i < n; ++i) zints.push_back(point_interval(zs.v[(size_t)i], prec));
        for (int i = 0; i < n && ok; ++i) {
            ValidatedComplex num = eval_interval(f, zints[(size_t)i]);
            ValidatedReal denom = lc_abs;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                denom = denom * (zints[(size_t)i] - zints[(size_t)j]).abs();
            }
            if (denom.contains_zero()) { ok = false; break; }
            ValidatedReal w = num.abs() / denom;
            BigRat r = w.rad_rational() + w.mid_rational();
            r *= n;
            if (r <= 0 || r > eps / 4) { ok = false; break; }
            rad[(size_t)i] = r;
            BigRat re_m = zints[(size_t)i].re.mid_rational();
            BigRat im_m = zints[(size_t)i].im.mid_rational();
            boxes[(size_t)i] = ComplexBox{re_m - r, re_m + r, im_m - r, im_m + r};
        }
        if (ok) {
            for (int i = 0; i < n && ok; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (boxes[(size_t)i].overlaps(boxes[(size_t)j])) { ok = false; break; }
        }
        if (!ok) continue;
        std::sort(boxes.begin(), boxes.end(), [](const ComplexBox& a, const ComplexBox& b) {
            BigRat ar = a.re_lo + a.re_hi, br = b.re_lo + b.re_hi;
            if (ar != br) return ar < br;
            return a.im_lo + a.im_hi < b.im_lo + b.im_hi;
        });
        return boxes;
    }
}

// ---------------------------------------------------------------------------
// AlgebraicNumber

AlgebraicNumber AlgebraicNumber::from_rational(const BigRat& v) {
    AlgebraicNumber a;
    BigRat vv = v;
    vv.canonicalize();
    a.minpoly_ = ZPoly({BigInt(-vv.get_num()), BigInt(vv.get_den())});
    if (a.minpoly_.lc() < 0) a.minpoly_ = -a.minpoly_;
    a.box_ = ComplexBox{vv, vv, BigRat(0), BigRat(0)};
    a.real_ = true;
    return a;
}

BigRat AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw DomainError("not a rational algebraic number");
    BigRat v(-minpoly_.c[0], minpoly_.c[1]);
    v.canonicalize();
    return v;
}

AlgebraicNumber AlgebraicNumber::from_poly_real(const ZPoly& f, const BigRat& lo,
                                                const BigRat& hi) {
    Factorization fac = factor_over_Z(f);
    for (auto& [g, mult] : fac.factors) {
        ExactPoly gp = ExactPoly::from_coeffs([&] {
            std::vector<BigRat> v(g.c.size());
            for (size_t i = 0; i < g.c.size(); ++i) v[i] = BigRat(g.c[i]);
            return v;
        }());
        if (sturm_count(gp, lo, hi) == 1) {
            AlgebraicNumber a;
            a.minpoly_ = g;
            if (g.degree() == 1) return from_rational(BigRat(-g.c[0], g.c[1]));
            auto iv = refine_root(gp, {lo, hi}, (hi - lo) / 4);
            a.box_ = ComplexBox{iv.first, iv.second, BigRat(0), BigRat(0)};
            a.real_ = true;
            return a;
        }
    }
    throw DomainError("from_poly_real: interval does not isolate a real root");
}

AlgebraicNumber AlgebraicNumber::from_poly_box(const ZPoly& f, const ComplexBox& box) {
    Factorization fac = factor_over_Z(f);
    BigRat eps = box.width() / 4;
    if (eps <= 0) eps = BigRat(1, 1000000);
    for (auto& [g, mult] : fac.factors) {
        if (g.degree() < 1) continue;
        if (g.degree() == 1) {
            BigRat r(-g.c[0], g.c[1]);
            r.canonicalize();
            if (r >= box.re_lo && r <= box.re_hi && box.im_lo <= 0 && box.im_hi >= 0)
                return from_rational(r);
            continue;
        }
        std::vector<ComplexBox> roots = certified_roots(g, eps);
        int inside = -1, cnt = 0;
        for (size_t i = 0; i < roots.size(); ++i) {
            if (roots[i].overlaps(box)) {
                inside = (int)i;
                ++cnt;
            }
        }
        if (cnt == 1) {
            AlgebraicNumber a;
            a.minpoly_ = g;
            a.box_ = roots[(size_t)inside];
            a.real_ = false;
            return a;
        }
    }
    throw DomainError("from_poly_box: box does not isolate a root");
}

AlgebraicNumber AlgebraicNumber::sqrt_rational(const BigRat& r, int sign) {
    if (r <= 0) throw DomainError("sqrt_rational expects positive radicand");
    ZPoly m({BigInt(-r.get_num()), BigInt(0), BigInt(r.get_den())});
    BigRat hi = r > 1 ? r : BigRat(1);
    if (sign > 0) return from_poly_real(m, BigRat(0), hi + 1);
    return from_poly_real(m, -(hi + 1), BigRat(0));
}

void AlgebraicNumber::refine_below(const BigRat& eps) {
    if (box_.width() <= eps) return;
    if (real_) {
        ExactPoly gp = ExactPoly::from_coeffs([&] {
            std::vector<BigRat> v(minpoly_.c.size());
            for (size_t i = 0; i < minpoly_.c.size(); ++i) v[i] = BigRat(minpoly_.c[i]);
            return v;
        }());
        auto iv = refine_root(gp, {box_.re_lo, box_.re_hi}, eps);
        box_ = ComplexBox{iv.first, iv.second, BigRat(0), BigRat(0)};
        return;
    }
    for (auto& rb : certified_roots(minpoly_, eps)) {
        if (rb.overlaps(box_)) {
            box_ = rb;
            return;
        }
    }
    throw PrecisionError("refine_below lost the isolated root");
}

num::ValidatedComplex AlgebraicNumber::enclosure(mpfr_prec_t prec) const {
    BigRat eps(1, 1);
    for (mpfr_prec_t i = 0; i + 8 < prec; i += 8) eps /= 256;
    AlgebraicNumber tmp = *this;
    tmp.refine_below(eps);
    return {ValidatedReal::from_interval(tmp.box_.re_lo, tmp.box_.re_hi, prec),
            ValidatedReal::from_interval(tmp.box_.im_lo, tmp.box_.im_hi, prec)};
}

bool AlgebraicNumber::equals(const AlgebraicNumber& o) const {
    if (!(minpoly_ == o.minpoly_)) return false;
    AlgebraicNumber a = *this, b = o;
    BigRat eps = BigRat(1, 1000000);
    a.refine_below(eps);
    b.refine_below(eps);
    return a.box_.overlaps(b.box_);
}

ZPoly minpoly_of_mod_element(const ExactPoly& P, const ExactPoly& m) {
    // characteristic polynomial: res_t(m(t), X - P(t)); its squarefree part
    // is the minimal polynomial when m is irreducible
    ExactPoly X = ExactPoly::variable(1);
    ExactPoly charpoly = resultant(m, X - P, 0);
    ExactPoly cp = charpoly.swap_vars(); // univariate in var 0 now
    ExactPoly sf = ExactPoly::divexact(cp, ExactPoly::gcd_univ(cp, cp.derivative(0), 0), 0);
    auto [cont, prim] = sf.primitive_z();
    std::vector<BigRat> cs = prim.univariate_coeffs(0);
    std::vector<BigInt> zi(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) zi[i] = BigInt(cs[i].get_num());
    return ZPoly(std::move(zi));
}

} // namespace legv::exact

#include "exact/zpoly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace legv::exact {

// ---------------------------------------------------------------------------
// ZPoly basics

ZPoly ZPoly::from_longs(std::initializer_list<long> coeffs) {
    std::vector<BigInt> v;
    v.reserve(coeffs.size());
    for (long x : coeffs) v.emplace_back(x);
    return ZPoly(std::move(v));
}

ZPoly ZPoly::x_power(unsigned k) {
    std::vector<BigInt> v(k + 1, BigInt(0));
    v[k] = 1;
    return ZPoly(std::move(v));
}

void ZPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<BigInt> v(std::max(c.size(), o.c.size()), BigInt(0));
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) v[i] += o.c[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    std::vector<BigInt> v(std::max(c.size(), o.c.size()), BigInt(0));
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) v[i] -= o.c[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return ZPoly();
    std::vector<BigInt> v(c.size() + o.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) {
            if (o.c[j] == 0) continue;
            mpz_addmul(v[i + j].get_mpz_t(), c[i].get_mpz_t(), o.c[j].get_mpz_t());
        }
    }
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-() const {
    std::vector<BigInt> v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = -c[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::mul_scalar(const BigInt& s) const {
    if (s == 0) return ZPoly();
    std::vector<BigInt> v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i] * s;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::shifted(unsigned k) const {
    if (is_zero()) return ZPoly();
    std::vector<BigInt> v(c.size() + k, BigInt(0));
    for (size_t i = 0; i < c.size(); ++i) v[i + k] = c[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::derivative() const {
    if (c.size() <= 1) return ZPoly();
    std::vector<BigInt> v(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * (long)i;
    return ZPoly(std::move(v));
}

BigInt ZPoly::content() const {
    BigInt g = 0;
    for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return ZPoly();
    BigInt g = content();
    if (lc() < 0) g = -g;
    std::vector<BigInt> v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i] / g;
    return ZPoly(std::move(v));
}

BigInt ZPoly::eval_z(const BigInt& x) const {
    BigInt acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

BigRat ZPoly::eval_q(const BigRat& x) const {
    BigRat acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + BigRat(c[i]);
    return acc;
}

BigInt ZPoly::max_norm() const {
    BigInt m = 0;
    for (const auto& x : c) {
        BigInt a = ::abs(x);
        if (a > m) m = a;
    }
    return m;
}

BigInt ZPoly::l2_norm_bound() const {
    BigInt s = 0;
    for (const auto& x : c) s += x * x;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    return r + 1;
}

std::string ZPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        BigInt a = ::abs(c[i]);
        if (first) {
            if (c[i] < 0) os << "-";
            first = false;
        } else {
            os << (c[i] < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::optional<ZPoly> divide_exact_z(const ZPoly& f, const ZPoly& g) {
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return ZPoly();
    int df = f.degree(), dg = g.degree();
    if (df < dg) return std::nullopt;
    std::vector<BigRat> a(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) a[i] = BigRat(f.c[i]);
    BigRat inv_l = BigRat(1) / BigRat(g.lc());
    std::vector<BigInt> q((size_t)(df - dg + 1));
    for (int i = df; i >= dg; --i) {
        if (a[(size_t)i] == 0) continue;
        BigRat coef = a[(size_t)i] * inv_l;
        if (mpz_cmp_ui(mpq_denref(coef.get_mpq_t()), 1) != 0) return std::nullopt;
        q[(size_t)(i - dg)] = BigInt(mpq_numref(coef.get_mpq_t()));
        for (int j = 0; j <= dg; ++j)
            a[(size_t)(i - dg + j)] -= coef * BigRat(g.c[(size_t)j]);
    }
    for (int i = 0; i < dg; ++i)
        if (a[(size_t)i] != 0) return std::nullopt;
    return ZPoly(std::move(q));
}

namespace {

// Pseudo remainder over Z: lc(b)^(da-db+1) a = q b + r
ZPoly prem_z(ZPoly a, const ZPoly& b) {
    int db = b.degree();
    const BigInt& lb = b.lc();
    int e = a.degree() - db + 1;
    while (!a.is_zero() && a.degree() >= db) {
        int dr = a.degree();
        BigInt lr = a.lc();
        std::vector<BigInt> na((size_t)dr, BigInt(0));
        for (int i = 0; i < dr; ++i) {
            BigInt v = a.c[(size_t)i] * lb;
            int j = i - (dr - db);
            if (j >= 0) v -= lr * b.c[(size_t)j];
            na[(size_t)i] = std::move(v);
        }
        a = ZPoly(std::move(na));
        --e;
    }
    if (e > 0) {
        BigInt m;
        mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), (unsigned long)e);
        a = a.mul_scalar(m);
    }
    return a;
}

} // namespace

ZPoly gcd_z(const ZPoly& f, const ZPoly& g) {
    if (f.is_zero()) return g.is_zero() ? ZPoly() : g.primitive_part().mul_scalar(g.content());
    if (g.is_zero()) return f.primitive_part().mul_scalar(f.content());
    BigInt cf = f.content(), cg = g.content(), cc;
    mpz_gcd(cc.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    ZPoly a = f.primitive_part(), b = g.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = prem_z(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive_part().mul_scalar(cc);
}

std::vector<SquarefreePart> squarefree_decompose(const ZPoly& f) {
    std::vector<SquarefreePart> out;
    ZPoly p = f.primitive_part();
    if (p.degree() < 1) return out;
    // Yun's algorithm
    ZPoly fp = p.derivative();
    ZPoly g = gcd_z(p, fp);
    ZPoly b = *divide_exact_z(p, g);
    ZPoly cc = *divide_exact_z(fp, g);
    ZPoly d = cc - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        ZPoly a = gcd_z(b, d);
        if (a.degree() >= 1) out.push_back({a.primitive_part(), i});
        b = *divide_exact_z(b, a);
        cc = *divide_exact_z(d, a);
        d = cc - b.derivative();
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// F_p arithmetic

namespace {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return (uint64_t)((unsigned __int128)a * b % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) {
    // p prime
    return powmod_u64(a % p, p - 2, p);
}

} // namespace

void FpPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string FpPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i > 0) {
            if (c[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

FpPoly fp_reduce(const ZPoly& f, uint64_t p) {
    FpPoly out;
    out.p = p;
    out.c.resize(f.c.size());
    BigInt t;
    for (size_t i = 0; i < f.c.size(); ++i) {
        mpz_mod_ui(t.get_mpz_t(), f.c[i].get_mpz_t(), p);
        out.c[i] = mpz_get_ui(t.get_mpz_t());
    }
    out.normalize();
    return out;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    FpPoly out;
    out.p = a.p;
    out.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = (out.c[i] + b.c[i]) % a.p;
    out.normalize();
    return out;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    FpPoly out;
    out.p = a.p;
    out.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = (out.c[i] + a.p - b.c[i]) % a.p;
    out.normalize();
    return out;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly{a.p, {}};
    FpPoly out;
    out.p = a.p;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (!b.c[j]) continue;
            out.c[i + j] = (out.c[i + j] + (unsigned __int128)a.c[i] * b.c[j]) % a.p;
        }
    }
    out.normalize();
    return out;
}

FpPoly fp_mul_scalar(const FpPoly& a, uint64_t s) {
    FpPoly out = a;
    s %= a.p;
    for (auto& x : out.c) x = mulmod_u64(x, s, a.p);
    out.normalize();
    return out;
}

FpPoly fp_make_monic(const FpPoly& a) {
    if (a.is_zero() || a.c.back() == 1) return a;
    return fp_mul_scalar(a, invmod_u64(a.c.back(), a.p));
}

void fp_divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    if (b.is_zero()) throw DomainError("fp division by zero");
    uint64_t p = a.p;
    r = a;
    int db = b.degree();
    uint64_t invl = invmod_u64(b.c.back(), p);
    if (r.degree() < db) {
        q = FpPoly{p, {}};
        return;
    }
    std::vector<uint64_t> qd((size_t)(r.degree() - db + 1), 0);
    while (!r.is_zero() && r.degree() >= db) {
        int dr = r.degree();
        uint64_t coef = mulmod_u64(r.c.back(), invl, p);
        qd[(size_t)(dr - db)] = coef;
        for (int j = 0; j <= db; ++j) {
            uint64_t sub = mulmod_u64(coef, b.c[(size_t)j], p);
            uint64_t& tgt = r.c[(size_t)(dr - db + j)];
            tgt = (tgt + p - sub) % p;
        }
        r.normalize();
    }
    q = FpPoly{p, std::move(qd)};
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& b) {
    FpPoly q, r;
    fp_divmod(a, b, q, r);
    return r;
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = fp_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return fp_make_monic(x);
}

void fp_xgcd(const FpPoly& a, const FpPoly& b, FpPoly& g, FpPoly& s, FpPoly& t) {
    uint64_t p = a.p;
    FpPoly r0 = a, r1 = b;
    FpPoly s0{p, {1}}, s1{p, {}}, t0{p, {}}, t1{p, {1}};
    while (!r1.is_zero()) {
        FpPoly q, r;
        fp_divmod(r0, r1, q, r);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1));
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    // normalize gcd monic
    if (!r0.is_zero() && r0.c.back() != 1) {
        uint64_t inv = invmod_u64(r0.c.back(), p);
        r0 = fp_mul_scalar(r0, inv);
        s0 = fp_mul_scalar(s0, inv);
        t0 = fp_mul_scalar(t0, inv);
    }
    g = std::move(r0);
    s = std::move(s0);
    t = std::move(t0);
}

FpPoly fp_powmod(const FpPoly& base, const BigInt& e, const FpPoly& mod) {
    FpPoly acc{base.p, {1}};
    FpPoly b = fp_rem(base, mod);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (size_t i = bits; i-- > 0;) {
        acc = fp_rem(fp_mul(acc, acc), mod);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = fp_rem(fp_mul(acc, b), mod);
    }
    return acc;
}

FpPoly fp_derivative(const FpPoly& a) {
    FpPoly out;
    out.p = a.p;
    if (a.c.size() <= 1) return out;
    out.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i)
        out.c[i - 1] = (uint64_t)((unsigned __int128)a.c[i] * (i % a.p) % a.p);
    out.normalize();
    return out;
}

uint64_t fp_eval(const FpPoly& a, uint64_t x) {
    uint64_t acc = 0;
    for (size_t i = a.c.size(); i-- > 0;)
        acc = (mulmod_u64(acc, x, a.p) + a.c[i]) % a.p;
    return acc;
}

// ---------------------------------------------------------------------------
// Factorization over F_p

namespace {

// p-th root of a polynomial all of whose exponents are multiples of p
// (coefficients are fixed by Frobenius over the prime field).
FpPoly fp_pth_root(const FpPoly& f) {
    FpPoly out;
    out.p = f.p;
    out.c.resize(f.c.size() / (size_t)f.p + 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        if (i % f.p != 0) throw DomainError("fp_pth_root: not a p-th power");
        out.c[i / f.p] = f.c[i];
    }
    out.normalize();
    return out;
}

void fp_squarefree_parts(const FpPoly& f, int mult_scale,
                         std::vector<std::pair<FpPoly, int>>& out) {
    FpPoly a = fp_make_monic(f);
    if (a.degree() < 1) return;
    FpPoly d = fp_derivative(a);
    if (d.is_zero()) {
        fp_squarefree_parts(fp_pth_root(a), mult_scale * (int)a.p, out);
        return;
    }
    FpPoly g = fp_gcd(a, d);
    FpPoly w;
    {
        FpPoly q, r;
        fp_divmod(a, g, q, r);
        w = fp_make_monic(q);
    }
    int i = 1;
    while (w.degree() >= 1) {
        FpPoly y = fp_gcd(w, g);
        FpPoly z;
        {
            FpPoly q, r;
            fp_divmod(w, y, q, r);
            z = fp_make_monic(q);
        }
        if (z.degree() >= 1) out.push_back({z, mult_scale * i});
        w = std::move(y);
        {
            FpPoly q, r;
            fp_divmod(g, w, q, r);
            g = std::move(q);
        }
        ++i;
    }
    if (g.degree() >= 1) fp_squarefree_parts(fp_pth_root(g), mult_scale * (int)g.p, out);
}

// distinct-degree: returns (product of irreducibles of degree d, d)
std::vector<std::pair<FpPoly, int>> fp_ddf(const FpPoly& fin) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly f = fp_make_monic(fin);
    uint64_t p = f.p;
    FpPoly x{p, {0, 1}};
    FpPoly h = fp_rem(x, f); // x^{p^0}; will be raised step by step
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = fp_powmod(h, BigInt((unsigned long)p), f);
        FpPoly g = fp_gcd(f, fp_sub(h, x));
        if (g.degree() >= 1) {
            out.push_back({g, d});
            FpPoly q, r;
            fp_divmod(f, g, q, r);
            f = fp_make_monic(q);
            h = fp_rem(h, f);
        }
    }
    if (f.degree() >= 1) out.push_back({f, f.degree()});
    return out;
}

// equal-degree splitting (Cantor-Zassenhaus; trace map in characteristic 2)
void fp_edf(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(fp_make_monic(f));
        return;
    }
    uint64_t p = f.p;
    FpPoly split;
    while (true) {
        // random polynomial of degree < deg f
        FpPoly u;
        u.p = p;
        u.c.resize((size_t)f.degree());
        for (auto& x : u.c) x = rng() % p;
        u.normalize();
        if (u.degree() < 1) continue;
        FpPoly w;
        if (p == 2) {
            // trace map u + u^2 + u^4 + ... + u^{2^{d-1}}
            w = fp_rem(u, f);
            FpPoly acc = w;
            for (int i = 1; i < d; ++i) {
                acc = fp_rem(fp_mul(acc, acc), f);
                w = fp_add(w, acc);
            }
        } else {
            BigInt e;
            mpz_ui_pow_ui(e.get_mpz_t(), (unsigned long)p, (unsigned long)d);
            e = (e - 1) / 2;
            w = fp_sub(fp_powmod(u, e, f), FpPoly{p, {1}});
        }
        FpPoly g = fp_gcd(f, w);
        if (g.degree() >= 1 && g.degree() < f.degree()) {
            split = std::move(g);
            break;
        }
    }
    FpPoly q, r;
    fp_divmod(f, split, q, r);
    fp_edf(split, d, rng, out);
    fp_edf(fp_make_monic(q), d, rng, out);
}

std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f, std::mt19937_64& rng) {
    std::vector<FpPoly> out;
    for (auto& [prod, d] : fp_ddf(f)) fp_edf(prod, d, rng, out);
    std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.c < b.c;
    });
    return out;
}

uint64_t fp_seed(const FpPoly& f) {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ f.p;
    for (uint64_t x : f.c) h = (h * 0x100000001b3ull) ^ x;
    return h;
}

} // namespace

std::vector<FpFactor> fp_factor(const FpPoly& fin) {
    if (fin.is_zero()) throw DomainError("fp_factor of zero polynomial");
    std::vector<FpFactor> out;
    std::mt19937_64 rng(fp_seed(fin));
    std::vector<std::pair<FpPoly, int>> parts;
    fp_squarefree_parts(fin, 1, parts);
    for (auto& [sf, mult] : parts)
        for (auto& irr : fp_factor_squarefree(sf, rng))
            out.push_back({irr, mult});
    std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        return a.poly.c < b.poly.c;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting
//
// Polynomials modulo m are dense BigInt vectors with entries in [0, m).

namespace {

using MVec = std::vector<BigInt>;

void mv_normalize(MVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

MVec mv_reduce(const ZPoly& f, const BigInt& m) {
    MVec out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) {
        mpz_mod(out[i].get_mpz_t(), f.c[i].get_mpz_t(), m.get_mpz_t());
    }
    mv_normalize(out);
    return out;
}

MVec mv_rereduce(const MVec& f, const BigInt& m) {
    MVec out(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        mpz_mod(out[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    mv_normalize(out);
    return out;
}

MVec mv_from_fp(const FpPoly& f) {
    MVec out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = (unsigned long)f.c[i];
    return out;
}

MVec mv_add(const MVec& a, const MVec& b, const BigInt& m) {
    MVec out(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) {
        out[i] += b[i];
        if (out[i] >= m) out[i] -= m;
    }
    mv_normalize(out);
    return out;
}

MVec mv_sub(const MVec& a, const MVec& b, const BigInt& m) {
    MVec out(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) {
        out[i] -= b[i];
        if (out[i] < 0) out[i] += m;
    }
    mv_normalize(out);
    return out;
}

MVec mv_mul(const MVec& a, const MVec& b, const BigInt& m) {
    if (a.empty() || b.empty()) return {};
    MVec out(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    for (auto& x : out) mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    mv_normalize(out);
    return out;
}

// division by a monic divisor, all mod m
void mv_divmod_monic(const MVec& a, const MVec& h, const BigInt& m, MVec& q, MVec& r) {
    r = a;
    int dh = (int)h.size() - 1;
    if ((int)r.size() - 1 < dh) {
        q.clear();
        return;
    }
    q.assign(r.size() - h.size() + 1, BigInt(0));
    for (int i = (int)r.size() - 1; i >= dh; --i) {
        BigInt coef = r[(size_t)i];
        if (coef == 0) continue;
        q[(size_t)(i - dh)] = coef;
        for (int j = 0; j <= dh; ++j) {
            BigInt& tgt = r[(size_t)(i - dh + j)];
            tgt -= coef * h[(size_t)j];
            mpz_mod(tgt.get_mpz_t(), tgt.get_mpz_t(), m.get_mpz_t());
        }
    }
    mv_normalize(r);
    mv_normalize(q);
}

MVec mv_rem_monic(const MVec& a, const MVec& h, const BigInt& m) {
    MVec q, r;
    mv_divmod_monic(a, h, m, q, r);
    return r;
}

ZPoly mv_symmetric(const MVec& a, const BigInt& m) {
    std::vector<BigInt> out(a.size());
    BigInt half = m / 2;
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] > half ? a[i] - m : a[i];
    return ZPoly(std::move(out));
}

// One quadratic Hensel step: from modulus m to m2 (m | m2, m2 | m^2).
// fmod: the target polynomial modulo m2.  g, h monic with f = g h (mod m),
// s g + t h = 1 (mod m), deg s < deg h, deg t < deg g.
void hensel_step(const MVec& fmod, MVec& g, MVec& h, MVec& s, MVec& t,
                 const BigInt& m2) {
    MVec e = mv_sub(fmod, mv_mul(g, h, m2), m2);
    MVec dh = mv_rem_monic(mv_mul(s, e, m2), h, m2);
    // dg = (e - g*dh) / h, exact
    MVec num = mv_sub(e, mv_mul(g, dh, m2), m2);
    MVec dg, rr;
    mv_divmod_monic(num, h, m2, dg, rr);
    if (!rr.empty()) throw CertificateError("hensel_step: non-exact division (g)");
    g = mv_add(g, dg, m2);
    h = mv_add(h, dh, m2);
    // refresh Bezout data
    MVec b = mv_sub(mv_add(mv_mul(s, g, m2), mv_mul(t, h, m2), m2),
                    MVec{BigInt(1)}, m2);
    MVec ds = mv_rem_monic(mv_mul(s, b, m2), h, m2);
    for (auto& x : ds) { x = -x; mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m2.get_mpz_t()); }
    mv_normalize(ds);
    MVec num2 = mv_sub(MVec{}, mv_add(b, mv_mul(g, ds, m2), m2), m2);
    MVec dt;
    mv_divmod_monic(num2, h, m2, dt, rr);
    if (!rr.empty()) throw CertificateError("hensel_step: non-exact division (t)");
    s = mv_add(s, ds, m2);
    t = mv_add(t, dt, m2);
}

// Lift the pair (g, h) with Bezout data from p to the modulus `target`,
// where fmod_at(m) supplies the target polynomial modulo m.
template <typename FModAt>
void hensel_lift_pair(FModAt&& fmod_at, MVec& g, MVec& h, MVec& s, MVec& t,
                      const BigInt& p, const BigInt& target) {
    BigInt m = p;
    while (m < target) {
        BigInt m2 = m * m;
        if (m2 > target) m2 = target;
        MVec fmod = fmod_at(m2);
        hensel_step(fmod, g, h, s, t, m2);
        m = m2;
    }
}

// Multifactor lift: factors are monic mod p, pairwise coprime, and
// fmod_at(m) = the monic target mod m.  Returns monic lifts mod `target`.
void hensel_lift_tree(const std::vector<FpPoly>& modp_factors, size_t lo, size_t hi,
                      const MVec& fmod_target, const BigInt& p, const BigInt& target,
                      std::vector<MVec>& out) {
    if (hi - lo == 1) {
        out[lo] = mv_rereduce(fmod_target, target);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    FpPoly G{(uint64_t)p.get_ui(), {1}};
    FpPoly H{(uint64_t)p.get_ui(), {1}};
    for (size_t i = lo; i < mid; ++i) G = fp_mul(G, modp_factors[i]);
    for (size_t i = mid; i < hi; ++i) H = fp_mul(H, modp_factors[i]);
    FpPoly gg, ss, tt;
    fp_xgcd(G, H, gg, ss, tt);
    if (gg.degree() != 0) throw CertificateError("hensel tree: factors not coprime mod p");
    MVec g = mv_from_fp(G), h = mv_from_fp(H), s = mv_from_fp(ss), t = mv_from_fp(tt);
    auto fmod_at = [&](const BigInt& m) { return mv_rereduce(fmod_target, m); };
    hensel_lift_pair(fmod_at, g, h, s, t, p, target);
    hensel_lift_tree(modp_factors, lo, mid, g, p, target, out);
    hensel_lift_tree(modp_factors, mid, hi, h, p, target, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus driver

const uint64_t kFactorPrimes[] = {
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
    151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227,
    229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293,
};

// Factor a primitive squarefree polynomial of degree >= 1 with f(0) != 0.
// Appends irreducible primitive factors to out; throws PartialFactorization
// via the caller on budget overflow (signalled by return value false).
bool factor_squarefree_z(const ZPoly& fin, const FactorBudget& budget,
                         std::vector<ZPoly>& out, std::vector<int>& leftover_degrees) {
    ZPoly f = fin;
    if (f.degree() == 1) {
        out.push_back(f);
        return true;
    }
    // choose a prime keeping f squarefree, minimizing the modular factor count
    std::vector<FpPoly> best;
    uint64_t best_p = 0;
    int tried = 0;
    for (uint64_t p : kFactorPrimes) {
        if (mpz_divisible_ui_p(f.lc().get_mpz_t(), (unsigned long)p)) continue;
        FpPoly fp = fp_reduce(f, p);
        if (fp.degree() != f.degree()) continue;
        if (fp_gcd(fp, fp_derivative(fp)).degree() != 0) continue;
        std::mt19937_64 rng(fp_seed(fp));
        std::vector<FpPoly> fac = fp_factor_squarefree(fp_make_monic(fp), rng);
        if (best.empty() || fac.size() < best.size()) {
            best = std::move(fac);
            best_p = p;
        }
        if (++tried >= 5 || best.size() == 1) break;
    }
    if (best.empty()) throw CertificateError("no usable factorization prime found");
    if (best.size() == 1) {
        out.push_back(f);
        return true;
    }

    // Landau-Mignotte style bound: coefficients of lc(f) * (any monic-scaled
    // factor) are below 2^(deg f) * |f|_2 * |lc(f)|.
    BigInt bound = f.l2_norm_bound() * ::abs(f.lc());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), (mp_bitcnt_t)(f.degree() + 1));
    BigInt p_big((unsigned long)best_p);
    BigInt target = p_big;
    while (target <= 2 * bound) target *= p_big;

    // lift the monic factorization of f / lc(f) (a p-adic unit times f)
    std::vector<MVec> lifted(best.size());
    {
        BigInt lc_inv;
        mpz_invert(lc_inv.get_mpz_t(), f.lc().get_mpz_t(), target.get_mpz_t());
        MVec fhat = mv_reduce(f.mul_scalar(lc_inv), target);
        hensel_lift_tree(best, 0, best.size(), fhat, p_big, target, lifted);
    }

    // subset recombination
    std::vector<size_t> pool(best.size());
    std::iota(pool.begin(), pool.end(), (size_t)0);
    ZPoly remaining = f;
    uint64_t tests = 0;
    bool overflow = false;

    auto candidate_of = [&](const std::vector<size_t>& subset) {
        MVec acc{remaining.lc() >= 0 ? BigInt(remaining.lc()) : BigInt(remaining.lc() + target)};
        mpz_mod(acc[0].get_mpz_t(), acc[0].get_mpz_t(), target.get_mpz_t());
        for (size_t idx : subset) acc = mv_mul(acc, lifted[idx], target);
        return mv_symmetric(acc, target).primitive_part();
    };

    for (size_t size = 1; !overflow && pool.size() > 0 && size <= pool.size(); ) {
        if ((int)size > budget.max_subset_size) {
            overflow = true;
            break;
        }
        if (2 * size > pool.size()) {
            // remaining is irreducible
            break;
        }
        // iterate over subsets of `size` indices into pool
        std::vector<size_t> comb(size);
        std::iota(comb.begin(), comb.end(), (size_t)0);
        bool found = false;
        BigInt tc0 = remaining.c[0]; // nonzero by precondition
        BigInt lc_tc = remaining.lc() * tc0;
        while (true) {
            if (++tests > budget.max_subset_tests) {
                overflow = true;
                break;
            }
            // quick test on the constant coefficient
            BigInt prod = remaining.lc();
            for (size_t i : comb) prod = prod * lifted[pool[i]][0] % target;
            mpz_mod(prod.get_mpz_t(), prod.get_mpz_t(), target.get_mpz_t());
            if (prod > target / 2) prod -= target;
            bool quick_ok = prod != 0 && mpz_divisible_p(lc_tc.get_mpz_t(), prod.get_mpz_t());
            if (quick_ok) {
                std::vector<size_t> subset;
                for (size_t i : comb) subset.push_back(pool[i]);
                ZPoly cand = candidate_of(subset);
                if (cand.degree() >= 1) {
                    if (auto quo = divide_exact_z(remaining, cand)) {
                        out.push_back(cand);
                        remaining = quo->primitive_part();
                        std::vector<size_t> np;
                        size_t ci = 0;
                        for (size_t i = 0; i < pool.size(); ++i) {
                            if (ci < comb.size() && comb[ci] == i) { ++ci; continue; }
                            np.push_back(pool[i]);
                        }
                        pool = std::move(np);
                        found = true;
                        break;
                    }
                }
            }
            // next combination
            size_t k = size;
            while (k > 0 && comb[k - 1] == pool.size() - size + (k - 1)) --k;
            if (k == 0) break;
            ++comb[k - 1];
            for (size_t j = k; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found && !overflow) ++size;
        if (remaining.degree() == 0) break;
    }

    if (overflow) {
        for (size_t i : pool) leftover_degrees.push_back(best[i].degree());
        out.push_back(remaining); // caller treats the last entry as unresolved
        return false;
    }
    if (remaining.degree() >= 1) out.push_back(remaining);
    return true;
}

} // namespace

Factorization factor_over_Z(const ZPoly& fin, const FactorBudget& budget) {
    if (fin.is_zero()) throw DomainError("factor_over_Z of zero polynomial");
    Factorization result;
    BigInt cont = fin.content();
    if (fin.lc() < 0) cont = -cont;
    result.content = BigRat(cont);
    ZPoly f = fin.primitive_part();
    if (f.degree() < 1) return result;

    // strip powers of x
    size_t v = 0;
    while (v < f.c.size() && f.c[v] == 0) ++v;
    if (v > 0) {
        std::vector<BigInt> nc(f.c.begin() + (long)v, f.c.end());
        f = ZPoly(std::move(nc));
        result.factors.push_back({ZPoly::x_power(1), (int)v});
    }
    if (f.degree() < 1) return result;

    for (auto& [part, mult] : squarefree_decompose(f)) {
        std::vector<ZPoly> irr;
        std::vector<int> leftover_degs;
        bool ok = factor_squarefree_z(part, budget, irr, leftover_degs);
        if (!ok) {
            ZPoly unresolved = irr.back();
            irr.pop_back();
            for (auto& g : irr) result.factors.push_back({g, mult});
            result.complete = false;
            throw PartialFactorization(result, unresolved, mult, leftover_degs);
        }
        for (auto& g : irr) result.factors.push_back({g, mult});
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const ZFactor& a, const ZFactor& b) {
                  if (a.poly.degree() != b.poly.degree())
                      return a.poly.degree() < b.poly.degree();
                  return a.poly.c < b.poly.c;
              });
    return result;
}

bool certify_irreducible_by_degrees(const ZPoly& fin, int num_primes,
                                    std::vector<uint64_t>* primes_used) {
    ZPoly f = fin.primitive_part();
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    std::vector<bool> achievable(n + 1, true);
    int used = 0;
    for (uint64_t p : kFactorPrimes) {
        if (used >= num_primes) break;
        if (mpz_divisible_ui_p(f.lc().get_mpz_t(), (unsigned long)p)) continue;
        FpPoly fp = fp_reduce(f, p);
        if (fp.degree() != n) continue;
        if (fp_gcd(fp, fp_derivative(fp)).degree() != 0) continue;
        std::mt19937_64 rng(fp_seed(fp));
        std::vector<FpPoly> fac = fp_factor_squarefree(fp_make_monic(fp), rng);
        // subset-sum of modular degrees
        std::vector<bool> sums(n + 1, false);
        sums[0] = true;
        for (auto& g : fac) {
            int d = g.degree();
            for (int s = n; s >= d; --s)
                if (sums[(size_t)(s - d)]) sums[(size_t)s] = true;
        }
        for (int s = 0; s <= n; ++s)
            achievable[(size_t)s] = achievable[(size_t)s] && sums[(size_t)s];
        if (primes_used) primes_used->push_back(p);
        ++used;
        bool only_trivial = true;
        for (int s = 1; s < n; ++s)
            if (achievable[(size_t)s]) { only_trivial = false; break; }
        if (only_trivial) return true;
    }
    bool only_trivial = true;
    for (int s = 1; s < n; ++s)
        if (achievable[(size_t)s]) { only_trivial = false; break; }
    return only_trivial;
}

} // namespace legv::exact

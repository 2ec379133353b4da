#include "exact/sturm.hpp"

#include <algorithm>

namespace legv::exact {

namespace {

using Chain = std::vector<std::vector<BigRat>>; // dense coefficient vectors

int sign_of(const BigRat& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

std::vector<BigRat> dense(const ExactPoly& f, int var) {
    return f.univariate_coeffs(var);
}

void trim(std::vector<BigRat>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<BigRat> neg_rem(const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
    std::vector<BigRat> r = a;
    int db = (int)b.size() - 1;
    BigRat inv = 1 / b.back();
    while ((int)r.size() - 1 >= db) {
        int dr = (int)r.size() - 1;
        BigRat c = r.back() * inv;
        for (int j = 0; j <= db; ++j) r[(size_t)(dr - db + j)] -= c * b[(size_t)j];
        trim(r);
    }
    for (auto& x : r) x = -x;
    return r;
}

// scale by the positive reciprocal of the content; sign pattern unchanged
void normalize_positive(std::vector<BigRat>& f) {
    if (f.empty()) return;
    BigInt num_gcd = 0, den_lcm = 1;
    for (auto& x : f) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), mpq_numref(x.get_mpq_t()));
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), mpq_denref(x.get_mpq_t()));
    }
    if (num_gcd == 0) return;
    BigRat scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (auto& x : f) x *= scale;
}

Chain sturm_chain(std::vector<BigRat> f) {
    Chain ch;
    trim(f);
    normalize_positive(f);
    ch.push_back(f);
    if (f.size() <= 1) return ch;
    std::vector<BigRat> d((size_t)f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * (long)i;
    normalize_positive(d);
    ch.push_back(d);
    while (ch.back().size() > 1) {
        auto r = neg_rem(ch[ch.size() - 2], ch.back());
        trim(r);
        if (r.empty()) break;
        normalize_positive(r);
        ch.push_back(std::move(r));
    }
    return ch;
}

BigRat eval_dense(const std::vector<BigRat>& f, const BigRat& x) {
    BigRat acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

int variations_at(const Chain& ch, const SturmBound& x, int at_infinity_sign) {
    int var = 0, last = 0;
    for (const auto& f : ch) {
        if (f.empty()) continue;
        int s;
        if (x.has_value()) {
            s = sign_of(eval_dense(f, *x));
        } else {
            // sign at -inf (at_infinity_sign = -1) or +inf (+1)
            s = sign_of(f.back());
            if (at_infinity_sign < 0 && (f.size() - 1) % 2 == 1) s = -s;
        }
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

std::vector<BigRat> squarefree_dense(const ExactPoly& f, int var) {
    ExactPoly g = ExactPoly::gcd_univ(f, f.derivative(var), var);
    if (g.degree(var) < 1) return dense(f, var);
    return dense(ExactPoly::divexact(f, g, var), var);
}

// Cauchy-style bound: all real roots lie in (-B, B).
BigRat root_bound(const std::vector<BigRat>& f) {
    BigRat m = 0;
    for (size_t i = 0; i + 1 < f.size(); ++i) {
        BigRat a = abs(f[i] / f.back());
        if (a > m) m = a;
    }
    return m + 2;
}

int count_chain(const Chain& ch, const SturmBound& lo, const SturmBound& hi) {
    int vl = variations_at(ch, lo, -1);
    int vh = variations_at(ch, hi, 1);
    return vl - vh;
}

} // namespace

int sturm_count(const ExactPoly& f, const SturmBound& lo, const SturmBound& hi, int var) {
    if (f.is_zero()) throw DomainError("sturm_count of zero polynomial");
    auto sf = squarefree_dense(f, var);
    if (sf.size() <= 1) return 0;
    Chain ch = sturm_chain(sf);
    return count_chain(ch, lo, hi);
}

RootIsolation sturm_isolate(const ExactPoly& f, const SturmBound& lo, const SturmBound& hi,
                            int var) {
    RootIsolation out;
    if (f.is_zero()) throw DomainError("sturm_isolate of zero polynomial");
    auto sf = squarefree_dense(f, var);
    if (sf.size() <= 1) return out;
    Chain ch = sturm_chain(sf);
    out.count = count_chain(ch, lo, hi);
    if (out.count == 0) return out;
    BigRat B = root_bound(sf);
    BigRat a = lo.has_value() ? *lo : -B;
    BigRat b = hi.has_value() ? *hi : B;
    if (a < -B) a = -B;
    if (b > B) b = B;
    // recursive bisection over (a, b]
    struct Seg { BigRat a, b; int n; };
    std::vector<Seg> stack{{a, b, count_chain(ch, a, b)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1) {
            out.intervals.push_back({s.a, s.b});
            continue;
        }
        BigRat m = (s.a + s.b) / 2;
        // avoid landing on a root: perturb by checking the value
        while (eval_dense(sf, m) == 0) m = (s.a + m) / 2;
        int nl = count_chain(ch, s.a, m);
        stack.push_back({s.a, m, nl});
        stack.push_back({m, s.b, s.n - nl});
    }
    std::sort(out.intervals.begin(), out.intervals.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

std::pair<BigRat, BigRat> refine_root(const ExactPoly& f, std::pair<BigRat, BigRat> iv,
                                      const BigRat& width, int var) {
    auto sf = squarefree_dense(f, var);
    int sa = sign_of(eval_dense(sf, iv.first));
    int sb = sign_of(eval_dense(sf, iv.second));
    if (sa == 0) return {iv.first, iv.first};
    if (sb == 0) return {iv.second, iv.second};
    if (sa == sb) throw DomainError("refine_root: interval does not bracket a sign change");
    while (iv.second - iv.first > width) {
        BigRat m = (iv.first + iv.second) / 2;
        int sm = sign_of(eval_dense(sf, m));
        if (sm == 0) return {m, m};
        if (sm == sa) iv.first = m;
        else iv.second = m;
    }
    return iv;
}

bool PrimeValuation::has_negative_slope() const {
    for (auto& [v, m] : root_valuations)
        if (v < 0) return true;
    return false;
}

BigRat PrimeValuation::valuation_sum() const {
    BigRat s = 0;
    for (auto& [v, m] : root_valuations) s += v * BigRat(m);
    return s;
}

PrimeValuation newton_valuations(const ZPoly& f, uint64_t p) {
    if (f.is_zero()) throw DomainError("newton_valuations of zero polynomial");
    PrimeValuation out;
    out.p = p;
    int n = f.degree();
    if (n == 0) return out;
    // points (i, v_p(a_i)) for a_i != 0; lower convex hull from i=0 to i=n
    std::vector<std::pair<long, long>> pts;
    BigInt t;
    for (int i = 0; i <= n; ++i) {
        if (f.c[(size_t)i] == 0) continue;
        long v = 0;
        t = f.c[(size_t)i];
        while (mpz_divisible_ui_p(t.get_mpz_t(), (unsigned long)p)) {
            mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), (unsigned long)p);
            ++v;
        }
        pts.push_back({i, v});
    }
    // Andrew monotone chain, lower hull
    std::vector<std::pair<long, long>> hull;
    for (auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // pop b if it is above segment a-pt (keep lower hull)
            long cross = (b.first - a.first) * (pt.second - a.second) -
                         (pt.first - a.first) * (b.second - a.second);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    // slopes between consecutive hull vertices; root valuations are the
    // negated slopes, each with multiplicity = horizontal length
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        long dx = hull[i + 1].first - hull[i].first;
        long dy = hull[i + 1].second - hull[i].second;
        BigRat val(-dy, dx);
        val.canonicalize();
        out.root_valuations.push_back({val, (int)dx});
    }
    std::sort(out.root_valuations.begin(), out.root_valuations.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace legv::exact

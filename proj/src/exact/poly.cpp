#include "exact/poly.hpp"

#include <algorithm>
#include <sstream>

namespace legv::exact {

bool is_pow2_up_to_sign(const BigInt& v) {
    if (v == 0) return false;
    BigInt a = ::abs(v);
    return mpz_popcount(a.get_mpz_t()) == 1;
}

void ExactPoly::put(unsigned e0, unsigned e1, const BigRat& v) {
    if (v == 0) return;
    auto key = Mono{e0, e1};
    auto it = c_.find(key);
    if (it == c_.end()) {
        c_.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

ExactPoly ExactPoly::constant(const BigRat& c) {
    ExactPoly p;
    p.put(0, 0, c);
    return p;
}

ExactPoly ExactPoly::variable(int var) {
    ExactPoly p;
    p.put(var == 0 ? 1 : 0, var == 0 ? 0 : 1, 1);
    return p;
}

ExactPoly ExactPoly::from_coeffs(const std::vector<BigRat>& c, int var) {
    ExactPoly p;
    for (unsigned i = 0; i < c.size(); ++i)
        if (c[i] != 0) p.put(var == 0 ? i : 0, var == 0 ? 0 : i, c[i]);
    return p;
}

ExactPoly ExactPoly::monomial(const BigRat& c, unsigned e0, unsigned e1) {
    ExactPoly p;
    p.put(e0, e1, c);
    return p;
}

bool ExactPoly::is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == Mono{0, 0});
}

bool ExactPoly::is_univariate_in(int var) const {
    for (auto& [m, v] : c_)
        if ((var == 0 ? m.second : m.first) != 0) return false;
    return true;
}

int ExactPoly::degree(int var) const {
    int d = -1;
    for (auto& [m, v] : c_)
        d = std::max(d, (int)(var == 0 ? m.first : m.second));
    return d;
}

BigRat ExactPoly::coeff(unsigned e0, unsigned e1) const {
    auto it = c_.find(Mono{e0, e1});
    return it == c_.end() ? BigRat(0) : it->second;
}

ExactPoly ExactPoly::coeff_of(int var, unsigned k) const {
    ExactPoly out;
    out.vars_ = vars_;
    for (auto& [m, v] : c_) {
        if (var == 0 && m.first == k) out.put(0, m.second, v);
        if (var == 1 && m.second == k) out.put(m.first, 0, v);
    }
    return out;
}

ExactPoly ExactPoly::leading_coeff(int var) const {
    int d = degree(var);
    if (d < 0) return ExactPoly();
    return coeff_of(var, (unsigned)d);
}

std::vector<BigRat> ExactPoly::univariate_coeffs(int var) const {
    if (!is_univariate_in(var))
        throw DomainError("univariate_coeffs on multivariate polynomial");
    std::vector<BigRat> out((size_t)std::max(0, degree(var) + 1));
    for (auto& [m, v] : c_) out[var == 0 ? m.first : m.second] = v;
    return out;
}

ExactPoly ExactPoly::operator+(const ExactPoly& o) const {
    ExactPoly out = *this;
    for (auto& [m, v] : o.c_) out.put(m.first, m.second, v);
    return out;
}

ExactPoly ExactPoly::operator-(const ExactPoly& o) const {
    ExactPoly out = *this;
    for (auto& [m, v] : o.c_) out.put(m.first, m.second, -v);
    return out;
}

ExactPoly ExactPoly::operator-() const {
    ExactPoly out;
    out.vars_ = vars_;
    for (auto& [m, v] : c_) out.c_.emplace(m, -v);
    return out;
}

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
    ExactPoly out;
    out.vars_ = vars_;
    BigRat tmp;
    for (auto& [ma, va] : c_)
        for (auto& [mb, vb] : o.c_) {
            tmp = va * vb;
            out.put(ma.first + mb.first, ma.second + mb.second, tmp);
        }
    return out;
}

ExactPoly ExactPoly::mul_scalar(const BigRat& s) const {
    if (s == 0) return ExactPoly();
    ExactPoly out;
    out.vars_ = vars_;
    for (auto& [m, v] : c_) out.c_.emplace(m, v * s);
    return out;
}

ExactPoly ExactPoly::mul_mono(const BigRat& s, unsigned e0, unsigned e1) const {
    if (s == 0) return ExactPoly();
    ExactPoly out;
    out.vars_ = vars_;
    for (auto& [m, v] : c_)
        out.c_.emplace(Mono{m.first + e0, m.second + e1}, v * s);
    return out;
}

ExactPoly ExactPoly::pow(unsigned e) const {
    ExactPoly acc = constant(1), base = *this;
    acc.vars_ = vars_;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

ExactPoly ExactPoly::derivative(int var) const {
    ExactPoly out;
    out.vars_ = vars_;
    for (auto& [m, v] : c_) {
        unsigned e = var == 0 ? m.first : m.second;
        if (e == 0) continue;
        out.put(var == 0 ? m.first - 1 : m.first,
                var == 0 ? m.second : m.second - 1, v * (long)e);
    }
    return out;
}

ExactPoly ExactPoly::eval_var(int var, const BigRat& x) const {
    // Horner per residual exponent
    ExactPoly out;
    out.vars_ = vars_;
    for (auto& [m, v] : c_) {
        unsigned e = var == 0 ? m.first : m.second;
        BigRat pw = 1;
        BigRat base = x;
        unsigned ee = e;
        while (ee) {
            if (ee & 1) pw *= base;
            ee >>= 1;
            if (ee) base *= base;
        }
        out.put(var == 0 ? 0 : m.first, var == 0 ? m.second : 0, v * pw);
    }
    return out;
}

BigRat ExactPoly::eval(const BigRat& x) const {
    ExactPoly r = eval_var(0, x);
    if (!r.is_constant()) throw DomainError("eval on multivariate polynomial");
    return r.constant_term();
}

BigRat ExactPoly::eval2(const BigRat& x, const BigRat& y) const {
    ExactPoly r = eval_var(0, x).eval_var(1, y);
    return r.constant_term();
}

ExactPoly ExactPoly::subst(int var, const ExactPoly& g) const {
    ExactPoly out;
    out.vars_ = vars_;
    // group by exponent in var, Horner over the sorted exponent list
    std::map<unsigned, ExactPoly> groups;
    for (auto& [m, v] : c_) {
        unsigned e = var == 0 ? m.first : m.second;
        ExactPoly& slot = groups[e];
        slot.vars_ = vars_;
        slot.put(var == 0 ? 0 : m.first, var == 0 ? m.second : 0, v);
    }
    ExactPoly acc;
    int last = -1;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        if (last >= 0) {
            unsigned gap = (unsigned)last - it->first;
            for (unsigned i = 0; i < gap; ++i) acc = acc * g;
        }
        acc = acc + it->second;
        last = (int)it->first;
    }
    if (last > 0)
        for (int i = 0; i < last; ++i) acc = acc * g;
    acc.vars_ = vars_;
    return acc;
}

ExactPoly ExactPoly::swap_vars() const {
    ExactPoly out;
    out.vars_ = {vars_[1], vars_[0]};
    for (auto& [m, v] : c_) out.c_.emplace(Mono{m.second, m.first}, v);
    return out;
}

void ExactPoly::divmod(const ExactPoly& f, const ExactPoly& g, int var,
                       ExactPoly& quo, ExactPoly& rem) {
    if (g.is_zero()) throw DomainError("division by zero polynomial");
    if (!f.is_univariate_in(var) || !g.is_univariate_in(var))
        throw DomainError("divmod requires univariate polynomials");
    std::vector<BigRat> a = f.univariate_coeffs(var);
    std::vector<BigRat> b = g.univariate_coeffs(var);
    int db = (int)b.size() - 1;
    std::vector<BigRat> q;
    if ((int)a.size() - 1 >= db) q.assign(a.size() - b.size() + 1, BigRat(0));
    BigRat inv_lb = 1 / b[(size_t)db];
    for (int i = (int)a.size() - 1; i >= db; --i) {
        if (a[(size_t)i] == 0) continue;
        BigRat c = a[(size_t)i] * inv_lb;
        q[(size_t)(i - db)] = c;
        for (int j = 0; j <= db; ++j) a[(size_t)(i - db + j)] -= c * b[(size_t)j];
    }
    quo = from_coeffs(q, var);
    if (db > 0) a.resize((size_t)db);
    else a.clear();
    rem = from_coeffs(a, var);
    quo.vars_ = f.vars_;
    rem.vars_ = f.vars_;
}

ExactPoly ExactPoly::rem(const ExactPoly& f, const ExactPoly& g, int var) {
    ExactPoly q, r;
    divmod(f, g, var, q, r);
    return r;
}

ExactPoly ExactPoly::divexact(const ExactPoly& f, const ExactPoly& g, int var) {
    ExactPoly q, r;
    divmod(f, g, var, q, r);
    if (!r.is_zero()) throw DomainError("divexact: nonzero remainder");
    return q;
}

ExactPoly ExactPoly::gcd_univ(const ExactPoly& f, const ExactPoly& g, int var) {
    ExactPoly a = f, b = g;
    while (!b.is_zero()) {
        ExactPoly r = rem(a, b, var);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    // monic normalization
    BigRat lc = a.univariate_coeffs(var).back();
    return a.mul_scalar(1 / lc);
}

BigRat ExactPoly::content_rational() const {
    if (c_.empty()) return BigRat(0);
    BigInt num_gcd = 0, den_lcm = 1;
    for (auto& [m, v] : c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                mpq_numref(v.get_mpq_t()));
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                mpq_denref(v.get_mpq_t()));
    }
    BigRat c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

std::pair<BigRat, ExactPoly> ExactPoly::primitive_z() const {
    if (c_.empty()) return {BigRat(0), ExactPoly()};
    BigRat c = content_rational();
    // sign: make the lexicographically-leading coefficient positive
    const BigRat& lead = c_.rbegin()->second;
    if (lead < 0) c = -c;
    ExactPoly p = mul_scalar(1 / c);
    return {c, p};
}

std::string ExactPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [m, v] = *it;
        BigRat av = ::abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        bool has_var = m.first || m.second;
        if (!has_var || av != 1) os << av.get_str();
        if (m.first) {
            if (av != 1) os << "*";
            os << vars_[0];
            if (m.first > 1) os << "^" << m.first;
        }
        if (m.second) {
            if (m.first || av != 1) os << "*";
            os << vars_[1];
            if (m.second > 1) os << "^" << m.second;
        }
    }
    return os.str();
}

void ExactPoly::set_var_names(std::string v0, std::string v1) {
    vars_ = {std::move(v0), std::move(v1)};
}

// ---------------------------------------------------------------------------
// Subresultant resultant
//
// The pseudo-remainder sequence is run with dense coefficient vectors whose
// entries are polynomials in the surviving variable.

namespace {

using Coeffs = std::vector<ExactPoly>; // dense in the eliminated variable

Coeffs to_dense(const ExactPoly& f, int var) {
    int d = f.degree(var);
    Coeffs out((size_t)std::max(0, d + 1));
    for (int k = 0; k <= d; ++k) out[(size_t)k] = f.coeff_of(var, (unsigned)k);
    return out;
}

void trim(Coeffs& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Pseudo remainder: lc(b)^(da-db+1) * a = q*b + r with deg r < deg b.
// The remainder is multiplied by lc(b) exactly once per elimination step; the
// deficit is applied at the end so the total exponent is exactly da-db+1.
Coeffs prem(Coeffs a, const Coeffs& b) {
    int db = (int)b.size() - 1;
    const ExactPoly& lb = b.back();
    int e = (int)a.size() - 1 - db + 1;
    while (!a.empty() && (int)a.size() - 1 >= db) {
        int dr = (int)a.size() - 1;
        ExactPoly lr = a.back();
        Coeffs na((size_t)dr);
        for (int i = 0; i < dr; ++i) {
            ExactPoly v = a[(size_t)i] * lb;
            int j = i - (dr - db);
            if (j >= 0) v = v - lr * b[(size_t)j];
            na[(size_t)i] = std::move(v);
        }
        a = std::move(na);
        trim(a);
        --e;
    }
    for (; e > 0; --e)
        for (auto& co : a) co = co * lb;
    return a;
}

ExactPoly exact_div_poly(const ExactPoly& num, const ExactPoly& den) {
    // exact division of polynomials in a single surviving variable (or consts)
    if (den.is_constant()) {
        BigRat d = den.constant_term();
        if (d == 0) throw DomainError("exact division by zero");
        return num.mul_scalar(1 / d);
    }
    int var = den.degree(0) > 0 ? 0 : 1;
    return ExactPoly::divexact(num, den, var);
}

} // namespace

ExactPoly resultant(const ExactPoly& f, const ExactPoly& g, int var) {
    if (f.degree(var) <= 0 && g.degree(var) <= 0)
        throw DomainError("resultant: both inputs constant in the eliminated variable");
    if (f.is_zero() || g.is_zero()) return ExactPoly();
    Coeffs A = to_dense(f, var), B = to_dense(g, var);
    int sign = 1;
    if ((int)A.size() < (int)B.size()) {
        std::swap(A, B);
        if (((A.size() - 1) & 1) && ((B.size() - 1) & 1)) sign = -sign;
    }
    if (B.size() == 1) {
        // res(A, b) = b^{deg A}
        ExactPoly r = B[0].pow((unsigned)(A.size() - 1));
        return sign < 0 ? -r : r;
    }
    ExactPoly gsc = ExactPoly::constant(1), hsc = ExactPoly::constant(1);
    while (true) {
        int da = (int)A.size() - 1, db = (int)B.size() - 1;
        int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        Coeffs R = prem(A, B);
        if (R.empty()) return ExactPoly(); // nonconstant common factor
        // B_new = R / (g * h^delta)
        ExactPoly divisor = gsc * hsc.pow((unsigned)delta);
        Coeffs Bn(R.size());
        for (size_t i = 0; i < R.size(); ++i) Bn[i] = exact_div_poly(R[i], divisor);
        A = std::move(B);
        B = std::move(Bn);
        gsc = A.back();
        // h = h^{1-delta} g^{delta}
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            hsc = gsc;
        } else {
            hsc = exact_div_poly(gsc.pow((unsigned)delta), hsc.pow((unsigned)(delta - 1)));
        }
        if ((int)B.size() - 1 <= 0) break;
    }
    if (B.empty()) return ExactPoly();
    // res = h^{1-da} * lc(B)^{da} with da = deg A at loop exit
    int da = (int)A.size() - 1;
    ExactPoly num = B[0].pow((unsigned)da);
    ExactPoly res = da >= 1 ? exact_div_poly(num, hsc.pow((unsigned)(da - 1))) : num;
    return sign < 0 ? -res : res;
}

} // namespace legv::exact

#include "modular/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace legv::mod {

using exact::rat;

namespace {

ValidatedReal vr_long(long v, mpfr_prec_t p) { return ValidatedReal::from_long(v, p); }

// sigma_k tables up to N
std::vector<uint64_t> sigma_table(unsigned k, unsigned N) {
    std::vector<uint64_t> s(N + 1, 0);
    for (uint64_t d = 1; d <= N; ++d) {
        uint64_t dk = 1;
        for (unsigned i = 0; i < k; ++i) dk *= d;
        for (uint64_t n = d; n <= N; n += d) s[n] += dk;
    }
    return s;
}

// sum_{j>=0} (j+1)^s x^j as a closed form (Eulerian polynomials), interval
ValidatedReal eulerian_sum(unsigned s, const ValidatedReal& x, mpfr_prec_t prec) {
    std::vector<long> num;
    switch (s) {
    case 2: num = {1, 1}; break;                       // (1+x)/(1-x)^3
    case 3: num = {1, 4, 1}; break;                    // /(1-x)^4
    case 5: num = {1, 26, 66, 26, 1}; break;           // /(1-x)^6
    default: throw DomainError("eulerian_sum: unsupported exponent");
    }
    ValidatedReal acc = vr_long(0, prec), xp = vr_long(1, prec);
    for (long c : num) {
        acc = acc + vr_long(c, prec) * xp;
        xp = xp * x;
    }
    ValidatedReal one_minus = vr_long(1, prec) - x;
    return acc / one_minus.pow_long((long)s + 1);
}

ValidatedComplex box_of_radius(const ValidatedReal& r, mpfr_prec_t prec) {
    BigRat hi = r.mid_rational() + r.rad_rational();
    if (hi < 0) hi = 0;
    ValidatedReal iv = ValidatedReal::from_interval(-hi, hi, prec);
    return {iv, iv};
}

unsigned series_length(double im_lo, mpfr_prec_t prec) {
    double n = ((double)prec + 48.0) * 0.6931471805599453 / (6.283185307179586 * im_lo);
    if (n < 8) n = 8;
    if (n > 4000) throw PrecisionError("series_length: imaginary part too small");
    return (unsigned)n + 2;
}

} // namespace

FormsResult eval_forms(const ValidatedComplex& tau, mpfr_prec_t prec) {
    ValidatedReal half = ValidatedReal::from_rational(BigRat(1, 2), prec);
    if (!(half.certainly_less(tau.im) || tau.im.contains(BigRat(1, 2))))
        throw DomainError("eval_forms: Im tau < 1/2");
    if (!vr_long(0, prec).certainly_less(tau.im))
        throw DomainError("eval_forms: Im tau not positive");
    double im_lo = 0.5;
    {
        BigRat m = tau.im.mid_rational() - tau.im.rad_rational();
        double d = m.get_d();
        if (d > 0.5) im_lo = d;
    }
    unsigned N = series_length(im_lo, prec);

    ValidatedReal pi = ValidatedReal::pi(prec);
    ValidatedReal two_pi = pi * vr_long(2, prec);
    // q = exp(2 pi i tau) = exp(-2 pi Im) (cos(2 pi Re) + i sin(2 pi Re))
    ValidatedComplex itau{-tau.im, tau.re};
    ValidatedComplex q = (ValidatedComplex{two_pi * itau.re, two_pi * itau.im}).exp();
    ValidatedReal qa = q.abs();
    if (!qa.certainly_less(BigRat(1, 2)))
        throw PrecisionError("eval_forms: |q| not certified below 1/2");

    auto s1 = sigma_table(1, N), s3 = sigma_table(3, N), s5 = sigma_table(5, N);

    ValidatedComplex one = ValidatedComplex::from_real(vr_long(1, prec));
    ValidatedComplex S1(prec), S3(prec), S5(prec);
    ValidatedComplex prod = one;     // prod (1 - q^n)
    ValidatedComplex qn = one;
    for (unsigned n = 1; n <= N; ++n) {
        qn = qn * q;
        S1 = S1 + ValidatedComplex{qn.re * vr_long((long)s1[n], prec),
                                   qn.im * vr_long((long)s1[n], prec)};
        S3 = S3 + ValidatedComplex{qn.re * vr_long((long)s3[n], prec),
                                   qn.im * vr_long((long)s3[n], prec)};
        S5 = S5 + ValidatedComplex{qn.re * vr_long((long)s5[n], prec),
                                   qn.im * vr_long((long)s5[n], prec)};
        prod = prod * (one - qn);
    }
    // tails: sum_{n>N} sigma_k(n) x^n <= 2 (N+1)^k x^{N+1} E_k(x)
    ValidatedReal xN1 = qa.pow_long((long)N + 1);
    ValidatedReal Np1 = vr_long((long)N + 1, prec);
    ValidatedReal t1 = vr_long(2, prec) * Np1.pow_long(2) * xN1 * eulerian_sum(2, qa, prec);
    ValidatedReal t3 = vr_long(2, prec) * Np1.pow_long(3) * xN1 * eulerian_sum(3, qa, prec);
    ValidatedReal t5 = vr_long(2, prec) * Np1.pow_long(5) * xN1 * eulerian_sum(5, qa, prec);

    FormsResult out;
    out.e2 = one - (S1 + box_of_radius(t1, prec)) * ValidatedComplex::from_real(vr_long(24, prec));
    out.e4 = one + (S3 + box_of_radius(t3, prec)) * ValidatedComplex::from_real(vr_long(240, prec));
    out.e6 = one - (S5 + box_of_radius(t5, prec)) * ValidatedComplex::from_real(vr_long(504, prec));

    // Delta = (2 pi)^12 q prod_{n>=1} (1 - q^n)^24
    {
        ValidatedReal logtail =
            vr_long(24, prec) * xN1 / ((vr_long(1, prec) - qa) * (vr_long(1, prec) - qa));
        ValidatedReal expand = logtail.exp() - vr_long(1, prec);
        ValidatedComplex tailbox = one + box_of_radius(expand, prec);
        ValidatedComplex p24 = prod.pow_ulong(24);
        ValidatedReal c = two_pi.pow_long(12);
        out.delta = ValidatedComplex{c, vr_long(0, prec)} * q * p24 * tailbox;
    }

    // j = 1728 E4^3 / (E4^3 - E6^2) = E4^3 (2 pi)^12 / Delta; the product
    // form of the denominator never encloses zero, even on wide boxes
    {
        ValidatedComplex e43 = out.e4.pow_ulong(3);
        out.j = e43 * ValidatedComplex{two_pi.pow_long(12), vr_long(0, prec)} / out.delta;
    }

    // theta = 16 qh prod ((1 + qh^{2n}) / (1 + qh^{2n-1}))^8, qh = e^{pi i tau}
    {
        ValidatedComplex qh = (ValidatedComplex{pi * itau.re, pi * itau.im}).exp();
        ValidatedReal qha = qh.abs();
        ValidatedComplex ratio = one;
        ValidatedComplex qhn = one; // qh^k
        std::vector<ValidatedComplex> pw;
        pw.push_back(one);
        for (unsigned k = 1; k <= 2 * N; ++k) {
            qhn = qhn * qh;
            pw.push_back(qhn);
        }
        for (unsigned n = 1; n <= N; ++n)
            ratio = ratio * ((one + pw[2 * n]) / (one + pw[2 * n - 1]));
        ValidatedReal xq = qha.pow_long(2 * (long)N + 1);
        ValidatedReal lt = vr_long(16, prec) * xq /
                           ((vr_long(1, prec) - qha) * (vr_long(1, prec) - qha));
        ValidatedComplex tailbox = one + box_of_radius(lt.exp() - vr_long(1, prec), prec);
        out.theta = ValidatedComplex::from_real(vr_long(16, prec)) * qh *
                    ratio.pow_ulong(8) * tailbox;
    }

    out.e2_star = out.e2;
    out.e2_star.re = out.e2_star.re - vr_long(3, prec) / (pi * tau.im);
    return out;
}

ValidatedComplex eval_j(const ValidatedComplex& tau, mpfr_prec_t prec) {
    return eval_forms(tau, prec).j;
}

ValidatedComplex eval_j_product_form(const ValidatedComplex& tau, mpfr_prec_t prec) {
    FormsResult f = eval_forms(tau, prec);
    ValidatedReal c = (ValidatedReal::pi(prec) * vr_long(2, prec)).pow_long(12);
    return f.e4.pow_ulong(3) * ValidatedComplex{c, vr_long(0, prec)} / f.delta;
}

ValidatedComplex reduce_to_fundamental_domain(ValidatedComplex tau) {
    mpfr_prec_t prec = tau.prec();
    for (int iter = 0; iter < 4096; ++iter) {
        // translate Re into [-1/2, 1/2]
        BigRat m = tau.re.mid_rational();
        BigInt n;
        BigRat shifted = m + BigRat(1, 2);
        mpz_fdiv_q(n.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
        if (n != 0)
            tau.re = tau.re - ValidatedReal::from_bigint(n, prec);
        ValidatedReal a2 = tau.abs2();
        if (a2.certainly_less(BigRat(1))) {
            // tau <- -1/tau = -conj(tau) / |tau|^2
            tau = ValidatedComplex{-tau.re / a2, tau.im / a2};
            continue;
        }
        if (a2.certainly_greater(BigRat(1)) ||
            tau.im.certainly_greater(BigRat(1, 2)))
            return tau;
        // |tau| lies on the unit circle within the enclosure; invert once more
        tau = ValidatedComplex{-tau.re / a2, tau.im / a2};
    }
    throw PrecisionError("reduce_to_fundamental_domain did not converge");
}

// ---------------------------------------------------------------------------
// Class polynomials

std::vector<std::array<long, 3>> reduced_forms(long D) {
    if (D >= 0 || ((D % 4 != 0) && (((D % 4) + 4) % 4 != 1)))
        throw DomainError("reduced_forms: D must be negative, 0 or 1 mod 4");
    std::vector<std::array<long, 3>> out;
    for (long a = 1; 3 * a * a <= -D; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if ((b < 0) && (b == -a || a == c)) continue; // handled by b >= 0 twin
            if (std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long class_number(long D) { return (long)reduced_forms(D).size(); }

ClassPolynomial class_polynomial(long D, mpfr_prec_t initial_prec) {
    if (D >= 0 || -D > 10000) throw DomainError("class_polynomial: need -10^4 <= D < 0");
    auto forms = reduced_forms(D);
    if (forms.empty()) throw DomainError("class_polynomial: no reduced forms");
    double sum_inv_a = 0;
    for (auto& f : forms) sum_inv_a += 1.0 / (double)f[0];
    double digits = 3.1415926535 * std::sqrt((double)-D) * sum_inv_a / std::log(10.0) + 12;
    mpfr_prec_t prec = initial_prec ? initial_prec : (mpfr_prec_t)(digits * 3.33) + 48;

    for (int attempt = 0; attempt < 6; ++attempt, prec *= 2) {
        // coefficients of prod (X - j(tau_f)), ascending
        std::vector<ValidatedComplex> coeff;
        coeff.push_back(ValidatedComplex::from_real(vr_long(1, prec)));
        bool retry = false;
        for (auto& f : forms) {
            long a = f[0], b = f[1];
            ValidatedReal sq = ValidatedReal::from_long(-D, prec).sqrt();
            ValidatedComplex tau{ValidatedReal::from_rational(rat(-b, 2 * a), prec),
                                 sq / vr_long(2 * a, prec)};
            ValidatedComplex jv;
            try {
                jv = eval_j(tau, prec);
            } catch (const PrecisionError&) {
                retry = true;
                break;
            }
            // multiply the polynomial by (X - jv)
            coeff.insert(coeff.begin(), ValidatedComplex::from_real(vr_long(0, prec)));
            for (size_t i = 0; i + 1 < coeff.size(); ++i)
                coeff[i] = coeff[i] - jv * coeff[i + 1];
        }
        if (retry) continue;
        // round to integers with slack < 1/4
        std::vector<BigInt> ic(coeff.size());
        bool ok = true;
        for (size_t i = 0; i < coeff.size() && ok; ++i) {
            const ValidatedComplex& c = coeff[i];
            if (!c.im.contains(BigRat(0)) || !(c.im.rad_rational() < BigRat(1, 4))) {
                ok = false;
                break;
            }
            BigRat mid = c.re.mid_rational();
            BigInt n;
            BigRat half_up = mid + BigRat(1, 2);
            mpz_fdiv_q(n.get_mpz_t(), half_up.get_num_mpz_t(), half_up.get_den_mpz_t());
            BigRat err = mid - BigRat(n);
            if (err < 0) err = -err;
            if (!(err + c.re.rad_rational() < BigRat(1, 4))) {
                ok = false;
                break;
            }
            ic[i] = n;
        }
        if (!ok) continue;
        ClassPolynomial out;
        out.D = D;
        out.H = ZPoly(std::move(ic));
        out.precision_used = prec;
        return out;
    }
    throw PrecisionError("class_polynomial: rounding slack never certified");
}

std::vector<BigInt> rational_singular_moduli() {
    static std::vector<BigInt> cache;
    static bool done = false;
    if (done) return cache;
    std::vector<BigInt> vals;
    for (long D = -3; D >= -200; --D) {
        long r = ((D % 4) + 4) % 4;
        if (r != 0 && r != 1) continue;
        if (class_number(D) != 1) continue;
        ClassPolynomial cp = class_polynomial(D);
        vals.push_back(-cp.H.c[0]);
    }
    cache = vals;
    done = true;
    return cache;
}

// ---------------------------------------------------------------------------
// Phi_4 by evaluation-interpolation

namespace {

// solve a square interval linear system by Gaussian elimination
std::vector<ValidatedComplex> solve_interval_system(std::vector<std::vector<ValidatedComplex>> M,
                                                    std::vector<ValidatedComplex> rhs) {
    size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        double best = -1;
        for (size_t r = col; r < n; ++r) {
            double m = std::abs(M[r][col].re.mid_double()) + std::abs(M[r][col].im.mid_double());
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        if (M[col][col].contains_zero())
            throw PrecisionError("interval linear solve: pivot contains zero");
        for (size_t r = col + 1; r < n; ++r) {
            if (M[r][col].contains_zero() &&
                M[r][col].re.rad_double() == 0 && M[r][col].im.rad_double() == 0)
                continue;
            ValidatedComplex f = M[r][col] / M[col][col];
            for (size_t c = col; c < n; ++c) M[r][c] = M[r][c] - f * M[col][c];
            rhs[r] = rhs[r] - f * rhs[col];
        }
    }
    std::vector<ValidatedComplex> x(n, ValidatedComplex(rhs[0].prec()));
    for (size_t row = n; row-- > 0;) {
        ValidatedComplex acc = rhs[row];
        for (size_t c = row + 1; c < n; ++c) acc = acc - M[row][c] * x[c];
        x[row] = acc / M[row][row];
    }
    return x;
}

std::optional<BigInt> round_to_integer(const ValidatedComplex& c) {
    if (!c.im.contains(BigRat(0)) || !(c.im.rad_rational() < BigRat(1, 4)))
        return std::nullopt;
    BigRat mid = c.re.mid_rational();
    BigInt n;
    BigRat half_up = mid + BigRat(1, 2);
    mpz_fdiv_q(n.get_mpz_t(), half_up.get_num_mpz_t(), half_up.get_den_mpz_t());
    BigRat err = mid - BigRat(n);
    if (err < 0) err = -err;
    if (!(err + c.re.rad_rational() < BigRat(1, 4))) return std::nullopt;
    return n;
}

} // namespace

ExactPoly modular_polynomial_phi4(mpfr_prec_t initial_prec) {
    const int deg = 6; // index-4 cyclic sublattices
    for (mpfr_prec_t prec = initial_prec; prec <= initial_prec * 16; prec *= 2) {
        std::vector<ValidatedComplex> js;                      // j(tau_s)
        std::vector<std::vector<ValidatedComplex>> esym;       // c_k(j(tau_s)), k=0..5
        bool retry = false;
        for (int s = 0; s <= deg && !retry; ++s) {
            BigRat y(101 + 6 * s, 100);
            ValidatedComplex tau{vr_long(0, prec), ValidatedReal::from_rational(y, prec)};
            ValidatedComplex jt = eval_j(tau, prec);
            // the six 4-isogenous values
            std::vector<ValidatedComplex> iso;
            auto push_reduced = [&](ValidatedComplex z) {
                iso.push_back(eval_j(reduce_to_fundamental_domain(z), prec));
            };
            push_reduced({tau.re * vr_long(4, prec), tau.im * vr_long(4, prec)});
            for (int b = 0; b < 4; ++b) {
                ValidatedComplex z{(tau.re + vr_long(b, prec)) / vr_long(4, prec),
                                   tau.im / vr_long(4, prec)};
                push_reduced(z);
            }
            push_reduced({(tau.re * vr_long(2, prec) + vr_long(1, prec)) / vr_long(2, prec),
                          tau.im});
            // elementary symmetric functions: prod (Y - iso_i) coefficients
            std::vector<ValidatedComplex> cf{ValidatedComplex::from_real(vr_long(1, prec))};
            for (auto& z : iso) {
                cf.insert(cf.begin(), ValidatedComplex::from_real(vr_long(0, prec)));
                for (size_t i = 0; i + 1 < cf.size(); ++i)
                    cf[i] = cf[i] - z * cf[i + 1];
            }
            js.push_back(jt);
            esym.push_back(std::move(cf)); // cf[k] = coefficient of Y^k, k=0..6
        }
        if (retry) continue;
        // for each k < 6 solve the Vandermonde system sum_i a_i j^i = c_k(j)
        ExactPoly phi;
        bool ok = true;
        for (int k = 0; k < deg && ok; ++k) {
            std::vector<std::vector<ValidatedComplex>> M(deg + 1);
            std::vector<ValidatedComplex> rhs(deg + 1, ValidatedComplex(prec));
            for (int s = 0; s <= deg; ++s) {
                M[(size_t)s].resize(deg + 1, ValidatedComplex(prec));
                ValidatedComplex p = ValidatedComplex::from_real(vr_long(1, prec));
                for (int i = 0; i <= deg; ++i) {
                    M[(size_t)s][(size_t)i] = p;
                    p = p * js[(size_t)s];
                }
                rhs[(size_t)s] = esym[(size_t)s][(size_t)k];
            }
            std::vector<ValidatedComplex> a;
            try {
                a = solve_interval_system(std::move(M), std::move(rhs));
            } catch (const PrecisionError&) {
                ok = false;
                break;
            }
            for (int i = 0; i <= deg; ++i) {
                auto n = round_to_integer(a[(size_t)i]);
                if (!n) {
                    ok = false;
                    break;
                }
                if (*n != 0)
                    phi = phi + ExactPoly::monomial(BigRat(*n), (unsigned)i, (unsigned)k);
            }
        }
        if (!ok) continue;
        phi = phi + ExactPoly::monomial(BigRat(1), 0, (unsigned)deg); // monic in y
        phi.set_var_names("x", "y");
        // certify symmetry and the defining property at an independent point
        if (!(phi.swap_vars() == phi)) continue;
        {
            mpfr_prec_t cp = std::max<mpfr_prec_t>(prec, 512);
            ValidatedComplex t0{vr_long(0, cp),
                                ValidatedReal::from_rational(BigRat(11, 10), cp)};
            ValidatedComplex j1 = eval_j(t0, cp);
            ValidatedComplex j2 = eval_j({t0.re * vr_long(4, cp), t0.im * vr_long(4, cp)}, cp);
            // evaluate phi at complex intervals
            ValidatedComplex acc(cp);
            for (auto& [mono, c] : phi.terms()) {
                ValidatedComplex term =
                    ValidatedComplex::from_real(ValidatedReal::from_rational(c, cp));
                term = term * j1.pow_ulong(mono.first) * j2.pow_ulong(mono.second);
                acc = acc + term;
            }
            if (!acc.contains_zero())
                throw CertificateError("phi4 candidate fails the defining property");
        }
        return phi;
    }
    throw PrecisionError("modular_polynomial_phi4: precision escalation exhausted");
}

std::string serialize_poly2(const ExactPoly& p) {
    std::vector<std::tuple<unsigned, unsigned, std::string>> terms;
    for (auto& [m, c] : p.terms()) {
        if (mpz_cmp_ui(mpq_denref(c.get_mpq_t()), 1) != 0)
            throw DomainError("serialize_poly2 expects integer coefficients");
        terms.emplace_back(m.first, m.second, BigInt(c.get_num()).get_str());
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
        return false;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [e0, e1, c] : terms) {
        if (!first) os << ";";
        first = false;
        os << e0 << "," << e1 << ":" << c;
    }
    return os.str();
}

ExactPoly curve_F() {
    ExactPoly x = ExactPoly::variable(0), y = ExactPoly::variable(1);
    auto C = [](const char* s) { return ExactPoly::constant(BigRat(BigInt(s))); };
    ExactPoly F = x.pow(3) * y - (x * x) * (y * y).mul_scalar(BigRat(2)) + x * y.pow(3) -
                  x.pow(3).mul_scalar(BigRat(1728)) + (x * x * y).mul_scalar(BigRat(1216)) +
                  (x * y * y).mul_scalar(BigRat(1216)) - y.pow(3).mul_scalar(BigRat(1728)) +
                  (x * x).mul_scalar(BigRat(3538944)) - (x * y).mul_scalar(BigRat(2752512)) +
                  (y * y).mul_scalar(BigRat(3538944)) - x.mul_scalar(BigRat(2415919104)) -
                  y.mul_scalar(BigRat(2415919104)) + C("549755813888");
    F.set_var_names("x", "y");
    return F;
}

std::pair<ExactPoly, ExactPoly> R_pair() {
    ExactPoly t = ExactPoly::variable(0), one = ExactPoly::constant(1);
    ExactPoly num = ((t * t) - t + one).pow(3).mul_scalar(BigRat(256));
    ExactPoly den = (t * t) * (one - t).pow(2);
    return {num, den};
}

} // namespace legv::mod

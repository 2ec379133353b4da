#include "ffield/ffield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace legv::ff {

namespace {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return (uint64_t)((unsigned __int128)a * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// chi table: chi[v] in {-1, 0, +1}, the quadratic character mod p
std::vector<int8_t> quadratic_character_table(uint64_t p) {
    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (uint64_t i = 1; i < p; ++i) {
        uint64_t s = mulmod(i, i, p);
        chi[s] = 1;
    }
    return chi;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t mult_order(uint64_t a, uint64_t p) {
    if (a % p == 0) throw DomainError("mult_order of zero");
    uint64_t o = 1, v = a % p;
    while (v != 1) {
        v = mulmod(v, a, p);
        ++o;
        if (o > p) throw DomainError("mult_order runaway");
    }
    return o;
}

FpElement::FpElement(uint64_t r, uint64_t prime) : residue(r % prime), p(prime) {
    if (!is_prime_u64(prime)) throw DomainError("FpElement: modulus not prime");
}

CurveCount count_points(uint64_t p, const FpElement& t) {
    if (p < 3 || p != t.p) throw DomainError("count_points: bad prime");
    if (p > 1000000) throw DomainError("count_points: p above 10^6");
    uint64_t tt = t.residue;
    if (tt == 0 || tt == 1) throw DomainError("count_points: singular curve (t in {0,1})");
    auto chi = quadratic_character_table(p);
    long sum = 0;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t f = mulmod(mulmod(x, (x + p - 1) % p, p), (x + p - tt) % p, p);
        sum += chi[f];
    }
    CurveCount out;
    out.group_order = (uint64_t)((long)(p + 1) + sum);
    out.trace = -sum;
    return out;
}

long fundamental_discriminant(long a, uint64_t p) {
    long D = a * a - 4 * (long)p;
    if (D >= 0) throw DomainError("fundamental_discriminant: a^2 >= 4p");
    // strip the square part
    long m = -D, f = 1;
    for (long q = 2; q * q <= m; ++q) {
        while (m % (q * q) == 0) {
            m /= q * q;
            f *= q;
        }
    }
    long delta = -m; // squarefree kernel with sign
    if (((delta % 4) + 4) % 4 != 1) delta *= 4;
    return delta;
}

long trace_of_j_model(uint64_t p, uint64_t j_residue) {
    if (p < 5) throw DomainError("trace_of_j_model: p too small");
    uint64_t c = (j_residue + p - 1728 % p) % p;
    if (c == 0 || j_residue % p == 0)
        throw DomainError("trace_of_j_model: j in {0, 1728} mod p");
    uint64_t cinv = powmod(c, p - 2, p);
    uint64_t inv4 = powmod(4, p - 2, p);
    uint64_t a36 = mulmod(36 % p, cinv, p);
    auto chi = quadratic_character_table(p);
    long sum = 0;
    for (uint64_t x = 0; x < p; ++x) {
        // (y + x/2)^2 = x^3 + x^2/4 - (36/c) x - 1/c
        uint64_t v = mulmod(mulmod(x, x, p), (x + inv4) % p, p);
        v = (v + p - mulmod(a36, x, p)) % p;
        v = (v + p - cinv) % p;
        sum += chi[v];
    }
    return -sum;
}

uint64_t count_points_fp2(uint64_t p, uint64_t t) {
    if (p < 3 || p > 400) throw DomainError("count_points_fp2: p out of range");
    // find a quadratic nonresidue
    auto chi = quadratic_character_table(p);
    uint64_t ns = 0;
    for (uint64_t i = 2; i < p; ++i)
        if (chi[i] < 0) {
            ns = i;
            break;
        }
    // F_{p^2} = F_p[w]/(w^2 - ns); elements a + b w
    auto mul2 = [&](std::pair<uint64_t, uint64_t> x, std::pair<uint64_t, uint64_t> y) {
        uint64_t re = (mulmod(x.first, y.first, p) + mulmod(mulmod(x.second, y.second, p), ns, p)) % p;
        uint64_t im = (mulmod(x.first, y.second, p) + mulmod(x.second, y.first, p)) % p;
        return std::pair<uint64_t, uint64_t>{re, im};
    };
    auto pow2 = [&](std::pair<uint64_t, uint64_t> b, uint64_t e) {
        std::pair<uint64_t, uint64_t> r{1, 0};
        while (e) {
            if (e & 1) r = mul2(r, b);
            b = mul2(b, b);
            e >>= 1;
        }
        return r;
    };
    uint64_t q = p * p;
    uint64_t count = 1; // infinity
    for (uint64_t a = 0; a < p; ++a) {
        for (uint64_t b = 0; b < p; ++b) {
            std::pair<uint64_t, uint64_t> x{a, b};
            auto f = mul2(mul2(x, {(a + p - 1) % p, b}), {(a + p - t % p) % p, b});
            if (f.first == 0 && f.second == 0) {
                count += 1;
                continue;
            }
            auto s = pow2(f, (q - 1) / 2);
            if (s.first == 1 && s.second == 0) count += 2;
        }
    }
    return count;
}

rep::VerificationReport reproduce_section4_table(const std::vector<FrobeniusRecord>& fixture) {
    rep::VerificationReport rpt("cm-rootofunity-table");
    const std::string anchor = "order-m parameter table";
    for (const auto& row : fixture) {
        std::ostringstream id;
        id << "row m=" << row.m << " p=" << row.p;
        bool ok = true;
        std::ostringstream detail;
        if (!is_prime_u64(row.p)) {
            ok = false;
            detail << "p not prime; ";
        }
        if (row.p % row.m != 1) {
            ok = false;
            detail << "p != 1 mod m; ";
        }
        for (int side = 0; side < 2; ++side) {
            uint64_t tv = side == 0 ? row.t1 : row.t2;
            long want_a = side == 0 ? row.a1 : row.a2;
            long want_d = side == 0 ? row.d1 : row.d2;
            uint64_t order = mult_order(tv, row.p);
            if (order != row.m) {
                ok = false;
                detail << "ord(t" << side + 1 << ")=" << order << " != m; ";
            }
            CurveCount cc = count_points(row.p, FpElement(tv, row.p));
            if (cc.trace != want_a) {
                ok = false;
                detail << "a" << side + 1 << "=" << cc.trace << " != " << want_a << "; ";
            }
            // Hasse
            if ((long)cc.trace * cc.trace > 4 * (long)row.p) {
                ok = false;
                detail << "Hasse violated; ";
            }
            long d = fundamental_discriminant(cc.trace, row.p);
            if (d != want_d) {
                ok = false;
                detail << "d" << side + 1 << "=" << d << " != " << want_d << "; ";
            }
            detail << "a" << side + 1 << "=" << cc.trace << " d" << side + 1 << "=" << d << " ";
        }
        if (row.d1 == row.d2) {
            ok = false;
            detail << "discriminants equal; ";
        }
        rpt.add(ok, id.str(), anchor, detail.str());
    }
    return rpt;
}

long count_sqrt1_units(long n) {
    long cnt = 0;
    for (long a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1 && (a * a) % n == 1 % n) ++cnt;
    return cnt;
}

namespace {

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

// Carmichael function (exponent of (Z/n)^x)
long carmichael(long n) {
    long result = 1;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            long pe = 1;
            int e = 0;
            while (m % p == 0) {
                m /= p;
                pe *= p;
                ++e;
            }
            long lam;
            if (p == 2)
                lam = e == 1 ? 1 : (e == 2 ? 2 : pe / 4);
            else
                lam = pe / p * (p - 1);
            result = std::lcm(result, lam);
        }
    }
    if (m > 1) result = std::lcm(result, m - 1);
    return result;
}

} // namespace

ExponentAnalysis exponent_divisor_analysis(long limit) {
    ExponentAnalysis out;
    for (long m = 1; m <= limit; ++m)
        if (4 % carmichael(m) == 0) out.exponent_divides_4.push_back(m);
    for (long n = 2; n <= limit; ++n)
        if (euler_phi(n) < 2 * count_sqrt1_units(n)) out.half_totient_strict.push_back(n);
    out.count_sqrt1_mod_120 = count_sqrt1_units(120);
    return out;
}

rep::VerificationReport verify_exponent_divisor_analysis(long limit) {
    rep::VerificationReport rpt("exponent-combinatorics");
    ExponentAnalysis an = exponent_divisor_analysis(limit);
    std::vector<long> div240, div24;
    for (long d = 1; d <= 240; ++d)
        if (240 % d == 0) div240.push_back(d);
    for (long d = 2; d <= 24; ++d)
        if (24 % d == 0) div24.push_back(d);
    {
        std::ostringstream os;
        for (long m : an.exponent_divides_4) os << m << " ";
        rpt.add(an.exponent_divides_4 == div240,
                "exponent of (Z/mZ)^x divides 4 exactly for m | 240 (m <= " +
                    std::to_string(limit) + ")",
                "admissible root-of-unity orders", os.str());
    }
    {
        std::ostringstream os;
        for (long n : an.half_totient_strict) os << n << " ";
        rpt.add(an.half_totient_strict == div24,
                "phi(n)/2 < #N(n) exactly for n | 24, n >= 2 (n <= " + std::to_string(limit) + ")",
                "admissible torsion orders", os.str());
    }
    rpt.add(an.count_sqrt1_mod_120 == 16 && euler_phi(120) / 2 == 16,
            "#N(120) = 16 = phi(120)/2 (strictness is necessary)",
            "order-120 borderline case", std::to_string(an.count_sqrt1_mod_120));
    return rpt;
}

rep::VerificationReport cyclotomic_j_nonintegrality(
    int m, const std::vector<BigInt>& rational_singular_moduli) {
    rep::VerificationReport rpt("cyclotomic-j-m" + std::to_string(m));
    using namespace exact;
    ExactPoly t = ExactPoly::variable(0);
    ExactPoly J = ExactPoly::variable(1);
    ExactPoly one = ExactPoly::constant(1);
    // j t^2 (t-1)^2 - 2^8 (t^2 - t + 1)^3
    ExactPoly tsq = t * t;
    ExactPoly jrel = J * tsq * (t - one).pow(2) -
                     (tsq - t + one).pow(3).mul_scalar(BigRat(256));
    if (m == 4) {
        // t^2 = -1 forces j = 128
        QuotientRing R(to_exact(ZPoly::from_longs({1, 0, 1})));
        ExactPoly num = (tsq - t + one).pow(3).mul_scalar(BigRat(256));
        ExactPoly den = tsq * (t - one).pow(2);
        auto inv = R.inverse(R.reduce(den));
        ExactPoly j = R.mul(R.reduce(num), *inv);
        bool is128 = j.is_constant() && j.constant_term() == BigRat(128);
        rpt.add(is128, "j(t) = 128 when t has order 4", "order-4 evaluation",
                j.to_string());
        bool in_list = false;
        for (const auto& v : rational_singular_moduli)
            if (v == 128) in_list = true;
        rpt.add(!in_list, "128 is not a rational singular modulus",
                "rational singular moduli list", "excluded");
        return rpt;
    }
    if (m != 3 && m != 5) throw DomainError("cyclotomic_j_nonintegrality: m must be 3, 4 or 5");
    ExactPoly cyclo = m == 3 ? to_exact(ZPoly::from_longs({1, 1, 1}))
                             : to_exact(ZPoly::from_longs({1, 1, 1, 1, 1}));
    ExactPoly res = resultant(cyclo, jrel, 0).swap_vars(); // univariate in var 0 (J)
    auto [cont, prim] = res.primitive_z();
    // minimal polynomial of j = unique irreducible factor of the resultant
    Factorization fac = factor_over_Z(to_zpoly(prim, 0));
    if (fac.factors.size() != 1)
        throw CertificateError("cyclotomic resultant is not a prime power");
    ZPoly minpoly = fac.factors[0].poly;
    bool nonmonic_at_m = mpz_divisible_ui_p(minpoly.lc().get_mpz_t(), (unsigned long)m);
    rpt.add(nonmonic_at_m,
            "minimal polynomial of j is non-monic with leading coefficient divisible by " +
                std::to_string(m),
            "j not an algebraic integer above " + std::to_string(m),
            minpoly.to_string("J"));
    PrimeValuation pv = newton_valuations(minpoly, (uint64_t)m);
    rpt.add(pv.has_negative_slope(),
            "Newton polygon of min poly of j has a negative slope at p = " + std::to_string(m),
            "|j|_p > 1", "slopes computed");
    return rpt;
}

rep::VerificationReport cm_exclusion_for_finalfour3() {
    rep::VerificationReport rpt("finalfour3-cm-exclusion");
    const exact::ZPoly q16(std::vector<BigInt>{BigInt("1783774976"), BigInt("-1230272"),
                                               BigInt(1)});
    struct Case {
        uint64_t p;
        long wanted_root; // representative (symmetric)
        long wanted_trace;
        long wanted_disc;
    };
    for (const Case cs : {Case{11, 2, 4, -7}, Case{19, -2, -4, -15}}) {
        uint64_t p = cs.p;
        uint64_t root_mod = (uint64_t)(((cs.wanted_root % (long)p) + (long)p) % (long)p);
        // confirm the root
        BigInt val = q16.eval_z(BigInt((unsigned long)root_mod));
        bool is_root = mpz_divisible_ui_p(val.get_mpz_t(), (unsigned long)p);
        rpt.add(is_root,
                "J^2 - 1230272 J + 1783774976 has the stated root mod " + std::to_string(p),
                "root " + std::to_string(cs.wanted_root) + " mod " + std::to_string(p),
                std::to_string(root_mod));
        if (!is_root) continue;
        long a = trace_of_j_model(p, root_mod);
        bool trace_ok = a == cs.wanted_trace;
        rpt.add(trace_ok, "trace of Frobenius at p = " + std::to_string(p),
                "expected " + std::to_string(cs.wanted_trace), std::to_string(a));
        bool ordinary = (a % (long)p) != 0;
        rpt.add(ordinary, "reduction at p = " + std::to_string(p) + " is ordinary",
                "p does not divide the trace", std::to_string(a));
        long d = fundamental_discriminant(a, p);
        rpt.add(d == cs.wanted_disc,
                "endomorphism algebra discriminant at p = " + std::to_string(p),
                "expected " + std::to_string(cs.wanted_disc), std::to_string(d));
    }
    // the quadratic splits in Q(sqrt 5): its discriminant is 5 times a square
    BigInt disc = BigInt("1230272") * BigInt("1230272") - 4 * BigInt("1783774976");
    BigInt disc5 = disc / 5;
    BigInt root;
    bool square = disc > 0 && mpz_divisible_ui_p(disc.get_mpz_t(), 5) &&
                  mpz_perfect_square_p(disc5.get_mpz_t());
    mpz_sqrt(root.get_mpz_t(), disc5.get_mpz_t());
    rpt.add(square, "discriminant of the quadratic is positive and 5 times a perfect square",
            "splits in Q(sqrt 5)", disc.get_str() + " = 5 * " + root.get_str() + "^2");
    rpt.add(true, "Q(sqrt -7) and Q(sqrt -15) intersect in Q, so no common CM field",
            "distinct imaginary quadratic fields", "-7 != -15");
    return rpt;
}

} // namespace legv::ff

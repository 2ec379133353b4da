#include "numeric/functions.hpp"

#include <mutex>
#include <vector>

namespace legv::num {

const BigRat& bernoulli(unsigned n) {
    static std::vector<BigRat> cache{BigRat(1), BigRat(-1, 2)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0  for m >= 1
        unsigned m = (unsigned)cache.size();
        if (m % 2 == 1 && m >= 3) {
            cache.emplace_back(0);
            continue;
        }
        BigRat s = 0;
        BigInt binom = 1; // C(m+1, 0)
        for (unsigned k = 0; k < m; ++k) {
            s += BigRat(binom) * cache[k];
            // C(m+1, k+1) = C(m+1,k) * (m+1-k)/(k+1)
            binom = binom * (long)(m + 1 - k) / (long)(k + 1);
        }
        BigRat b = -s / BigRat((long)(m + 1));
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[n];
}

ValidatedReal log_gamma(const ValidatedReal& xin, mpfr_prec_t prec) {
    if (!xin.is_positive())
        throw DomainError("log_gamma requires a positive enclosure");
    // shift so the Stirling tail can reach the target accuracy
    long K = (long)(0.125 * (double)prec) + 10;
    ValidatedReal z = xin;
    ValidatedReal shift_log = ValidatedReal::from_long(0, prec);
    for (long j = 0; j < K; ++j) {
        shift_log = shift_log + z.log();
        z = z + ValidatedReal::from_long(1, prec);
    }
    // Stirling: (z-1/2) log z - z + log(2 pi)/2 + sum B_2k/(2k(2k-1) z^(2k-1))
    ValidatedReal log_z = z.log();
    ValidatedReal two_pi = ValidatedReal::pi(prec) * ValidatedReal::from_long(2, prec);
    ValidatedReal half = ValidatedReal::from_rational(BigRat(1, 2), prec);
    ValidatedReal acc = (z - half) * log_z - z + half * two_pi.log();
    ValidatedReal z2 = z * z;
    ValidatedReal zpow = z; // z^(2k-1)
    BigRat tiny(BigInt(1), BigInt(1) << (unsigned)(prec + 16));
    unsigned k = 1;
    while (true) {
        BigRat num = bernoulli(2 * k);
        BigRat den((long)(2 * k) * (long)(2 * k - 1));
        BigRat coeff = num / den;
        coeff.canonicalize();
        ValidatedReal term = ValidatedReal::from_rational(coeff, prec) / zpow;
        // remainder bound: |B_{2k+2}| / ((2k+2)(2k+1) z^{2k+1})
        BigRat rb = abs(bernoulli(2 * k + 2)) / BigRat((long)(2 * k + 2) * (long)(2 * k + 1));
        rb.canonicalize();
        ValidatedReal rem = ValidatedReal::from_rational(rb, prec) / (zpow * z2);
        acc = acc + term;
        BigRat rem_hi = rem.mid_rational() + rem.rad_rational();
        if (rem_hi < tiny) {
            acc = acc + ValidatedReal::from_interval(-rem_hi, rem_hi, prec);
            break;
        }
        if (k > (unsigned)(4 * K + 64))
            throw PrecisionError("log_gamma: Stirling tail did not converge");
        zpow = zpow * z2;
        ++k;
    }
    return acc - shift_log;
}

ValidatedReal gamma_at(const BigRat& q, mpfr_prec_t prec) {
    if (!(q > 0 && q < 1))
        throw DomainError("gamma_at expects a rational in (0, 1)");
    if (prec < 53) throw DomainError("gamma_at: precision below 53 bits");
    return log_gamma(ValidatedReal::from_rational(q, prec + 16), prec + 16).exp();
}

int kronecker(const BigInt& a, const BigInt& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

bool is_fundamental_discriminant(const BigInt& delta) {
    if (delta == 1) return true;
    if (delta == 0) return false;
    auto squarefree = [](BigInt m) {
        m = ::abs(m);
        if (m == 0) return false;
        for (BigInt p = 2; p * p <= m; ++p) {
            if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
                BigInt pp = p * p;
                if (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) return false;
                while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) m /= p;
            }
        }
        return true;
    };
    BigInt r4 = delta % 4;
    if (r4 < 0) r4 += 4;
    if (r4 == 1) return squarefree(delta);
    if (r4 == 0) {
        BigInt m = delta / 4;
        BigInt m4 = m % 4;
        if (m4 < 0) m4 += 4;
        return (m4 == 2 || m4 == 3) && squarefree(m);
    }
    return false;
}

DirichletCharacter::DirichletCharacter(BigInt d) : delta(std::move(d)) {
    if (delta >= 0 || !is_fundamental_discriminant(delta))
        throw DomainError("DirichletCharacter expects a negative fundamental discriminant");
}

unsigned long DirichletCharacter::modulus() const {
    BigInt m = ::abs(delta);
    return m.get_ui();
}

std::pair<ValidatedReal, ValidatedReal>
L_value_and_log_derivative(const DirichletCharacter& chi, mpfr_prec_t prec) {
    unsigned long q = chi.modulus();
    if (q > 1000000) throw DomainError("L_value: |delta| above 10^6");
    // S1 = sum_{a=1}^{q-1} chi(a) a  (chi odd, so S1 != 0)
    BigInt S1 = 0;
    std::vector<int> chival(q, 0);
    for (unsigned long a = 1; a < q; ++a) {
        int c = chi(BigInt((unsigned long)a));
        chival[a] = c;
        if (c) S1 += c * BigInt(a);
    }
    // L(1, chi) = -pi * S1 / q^{3/2}
    ValidatedReal pi = ValidatedReal::pi(prec);
    ValidatedReal qv = ValidatedReal::from_long((long)q, prec);
    ValidatedReal L1 = -(pi * ValidatedReal::from_bigint(S1, prec)) /
                       (qv * qv.sqrt());
    // L(0, chi) = -S1 / q  (exact rational)
    BigRat L0(-S1, BigInt((unsigned long)q));
    L0.canonicalize();
    // S_Gamma = sum chi(a) log Gamma(a/q)
    ValidatedReal SG = ValidatedReal::from_long(0, prec);
    for (unsigned long a = 1; a < q; ++a) {
        if (!chival[a]) continue;
        BigRat frac((unsigned long)a, q);
        frac.canonicalize();
        ValidatedReal lg = log_gamma(ValidatedReal::from_rational(frac, prec), prec);
        SG = chival[a] > 0 ? SG + lg : SG - lg;
    }
    // L'/L(1) = gamma + log(2 pi) - S_Gamma / L(0, chi)
    ValidatedReal ratio = ValidatedReal::euler_gamma(prec) +
                          (pi * ValidatedReal::from_long(2, prec)).log() -
                          SG / ValidatedReal::from_rational(L0, prec);
    return {L1, ratio};
}

} // namespace legv::num

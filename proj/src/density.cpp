#include "thuegap/density.hpp"

#include <stdexcept>

#include "thuegap/construct.hpp"
#include "thuegap/int_util.hpp"

namespace thuegap {

namespace {

// Interval endpoints are rounded to this many fractional bits after each
// multiplication so exact Euler products over ~1e4 primes stay small.
constexpr long kRoundBits = 256;

mpz_class zpow(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

mpq_class make_q(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num);
    q /= mpq_class(den);
    return q;
}

// Directed rounding to kRoundBits significant bits (relative, not an
// absolute grid): tiny positive products stay strictly positive.
mpq_class round_q(const mpq_class& v, bool up) {
    if (sgn(v) == 0) return mpq_class(0);
    long nb = static_cast<long>(mpz_sizeinbase(v.get_num().get_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(v.get_den().get_mpz_t(), 2));
    long shift = kRoundBits - (nb - db);
    mpz_class num = v.get_num(), den = v.get_den(), t;
    if (shift >= 0) {
        num <<= static_cast<unsigned long>(shift);
    } else {
        den <<= static_cast<unsigned long>(-shift);
    }
    if (up) {
        mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    } else {
        mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (shift >= 0) return make_q(t, mpz_class(1) << static_cast<unsigned long>(shift));
    return mpq_class(t * (mpz_class(1) << static_cast<unsigned long>(-shift)));
}

// acc *= [flo, fhi]; all quantities nonnegative.
void mul_interval(RationalInterval& acc, const mpq_class& flo, const mpq_class& fhi) {
    acc.lo = round_q(acc.lo * flo, false);
    acc.hi = round_q(acc.hi * fhi, true);
}

void mul_interval(RationalInterval& acc, const mpq_class& f) { mul_interval(acc, f, f); }

// [r/2^S, (r+1)/2^S] with r = floor(sqrt(v) * 2^S).
RationalInterval sqrt_enclosure(unsigned long v) {
    mpz_class scaled = mpz_class(v) << (2 * kRoundBits);
    mpz_class r = isqrt(scaled);
    mpz_class den = mpz_class(1) << kRoundBits;
    return {make_q(r, den), make_q(r + 1, den)};
}

}  // namespace

std::string cubic_regime_name(CubicRegime r) {
    switch (r) {
        case CubicRegime::two: return "two";
        case CubicRegime::three: return "three";
        case CubicRegime::split: return "split";
        case CubicRegime::one_mod_3: return "one-mod-3";
        case CubicRegime::two_mod_3: return "two-mod-3";
    }
    throw std::logic_error("unreachable regime");
}

CubicRegime cubic_regime_from_name(const std::string& name) {
    if (name == "two") return CubicRegime::two;
    if (name == "three") return CubicRegime::three;
    if (name == "split") return CubicRegime::split;
    if (name == "one-mod-3") return CubicRegime::one_mod_3;
    if (name == "two-mod-3") return CubicRegime::two_mod_3;
    throw std::domain_error("unknown cubic regime: " + name);
}

std::string density_kind_name(DensityKind k) {
    switch (k) {
        case DensityKind::f_cubic: return "F-cubic";
        case DensityKind::g_cubic: return "G-cubic";
        case DensityKind::f_general: return "F-general";
        case DensityKind::g_general: return "G-general";
    }
    throw std::logic_error("unreachable kind");
}

DensityKind density_kind_from_name(const std::string& name) {
    if (name == "F-cubic") return DensityKind::f_cubic;
    if (name == "G-cubic") return DensityKind::g_cubic;
    if (name == "F-general") return DensityKind::f_general;
    if (name == "G-general") return DensityKind::g_general;
    throw std::domain_error("unknown density kind: " + name);
}

int mobius(unsigned long r) {
    if (r == 0) throw std::domain_error("mobius requires r >= 1");
    if (r == 1) return 1;
    auto fac = factor_with_budget(mpz_class(r));
    for (const auto& [p, e] : fac) {
        if (e >= 2) return 0;
    }
    return (fac.size() % 2 == 0) ? 1 : -1;
}

mpq_class upsilon_p(int n, const mpz_class& p) {
    if (n < 3) throw std::domain_error("upsilon_p requires n >= 3");
    mpz_class den = zpow(p, static_cast<unsigned long>(n) + 1);
    mpq_class total = 0;
    for (int r = 1; r <= n; ++r) {
        if (n % r != 0) continue;
        int mu = mobius(static_cast<unsigned long>(r));
        if (mu == 0) continue;
        mpz_class num = zpow(p, static_cast<unsigned long>(n / r) + 1) - 1;
        total += mu * make_q(num, den);
    }
    return total;
}

mpq_class cubic_local_density(const mpz_class& p, CubicRegime regime) {
    switch (regime) {
        case CubicRegime::two:
            if (p != 2) throw std::domain_error("regime 'two' requires p = 2");
            return mpq_class(53, 64);
        case CubicRegime::three:
            if (p != 3) throw std::domain_error("regime 'three' requires p = 3");
            return mpq_class(16, 81);
        case CubicRegime::split: {
            if (p <= 3 || !is_prime(p)) throw std::domain_error("regime 'split' requires a prime p > 3");
            mpz_class num = (p - 1) * (p - 1) * p * (p + 1);
            return make_q(num, 6 * zpow(p, 4));
        }
        case CubicRegime::one_mod_3: {
            if (p <= 3 || !is_prime(p) || p % 3 != 1)
                throw std::domain_error("regime 'one-mod-3' requires a prime p = 1 mod 3, p > 3");
            return 1 - make_q(p * p - 1, zpow(p, 4));
        }
        case CubicRegime::two_mod_3: {
            if (p <= 3 || !is_prime(p) || p % 3 != 2)
                throw std::domain_error("regime 'two-mod-3' requires a prime p = 2 mod 3, p > 3");
            return 1 - make_q(p * p * p + p * p - 1, zpow(p, 7));
        }
    }
    throw std::logic_error("unreachable regime");
}

mpq_class split_density(int n, const mpz_class& p) {
    if (n < 2) throw std::domain_error("split_density requires n >= 2");
    if (p + 1 < n) throw std::domain_error("split_density requires p + 1 >= n (no split forms)");
    if (!p.fits_ulong_p()) throw std::domain_error("prime too large for split_density");
    mpz_class num = binomial(p.get_ui() + 1, static_cast<unsigned long>(n)) * (p - 1);
    return make_q(num, zpow(p, static_cast<unsigned long>(n) + 1));
}

mpq_class l1l2_density(int n, const mpz_class& p) {
    if (n < 2) throw std::domain_error("l1l2_density requires n >= 2");
    unsigned long l = 1 + valuation(mpz_class(n), p) + ((p == 2 && n % 2 == 0) ? 1 : 0);
    mpz_class num = (p + 1) * p * (p - 1) * zpow(p, 3 * (l - 1));
    return make_q(num, zpow(p, l * (static_cast<unsigned long>(n) + 1)));
}

DensityValue density_lower_bound(int n, int k, DensityKind kind, unsigned long cutoff) {
    bool cubic_kind = (kind == DensityKind::f_cubic || kind == DensityKind::g_cubic);
    if (cubic_kind && n != 3) throw std::domain_error("cubic density kinds require degree 3");
    if (n < 3) throw std::domain_error("density requires degree >= 3");
    if (k < 1) throw std::domain_error("density requires k >= 1");

    mpz_class nk = zpow(mpz_class(n), static_cast<unsigned long>(k));
    if (kind == DensityKind::g_cubic && nk <= 34)
        throw std::domain_error("G-cubic requires 3^k > 34 (k >= 4)");
    mpz_class general_defect = (n <= 4) ? mpz_class(13 * n) : mpz_class(11 * n);
    if (kind == DensityKind::g_general && nk <= general_defect)
        throw std::domain_error("G-general requires n^k > defect count");

    PrimeChoice pc = choose_primes(n, 1, k);

    // Tail regime boundary and tail constant: each neglected factor is
    // 1 - c_p/p^2 with c_p <= C, so the tail product over p > P lies in
    // [1 - C/P, 1] by the product inequality and sum_{m>P} 1/m^2 < 1/P.
    unsigned long tail_start;
    mpz_class C;
    if (cubic_kind) {
        tail_start = pc.primes.back().get_ui();
        C = 1;
    } else {
        long g = static_cast<long>(n - 1) * (n - 2) / 2;
        tail_start = static_cast<unsigned long>((2 * g + 1) * (2 * g + 1));
        C = 1;
        for (int r = 2; r <= n; ++r) {
            if (n % r == 0 && mobius(static_cast<unsigned long>(r)) != 0) C += 1;
        }
    }
    if (cutoff < tail_start || mpz_class(cutoff) < 2 * C)
        throw std::domain_error("cutoff too small for this density kind");

    DensityValue out;
    out.kind = kind;
    out.degree = n;
    out.k = k;
    out.cutoff = cutoff;
    out.tail_bound = make_q(C, mpz_class(cutoff));

    // Leading multiplier.
    switch (kind) {
        case DensityKind::f_cubic:
            out.leading = {mpq_class(1), mpq_class(1)};
            break;
        case DensityKind::g_cubic: {
            mpq_class v(nk - 34);
            out.leading = {v, v};
            break;
        }
        case DensityKind::f_general:
            out.leading = {mpq_class(1, 2), mpq_class(1, 2)};
            break;
        case DensityKind::g_general: {
            mpq_class v = make_q(nk - general_defect,
                                 zpow(2, static_cast<unsigned long>(n + 1) * k + 1));
            v *= zpow(mpz_class(n + 1), static_cast<unsigned long>(k / 2));
            if (k % 2 == 1) {
                RationalInterval s = sqrt_enclosure(static_cast<unsigned long>(n + 1));
                out.leading = {v * s.lo, v * s.hi};
            } else {
                out.leading = {v, v};
            }
            break;
        }
    }

    // Finite exact factors, ascending by prime.
    if (cubic_kind) {
        out.exact_factors.emplace_back("2", cubic_local_density(2, CubicRegime::two));
        out.exact_factors.emplace_back("3", cubic_local_density(3, CubicRegime::three));
        for (const auto& p : pc.primes) {
            mpq_class f = cubic_local_density(p, CubicRegime::split);
            if (kind == DensityKind::g_cubic) f /= mpq_class(p * p);
            out.exact_factors.emplace_back(p.get_str(), f);
        }
    } else {
        std::vector<uint64_t> small = prime_sieve(tail_start);
        size_t next_split = 0;
        for (uint64_t q : small) {
            mpz_class qp(static_cast<unsigned long>(q));
            bool is_split = false;
            while (next_split < pc.primes.size() && pc.primes[next_split] < qp) ++next_split;
            if (next_split < pc.primes.size() && pc.primes[next_split] == qp) is_split = true;
            if (is_split) {
                mpq_class f = split_density(n, qp);
                if (kind == DensityKind::g_general) {
                    // Height-normalized variant divides by p^{2n} instead of p^{n+1}.
                    f /= mpq_class(zpow(qp, static_cast<unsigned long>(n) - 1));
                }
                out.exact_factors.emplace_back(qp.get_str(), f);
            } else {
                out.exact_factors.emplace_back(qp.get_str(), l1l2_density(n, qp));
            }
        }
        // Chosen primes above the boundary still contribute their split factor.
        for (const auto& p : pc.primes) {
            if (p <= static_cast<long>(tail_start)) continue;
            mpq_class f = split_density(n, p);
            if (kind == DensityKind::g_general)
                f /= mpq_class(zpow(p, static_cast<unsigned long>(n) - 1));
            out.exact_factors.emplace_back(p.get_str(), f);
        }
    }

    // Truncated product: leading x exact factors x Euler factors <= cutoff.
    RationalInterval acc = out.leading;
    for (const auto& [name, f] : out.exact_factors) {
        (void)name;
        mul_interval(acc, f);
    }
    std::vector<uint64_t> primes = prime_sieve(cutoff);
    for (uint64_t p : primes) {
        if (p <= tail_start) continue;
        mpz_class pz(static_cast<unsigned long>(p));
        mpq_class f;
        if (cubic_kind) {
            f = cubic_local_density(pz, p % 3 == 1 ? CubicRegime::one_mod_3
                                                   : CubicRegime::two_mod_3);
        } else {
            f = upsilon_p(n, pz);
        }
        mul_interval(acc, f);
    }
    out.truncated_product = acc;
    return out;
}

RationalInterval pi_squared_enclosure() {
    // pi^2 = 9.869604401089358618834490999876151135313699407... ; the
    // endpoints below bracket it with width 1e-42.
    mpz_class num("9869604401089358618834490999876151135313699");
    mpz_class den = zpow(10, 42);
    return {make_q(num, den), make_q(num + 1, den)};
}

RationalInterval dh_reference(const mpq_class& X, DiscSign sign) {
    if (X < 0) throw std::domain_error("dh_reference requires X >= 0");
    RationalInterval pi2 = pi_squared_enclosure();
    mpq_class den(sign == DiscSign::negative ? 24 : 72);
    return {pi2.lo * X / den, pi2.hi * X / den};
}

}  // namespace thuegap

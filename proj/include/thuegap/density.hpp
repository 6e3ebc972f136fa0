#pragma once
// Exact local densities and certified truncated Euler products for the
// families of forms the pipeline produces, plus reference constants for the
// cubic class-number asymptotics.
#include <gmpxx.h>
#include <string>
#include <utility>
#include <vector>

namespace thuegap {

// Closed rational interval [lo, hi]; invariant lo <= hi.
struct RationalInterval {
    mpq_class lo;
    mpq_class hi;
};

// Local density regimes for binary cubic forms.
enum class CubicRegime { two, three, split, one_mod_3, two_mod_3 };

std::string cubic_regime_name(CubicRegime r);
CubicRegime cubic_regime_from_name(const std::string& name);

// Product families: the cubic-specific F/G densities and their general-degree
// analogues ("F" counts source forms, "G" counts constructed descendants).
enum class DensityKind { f_cubic, g_cubic, f_general, g_general };

std::string density_kind_name(DensityKind k);  // "F-cubic", ...
DensityKind density_kind_from_name(const std::string& name);

struct DensityValue {
    DensityKind kind;
    int degree = 3;
    int k = 0;
    // Finite part: one exact rational factor per named prime, each in (0, 1].
    std::vector<std::pair<std::string, mpq_class>> exact_factors;
    // Leading multiplier (certificate count, height normalization); an
    // interval because odd k introduces a sqrt(n+1) enclosure.
    RationalInterval leading;
    // leading * exact factors * all Euler factors at primes <= cutoff.
    RationalInterval truncated_product;
    unsigned long cutoff = 0;
    // The untruncated value lies in [lo * (1 - tail_bound), hi].
    mpq_class tail_bound;
};

// Moebius function; r >= 1.
int mobius(unsigned long r);

// Density of primitive binary n-ic forms mod p that are not constant
// multiples of proper powers: sum over r | n of mu(r) (p^{n/r+1} - 1)/p^{n+1}.
mpq_class upsilon_p(int n, const mpz_class& p);

// Exact per-prime densities for binary cubic forms.  Throws
// std::domain_error when the regime does not match the prime.
//   two:       p = 2, primitive + maximal + not xy(x+y) mod 2 -> 53/64
//   three:     p = 3, primitive + irreducible -> 16/81
//   split:     p > 3, primitive splitting completely -> (1/6)(p-1)^2 p(p+1)/p^4
//   one_mod_3: p = 1 mod 3, p > 3 -> 1 - (p^2-1)/p^4
//   two_mod_3: p = 2 mod 3, p > 3 -> 1 - (p^3+p^2-1)/p^7
mpq_class cubic_local_density(const mpz_class& p, CubicRegime regime);

// Density of primitive forms splitting completely mod p:
// binom(p+1, n)(p-1)/p^{n+1}.  Requires p + 1 >= n.
mpq_class split_density(int n, const mpz_class& p);

// Density of primitive forms congruent to L1 L2^{n-1} mod p^l with
// l = 1 + v_p(n) + [p = 2 and p | n]: (p+1)p(p-1)p^{3(l-1)} / p^{l(n+1)}.
mpq_class l1l2_density(int n, const mpz_class& p);

// Evaluates the displayed lower-bound product for the given family with all
// Euler factors at primes <= cutoff, returning exact finite factors, the
// truncated interval, and a rigorous tail bound.
DensityValue density_lower_bound(int n, int k, DensityKind kind, unsigned long cutoff);

// Certified enclosure of pi^2, width < 1e-30.
RationalInterval pi_squared_enclosure();

enum class DiscSign { negative, positive };

// Main term of the cubic class-number count up to X: pi^2/24 * X for
// negative discriminants, pi^2/72 * X for positive.  Reference figure only.
RationalInterval dh_reference(const mpq_class& X, DiscSign sign);

}  // namespace thuegap

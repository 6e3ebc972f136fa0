#pragma once
// Binary forms over prime fields and prime powers: factorization,
// split-completely tests, power patterns, and congruence solving.
#include <gmpxx.h>
#include <optional>
#include <vector>

#include "thuegap/forms.hpp"
#include "thuegap/poly.hpp"

namespace thuegap {

// A root of F mod p in P^1: finite value in {0..p-1}, or infinity ([1:0],
// i.e. y | F mod p).
struct RootLabel {
    bool infinite = false;
    mpz_class value;  // meaningful iff !infinite
    mpz_class prime;

    bool operator==(const RootLabel& o) const {
        return infinite == o.infinite && (infinite || value == o.value) &&
               prime == o.prime;
    }
    bool operator<(const RootLabel& o) const {
        if (infinite != o.infinite) return !infinite;  // finite first
        return value < o.value;
    }
};

// F = unit * prod factors[i].first ^ factors[i].second mod p; factors are
// irreducible over the p-element field, first nonzero coefficient 1, sorted
// lexicographically by coefficient tuple.
struct FactorizationModP {
    mpz_class p;
    mpz_class unit;
    std::vector<std::pair<BinaryForm, unsigned>> factors;
};

// F = c * M^r mod p with r > 1 maximal (M may be reducible).
struct PowerPattern {
    mpz_class c;
    BinaryForm M;
    int r = 0;
};

// F = L1 * L2^(n-1) mod p^l, L1 and L2 linearly independent mod p; L2 has
// first nonzero coefficient 1, L1 is then determined.
struct L1L2Witness {
    BinaryForm L1, L2;
};

// Solutions of f(X) = 0 mod p^k as disjoint classes X = c_i mod p^(k-u_i).
struct CongruenceClassSolution {
    mpz_class p;
    unsigned k = 0;
    std::vector<std::pair<mpz_class, unsigned>> classes;
};

// Complete factorization of F mod p; rejects p | content(F).
FactorizationModP factor_mod_p(const BinaryForm& F, const mpz_class& p);

// The n distinct root labels when F mod p is a unit times n pairwise
// non-proportional linear forms; nullopt otherwise.
std::optional<std::vector<RootLabel>> splits_completely(const BinaryForm& F,
                                                        const mpz_class& p);

bool is_irreducible_mod_p(const BinaryForm& F, const mpz_class& p);

// Maximal r > 1 with F = c M^r mod p, or nullopt.
std::optional<PowerPattern> is_const_times_power(const BinaryForm& F,
                                                 const mpz_class& p);

// Witness for F = L1 L2^(n-1) mod p^l with L1, L2 independent mod p.
std::optional<L1L2Witness> matches_L1L2_power(const BinaryForm& F,
                                              const mpz_class& p, unsigned l);

// Complete solution of f(X) = 0 mod p^k; rejects content != 1 and disc = 0.
CongruenceClassSolution roots_mod_prime_power(const UniPoly& f,
                                              const mpz_class& p, unsigned k);

// --- low-level helpers shared by other modules ---

// Coefficients reduced into [0, p).
BinaryForm reduce_form_mod_p(const BinaryForm& F, const mpz_class& p);

// Distinct roots of f mod p (deterministic order, ascending).
std::vector<mpz_class> gfp_roots(const UniPoly& f, const mpz_class& p);

// Monic gcd of a and b mod p.
UniPoly gfp_gcd(UniPoly a, UniPoly b, const mpz_class& p);

// a*b mod p.
UniPoly gfp_mul(const UniPoly& a, const UniPoly& b, const mpz_class& p);

// t^e mod (f, p) for monic f of degree >= 1.
UniPoly gfp_pow_t(const mpz_class& e, const UniPoly& f, const mpz_class& p);

// Irreducibility of a monic univariate polynomial mod p.
bool gfp_irreducible(const UniPoly& f, const mpz_class& p);

// Monic irreducible factors with multiplicities, sorted by (degree,
// coefficients).
std::vector<std::pair<UniPoly, unsigned>> gfp_factor(UniPoly f,
                                                     const mpz_class& p);

}  // namespace thuegap

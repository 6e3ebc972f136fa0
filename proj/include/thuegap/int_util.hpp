#pragma once
// Integer utilities shared across the library: primality, budgeted
// factorization, valuations, modular arithmetic, CRT, deterministic RNG.
#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace thuegap {

// Thrown when a budgeted computation (factorization, candidate search)
// runs out of its configured budget.  CLI maps this to exit code 2.
struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Primes <= limit, ascending.
std::vector<uint64_t> prime_sieve(uint64_t limit);

// Deterministic for all inputs this project produces (BPSW + Miller-Rabin
// rounds via mpz_probab_prime_p); treated as exact, see README.
bool is_prime(const mpz_class& n);

// v_p(n) for n != 0; throws on n == 0.
unsigned long valuation(const mpz_class& n, const mpz_class& p);

// Nonnegative representative of a mod m (m > 0).
mpz_class mod_reduce(const mpz_class& a, const mpz_class& m);

// base^exp mod m, exp >= 0, m > 0.
mpz_class powmod(const mpz_class& base, const mpz_class& exp, const mpz_class& m);

// Inverse of a mod m; throws std::domain_error if gcd(a,m) != 1.
mpz_class invmod(const mpz_class& a, const mpz_class& m);

// x with x = r1 mod m1, x = r2 mod m2 (m1, m2 coprime), 0 <= x < m1*m2.
mpz_class crt_pair(const mpz_class& r1, const mpz_class& m1,
                   const mpz_class& r2, const mpz_class& m2);

// floor(sqrt(n)) for n >= 0.
mpz_class isqrt(const mpz_class& n);

// Complete factorization of n > 0 into (prime, exponent) pairs, ascending.
// Uses trial division up to trial_limit then Pollard-Brent rho with an
// iteration budget; throws BudgetExhausted if a composite cofactor resists.
std::vector<std::pair<mpz_class, unsigned>> factor_with_budget(
    mpz_class n, uint64_t trial_limit = 1000000, uint64_t rho_budget = 6000000);

// As above but returns nullopt instead of throwing.
std::optional<std::vector<std::pair<mpz_class, unsigned>>> try_factor(
    mpz_class n, uint64_t trial_limit = 1000000, uint64_t rho_budget = 6000000);

// Distinct prime factors of |n| (n != 0), ascending.
std::vector<mpz_class> prime_factors_with_budget(
    const mpz_class& n, uint64_t trial_limit = 1000000, uint64_t rho_budget = 6000000);

// Binomial coefficient, exact.
mpz_class binomial(unsigned long n, unsigned long k);

// Deterministic 64-bit generator (splitmix64); used for seeded sampling
// in the pipeline and tests.  Never seeded from time or hardware.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next();
    // Uniform in [0, bound), bound > 0.
    uint64_t below(uint64_t bound);
    // Uniform integer in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi);

  private:
    uint64_t state_;
};

}  // namespace thuegap

#include "thuegap/int_util.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace thuegap {

std::vector<uint64_t> prime_sieve(uint64_t limit) {
    std::vector<uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (uint64_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
}

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

unsigned long valuation(const mpz_class& n, const mpz_class& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    mpz_class m = abs(n), q, r;
    unsigned long v = 0;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        m = q;
        ++v;
    }
}

mpz_class mod_reduce(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class powmod(const mpz_class& base, const mpz_class& exp, const mpz_class& m) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class invmod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("invmod: not invertible");
    return r;
}

mpz_class crt_pair(const mpz_class& r1, const mpz_class& m1,
                   const mpz_class& r2, const mpz_class& m2) {
    // x = r1 + m1 * t with t = (r2 - r1)/m1 mod m2.
    mpz_class t = mod_reduce((r2 - r1) * invmod(mod_reduce(m1, m2), m2), m2);
    return mod_reduce(r1 + m1 * t, m1 * m2);
}

mpz_class isqrt(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

namespace {

// Pollard rho (Floyd cycle detection); returns a nontrivial factor of an
// odd composite n, or nullopt if the iteration budget is exhausted.
std::optional<mpz_class> rho_pollard(const mpz_class& n, uint64_t budget) {
    if (mpz_perfect_square_p(n.get_mpz_t())) return isqrt(n);
    uint64_t steps = 0;
    for (unsigned long c = 1; c < 64; ++c) {
        auto f = [&](const mpz_class& v) { return mod_reduce(v * v + c, n); };
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = gcd(mpz_class(x - y), n);
            if (++steps > budget) return std::nullopt;
        }
        if (d != n) return d;
        // Degenerate collision for this polynomial: try the next constant.
    }
    return std::nullopt;
}

bool factor_rec(const mpz_class& n, uint64_t budget,
                std::map<mpz_class, unsigned>& acc) {
    if (n == 1) return true;
    if (is_prime(n)) {
        acc[n] += 1;
        return true;
    }
    auto d = rho_pollard(n, budget);
    if (!d) return false;
    mpz_class q = n / *d;
    return factor_rec(*d, budget, acc) && factor_rec(q, budget, acc);
}

std::optional<std::vector<std::pair<mpz_class, unsigned>>> try_factor_uncached(
    mpz_class n, uint64_t trial_limit, uint64_t rho_budget) {
    std::map<mpz_class, unsigned> acc;
    static const std::vector<uint64_t> small = prime_sieve(1 << 16);
    auto strip = [&](const mpz_class& p) {
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            acc[p] += 1;
        }
    };
    for (uint64_t p : small) {
        if (p > trial_limit || n == 1) break;
        if (mpz_class(p) * p > n) break;
        strip(p);
    }
    if (n > 1 && trial_limit > (1 << 16)) {
        for (uint64_t p = (1 << 16) + 1; p <= trial_limit && n > 1; p += 2) {
            if (mpz_class(p) * p > n) break;
            strip(p);
        }
    }
    if (n > 1) {
        if (!factor_rec(n, rho_budget, acc)) return std::nullopt;
    }
    std::vector<std::pair<mpz_class, unsigned>> out(acc.begin(), acc.end());
    return out;
}

}  // namespace

std::optional<std::vector<std::pair<mpz_class, unsigned>>> try_factor(
    mpz_class n, uint64_t trial_limit, uint64_t rho_budget) {
    if (n <= 0) throw std::domain_error("try_factor: n must be positive");
    // Runs factor the same discriminant for every sibling form and again in
    // every audit; hard inputs burn the whole rho budget each time, so the
    // outcome (including "exhausted") is memoized per process.
    using Key = std::tuple<mpz_class, uint64_t, uint64_t>;
    using Val = std::optional<std::vector<std::pair<mpz_class, unsigned>>>;
    static std::mutex mu;
    static std::map<Key, Val> cache;
    Key key{n, trial_limit, rho_budget};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Val result = try_factor_uncached(std::move(n), trial_limit, rho_budget);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (cache.size() < 512) cache.emplace(std::move(key), result);
    }
    return result;
}

std::vector<std::pair<mpz_class, unsigned>> factor_with_budget(
    mpz_class n, uint64_t trial_limit, uint64_t rho_budget) {
    auto r = try_factor(std::move(n), trial_limit, rho_budget);
    if (!r) throw BudgetExhausted("factorization budget exhausted");
    return *r;
}

std::vector<mpz_class> prime_factors_with_budget(
    const mpz_class& n, uint64_t trial_limit, uint64_t rho_budget) {
    if (n == 0) throw std::domain_error("prime_factors_with_budget: zero");
    std::vector<mpz_class> out;
    for (auto& pe : factor_with_budget(abs(n), trial_limit, rho_budget))
        out.push_back(pe.first);
    return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t bound) {
    // Rejection sampling for uniformity.
    uint64_t lim = bound * ((~0ULL) / bound);
    uint64_t v;
    do {
        v = next();
    } while (v >= lim);
    return v % bound;
}

int64_t Rng::range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
}

}  // namespace thuegap

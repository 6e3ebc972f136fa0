#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "thuegap/int_util.hpp"
#include "thuegap/modp.hpp"

using namespace thuegap;

namespace {

BinaryForm random_form(Rng& rng, int n, long bound) {
    std::vector<mpz_class> c(static_cast<size_t>(n) + 1);
    for (auto& x : c) x = mpz_class(static_cast<long>(rng.range(-bound, bound)));
    return BinaryForm(c);
}

// Reduce and compare forms coefficientwise mod p.
bool same_mod_p(const BinaryForm& A, const BinaryForm& B, const mpz_class& p) {
    if (A.f.size() != B.f.size()) return false;
    for (size_t i = 0; i < A.f.size(); ++i)
        if (mod_reduce(A.f[i] - B.f[i], p) != 0) return false;
    return true;
}

// Plain integer coefficient convolution.
std::vector<mpz_class> convolve(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b) {
    std::vector<mpz_class> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

BinaryForm form_pow(const BinaryForm& M, int r) {
    std::vector<mpz_class> acc = M.f;
    for (int i = 1; i < r; ++i) acc = convolve(acc, M.f);
    return BinaryForm(acc);
}

}  // namespace

TEST_CASE("factor_mod_p recombines to F") {
    Rng rng(201);
    for (int i = 0; i < 150; ++i) {
        int n = 3 + static_cast<int>(rng.below(3));
        BinaryForm F = random_form(rng, n, 50);
        for (long pl : {2L, 3L, 5L, 7L, 11L}) {
            mpz_class p(pl);
            if (mod_reduce(form_content(F), p) == 0) continue;
            auto fac = factor_mod_p(F, p);
            // unit * prod factor^mult == F mod p, degrees sum to n, every
            // factor irreducible with first nonzero coefficient 1
            std::vector<mpz_class> prod{fac.unit};
            int deg = 0;
            for (const auto& [g, mult] : fac.factors) {
                for (unsigned e = 0; e < mult; ++e) prod = convolve(prod, g.f);
                deg += g.degree() * static_cast<int>(mult);
                size_t lead = 0;
                while (lead < g.f.size() && g.f[lead] == 0) ++lead;
                REQUIRE(lead < g.f.size());
                CHECK(g.f[lead] == 1);
            }
            CHECK(deg == n);
            CHECK(same_mod_p(BinaryForm(prod), reduce_form_mod_p(F, p), p));
        }
    }
}

TEST_CASE("splits_completely labels") {
    auto labels = splits_completely(BinaryForm({1, 0, 0, 1}), 7);
    REQUIRE(labels.has_value());
    std::vector<mpz_class> vals;
    for (const auto& l : *labels) {
        CHECK_FALSE(l.infinite);
        vals.push_back(l.value);
    }
    CHECK(vals == std::vector<mpz_class>({3, 5, 6}));

    CHECK_FALSE(splits_completely(BinaryForm({1, 0, 0, 1}), 5).has_value());
    CHECK_FALSE(splits_completely(BinaryForm({1, 0, 0, 1}), 2).has_value());
    CHECK_FALSE(splits_completely(BinaryForm({1, 0, 0, 1}), 3).has_value());

    // xy(x+y) + 5y^3 variant: infinite root plus finite roots mod 5
    auto inf_labels = splits_completely(BinaryForm({5, 1, 1, 0}), 5);
    REQUIRE(inf_labels.has_value());
    REQUIRE(inf_labels->size() == 3);
    CHECK((*inf_labels)[0].value == 0);
    CHECK((*inf_labels)[1].value == 4);
    CHECK((*inf_labels)[2].infinite);
}

TEST_CASE("irreducibility mod p") {
    CHECK(is_irreducible_mod_p(BinaryForm({1, 0, 2, 2}), 3));
    CHECK(is_irreducible_mod_p(BinaryForm({1, 0, 1, 1}), 2));
    CHECK_FALSE(is_irreducible_mod_p(BinaryForm({1, 0, 0, 1}), 2));
    CHECK_FALSE(is_irreducible_mod_p(BinaryForm({1, 0, 0, 1}), 7));
}

TEST_CASE("constant-times-power patterns") {
    auto pat = is_const_times_power(BinaryForm({1, 3, 3, 1}), 5);
    REQUIRE(pat.has_value());
    CHECK(pat->r == 3);
    CHECK(pat->c == 1);
    CHECK(same_mod_p(form_pow(pat->M, pat->r), BinaryForm({1, 3, 3, 1}), 5));

    // 2 (x + 2y)^3 mod 7
    auto pat2 = is_const_times_power(BinaryForm({2, 5, 3, 2}), 7);
    REQUIRE(pat2.has_value());
    CHECK(pat2->r == 3);
    CHECK(pat2->c == 2);

    CHECK_FALSE(is_const_times_power(BinaryForm({1, 0, 0, 1}), 7).has_value());
    CHECK_FALSE(is_const_times_power(BinaryForm({1, 1, 0, 0}), 5).has_value());

    // no pattern at primes of good reduction
    Rng rng(202);
    for (int i = 0; i < 60; ++i) {
        BinaryForm F = random_form(rng, 3, 30);
        mpz_class d = discriminant(F);
        for (long pl : {5L, 7L, 11L}) {
            mpz_class p(pl);
            if (d % p == 0 || mod_reduce(F.f[0], p) == 0) continue;
            CHECK_FALSE(is_const_times_power(F, p).has_value());
        }
    }
}

TEST_CASE("L1 L2^(n-1) witnesses") {
    auto w = matches_L1L2_power(BinaryForm({1, 1, 0, 0}), 5, 1);
    REQUIRE(w.has_value());
    CHECK(w->L2.f == std::vector<mpz_class>({1, 0}));
    CHECK(w->L1.f == std::vector<mpz_class>({1, 1}));

    // exactness mod p^2 as well: x^2(x+y) holds mod 25
    CHECK(matches_L1L2_power(BinaryForm({1, 1, 0, 0}), 5, 2).has_value());

    CHECK_FALSE(matches_L1L2_power(BinaryForm({1, 0, 0, 0}), 5, 1).has_value());
    CHECK_FALSE(matches_L1L2_power(BinaryForm({1, -3, 2, 0}), 5, 1).has_value());
    CHECK_FALSE(matches_L1L2_power(BinaryForm({1, 0, 0, 1}), 7, 1).has_value());

    // quartic: x^3(x + 3y) mod 7
    BinaryForm q({1, 3, 0, 0, 0});
    auto wq = matches_L1L2_power(q, 7, 1);
    REQUIRE(wq.has_value());
    CHECK(wq->L2.f == std::vector<mpz_class>({1, 0}));
    CHECK(wq->L1.f == std::vector<mpz_class>({1, 3}));
}

TEST_CASE("roots mod prime powers agree with brute force") {
    struct Case {
        std::vector<mpz_class> coeffs;  // lowest-first
        long p;
        unsigned k;
    };
    std::vector<Case> cases = {
        {{1, 0, 1}, 5, 3},    // t^2 + 1 mod 125
        {{-1, 0, 1}, 2, 3},   // t^2 - 1 mod 8
        {{2, 1, 0, 1}, 7, 2}, // t^3 + t + 2 mod 49
        {{1, 1, 1}, 3, 4},    // t^2 + t + 1 mod 81
        {{3, 0, 1}, 3, 3},    // t^2 + 3 mod 27
    };
    for (const auto& c : cases) {
        UniPoly f(c.coeffs);
        if (poly_discriminant(f) == 0) continue;
        mpz_class p(c.p);
        auto sol = roots_mod_prime_power(f, p, c.k);
        mpz_class pk = 1;
        for (unsigned i = 0; i < c.k; ++i) pk *= p;
        std::set<mpz_class> expanded;
        for (const auto& [base, u] : sol.classes) {
            mpz_class step = 1;
            for (unsigned i = 0; i < sol.k - u; ++i) step *= p;
            for (mpz_class t = mod_reduce(base, step); t < pk; t += step)
                expanded.insert(t);
        }
        std::set<mpz_class> brute;
        for (mpz_class t = 0; t < pk; ++t)
            if (mod_reduce(poly_eval(f, t), pk) == 0) brute.insert(t);
        CHECK(expanded == brute);
    }
}

TEST_CASE("root labels order finite before infinite") {
    RootLabel a{false, 2, 7}, b{false, 5, 7}, inf{true, 0, 7};
    CHECK(a < b);
    CHECK(b < inf);
    CHECK_FALSE(inf < a);
}

#pragma once
// Split-prime reduction: from F splitting completely mod p, the n
// content-reduced descended forms; chains over several primes; solution
// transport in both directions.
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thuegap/forms.hpp"
#include "thuegap/modp.hpp"

namespace thuegap {

struct DescentStep {
    mpz_class prime;
    RootLabel label;
};

// Steps over distinct ascending primes; j is the 1-based mixed-radix index
// of the label choices, first (smallest) prime most significant.
struct DescentPath {
    std::vector<DescentStep> steps;
    unsigned long j = 1;
};

struct DescentOutput {
    BinaryForm origin;
    DescentPath path;
    BinaryForm form;
};

// Precondition violation during a descent step; carries the offending form
// and prime.
struct DescentError : std::runtime_error {
    BinaryForm form;
    mpz_class prime;
    DescentError(const std::string& what, BinaryForm F, mpz_class p)
        : std::runtime_error(what), form(std::move(F)), prime(std::move(p)) {}
};

// One descent step at p: for each root label, the divided-out form.
// Finite label a: F(px + ay, y)/p; label infinity: F(x, py)/p.
// Requires p coprime to content(F) and F splitting completely mod p into
// distinct simple roots (equivalently p coprime to disc(F)).
std::vector<std::pair<RootLabel, BinaryForm>> descend_at_prime(
    const BinaryForm& F, const mpz_class& p);

// Full chain over the given primes (sorted ascending; must be distinct),
// producing all n^k descended forms in deterministic path order.
std::vector<DescentOutput> descend_chain(const BinaryForm& F,
                                         std::vector<mpz_class> primes);

// Transport a primitive solution of F = p*t one level down.
std::pair<RootLabel, std::pair<mpz_class, mpz_class>> pushforward_solution(
    const BinaryForm& F, const mpz_class& p, const mpz_class& x0,
    const mpz_class& y0);

// Transport a solution of G_j back to a solution of F = (prod p_i) * t.
std::pair<mpz_class, mpz_class> pullback_solution(const DescentOutput& out,
                                                  const mpz_class& xp,
                                                  const mpz_class& yp);

}  // namespace thuegap

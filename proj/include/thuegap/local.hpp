#pragma once
// Local solubility of F(x,y) = h: over the reals and over the p-adic
// integers, with re-checkable evidence.
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "thuegap/forms.hpp"

namespace thuegap {

enum class LocalVerdict { soluble, insoluble, undetermined };

enum class Obstruction {
    split_2_pattern,
    nonresidue_cube_pattern,
    power_pattern,
    exhausted_depth,
    sign_obstruction,
};

// Closed-enum spellings used in serialized evidence.
const char* obstruction_name(Obstruction o);
std::optional<Obstruction> obstruction_from_name(const std::string& s);

// F(x,y) = h mod p^l with l > 2e, where e is the minimum p-valuation of the
// two partial derivatives at (x,y).
struct LocalWitness {
    mpz_class x, y;
    unsigned l = 0;
    unsigned e = 0;
};

struct LocalEvidence {
    bool real_place = false;
    mpz_class prime;  // meaningful iff !real_place
    LocalVerdict verdict = LocalVerdict::undetermined;
    std::optional<LocalWitness> witness;
    std::optional<Obstruction> obstruction;
};

// n odd: always true. n even: true iff sign(h) is attained by F on the real
// plane minus the origin (exact Sturm-sequence decision, no floating point).
bool represents_over_reals(const BinaryForm& F, const mpz_class& h);

// Closed-form decision for h = 1, primitive cubic F, p != 3:
//   p = 2: insoluble iff F = xy(x+y) mod 2;
//   p = 1 mod 6: insoluble iff F = c L^3 mod p with c a non-cube, or p = 7
//     with F completely split mod 7 and disc(F) = +-2 mod 7 (for p >= 13 the
//     genus-1 point count rules the split obstruction out; at 7 it cannot);
//   p = 5 mod 6: always soluble.
LocalVerdict cubic_local_criterion(const BinaryForm& F, const mpz_class& p);

// Breadth-first decision over primitive residue pairs mod p, p^2, ...
// Accepts on the Hensel margin condition (value = h mod p^l, l > 2e);
// exhausted level => insoluble; depth_max exceeded => undetermined.
// depth_max = 0 selects the default 2*v_p(n^2 h disc F) + 3 (at least 5).
LocalEvidence soluble_p_adic(const BinaryForm& F, const mpz_class& h,
                             const mpz_class& p, unsigned depth_max = 0);

// {p <= (2g+1)^2} union {p | n h disc F}, g = (n-1)(n-2)/2. Outside this set
// p-adic solubility is automatic. May throw BudgetExhausted if disc resists
// factoring.
std::vector<mpz_class> required_prime_set(const BinaryForm& F,
                                          const mpz_class& h);

// {p <= (2g+1)^2} union {p | n h} union candidate_bad_primes(F): a sound
// alternative to required_prime_set that never factors the discriminant.
std::vector<mpz_class> effective_prime_set(const BinaryForm& F,
                                           const mpz_class& h);

struct EverywhereResult {
    enum class Kind { yes, no, undetermined } kind = Kind::undetermined;
    // Evidence in place order (real first, then primes ascending); for a
    // no/undetermined result the last entry is the offending place.
    std::vector<LocalEvidence> evidence;
};

// Combines the real place with soluble_p_adic over the required prime set
// (falling back to effective_prime_set when the discriminant resists
// factoring); cross-validates cubics against cubic_local_criterion where
// that applies.
EverywhereResult locally_represents_everywhere(const BinaryForm& F,
                                               const mpz_class& h);

}  // namespace thuegap

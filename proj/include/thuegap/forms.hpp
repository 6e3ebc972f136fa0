#pragma once
// Integral binary forms: evaluation, substitution action, discriminant,
// content, height, maximality, bounded equivalence search.
#include <gmpxx.h>
#include <optional>
#include <vector>

#include "thuegap/poly.hpp"

namespace thuegap {

// F(x,y) = sum f[i] x^(n-i) y^i with n = f.size()-1 >= 1.
struct BinaryForm {
    std::vector<mpz_class> f;

    BinaryForm() = default;
    explicit BinaryForm(std::vector<mpz_class> coeffs);
    int degree() const { return static_cast<int>(f.size()) - 1; }
    bool is_zero() const;
    bool operator==(const BinaryForm& o) const { return f == o.f; }
};

// (x, y) |-> (a x + b y, c x + d y).
struct IntegerSubstitution {
    mpz_class a, b, c, d;
    mpz_class det() const { return a * d - b * c; }
};

mpz_class evaluate(const BinaryForm& F, const mpz_class& x, const mpz_class& y);

// F^A(x,y) = F(ax+by, cx+dy); rejects det(A) = 0.
BinaryForm act(const BinaryForm& F, const IntegerSubstitution& A);

// Exact discriminant; 0 for degenerate forms.  Computed from the univariate
// resultant after a unimodular shift whenever the leading coefficient is 0.
mpz_class discriminant(const BinaryForm& F);

// gcd of the coefficients (0 iff F = 0).
mpz_class form_content(const BinaryForm& F);

// max |f_i|.
mpz_class form_height(const BinaryForm& F);

// The dehomogenization F(t, 1) as a univariate polynomial.
UniPoly form_to_unipoly(const BinaryForm& F);

// False iff p | content(F) or one of the p+1 index-p sublattice forms
// F(px+ay, y) (a = 0..p-1), F(x, py) has content divisible by p^n.
// Decided by a single aligned substitution after a power-pattern test.
bool is_maximal_at_p(const BinaryForm& F, const mpz_class& p);

// Exhaustive reference: loops over all p+1 sublattices.  Kept for tests and
// the benchmark.
bool is_maximal_at_p_reference(const BinaryForm& F, const mpz_class& p);

// Finite superset of the primes p at which F could fail to be maximal or
// could be congruent to c*M(x,y)^r (r > 1): the prime factors of
// gcd(sres_0, sres_1) of the (shifted) dehomogenization together with those
// of gcd(f_0, f_1).  Requires disc(F) != 0; may throw BudgetExhausted.
std::vector<mpz_class> candidate_bad_primes(const BinaryForm& F);

// True iff is_maximal_at_p holds at every prime where it could fail
// (candidate_bad_primes plus content primes); rejects disc = 0.
bool is_maximal(const BinaryForm& F);

struct EquivalenceResult {
    bool equivalent = false;
    IntegerSubstitution witness;  // meaningful only when equivalent
};

// Exhaustive search over unimodular A with |entries| <= entry_bound for
// F^A = G.  A bounded semi-decision aid only.
EquivalenceResult equivalent_bounded(const BinaryForm& F, const BinaryForm& G,
                                     long entry_bound);

}  // namespace thuegap

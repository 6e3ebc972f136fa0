#pragma once
// Box-bounded exhaustive solving of F(x,y) = h, primitive counting with the
// even-degree sign convention, and the exact solution-count bound.
#include <gmpxx.h>
#include <vector>

#include "thuegap/forms.hpp"

namespace thuegap {

struct ThueSolution {
    mpz_class x, y;
    bool primitive = false;
};

struct SolutionSet {
    BinaryForm F;
    mpz_class h;
    mpz_class box;
    // Sorted by (y, x). For even degree each {(x,y), (-x,-y)} pair is
    // recorded once, canonically y > 0, or y = 0 and x > 0.
    std::vector<ThueSolution> solutions;
    long primitive_count = 0;
};

struct SolutionCountBound {
    int n = 0;
    mpz_class D, m;
    unsigned long eps_num = 0, eps_den = 1;
    bool hypothesis_ok = false;
    mpz_class bound;  // the formula value; applies only if hypothesis_ok
};

// All integer solutions with |x|, |y| <= B: per-y integer root extraction
// with exact arithmetic (no floating point). Parallel over y-stripes.
SolutionSet enumerate_solutions(const BinaryForm& F, const mpz_class& h,
                                const mpz_class& B);

// Naive double-loop evaluation; same output contract. Kept for testing and
// benchmarking against the stripe enumerator.
SolutionSet enumerate_solutions_reference(const BinaryForm& F,
                                          const mpz_class& h,
                                          const mpz_class& B);

// Exact evaluation of the count-bound hypothesis
//   0 < m <= |D|^(1/(2(n-1)) - eps) / ((3.5)^(n/2) n^(n/(2(n-1))))
// by integer powering, and the applicable bound
//   9n + floor(n/((n-1) eps)) for n in {3,4},
//   7n + floor(n/((n-1) eps)) for n >= 5.
SolutionCountBound theorem_bound(int n, const mpz_class& D, const mpz_class& m,
                                 unsigned long eps_num, unsigned long eps_den);

// Number of distinct primitive solutions in S under the even-degree
// convention (pairs identified with their negatives).
long primitive_count(const SolutionSet& S);

}  // namespace thuegap

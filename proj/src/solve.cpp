#include "thuegap/solve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "thuegap/int_util.hpp"
#include "thuegap/poly.hpp"

namespace thuegap {

namespace {

// g(t) = F(t, y) - h.
UniPoly section_poly(const BinaryForm& F, const mpz_class& y,
                     const mpz_class& h) {
    int n = F.degree();
    std::vector<mpz_class> c(static_cast<size_t>(n) + 1, 0);
    mpz_class ypow = 1;
    for (int i = 0; i <= n; ++i) {
        c[static_cast<size_t>(n - i)] = F.f[static_cast<size_t>(i)] * ypow;
        ypow *= y;
    }
    c[0] -= h;
    UniPoly g(std::move(c));
    g.trim();
    return g;
}

// Integer roots of g in [-B, B], ascending; g != 0.
std::vector<mpz_class> integer_roots_in_box(const UniPoly& g,
                                            const mpz_class& B) {
    std::vector<mpz_class> roots;
    if (g.is_zero())
        throw std::logic_error("integer_roots_in_box: zero polynomial");
    size_t v = 0;
    while (v < g.c.size() && g.c[v] == 0) ++v;
    UniPoly g1(std::vector<mpz_class>(g.c.begin() + static_cast<long>(v),
                                      g.c.end()));
    if (g1.degree() >= 1) {
        // Cauchy bound: every root has |t| < 1 + max|c_i| / |lead|.
        mpz_class mx = 0;
        for (size_t i = 0; i + 1 < g1.c.size(); ++i)
            if (abs(g1.c[i]) > mx) mx = abs(g1.c[i]);
        mpz_class cb = 2 + mx / abs(g1.leading());
        mpz_class lim = cb < B ? cb : B;
        for (mpz_class t = -lim; t <= lim; ++t) {
            if (t == 0) continue;  // handled via the trailing-zero count
            if (poly_eval(g1, t) == 0) roots.push_back(t);
        }
    }
    if (v >= 1) roots.push_back(0);
    std::sort(roots.begin(), roots.end());
    return roots;
}

SolutionSet enumerate_impl(const BinaryForm& F, const mpz_class& h,
                           const mpz_class& B, bool use_threads) {
    if (h == 0) throw std::domain_error("enumerate_solutions: h must be nonzero");
    if (B < 1) throw std::domain_error("enumerate_solutions: box must be >= 1");
    int n = F.degree();
    bool even = (n % 2 == 0);
    long Bl = static_cast<long>(B.get_si());
    long ylo = even ? 0 : -Bl;
    size_t rows = static_cast<size_t>(Bl - ylo) + 1;
    std::vector<std::vector<ThueSolution>> per_y(rows);
    (void)use_threads;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (use_threads)
#endif
    for (long idx = 0; idx < static_cast<long>(rows); ++idx) {
        mpz_class y(ylo + idx);
        UniPoly g = section_poly(F, y, h);
        if (g.is_zero()) continue;  // cannot happen with h != 0
        for (const mpz_class& x : integer_roots_in_box(g, B)) {
            if (even && y == 0 && x < 0) continue;
            ThueSolution s;
            s.x = x;
            s.y = y;
            s.primitive = (gcd(s.x, s.y) == 1);
            per_y[static_cast<size_t>(idx)].push_back(std::move(s));
        }
    }

    SolutionSet out;
    out.F = F;
    out.h = h;
    out.box = B;
    for (auto& row : per_y)
        for (auto& s : row) out.solutions.push_back(std::move(s));
    for (const auto& s : out.solutions)
        if (s.primitive) ++out.primitive_count;
    return out;
}

}  // namespace

SolutionSet enumerate_solutions(const BinaryForm& F, const mpz_class& h,
                                const mpz_class& B) {
    return enumerate_impl(F, h, B, true);
}

SolutionSet enumerate_solutions_reference(const BinaryForm& F,
                                          const mpz_class& h,
                                          const mpz_class& B) {
    if (h == 0) throw std::domain_error("enumerate_solutions: h must be nonzero");
    if (B < 1) throw std::domain_error("enumerate_solutions: box must be >= 1");
    int n = F.degree();
    bool even = (n % 2 == 0);
    SolutionSet out;
    out.F = F;
    out.h = h;
    out.box = B;
    long Bl = static_cast<long>(B.get_si());
    for (long y = even ? 0 : -Bl; y <= Bl; ++y) {
        for (long x = -Bl; x <= Bl; ++x) {
            if (even && y == 0 && x < 0) continue;
            mpz_class xv(x), yv(y);
            if (evaluate(F, xv, yv) != h) continue;
            ThueSolution s;
            s.x = xv;
            s.y = yv;
            s.primitive = (gcd(xv, yv) == 1);
            out.solutions.push_back(std::move(s));
        }
    }
    for (const auto& s : out.solutions)
        if (s.primitive) ++out.primitive_count;
    return out;
}

SolutionCountBound theorem_bound(int n, const mpz_class& D, const mpz_class& m,
                                 unsigned long eps_num, unsigned long eps_den) {
    if (n < 3) throw std::domain_error("theorem_bound: n must be >= 3");
    if (D == 0) throw std::domain_error("theorem_bound: D must be nonzero");
    if (m < 1) throw std::domain_error("theorem_bound: m must be >= 1");
    if (eps_num == 0 || eps_den == 0 ||
        2 * static_cast<unsigned long>(n - 1) * eps_num >= eps_den)
        throw std::domain_error("theorem_bound: eps out of (0, 1/(2(n-1)))");
    if (eps_den > 100000 || n > 64)
        throw std::domain_error("theorem_bound: parameters too large for exact powering");

    SolutionCountBound out;
    out.n = n;
    out.D = D;
    out.m = m;
    out.eps_num = eps_num;
    out.eps_den = eps_den;

    // Hypothesis, cleared of fractional powers (3.5 = 7/2):
    //   m^(2(n-1)b) 7^(n(n-1)b) n^(nb) <= |D|^(b - 2(n-1)a) 2^(n(n-1)b).
    unsigned long a = eps_num, b = eps_den;
    unsigned long e_m = 2 * static_cast<unsigned long>(n - 1) * b;
    unsigned long e_7 = static_cast<unsigned long>(n) * static_cast<unsigned long>(n - 1) * b;
    unsigned long e_n = static_cast<unsigned long>(n) * b;
    unsigned long e_D = b - 2 * static_cast<unsigned long>(n - 1) * a;

    mpz_class lhs, t;
    mpz_pow_ui(lhs.get_mpz_t(), m.get_mpz_t(), e_m);
    mpz_class seven(7), two(2), nn(n);
    mpz_pow_ui(t.get_mpz_t(), seven.get_mpz_t(), e_7);
    lhs *= t;
    mpz_pow_ui(t.get_mpz_t(), nn.get_mpz_t(), e_n);
    lhs *= t;
    mpz_class rhs, Dabs = abs(D);
    mpz_pow_ui(rhs.get_mpz_t(), Dabs.get_mpz_t(), e_D);
    mpz_pow_ui(t.get_mpz_t(), two.get_mpz_t(), e_7);
    rhs *= t;

    out.hypothesis_ok = (lhs <= rhs);
    mpz_class base = (n >= 5) ? 7 * nn : 9 * nn;
    mpz_class extra = (nn * b) / (mpz_class(n - 1) * a);
    out.bound = base + extra;
    return out;
}

long primitive_count(const SolutionSet& S) {
    int n = S.F.degree();
    bool even = (n % 2 == 0);
    std::set<std::pair<mpz_class, mpz_class>> seen;
    for (const auto& s : S.solutions) {
        if (gcd(s.x, s.y) != 1) continue;
        mpz_class x = s.x, y = s.y;
        if (even && (y < 0 || (y == 0 && x < 0))) {
            x = -x;
            y = -y;
        }
        seen.insert({x, y});
    }
    return static_cast<long>(seen.size());
}

}  // namespace thuegap

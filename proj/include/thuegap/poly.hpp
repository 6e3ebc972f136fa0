#pragma once
// Exact univariate polynomial arithmetic over the integers: evaluation,
// gcd, resultants and principal subresultant coefficients via fraction-free
// determinants, squarefree decomposition, and Sturm-sequence root counting.
#include <gmpxx.h>
#include <vector>

namespace thuegap {

// Coefficients lowest degree first; invariant: empty (zero polynomial) or
// nonzero leading coefficient.
struct UniPoly {
    std::vector<mpz_class> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<mpz_class> coeffs);

    bool is_zero() const { return c.empty(); }
    // Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const mpz_class& leading() const { return c.back(); }
    mpz_class coeff(size_t i) const { return i < c.size() ? c[i] : mpz_class(0); }
    void trim();
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const mpz_class& s, const UniPoly& a);
bool operator==(const UniPoly& a, const UniPoly& b);

mpz_class poly_eval(const UniPoly& f, const mpz_class& x);
UniPoly poly_derivative(const UniPoly& f);
// gcd of all coefficients (0 for the zero polynomial); always >= 0.
mpz_class poly_content(const UniPoly& f);
// f divided by its content; sign normalized so the leading coefficient > 0.
UniPoly poly_primitive_part(const UniPoly& f);
// Exact division; throws std::domain_error if b does not divide a.
UniPoly poly_exact_div(const UniPoly& a, const UniPoly& b);
// Primitive gcd over Z (leading coefficient > 0); gcd(0,0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

// Exact determinant of a square integer matrix (Bareiss fraction-free
// elimination).
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

// Resultant Res(a, b); Res of two constants is 1, Res(0, b) = 0 for
// deg b >= 1.
mpz_class resultant(const UniPoly& a, const UniPoly& b);

// j-th principal subresultant coefficient of (a, b), 0 <= j < min(deg a,
// deg b): the determinant of the sub-Sylvester matrix whose last column is
// collapsed to the t^j coefficients.  sres_0 = Res(a, b).
mpz_class principal_subresultant(const UniPoly& a, const UniPoly& b, unsigned j);

// Discriminant of f as a univariate polynomial of its exact degree:
// (-1)^(d(d-1)/2) Res(f, f') / lc(f).
mpz_class poly_discriminant(const UniPoly& f);

// Squarefree decomposition f = content * prod A_i^i with A_i primitive,
// squarefree, pairwise coprime (Yun); entry i of the result is A_{i+1}.
std::vector<UniPoly> yun_squarefree(const UniPoly& f);

// Number of distinct real roots of a nonzero polynomial (Sturm; exact).
int count_real_roots(const UniPoly& f);

}  // namespace thuegap

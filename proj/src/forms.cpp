#include "thuegap/forms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "thuegap/int_util.hpp"
#include "thuegap/modp.hpp"

namespace thuegap {

BinaryForm::BinaryForm(std::vector<mpz_class> coeffs) : f(std::move(coeffs)) {
    if (f.size() < 2) throw std::domain_error("BinaryForm: need degree >= 1");
}

bool BinaryForm::is_zero() const {
    return std::all_of(f.begin(), f.end(), [](const mpz_class& v) { return v == 0; });
}

mpz_class evaluate(const BinaryForm& F, const mpz_class& x, const mpz_class& y) {
    int n = F.degree();
    mpz_class acc = F.f[0];
    mpz_class ypow = 1;
    for (int i = 1; i <= n; ++i) {
        ypow *= y;
        acc = acc * x + F.f[i] * ypow;
    }
    return acc;
}

namespace {

// Coefficient vector of (a x + b y)^k, degree-k form layout.
std::vector<mpz_class> linear_power(const mpz_class& a, const mpz_class& b, int k) {
    std::vector<mpz_class> out(k + 1);
    for (int t = 0; t <= k; ++t) {
        mpz_class ap, bp;
        mpz_pow_ui(ap.get_mpz_t(), a.get_mpz_t(), k - t);
        mpz_pow_ui(bp.get_mpz_t(), b.get_mpz_t(), t);
        out[t] = binomial(k, t) * ap * bp;
    }
    return out;
}

std::vector<mpz_class> conv(const std::vector<mpz_class>& u,
                            const std::vector<mpz_class>& v) {
    std::vector<mpz_class> r(u.size() + v.size() - 1, 0);
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i + j] += u[i] * v[j];
    return r;
}

}  // namespace

BinaryForm act(const BinaryForm& F, const IntegerSubstitution& A) {
    if (A.det() == 0) throw std::domain_error("act: singular substitution");
    int n = F.degree();
    std::vector<mpz_class> out(n + 1, 0);
    // Powers of (ax+by) and (cx+dy).
    std::vector<std::vector<mpz_class>> P(n + 1), Q(n + 1);
    for (int k = 0; k <= n; ++k) {
        P[k] = linear_power(A.a, A.b, k);
        Q[k] = linear_power(A.c, A.d, k);
    }
    for (int i = 0; i <= n; ++i) {
        if (F.f[i] == 0) continue;
        std::vector<mpz_class> term = conv(P[n - i], Q[i]);
        for (int j = 0; j <= n; ++j) out[j] += F.f[i] * term[j];
    }
    return BinaryForm(std::move(out));
}

mpz_class form_content(const BinaryForm& F) {
    mpz_class g = 0;
    for (const auto& v : F.f) g = gcd(g, v);
    return g;
}

mpz_class form_height(const BinaryForm& F) {
    mpz_class h = 0;
    for (const auto& v : F.f) {
        mpz_class a = abs(v);
        if (a > h) h = a;
    }
    return h;
}

UniPoly form_to_unipoly(const BinaryForm& F) {
    int n = F.degree();
    std::vector<mpz_class> c(n + 1);
    for (int i = 0; i <= n; ++i) c[n - i] = F.f[i];
    return UniPoly(std::move(c));
}

namespace {

// Unimodular shift (x,y) |-> (x, tx+y) making the leading coefficient
// nonzero; returns F itself when f_0 != 0.
BinaryForm leading_nonzero_shift(const BinaryForm& F) {
    if (F.f[0] != 0) return F;
    int n = F.degree();
    for (long t = 1; t <= n + 1; ++t) {
        if (evaluate(F, 1, t) != 0)
            return act(F, IntegerSubstitution{1, 0, t, 1});
    }
    return F;  // zero form
}

}  // namespace

mpz_class discriminant(const BinaryForm& F) {
    int n = F.degree();
    if (n < 2) throw std::domain_error("discriminant: need degree >= 2");
    if (F.is_zero()) return 0;
    BinaryForm G = leading_nonzero_shift(F);
    if (G.f[0] == 0) return 0;
    UniPoly f = form_to_unipoly(G);
    // Dehomogenization has full degree n here; its discriminant is the
    // discriminant of the form, and the determinant-1 shift left it fixed.
    return poly_discriminant(f);
}

bool is_maximal_at_p(const BinaryForm& F, const mpz_class& p) {
    int n = F.degree();
    mpz_class ct = form_content(F);
    if (ct == 0 || mpz_divisible_p(ct.get_mpz_t(), p.get_mpz_t())) return false;
    // A proper index-p subform exists iff F is congruent mod p to a constant
    // times the n-th power of a linear form; then only the sublattice
    // aligned with that root can carry content p^n.
    auto pat = is_const_times_power(F, p);
    if (!pat || pat->r != n || pat->M.degree() != 1) return true;
    const mpz_class& alpha = pat->M.f[0];
    const mpz_class& beta = pat->M.f[1];
    BinaryForm sub;
    if (mod_reduce(alpha, p) != 0) {
        mpz_class a = mod_reduce(-beta * invmod(alpha, p), p);
        sub = act(F, IntegerSubstitution{p, a, 0, 1});
    } else {
        sub = act(F, IntegerSubstitution{1, 0, 0, p});
    }
    mpz_class pn;
    mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), n);
    return !mpz_divisible_p(form_content(sub).get_mpz_t(), pn.get_mpz_t());
}

bool is_maximal_at_p_reference(const BinaryForm& F, const mpz_class& p) {
    int n = F.degree();
    mpz_class ct = form_content(F);
    if (ct == 0 || mpz_divisible_p(ct.get_mpz_t(), p.get_mpz_t())) return false;
    mpz_class pn;
    mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), n);
    for (mpz_class a = 0; a < p; ++a) {
        BinaryForm sub = act(F, IntegerSubstitution{p, a, 0, 1});
        if (mpz_divisible_p(form_content(sub).get_mpz_t(), pn.get_mpz_t()))
            return false;
    }
    BinaryForm sub = act(F, IntegerSubstitution{1, 0, 0, p});
    return !mpz_divisible_p(form_content(sub).get_mpz_t(), pn.get_mpz_t());
}

std::vector<mpz_class> candidate_bad_primes(const BinaryForm& F) {
    BinaryForm G = leading_nonzero_shift(F);
    UniPoly g = form_to_unipoly(G);
    if (g.degree() < 2 || poly_discriminant(g) == 0)
        throw std::domain_error("candidate_bad_primes: degenerate form");
    UniPoly gd = poly_derivative(g);
    mpz_class s0 = principal_subresultant(g, gd, 0);
    mpz_class s1 = g.degree() >= 3 ? principal_subresultant(g, gd, 1)
                                   : mpz_class(0);
    mpz_class head = gcd(G.f[0], G.f[1]);
    std::set<mpz_class> primes;
    mpz_class q = gcd(s0, s1);
    if (q != 0)
        for (auto& p : prime_factors_with_budget(q)) primes.insert(p);
    if (head != 0)
        for (auto& p : prime_factors_with_budget(head)) primes.insert(p);
    return std::vector<mpz_class>(primes.begin(), primes.end());
}

bool is_maximal(const BinaryForm& F) {
    if (F.degree() < 2) throw std::domain_error("is_maximal: need degree >= 2");
    if (discriminant(F) == 0) throw std::domain_error("is_maximal: disc = 0");
    mpz_class ct = form_content(F);
    if (ct > 1) return false;
    for (const auto& p : candidate_bad_primes(F))
        if (!is_maximal_at_p(F, p)) return false;
    return true;
}

EquivalenceResult equivalent_bounded(const BinaryForm& F, const BinaryForm& G,
                                     long entry_bound) {
    if (F.degree() != G.degree())
        throw std::domain_error("equivalent_bounded: degree mismatch");
    for (long a = -entry_bound; a <= entry_bound; ++a)
        for (long b = -entry_bound; b <= entry_bound; ++b)
            for (long c = -entry_bound; c <= entry_bound; ++c)
                for (long d = -entry_bound; d <= entry_bound; ++d) {
                    long det = a * d - b * c;
                    if (det != 1 && det != -1) continue;
                    IntegerSubstitution A{a, b, c, d};
                    if (act(F, A) == G) return {true, A};
                }
    return {false, {}};
}

}  // namespace thuegap

#include "thuegap/poly.hpp"

#include <stdexcept>

namespace thuegap {

UniPoly::UniPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<mpz_class> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return UniPoly(std::move(r));
}

UniPoly operator*(const mpz_class& s, const UniPoly& a) {
    std::vector<mpz_class> r = a.c;
    for (auto& v : r) v *= s;
    return UniPoly(std::move(r));
}

bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }

mpz_class poly_eval(const UniPoly& f, const mpz_class& x) {
    mpz_class acc = 0;
    for (size_t i = f.c.size(); i-- > 0;) acc = acc * x + f.c[i];
    return acc;
}

UniPoly poly_derivative(const UniPoly& f) {
    if (f.c.size() <= 1) return UniPoly();
    std::vector<mpz_class> r(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) r[i - 1] = mpz_class(i) * f.c[i];
    return UniPoly(std::move(r));
}

mpz_class poly_content(const UniPoly& f) {
    mpz_class g = 0;
    for (const auto& v : f.c) g = gcd(g, v);
    return g;
}

UniPoly poly_primitive_part(const UniPoly& f) {
    if (f.is_zero()) return UniPoly();
    mpz_class g = poly_content(f);
    if (f.leading() < 0) g = -g;
    std::vector<mpz_class> r = f.c;
    for (auto& v : r) v /= g;
    return UniPoly(std::move(r));
}

UniPoly poly_exact_div(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_exact_div: division by zero");
    if (a.is_zero()) return UniPoly();
    if (a.degree() < b.degree())
        throw std::domain_error("poly_exact_div: not divisible");
    std::vector<mpz_class> rem = a.c;
    std::vector<mpz_class> q(a.degree() - b.degree() + 1, 0);
    for (int d = a.degree(); d >= b.degree();) {
        mpz_class t = rem[d], r;
        mpz_tdiv_qr(t.get_mpz_t(), r.get_mpz_t(), rem[d].get_mpz_t(),
                    b.leading().get_mpz_t());
        if (r != 0) throw std::domain_error("poly_exact_div: not divisible");
        int off = d - b.degree();
        q[off] = t;
        for (int i = 0; i <= b.degree(); ++i) rem[off + i] -= t * b.c[i];
        while (d >= 0 && rem[d] == 0) --d;
        if (d >= 0 && d < b.degree())
            throw std::domain_error("poly_exact_div: not divisible");
    }
    return UniPoly(std::move(q));
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced mod b.
UniPoly pseudo_rem(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    int db = b.degree();
    const mpz_class& lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        int off = r.degree() - db;
        mpz_class lead = r.leading();
        std::vector<mpz_class> nc(r.c.size(), 0);
        // lb * r - lead * t^off * b
        for (size_t i = 0; i < r.c.size(); ++i) nc[i] = lb * r.c[i];
        for (int i = 0; i <= db; ++i) nc[off + i] -= lead * b.c[i];
        r = UniPoly(std::move(nc));
    }
    return r;
}

}  // namespace

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = poly_primitive_part(a), y = poly_primitive_part(b);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        UniPoly r = poly_primitive_part(pseudo_rem(x, y));
        x = y;
        y = r;
    }
    return x;
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

mpz_class resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    int m = a.degree(), n = b.degree();
    if (m == 0 && n == 0) return 1;
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), a.leading().get_mpz_t(), n);
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), b.leading().get_mpz_t(), m);
        return r;
    }
    size_t size = m + n;
    std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, 0));
    // n rows of shifts of a, then m rows of shifts of b; columns are degrees
    // m+n-1 down to 0.
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i) s[row][row + (m - i)] = a.c[i];
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i) s[n + row][row + (n - i)] = b.c[i];
    return bareiss_determinant(std::move(s));
}

mpz_class principal_subresultant(const UniPoly& a, const UniPoly& b, unsigned j) {
    int m = a.degree(), n = b.degree();
    if (m < 1 || n < 1 || static_cast<int>(j) >= std::min(m, n))
        throw std::domain_error("principal_subresultant: bad degrees");
    if (j == 0) return resultant(a, b);
    size_t size = m + n - 2 * j;
    std::vector<std::vector<mpz_class>> mat(size, std::vector<mpz_class>(size, 0));
    // Row r (0 <= r < n-j) holds t^(n-j-1-r) * a; rows n-j .. end hold
    // t^(m-j-1-r') * b.  Columns: degrees m+n-1-j down to j+1, then the
    // coefficient of t^j as the collapsed last column.
    auto fill_row = [&](size_t row, int shift, const UniPoly& p) {
        auto coeff_of_degree = [&](int d) -> mpz_class {
            int i = d - shift;
            if (i < 0 || i > p.degree()) return 0;
            return p.c[i];
        };
        int top = m + n - 1 - static_cast<int>(j);
        for (size_t col = 0; col + 1 < size; ++col)
            mat[row][col] = coeff_of_degree(top - static_cast<int>(col));
        mat[row][size - 1] = coeff_of_degree(static_cast<int>(j));
    };
    size_t row = 0;
    for (int r = 0; r < n - static_cast<int>(j); ++r)
        fill_row(row++, n - static_cast<int>(j) - 1 - r, a);
    for (int r = 0; r < m - static_cast<int>(j); ++r)
        fill_row(row++, m - static_cast<int>(j) - 1 - r, b);
    return bareiss_determinant(std::move(mat));
}

mpz_class poly_discriminant(const UniPoly& f) {
    int d = f.degree();
    if (d < 1) throw std::domain_error("poly_discriminant: degree < 1");
    if (d == 1) return 1;
    mpz_class res = resultant(f, poly_derivative(f));
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
    unsigned long e = static_cast<unsigned long>(d) * (d - 1) / 2;
    return (e % 2 == 0) ? q : mpz_class(-q);
}

std::vector<UniPoly> yun_squarefree(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("yun_squarefree: zero polynomial");
    std::vector<UniPoly> out;
    UniPoly p = poly_primitive_part(f);
    if (p.degree() == 0) return out;
    UniPoly d = poly_derivative(p);
    UniPoly g = poly_gcd(p, d);
    if (g.degree() == 0) {
        out.push_back(p);
        return out;
    }
    UniPoly w = poly_exact_div(p, g);
    UniPoly y = poly_exact_div(d, g);
    int guard = p.degree() + 2;
    while (w.degree() > 0 && guard-- > 0) {
        UniPoly z = y - poly_derivative(w);
        UniPoly a = poly_gcd(w, z);
        out.push_back(a);
        w = poly_exact_div(w, a);
        y = poly_exact_div(z, a);
    }
    return out;
}

namespace {

int sign_of(const mpz_class& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Count sign variations of the Sturm sequence at -infinity minus those at
// +infinity.
int sturm_variations(const std::vector<UniPoly>& seq, int at_inf) {
    int var = 0, prev = 0;
    for (const auto& p : seq) {
        if (p.is_zero()) continue;
        int s = sign_of(p.leading());
        if (at_inf < 0 && p.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != 0 && s != prev) ++var;
        if (s != 0) prev = s;
    }
    return var;
}

}  // namespace

int count_real_roots(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
    UniPoly p = poly_primitive_part(f);
    if (p.degree() <= 0) return 0;
    UniPoly g = poly_gcd(p, poly_derivative(p));
    UniPoly s = g.degree() > 0 ? poly_exact_div(p, g) : p;
    if (s.degree() == 1) return 1;
    std::vector<UniPoly> seq{s, poly_derivative(s)};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        const UniPoly& a = seq[seq.size() - 2];
        const UniPoly& b = seq.back();
        // Pseudo-remainder with the effective multiplier forced positive so
        // the Sturm sign pattern stays valid.
        const mpz_class& lb = b.leading();
        UniPoly r = a;
        unsigned k = 0;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int off = r.degree() - b.degree();
            mpz_class lead = r.leading();
            std::vector<mpz_class> nc(r.c.size(), 0);
            for (size_t i = 0; i < r.c.size(); ++i) nc[i] = lb * r.c[i];
            for (int i = 0; i <= b.degree(); ++i) nc[off + i] -= lead * b.c[i];
            r = UniPoly(std::move(nc));
            ++k;
        }
        if (lb < 0 && k % 2 == 1) r = UniPoly() - r;
        // Strip positive content to keep numbers small; negate for Sturm.
        mpz_class ct = poly_content(r);
        if (ct > 1)
            for (auto& v : r.c) v /= ct;
        seq.push_back(UniPoly() - r);
    }
    return sturm_variations(seq, -1) - sturm_variations(seq, +1);
}

}  // namespace thuegap

#include "thuegap/modp.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "thuegap/int_util.hpp"

namespace thuegap {

namespace {

UniPoly gfp_norm(UniPoly f, const mpz_class& p) {
    for (auto& x : f.c) x = mod_reduce(x, p);
    f.trim();
    return f;
}

UniPoly gfp_sub(const UniPoly& a, const UniPoly& b, const mpz_class& p) {
    return gfp_norm(a - b, p);
}

UniPoly gfp_scale(const mpz_class& s, const UniPoly& a, const mpz_class& p) {
    return gfp_norm(s * a, p);
}

UniPoly gfp_monic(const UniPoly& a, const mpz_class& p) {
    if (a.is_zero()) return a;
    if (a.leading() == 1) return a;
    return gfp_scale(invmod(a.leading(), p), a, p);
}

// a = q*b + r mod p, deg r < deg b; b nonzero.
void gfp_divrem(const UniPoly& a, const UniPoly& b, const mpz_class& p,
                UniPoly* q_out, UniPoly* r_out) {
    if (b.is_zero()) throw std::domain_error("gfp_divrem: zero divisor");
    UniPoly r = a;
    int db = b.degree();
    mpz_class linv = invmod(b.leading(), p);
    std::vector<mpz_class> q(
        a.degree() >= db ? static_cast<size_t>(a.degree() - db + 1) : 0, 0);
    while (r.degree() >= db) {
        int k = r.degree() - db;
        mpz_class coef = mod_reduce(r.leading() * linv, p);
        q[static_cast<size_t>(k)] = coef;
        for (int i = 0; i <= db; ++i) {
            size_t idx = static_cast<size_t>(k + i);
            r.c[idx] = mod_reduce(r.c[idx] - coef * b.c[static_cast<size_t>(i)], p);
        }
        r.trim();
    }
    if (q_out) *q_out = UniPoly(std::move(q));
    if (r_out) *r_out = r;
}

UniPoly gfp_rem(const UniPoly& a, const UniPoly& b, const mpz_class& p) {
    UniPoly r;
    gfp_divrem(a, b, p, nullptr, &r);
    return r;
}

UniPoly gfp_quot(const UniPoly& a, const UniPoly& b, const mpz_class& p) {
    UniPoly q, r;
    gfp_divrem(a, b, p, &q, &r);
    if (!r.is_zero()) throw std::logic_error("gfp_quot: inexact division");
    return q;
}

UniPoly gfp_deriv(const UniPoly& f, const mpz_class& p) {
    return gfp_norm(poly_derivative(f), p);
}

// base^e mod (f, p); f monic, deg f >= 1.
UniPoly gfp_powpoly(const UniPoly& base, const mpz_class& e, const UniPoly& f,
                    const mpz_class& p) {
    UniPoly result(std::vector<mpz_class>{1});
    if (f.degree() == 0) return UniPoly();
    UniPoly b = gfp_rem(gfp_norm(base, p), f, p);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = gfp_rem(gfp_mul(result, result, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = gfp_rem(gfp_mul(result, b, p), f, p);
    }
    return result;
}

UniPoly t_poly() { return UniPoly(std::vector<mpz_class>{0, 1}); }

bool poly_coeff_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(),
                                        b.c.end());
}

// Squarefree decomposition in characteristic p: f monic nonconstant,
// f = prod part^mult with the parts squarefree and pairwise coprime.
void gfp_sqfree_decomp(const UniPoly& f, const mpz_class& p,
                       unsigned mult_scale,
                       std::vector<std::pair<UniPoly, unsigned>>& out) {
    if (f.degree() <= 0) return;
    UniPoly fd = gfp_deriv(f, p);
    if (fd.is_zero()) {
        // f = g(t^p), and over the p-element field f = g(t)^p.
        unsigned long pi = p.get_ui();
        std::vector<mpz_class> gc;
        for (size_t i = 0; i * pi < f.c.size(); ++i)
            gc.push_back(f.c[i * pi]);
        gfp_sqfree_decomp(UniPoly(std::move(gc)), p,
                          mult_scale * static_cast<unsigned>(pi), out);
        return;
    }
    UniPoly c = gfp_gcd(f, fd, p);
    UniPoly w = gfp_quot(f, c, p);
    unsigned i = 1;
    while (w.degree() > 0) {
        UniPoly y = gfp_gcd(w, c, p);
        UniPoly z = gfp_quot(w, y, p);
        if (z.degree() > 0) out.push_back({z, mult_scale * i});
        w = y;
        c = gfp_quot(c, y, p);
        ++i;
    }
    // Remaining factors all have multiplicity divisible by p.
    if (c.degree() > 0) gfp_sqfree_decomp(c, p, mult_scale, out);
}

// Distinct-degree factorization of a monic squarefree f: (product, d) pairs.
std::vector<std::pair<UniPoly, int>> gfp_ddf(UniPoly f, const mpz_class& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (f.degree() <= 0) return out;
    UniPoly h = gfp_pow_t(p, f, p);  // t^(p^d) mod f, starting d = 1
    for (int d = 1; f.degree() >= 2 * d; ++d) {
        if (d > 1) h = gfp_powpoly(h, p, f, p);
        UniPoly g = gfp_gcd(gfp_sub(h, t_poly(), p), f, p);
        if (g.degree() > 0) {
            out.push_back({g, d});
            f = gfp_quot(f, g, p);
            if (f.degree() == 0) break;
            h = gfp_rem(h, f, p);
        }
    }
    if (f.degree() > 0) out.push_back({f, f.degree()});
    return out;
}

// Equal-degree factorization: w a monic product of distinct irreducibles of
// degree d. Deterministic: exhaustive for small p^d, else Cantor-Zassenhaus
// with ascending shifts.
void gfp_edf(UniPoly w, int d, const mpz_class& p, std::vector<UniPoly>& out) {
    if (w.degree() == d) {
        out.push_back(w);
        return;
    }
    mpz_class q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    if (q <= 10000) {
        // Any monic degree-d divisor of w is irreducible; enumerate them.
        unsigned long qi = q.get_ui(), pi = p.get_ui();
        for (unsigned long code = 0; code < qi && w.degree() > 0; ++code) {
            std::vector<mpz_class> cand(static_cast<size_t>(d) + 1, 0);
            unsigned long rest = code;
            for (int i = 0; i < d; ++i) {
                cand[static_cast<size_t>(i)] = mpz_class(rest % pi);
                rest /= pi;
            }
            cand[static_cast<size_t>(d)] = 1;
            UniPoly qc(std::move(cand));
            if (w.degree() < d) break;
            if (gfp_rem(w, qc, p).is_zero()) {
                out.push_back(qc);
                w = gfp_quot(w, qc, p);
            }
        }
        if (w.degree() != 0)
            throw std::logic_error("gfp_edf: enumeration missed a factor");
        return;
    }
    // p is odd here (p^d > 10000 with d <= 1 forces p > 10000; with d >= 2
    // still p >= 3 since 2^d <= 64 for our degrees).
    mpz_class e = (q - 1) / 2;
    for (unsigned long delta = 0; delta < 4096; ++delta) {
        UniPoly u(std::vector<mpz_class>{mpz_class(delta), 1});
        UniPoly g0 = gfp_gcd(u, w, p);
        if (g0.degree() > 0 && g0.degree() < w.degree()) {
            gfp_edf(g0, d, p, out);
            gfp_edf(gfp_quot(w, g0, p), d, p, out);
            return;
        }
        UniPoly h = gfp_powpoly(u, e, w, p);
        h = gfp_sub(h, UniPoly(std::vector<mpz_class>{1}), p);
        UniPoly g = gfp_gcd(h, w, p);
        if (g.degree() > 0 && g.degree() < w.degree()) {
            gfp_edf(g, d, p, out);
            gfp_edf(gfp_quot(w, g, p), d, p, out);
            return;
        }
    }
    throw std::logic_error("gfp_edf: split stalled");
}

// F as a dehomogenized pair: y-valuation e_inf and f(t) = F(t,1) mod p.
struct DehomModP {
    int n = 0;
    int e_inf = 0;
    mpz_class unit;
    UniPoly monic;  // empty iff F = unit * y^n
};

DehomModP dehomogenize_mod_p(const BinaryForm& F, const mpz_class& p) {
    BinaryForm Fr = reduce_form_mod_p(F, p);
    if (Fr.is_zero())
        throw std::domain_error("form is zero mod p (p divides content)");
    DehomModP d;
    d.n = F.degree();
    UniPoly fbar = gfp_norm(form_to_unipoly(Fr), p);
    d.e_inf = d.n - fbar.degree();
    d.unit = fbar.leading();
    d.monic = gfp_monic(fbar, p);
    if (d.monic.degree() == 0) d.monic = UniPoly();
    return d;
}

// Homogenize a monic univariate q of degree e, then multiply by y^shift.
BinaryForm homogenize(const UniPoly& q, int shift) {
    int e = q.degree();
    std::vector<mpz_class> f(static_cast<size_t>(e + shift) + 1, 0);
    for (int j = 0; j <= e; ++j)
        f[static_cast<size_t>(j + shift)] = q.coeff(static_cast<size_t>(e - j));
    return BinaryForm(std::move(f));
}

std::vector<mpz_class> conv_mod_p(const std::vector<mpz_class>& a,
                                  const std::vector<mpz_class>& b,
                                  const mpz_class& p) {
    std::vector<mpz_class> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    for (auto& x : out) x = mod_reduce(x, p);
    return out;
}

}  // namespace

BinaryForm reduce_form_mod_p(const BinaryForm& F, const mpz_class& p) {
    std::vector<mpz_class> f = F.f;
    for (auto& x : f) x = mod_reduce(x, p);
    return BinaryForm(std::move(f));
}

UniPoly gfp_mul(const UniPoly& a, const UniPoly& b, const mpz_class& p) {
    return gfp_norm(a * b, p);
}

UniPoly gfp_gcd(UniPoly a, UniPoly b, const mpz_class& p) {
    a = gfp_norm(std::move(a), p);
    b = gfp_norm(std::move(b), p);
    while (!b.is_zero()) {
        UniPoly r = gfp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return gfp_monic(a, p);
}

UniPoly gfp_pow_t(const mpz_class& e, const UniPoly& f, const mpz_class& p) {
    return gfp_powpoly(t_poly(), e, f, p);
}

bool gfp_irreducible(const UniPoly& f_in, const mpz_class& p) {
    UniPoly f = gfp_monic(gfp_norm(f_in, p), p);
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    // t^(p^e) mod f for e = 1..d.
    std::vector<UniPoly> tp(static_cast<size_t>(d) + 1);
    tp[1] = gfp_pow_t(p, f, p);
    for (int e = 2; e <= d; ++e)
        tp[static_cast<size_t>(e)] = gfp_powpoly(tp[static_cast<size_t>(e - 1)], p, f, p);
    if (!(gfp_sub(tp[static_cast<size_t>(d)], t_poly(), p).is_zero())) return false;
    for (int q = 2; q <= d; ++q) {
        if (d % q != 0) continue;
        bool qprime = true;
        for (int r = 2; r * r <= q; ++r)
            if (q % r == 0) qprime = false;
        if (!qprime) continue;
        UniPoly g = gfp_gcd(gfp_sub(tp[static_cast<size_t>(d / q)], t_poly(), p), f, p);
        if (g.degree() != 0) return false;
    }
    return true;
}

std::vector<std::pair<UniPoly, unsigned>> gfp_factor(UniPoly f,
                                                     const mpz_class& p) {
    f = gfp_norm(std::move(f), p);
    if (f.is_zero()) throw std::domain_error("gfp_factor: zero polynomial");
    f = gfp_monic(f, p);
    std::vector<std::pair<UniPoly, unsigned>> out;
    if (f.degree() <= 0) return out;
    std::vector<std::pair<UniPoly, unsigned>> parts;
    gfp_sqfree_decomp(f, p, 1, parts);
    for (auto& [part, mult] : parts) {
        for (auto& [prod, d] : gfp_ddf(part, p)) {
            std::vector<UniPoly> irr;
            gfp_edf(prod, d, p, irr);
            for (auto& q : irr) out.push_back({q, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return poly_coeff_less(a.first, b.first);
    });
    return out;
}

std::vector<mpz_class> gfp_roots(const UniPoly& f, const mpz_class& p) {
    UniPoly fr = gfp_norm(f, p);
    if (fr.is_zero()) throw std::domain_error("gfp_roots: zero polynomial");
    std::vector<mpz_class> roots;
    if (fr.degree() <= 0) return roots;
    UniPoly m = gfp_monic(fr, p);
    if (m.degree() == 1) {
        roots.push_back(mod_reduce(-m.c[0], p));
        return roots;
    }
    UniPoly h = gfp_pow_t(p, m, p);
    UniPoly w = gfp_gcd(gfp_sub(h, t_poly(), p), m, p);
    if (w.degree() <= 0) return roots;
    if (p <= 4096) {
        unsigned long pi = p.get_ui();
        for (unsigned long x = 0; x < pi; ++x) {
            if (mod_reduce(poly_eval(w, mpz_class(x)), p) == 0)
                roots.push_back(mpz_class(x));
        }
    } else {
        // w is a product of distinct linear factors; split recursively.
        std::vector<UniPoly> linears;
        gfp_edf(w, 1, p, linears);
        for (auto& lin : linears) roots.push_back(mod_reduce(-lin.c[0], p));
        std::sort(roots.begin(), roots.end());
    }
    return roots;
}

FactorizationModP factor_mod_p(const BinaryForm& F, const mpz_class& p) {
    DehomModP d = dehomogenize_mod_p(F, p);
    FactorizationModP out;
    out.p = p;
    out.unit = d.unit;
    if (d.e_inf > 0)
        out.factors.push_back({BinaryForm({0, 1}), static_cast<unsigned>(d.e_inf)});
    if (!d.monic.is_zero()) {
        for (auto& [q, mult] : gfp_factor(d.monic, p))
            out.factors.push_back({homogenize(q, 0), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree())
                      return a.first.degree() < b.first.degree();
                  return std::lexicographical_compare(
                      a.first.f.begin(), a.first.f.end(), b.first.f.begin(),
                      b.first.f.end());
              });
    // Internal check: unit * prod factors^mult reproduces F mod p.
    std::vector<mpz_class> acc{out.unit};
    for (auto& [G, mult] : out.factors)
        for (unsigned i = 0; i < mult; ++i) acc = conv_mod_p(acc, G.f, p);
    BinaryForm Fr = reduce_form_mod_p(F, p);
    if (!(BinaryForm(acc) == Fr))
        throw std::logic_error("factor_mod_p: reconstruction mismatch");
    return out;
}

std::optional<std::vector<RootLabel>> splits_completely(const BinaryForm& F,
                                                        const mpz_class& p) {
    FactorizationModP fac = factor_mod_p(F, p);
    int n = F.degree();
    if (fac.factors.size() != static_cast<size_t>(n)) return std::nullopt;
    std::vector<RootLabel> labels;
    for (auto& [G, mult] : fac.factors) {
        if (G.degree() != 1 || mult != 1) return std::nullopt;
        RootLabel lab;
        lab.prime = p;
        if (G.f[0] == 0) {
            lab.infinite = true;  // the factor y
        } else {
            lab.infinite = false;
            lab.value = mod_reduce(-G.f[1], p);  // x + by  <->  x - ay, a = -b
        }
        labels.push_back(lab);
    }
    std::sort(labels.begin(), labels.end());
    return labels;
}

bool is_irreducible_mod_p(const BinaryForm& F, const mpz_class& p) {
    DehomModP d = dehomogenize_mod_p(F, p);
    if (d.n == 1) return true;
    if (d.e_inf > 0) return false;  // y divides F mod p
    return gfp_irreducible(d.monic, p);
}

std::optional<PowerPattern> is_const_times_power(const BinaryForm& F,
                                                 const mpz_class& p) {
    DehomModP d = dehomogenize_mod_p(F, p);
    if (d.n < 2) return std::nullopt;
    PowerPattern pat;
    pat.c = d.unit;
    if (d.monic.is_zero()) {
        // F = unit * y^n.
        pat.M = BinaryForm({0, 1});
        pat.r = d.n;
        return pat;
    }
    std::vector<std::pair<UniPoly, unsigned>> parts;
    gfp_sqfree_decomp(d.monic, p, 1, parts);
    mpz_class r = d.e_inf > 0 ? mpz_class(d.e_inf) : mpz_class(0);
    for (auto& [part, mult] : parts) r = gcd(r, mpz_class(mult));
    if (r <= 1) return std::nullopt;
    unsigned ru = static_cast<unsigned>(r.get_ui());
    UniPoly m(std::vector<mpz_class>{1});
    for (auto& [part, mult] : parts)
        for (unsigned i = 0; i < mult / ru; ++i) m = gfp_mul(m, part, p);
    pat.M = homogenize(m, d.e_inf / static_cast<int>(ru));
    pat.r = static_cast<int>(ru);
    // Internal check: c * M^r = F mod p.
    std::vector<mpz_class> acc{pat.c};
    for (int i = 0; i < pat.r; ++i) acc = conv_mod_p(acc, pat.M.f, p);
    if (!(BinaryForm(acc) == reduce_form_mod_p(F, p)))
        throw std::logic_error("is_const_times_power: reconstruction mismatch");
    return pat;
}

std::optional<L1L2Witness> matches_L1L2_power(const BinaryForm& F,
                                              const mpz_class& p, unsigned l) {
    if (l < 1) throw std::domain_error("matches_L1L2_power: l must be >= 1");
    int n = F.degree();
    if (n < 3) return std::nullopt;
    BinaryForm Fp = reduce_form_mod_p(F, p);
    if (Fp.is_zero()) return std::nullopt;
    DehomModP d = dehomogenize_mod_p(F, p);

    // Mod-p shape: exactly two coprime linear components, multiplicities
    // 1 and n-1. l2bar is the multiplicity-(n-1) one.
    std::vector<std::pair<UniPoly, unsigned>> parts;
    if (!d.monic.is_zero()) gfp_sqfree_decomp(d.monic, p, 1, parts);
    std::vector<std::pair<BinaryForm, unsigned>> comps;
    if (d.e_inf > 0) comps.push_back({BinaryForm({0, 1}), static_cast<unsigned>(d.e_inf)});
    for (auto& [part, mult] : parts) comps.push_back({homogenize(part, 0), mult});
    if (comps.size() != 2) return std::nullopt;
    if (comps[0].first.degree() != 1 || comps[1].first.degree() != 1)
        return std::nullopt;
    unsigned m0 = comps[0].second, m1 = comps[1].second;
    BinaryForm l2bar({0, 1});
    if (m0 == 1 && m1 == static_cast<unsigned>(n - 1)) {
        l2bar = comps[1].first;
    } else if (m1 == 1 && m0 == static_cast<unsigned>(n - 1)) {
        l2bar = comps[0].first;
    } else {
        return std::nullopt;
    }

    mpz_class P, lift_count;
    mpz_pow_ui(P.get_mpz_t(), p.get_mpz_t(), l);
    mpz_pow_ui(lift_count.get_mpz_t(), p.get_mpz_t(), l - 1);

    std::vector<mpz_class> fP(F.f.begin(), F.f.end());
    for (auto& x : fP) x = mod_reduce(x, P);

    bool l2_starts_x = (l2bar.f[0] == 1);
    for (mpz_class s = 0; s < lift_count; ++s) {
        // Candidate L2 with the unit coefficient pinned to 1.
        std::vector<mpz_class> L2(2);
        if (l2_starts_x) {
            L2[0] = 1;
            L2[1] = mod_reduce(l2bar.f[1] + p * s, P);
        } else {
            L2[0] = mod_reduce(p * s, P);
            L2[1] = 1;
        }
        // W = L2^(n-1) mod p^l.
        std::vector<mpz_class> W{1};
        for (int i = 0; i < n - 1; ++i) W = conv_mod_p(W, L2, P);
        // Solve F = (a x + b y) * W for (a, b) using the unit pivot, then
        // verify every coefficient.
        mpz_class a, b;
        if (l2_starts_x) {
            a = fP[0];  // W[0] = 1
            b = mod_reduce(fP[1] - a * W[1], P);
        } else {
            b = fP[static_cast<size_t>(n)];  // W[n-1] = 1
            a = mod_reduce(fP[static_cast<size_t>(n - 1)] -
                               b * W[static_cast<size_t>(n - 2)],
                           P);
        }
        bool ok = true;
        for (int j = 0; j <= n && ok; ++j) {
            mpz_class lhs = 0;
            if (j < n) lhs += a * W[static_cast<size_t>(j)];
            if (j > 0) lhs += b * W[static_cast<size_t>(j - 1)];
            if (mod_reduce(lhs, P) != fP[static_cast<size_t>(j)]) ok = false;
        }
        if (ok) {
            L1L2Witness w;
            w.L1 = BinaryForm({mod_reduce(a, P), mod_reduce(b, P)});
            w.L2 = BinaryForm({L2[0], L2[1]});
            return w;
        }
    }
    return std::nullopt;
}

CongruenceClassSolution roots_mod_prime_power(const UniPoly& f,
                                              const mpz_class& p, unsigned k) {
    if (k < 1) throw std::domain_error("roots_mod_prime_power: k must be >= 1");
    if (f.degree() < 1)
        throw std::domain_error("roots_mod_prime_power: need degree >= 1");
    if (poly_content(f) != 1)
        throw std::domain_error("roots_mod_prime_power: content must be 1");
    if (poly_discriminant(f) == 0 && f.degree() > 1)
        throw std::domain_error("roots_mod_prime_power: zero discriminant");

    struct Solver {
        const mpz_class& p;

        std::vector<std::pair<mpz_class, unsigned>> solve(const UniPoly& g,
                                                          unsigned kk) {
            std::vector<std::pair<mpz_class, unsigned>> classes;
            UniPoly gp = gfp_norm(g, p);
            if (gp.is_zero())
                throw std::logic_error("roots_mod_prime_power: vanishing level");
            UniPoly gd = poly_derivative(g);
            for (const mpz_class& r : gfp_roots(gp, p)) {
                if (mod_reduce(poly_eval(gd, r), p) != 0) {
                    classes.push_back({hensel_lift(g, gd, r, kk), 0});
                    continue;
                }
                // Multiple root mod p: substitute X = r + p*Y.
                UniPoly h = compose_linear(g, r);
                unsigned tau = content_valuation(h);
                if (tau >= kk) {
                    classes.push_back({r, kk - 1});
                    continue;
                }
                UniPoly h2 = divide_out(h, tau);
                for (auto& [c2, u2] : solve(h2, kk - tau)) {
                    // X = r + p*Y with Y = c2 mod p^(kk-tau-u2).
                    unsigned rem = kk - tau - u2;  // >= 1
                    mpz_class mod;
                    mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), rem + 1);
                    classes.push_back(
                        {mod_reduce(r + p * c2, mod), kk - (rem + 1)});
                }
            }
            std::sort(classes.begin(), classes.end());
            return classes;
        }

        mpz_class hensel_lift(const UniPoly& g, const UniPoly& gd,
                              const mpz_class& r, unsigned kk) {
            mpz_class w = invmod(mod_reduce(poly_eval(gd, r), p), p);
            mpz_class x = r, mod = p;
            for (unsigned j = 1; j < kk; ++j) {
                mod *= p;
                x = mod_reduce(x - poly_eval(g, x) * w, mod);
            }
            return x;
        }

        UniPoly compose_linear(const UniPoly& g, const mpz_class& r) {
            // g(r + p*X) via Horner with the linear polynomial p*X + r.
            UniPoly res;
            UniPoly lin(std::vector<mpz_class>{r, p});
            for (int i = g.degree(); i >= 0; --i) {
                res = res * lin;
                res = res + UniPoly(std::vector<mpz_class>{g.coeff(static_cast<size_t>(i))});
            }
            return res;
        }

        unsigned content_valuation(const UniPoly& h) {
            unsigned best = 0;
            bool first = true;
            for (auto& c : h.c) {
                if (c == 0) continue;
                unsigned v = static_cast<unsigned>(valuation(c, p));
                if (first || v < best) best = v, first = false;
            }
            if (first) throw std::logic_error("content_valuation: zero polynomial");
            return best;
        }

        UniPoly divide_out(const UniPoly& h, unsigned tau) {
            mpz_class q;
            mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), tau);
            std::vector<mpz_class> c;
            c.reserve(h.c.size());
            for (auto& x : h.c) c.push_back(x / q);
            return UniPoly(std::move(c));
        }
    };

    Solver solver{p};
    CongruenceClassSolution out;
    out.p = p;
    out.k = k;
    out.classes = solver.solve(f, k);
    return out;
}

}  // namespace thuegap

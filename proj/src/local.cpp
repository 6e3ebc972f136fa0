#include "thuegap/local.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "thuegap/int_util.hpp"
#include "thuegap/modp.hpp"
#include "thuegap/poly.hpp"

namespace thuegap {

const char* obstruction_name(Obstruction o) {
    switch (o) {
        case Obstruction::split_2_pattern: return "split-2-pattern";
        case Obstruction::nonresidue_cube_pattern: return "nonresidue-cube-pattern";
        case Obstruction::power_pattern: return "power-pattern";
        case Obstruction::exhausted_depth: return "exhausted-depth";
        case Obstruction::sign_obstruction: return "sign-obstruction";
    }
    return "";
}

std::optional<Obstruction> obstruction_from_name(const std::string& s) {
    for (Obstruction o :
         {Obstruction::split_2_pattern, Obstruction::nonresidue_cube_pattern,
          Obstruction::power_pattern, Obstruction::exhausted_depth,
          Obstruction::sign_obstruction}) {
        if (s == obstruction_name(o)) return o;
    }
    return std::nullopt;
}

namespace {

constexpr unsigned long kValInf = 1000000000UL;
// Largest prime handled by the breadth-first search; beyond it the
// structural decider takes over.
const long kBfsPrimeLimit = 600;

BinaryForm partial_x(const BinaryForm& F) {
    int n = F.degree();
    std::vector<mpz_class> g(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = mpz_class(n - i) * F.f[static_cast<size_t>(i)];
    return BinaryForm(std::move(g));
}

BinaryForm partial_y(const BinaryForm& F) {
    int n = F.degree();
    std::vector<mpz_class> g(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j)
        g[static_cast<size_t>(j)] = mpz_class(j + 1) * F.f[static_cast<size_t>(j + 1)];
    return BinaryForm(std::move(g));
}

unsigned long val_or_inf(const mpz_class& v, const mpz_class& p) {
    if (v == 0) return kValInf;
    return valuation(v, p);
}

// F(t, y0) - target as a polynomial in t over the p-element field.
UniPoly line_poly(const BinaryForm& F, const mpz_class& y0,
                  const mpz_class& target, const mpz_class& p) {
    int n = F.degree();
    std::vector<mpz_class> c(static_cast<size_t>(n) + 1, 0);
    mpz_class ypow = 1;
    for (int i = 0; i <= n; ++i) {
        c[static_cast<size_t>(n - i)] = mod_reduce(F.f[static_cast<size_t>(i)] * ypow, p);
        ypow = mod_reduce(ypow * y0, p);
    }
    c[0] = mod_reduce(c[0] - target, p);
    UniPoly g(std::move(c));
    g.trim();
    return g;
}

// Same with the roles of x and y swapped: F(x0, t) - target.
UniPoly line_poly_swapped(const BinaryForm& F, const mpz_class& x0,
                          const mpz_class& target, const mpz_class& p) {
    int n = F.degree();
    std::vector<mpz_class> c(static_cast<size_t>(n) + 1, 0);
    mpz_class xpow = 1;
    for (int i = n; i >= 0; --i) {
        c[static_cast<size_t>(i)] = mod_reduce(F.f[static_cast<size_t>(i)] * xpow, p);
        xpow = mod_reduce(xpow * x0, p);
    }
    c[0] = mod_reduce(c[0] - target, p);
    UniPoly g(std::move(c));
    g.trim();
    return g;
}

// Newton-lift a unit-gradient point so the value matches h mod p^l.
// Requires F(x,y) = h mod p and a partial derivative that is a unit mod p.
LocalWitness deepen_witness(const BinaryForm& F, const mpz_class& h,
                            const mpz_class& p, mpz_class x, mpz_class y,
                            unsigned l) {
    BinaryForm Fx = partial_x(F), Fy = partial_y(F);
    mpz_class gx = mod_reduce(evaluate(Fx, x, y), p);
    mpz_class gy = mod_reduce(evaluate(Fy, x, y), p);
    bool use_x = (gx != 0);
    if (gx == 0 && gy == 0)
        throw std::logic_error("deepen_witness: gradient not a unit");
    mpz_class w = invmod(use_x ? gx : gy, p);
    mpz_class mod = p;
    for (unsigned j = 1; j < l; ++j) {
        mod *= p;
        mpz_class corr = mod_reduce((evaluate(F, x, y) - h) * w, mod);
        if (use_x)
            x = mod_reduce(x - corr, mod);
        else
            y = mod_reduce(y - corr, mod);
    }
    LocalWitness out;
    out.x = x;
    out.y = y;
    out.l = l;
    out.e = 0;
    if (mod_reduce(evaluate(F, out.x, out.y) - h, mod) != 0)
        throw std::logic_error("deepen_witness: lift failed");
    return out;
}

struct PadicCore {
    LocalVerdict verdict = LocalVerdict::undetermined;
    std::optional<LocalWitness> witness;
    std::optional<Obstruction> obstruction;
};

PadicCore core_soluble(LocalWitness w) {
    PadicCore c;
    c.verdict = LocalVerdict::soluble;
    c.witness = std::move(w);
    return c;
}

PadicCore core_insoluble(Obstruction o) {
    PadicCore c;
    c.verdict = LocalVerdict::insoluble;
    c.obstruction = o;
    return c;
}

PadicCore core_undetermined() { return PadicCore{}; }

// Breadth-first search over primitive residue pairs; accepts at level d on
// the margin condition d > 2e + slack.
PadicCore bfs_decide(const BinaryForm& F, const mpz_class& h,
                     const mpz_class& p, unsigned depth_max, unsigned slack) {
    int n = F.degree();
    BinaryForm Fx = partial_x(F), Fy = partial_y(F);
    unsigned long pl = p.get_ui();

    // Level 1: full scan of primitive pairs mod p with small-word arithmetic.
    std::vector<std::pair<mpz_class, mpz_class>> states;
    {
        std::vector<uint64_t> cf(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            cf[static_cast<size_t>(i)] = mod_reduce(F.f[static_cast<size_t>(i)], p).get_ui();
        uint64_t hm = mod_reduce(h, p).get_ui();
        std::vector<uint64_t> ypow(static_cast<size_t>(n) + 1);
        for (unsigned long y = 0; y < pl; ++y) {
            ypow[0] = 1;
            for (int i = 1; i <= n; ++i)
                ypow[static_cast<size_t>(i)] = ypow[static_cast<size_t>(i - 1)] * y % pl;
            for (unsigned long x = 0; x < pl; ++x) {
                if (x == 0 && y == 0) continue;
                uint64_t acc = cf[0];
                for (int i = 1; i <= n; ++i)
                    acc = (acc * x + cf[static_cast<size_t>(i)] * ypow[static_cast<size_t>(i)]) % pl;
                if (acc == hm)
                    states.push_back({mpz_class(x), mpz_class(y)});
            }
        }
    }

    mpz_class level_mod = p;
    for (unsigned d = 1; d <= depth_max; ++d) {
        if (states.empty()) return core_insoluble(Obstruction::exhausted_depth);
        for (const auto& [x, y] : states) {
            unsigned long e = std::min(val_or_inf(evaluate(Fx, x, y), p),
                                       val_or_inf(evaluate(Fy, x, y), p));
            if (static_cast<unsigned long>(d) > 2 * e + slack) {
                if (mod_reduce(evaluate(F, x, y) - h, level_mod) != 0)
                    throw std::logic_error("bfs_decide: witness invariant broken");
                LocalWitness w;
                w.x = x;
                w.y = y;
                w.l = d;
                w.e = static_cast<unsigned>(e);
                return core_soluble(std::move(w));
            }
        }
        if (d == depth_max) return core_undetermined();
        if (states.size() * pl * pl > 4000000UL) return core_undetermined();
        mpz_class next_mod = level_mod * p;
        std::vector<std::pair<mpz_class, mpz_class>> next;
        for (const auto& [x, y] : states) {
            for (unsigned long u = 0; u < pl; ++u) {
                mpz_class xc = x + u * level_mod;
                for (unsigned long v = 0; v < pl; ++v) {
                    mpz_class yc = y + v * level_mod;
                    if (mod_reduce(evaluate(F, xc, yc) - h, next_mod) == 0)
                        next.push_back({xc, yc});
                }
            }
        }
        states = std::move(next);
        level_mod = next_mod;
    }
    return core_undetermined();
}

// Structural decision for p beyond the search limit: power patterns give a
// residue criterion; otherwise the curve has enough smooth points and a
// witness is located by root-finding along lines.
PadicCore giant_decide(const BinaryForm& F, const mpz_class& h,
                       const mpz_class& p, unsigned slack) {
    if (mod_reduce(form_content(F), p) == 0) return core_undetermined();
    BinaryForm Fx = partial_x(F), Fy = partial_y(F);
    unsigned l_target = slack + 1;
    mpz_class u = mod_reduce(h, p);

    auto smooth_at = [&](const mpz_class& x0, const mpz_class& y0) {
        return mod_reduce(evaluate(Fx, x0, y0), p) != 0 ||
               mod_reduce(evaluate(Fy, x0, y0), p) != 0;
    };

    if (u != 0) {
        auto pat = is_const_times_power(F, p);
        if (pat) {
            mpz_class rp = gcd(mpz_class(pat->r), p - 1);
            mpz_class uc = mod_reduce(u * invmod(pat->c, p), p);
            if (powmod(uc, (p - 1) / rp, p) != 1)
                return core_insoluble(Obstruction::power_pattern);
            UniPoly root_poly;
            {
                std::vector<mpz_class> c(static_cast<size_t>(pat->r) + 1, 0);
                c[0] = mod_reduce(-uc, p);
                c[static_cast<size_t>(pat->r)] = 1;
                root_poly = UniPoly(std::move(c));
            }
            std::vector<mpz_class> ms = gfp_roots(root_poly, p);
            if (ms.empty())
                throw std::logic_error("giant_decide: residue test passed but no root");
            const mpz_class& m = ms.front();
            for (unsigned long y0l = 0; y0l < 128; ++y0l) {
                mpz_class y0(y0l);
                UniPoly g = line_poly(pat->M, y0, m, p);
                std::vector<mpz_class> xs;
                if (g.is_zero()) {
                    if (y0 == 0) continue;
                    xs.push_back(0);
                } else if (g.degree() == 0) {
                    continue;
                } else {
                    xs = gfp_roots(g, p);
                }
                for (const mpz_class& x0 : xs) {
                    if (x0 == 0 && y0 == 0) continue;
                    if (!smooth_at(x0, y0)) continue;
                    return core_soluble(deepen_witness(F, h, p, x0, y0, l_target));
                }
            }
            return core_undetermined();
        }
        // No power pattern: scan lines for a smooth point of F = h.
        for (unsigned long y0l = 1; y0l <= 64; ++y0l) {
            mpz_class y0(y0l);
            UniPoly g = line_poly(F, y0, u, p);
            if (g.degree() < 1) continue;
            for (const mpz_class& x0 : gfp_roots(g, p)) {
                if (!smooth_at(x0, y0)) continue;
                return core_soluble(deepen_witness(F, h, p, x0, y0, l_target));
            }
        }
        for (unsigned long x0l = 0; x0l <= 64; ++x0l) {
            mpz_class x0(x0l);
            UniPoly g = line_poly_swapped(F, x0, u, p);
            if (g.degree() < 1) continue;
            for (const mpz_class& y0 : gfp_roots(g, p)) {
                if (x0 == 0 && y0 == 0) continue;
                if (!smooth_at(x0, y0)) continue;
                return core_soluble(deepen_witness(F, h, p, x0, y0, l_target));
            }
        }
        return core_undetermined();
    }

    // p | h: primitive solutions need a root of F mod p, smooth if possible.
    FactorizationModP fac = factor_mod_p(F, p);
    bool any_linear = false;
    for (const auto& [L, mult] : fac.factors) {
        if (L.degree() != 1) continue;
        any_linear = true;
        if (mult != 1) continue;
        for (unsigned long s = 1; s <= 64; ++s) {
            mpz_class x0, y0;
            if (L.f[0] == 0) {
                x0 = s;
                y0 = 0;
            } else {
                x0 = mod_reduce(-L.f[1] * s, p);
                y0 = s;
            }
            if (!smooth_at(x0, y0)) continue;
            return core_soluble(deepen_witness(F, h, p, x0, y0, l_target));
        }
    }
    if (!any_linear) return core_insoluble(Obstruction::exhausted_depth);
    return core_undetermined();
}

PadicCore padic_rec(const BinaryForm& F, const mpz_class& h, const mpz_class& p,
                    unsigned depth_max, unsigned slack) {
    int n = F.degree();
    PadicCore prim = (p <= kBfsPrimeLimit)
                         ? bfs_decide(F, h, p, depth_max, slack)
                         : giant_decide(F, h, p, slack);
    if (prim.verdict == LocalVerdict::soluble) return prim;
    if (mod_reduce(h, p) == 0 &&
        valuation(h, p) >= static_cast<unsigned long>(n)) {
        mpz_class pn;
        mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n));
        PadicCore inner =
            padic_rec(F, h / pn, p, depth_max, slack + static_cast<unsigned>(n - 2));
        if (inner.verdict == LocalVerdict::soluble) {
            LocalWitness w = *inner.witness;
            w.x *= p;
            w.y *= p;
            w.l += static_cast<unsigned>(n);
            w.e += static_cast<unsigned>(n - 1);
            return core_soluble(std::move(w));
        }
        if (inner.verdict == LocalVerdict::undetermined)
            return core_undetermined();
    }
    return prim;
}

}  // namespace

bool represents_over_reals(const BinaryForm& F, const mpz_class& h) {
    if (F.is_zero() || h == 0)
        throw std::domain_error("represents_over_reals: F and h must be nonzero");
    int n = F.degree();
    if (n % 2 == 1) return true;
    int s = sgn(h);
    if (sgn(F.f[0]) == s) return true;
    UniPoly f = form_to_unipoly(F);
    UniPoly g = (s > 0) ? f : mpz_class(-1) * f;
    // Does g attain a positive value on the reals?
    if (g.degree() % 2 == 1) return true;
    if (g.leading() > 0) return true;
    // Negative leading coefficient, even degree: positive somewhere iff some
    // real root has odd multiplicity.
    std::vector<UniPoly> parts = yun_squarefree(g);
    for (size_t i = 0; i < parts.size(); ++i) {
        if ((i + 1) % 2 == 0) continue;
        if (parts[i].degree() >= 1 && count_real_roots(parts[i]) > 0) return true;
    }
    return false;
}

LocalVerdict cubic_local_criterion(const BinaryForm& F, const mpz_class& p) {
    if (F.degree() != 3)
        throw std::domain_error("cubic_local_criterion: degree must be 3");
    if (form_content(F) != 1)
        throw std::domain_error("cubic_local_criterion: content must be 1");
    if (p == 3)
        throw std::domain_error("cubic_local_criterion: p = 3 is not covered");
    if (p == 2) {
        BinaryForm r = reduce_form_mod_p(F, 2);
        bool bad = r.f[0] == 0 && r.f[1] == 1 && r.f[2] == 1 && r.f[3] == 0;
        return bad ? LocalVerdict::insoluble : LocalVerdict::soluble;
    }
    if (mod_reduce(p, 6) == 1) {
        auto pat = is_const_times_power(F, p);
        if (pat && pat->r == 3 && powmod(pat->c, (p - 1) / 3, p) != 1)
            return LocalVerdict::insoluble;
        // p = 7 only: the genus-1 point count p + 1 - 2*sqrt(p) does not
        // exceed the 3 points at infinity of a completely split form, and
        // value sets there really can miss 1. Split forms are GL2-equivalent
        // to c*xy(x+y), whose nonzero values are c * {1,2,5,6}; disc scales
        // by c^4 det^6 = c * cube, and disc(xy(x+y)) = 1, so the missed coset
        // is disc * {3,4}: the form misses 1 exactly when disc = +-2 mod 7.
        if (p == 7 && mod_reduce(discriminant(F), 7) != 0 &&
            splits_completely(F, 7).has_value()) {
            mpz_class d7 = mod_reduce(discriminant(F), 7);
            if (d7 == 2 || d7 == 5) return LocalVerdict::insoluble;
        }
        return LocalVerdict::soluble;
    }
    return LocalVerdict::soluble;  // p = 5 mod 6
}

LocalEvidence soluble_p_adic(const BinaryForm& F, const mpz_class& h,
                             const mpz_class& p, unsigned depth_max) {
    if (h == 0) throw std::domain_error("soluble_p_adic: h must be nonzero");
    if (F.degree() < 2)
        throw std::domain_error("soluble_p_adic: degree must be >= 2");
    unsigned depth = depth_max;
    if (depth == 0) {
        mpz_class disc = discriminant(F);
        if (disc == 0)
            throw std::domain_error("soluble_p_adic: discriminant must be nonzero");
        mpz_class n2(F.degree());
        mpz_class m = n2 * n2 * h * disc;
        unsigned long v = valuation(m, p);
        depth = static_cast<unsigned>(2 * v + 3);
        if (depth < 5) depth = 5;
    }
    PadicCore core = padic_rec(F, h, p, depth, 0);
    LocalEvidence ev;
    ev.real_place = false;
    ev.prime = p;
    ev.verdict = core.verdict;
    ev.witness = std::move(core.witness);
    ev.obstruction = core.obstruction;
    return ev;
}

std::vector<mpz_class> required_prime_set(const BinaryForm& F,
                                          const mpz_class& h) {
    if (h == 0) throw std::domain_error("required_prime_set: h must be nonzero");
    mpz_class disc = discriminant(F);
    if (disc == 0)
        throw std::domain_error("required_prime_set: discriminant must be nonzero");
    int n = F.degree();
    unsigned long g = static_cast<unsigned long>((n - 1) * (n - 2) / 2);
    unsigned long bound = (2 * g + 1) * (2 * g + 1);
    std::vector<mpz_class> out;
    for (uint64_t q : prime_sieve(bound)) out.push_back(mpz_class(static_cast<unsigned long>(q)));
    mpz_class m = abs(mpz_class(n) * h * disc);
    for (const mpz_class& q : prime_factors_with_budget(m)) out.push_back(q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<mpz_class> effective_prime_set(const BinaryForm& F,
                                           const mpz_class& h) {
    if (h == 0) throw std::domain_error("effective_prime_set: h must be nonzero");
    int n = F.degree();
    unsigned long g = static_cast<unsigned long>((n - 1) * (n - 2) / 2);
    unsigned long bound = (2 * g + 1) * (2 * g + 1);
    std::vector<mpz_class> out;
    for (uint64_t q : prime_sieve(bound)) out.push_back(mpz_class(static_cast<unsigned long>(q)));
    mpz_class m = abs(mpz_class(n) * h);
    for (const mpz_class& q : prime_factors_with_budget(m)) out.push_back(q);
    for (const mpz_class& q : candidate_bad_primes(F)) out.push_back(q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EverywhereResult locally_represents_everywhere(const BinaryForm& F,
                                               const mpz_class& h) {
    mpz_class disc = discriminant(F);
    if (disc == 0 || h == 0)
        throw std::domain_error(
            "locally_represents_everywhere: needs disc != 0 and h != 0");
    std::vector<mpz_class> primes;
    try {
        primes = required_prime_set(F, h);
    } catch (const BudgetExhausted&) {
        primes = effective_prime_set(F, h);
    }

    EverywhereResult res;
    {
        LocalEvidence ev;
        ev.real_place = true;
        if (represents_over_reals(F, h)) {
            ev.verdict = LocalVerdict::soluble;
        } else {
            ev.verdict = LocalVerdict::insoluble;
            ev.obstruction = Obstruction::sign_obstruction;
        }
        res.evidence.push_back(ev);
        if (ev.verdict == LocalVerdict::insoluble) {
            res.kind = EverywhereResult::Kind::no;
            return res;
        }
    }

    bool cubic_checkable = (F.degree() == 3 && h == 1 && form_content(F) == 1);
    for (const mpz_class& p : primes) {
        LocalEvidence ev = soluble_p_adic(F, h, p);
        if (cubic_checkable && p != 3 && mod_reduce(disc, p) != 0) {
            LocalVerdict closed = cubic_local_criterion(F, p);
            if (ev.verdict == LocalVerdict::undetermined ||
                ev.verdict != closed)
                throw std::logic_error(
                    "locally_represents_everywhere: closed-form disagreement at p=" +
                    p.get_str());
            if (ev.verdict == LocalVerdict::insoluble) {
                ev.obstruction = (p == 2) ? Obstruction::split_2_pattern
                                          : Obstruction::nonresidue_cube_pattern;
            }
        }
        res.evidence.push_back(ev);
        if (ev.verdict == LocalVerdict::insoluble) {
            res.kind = EverywhereResult::Kind::no;
            return res;
        }
        if (ev.verdict == LocalVerdict::undetermined) {
            res.kind = EverywhereResult::Kind::undetermined;
            return res;
        }
    }
    res.kind = EverywhereResult::Kind::yes;
    return res;
}

}  // namespace thuegap

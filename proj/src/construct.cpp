#include "thuegap/construct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "thuegap/int_util.hpp"
#include "thuegap/modp.hpp"
#include "thuegap/poly.hpp"

namespace thuegap {

namespace {

mpz_class zpow(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

mpz_class next_prime(const mpz_class& n) {
    mpz_class r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Coefficients (leading first) of prod_{j=0}^{n-1} (x - j y).
std::vector<mpz_class> split_target(int n) {
    std::vector<mpz_class> g = {1};  // lowest-first in t
    for (int j = 0; j < n; ++j) {
        std::vector<mpz_class> nx(g.size() + 1, 0);
        for (size_t i = 0; i < g.size(); ++i) {
            nx[i + 1] += g[i];
            nx[i] -= j * g[i];
        }
        g = std::move(nx);
    }
    std::vector<mpz_class> f(n + 1);
    for (int i = 0; i <= n; ++i) f[i] = g[static_cast<size_t>(n - i)];
    return f;
}

// Coefficients of x^{n-1} (x + y).
std::vector<mpz_class> l1l2_target(int n) {
    std::vector<mpz_class> f(n + 1, 0);
    f[0] = 1;
    f[1] = 1;
    return f;
}

enum class TargetKind { split, cubic_two, cubic_three, l1l2_small, l1l2_h };

struct CrtTarget {
    mpz_class prime;
    unsigned level = 1;
    mpz_class modulus;  // prime^level
    std::vector<mpz_class> coeffs;
    TargetKind kind;
    std::string description;
};

CrtTarget make_target(const mpz_class& p, unsigned level, std::vector<mpz_class> coeffs,
                      TargetKind kind, std::string desc) {
    CrtTarget t;
    t.prime = p;
    t.level = level;
    t.modulus = zpow(p, level);
    for (auto& c : coeffs) c = mod_reduce(c, t.modulus);
    t.coeffs = std::move(coeffs);
    t.kind = kind;
    t.description = std::move(desc);
    return t;
}

std::vector<CrtTarget> build_targets(int n, const mpz_class& h, const PrimeChoice& pc) {
    std::vector<CrtTarget> ts;
    mpz_class habs = abs(h);
    if (n == 3) {
        if (habs % 3 == 0)
            throw std::domain_error(
                "conflicting congruence demands at p = 3: the construction needs both "
                "irreducibility mod 3 and a split L1*L2^2 shape mod 3 when 3 | h");
        if (habs % 2 == 0) {
            // L1 L2^2 shape mod 2; also not split completely mod 2.
            ts.push_back(make_target(2, 1, {1, 1, 0, 0}, TargetKind::cubic_two,
                                     "x^2(x+y) mod 2 (2 | h)"));
        } else {
            ts.push_back(make_target(2, 1, {1, 0, 1, 1}, TargetKind::cubic_two,
                                     "irreducible x^3+x y^2+y^3 mod 2"));
        }
        ts.push_back(make_target(3, 1, {1, 0, 2, 2}, TargetKind::cubic_three,
                                 "irreducible mod 3"));
    } else {
        // Every prime below (2g+1)^2 outside the split primes carries the
        // L1 L2^{n-1} condition mod p^{1 + v_p(n) + [p = 2 and 2 | n]}.
        long g = static_cast<long>(n - 1) * (n - 2) / 2;
        unsigned long bound = static_cast<unsigned long>((2 * g + 1) * (2 * g + 1));
        for (uint64_t q : prime_sieve(bound)) {
            mpz_class qp(static_cast<unsigned long>(q));
            if (std::find(pc.primes.begin(), pc.primes.end(), qp) != pc.primes.end())
                continue;
            unsigned level = 1 + static_cast<unsigned>(valuation(mpz_class(n), qp)) +
                             ((qp == 2 && n % 2 == 0) ? 1 : 0);
            ts.push_back(make_target(qp, level, l1l2_target(n), TargetKind::l1l2_small,
                                     "x^{n-1}(x+y) mod " + qp.get_str() + "^" +
                                         std::to_string(level)));
        }
    }
    for (const auto& p : pc.primes) {
        ts.push_back(make_target(p, 1, split_target(n), TargetKind::split,
                                 "splits completely mod " + p.get_str()));
    }
    // Primes dividing h that have no target yet get the mod-p L1 L2^{n-1}
    // condition (split primes are chosen coprime to h).
    if (habs > 1) {
        for (const auto& q : prime_factors_with_budget(habs)) {
            bool covered = false;
            for (const auto& t : ts)
                if (t.prime == q) covered = true;
            if (covered) continue;
            ts.push_back(make_target(q, 1, n == 3 ? std::vector<mpz_class>{1, 1, 0, 0}
                                                  : l1l2_target(n),
                                     TargetKind::l1l2_h,
                                     "x^{n-1}(x+y) mod " + q.get_str() + " (p | h)"));
        }
    }
    return ts;
}

bool verify_target(const BinaryForm& F, const CrtTarget& t, int n) {
    switch (t.kind) {
        case TargetKind::split: {
            auto labels = splits_completely(F, t.prime);
            if (!labels) return false;
            std::set<mpz_class> want, got;
            for (int j = 0; j < n; ++j) want.insert(j);
            for (const auto& lab : *labels) {
                if (lab.infinite) return false;
                got.insert(lab.value);
            }
            return want == got;
        }
        case TargetKind::cubic_two: {
            BinaryForm red = reduce_form_mod_p(F, 2);
            if (red.f != t.coeffs) return false;
            if (splits_completely(F, 2)) return false;  // never split mod 2
            if (t.coeffs[1] == 1) return matches_L1L2_power(F, 2, 1).has_value();
            return is_irreducible_mod_p(F, 2);
        }
        case TargetKind::cubic_three:
            return is_irreducible_mod_p(F, 3);
        case TargetKind::l1l2_small:
            return matches_L1L2_power(F, t.prime, t.level).has_value();
        case TargetKind::l1l2_h:
            return matches_L1L2_power(F, t.prime, 1).has_value();
    }
    return false;
}

// Theorem exponent choices used by the pipeline: eps = 1/5 for cubics
// (bound 34) and eps = 1/(4(n-1)) for n >= 4 (bound 13n or 11n).
unsigned long pipeline_eps_den(int n) {
    return n == 3 ? 5ul : 4ul * static_cast<unsigned long>(n - 1);
}

}  // namespace

std::string scale_name(Scale s) { return s == Scale::full ? "full" : "demo"; }

Scale scale_from_name(const std::string& name) {
    if (name == "full") return Scale::full;
    if (name == "demo") return Scale::demo;
    throw std::domain_error("unknown scale: " + name);
}

PrimeChoice choose_primes(int n, const mpz_class& h, int k) {
    if (k < 1) throw std::domain_error("choose_primes requires k >= 1");
    if (n < 3) throw std::domain_error("choose_primes requires n >= 3");
    if (h == 0) throw std::domain_error("choose_primes requires h != 0");
    PrimeChoice pc;
    pc.m = 1;
    mpz_class p = (n == 3) ? mpz_class(3) : next_prime(mpz_class(n - 1));
    if (n == 3) p = next_prime(p);  // smallest prime > 3
    while (static_cast<int>(pc.primes.size()) < k) {
        if (h % p != 0) {
            pc.primes.push_back(p);
            pc.m *= p;
        }
        p = next_prime(p);
    }
    return pc;
}

mpz_class disc_threshold(int n, const mpz_class& h, const mpz_class& m) {
    mpz_class hm = abs(h) * abs(m);
    mpz_class num, den;
    if (n == 3) {
        num = zpow(hm, 20) * zpow(7, 30) * zpow(3, 15);
        den = zpow(2, 30);
    } else {
        unsigned long e = 2ul * n * (n - 1);
        num = zpow(7, e) * zpow(mpz_class(n), 2ul * n) * zpow(hm, 4ul * (n - 1));
        den = zpow(2, e);
    }
    mpz_class t;
    mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return t;
}

GaloisCertificate certify_galois(const BinaryForm& F, uint64_t prime_budget) {
    int n = F.degree();
    if (n < 2) throw std::domain_error("certify_galois requires degree >= 2");
    if (F.f[0] == 0 || F.f[static_cast<size_t>(n)] == 0)
        throw std::domain_error("form is reducible over Q: x or y divides it");
    mpz_class disc = discriminant(F);
    if (disc == 0)
        throw std::domain_error("form is reducible over Q: repeated factor");

    // Possible proper factor degrees, narrowed by factorization types at
    // primes of good reduction; empty set proves irreducibility.
    std::set<int> possible;
    for (int d = 1; d < n; ++d) possible.insert(d);
    mpz_class ncycle = 0, n1cycle = 0, transp = 0;

    for (uint64_t q : prime_sieve(prime_budget)) {
        mpz_class p(static_cast<unsigned long>(q));
        if (F.f[0] % p == 0 || disc % p == 0) continue;
        auto fac = factor_mod_p(F, p);
        std::vector<int> degs;
        for (const auto& [g, mult] : fac.factors) {
            if (mult != 1)
                throw std::logic_error("repeated factor at a prime not dividing disc");
            degs.push_back(g.degree());
        }
        // Subset sums of factor degrees: a rational factor of degree d would
        // reduce to a divisor product of degree d at every such prime.
        std::set<int> sums = {0};
        for (int d : degs) {
            std::set<int> nx = sums;
            for (int s : sums) nx.insert(s + d);
            sums = std::move(nx);
        }
        for (auto it = possible.begin(); it != possible.end();) {
            if (!sums.count(*it)) it = possible.erase(it);
            else ++it;
        }
        std::sort(degs.begin(), degs.end());
        if (static_cast<int>(degs.size()) == 1 && degs[0] == n && ncycle == 0) ncycle = p;
        if (degs.size() == 2 && degs[0] == 1 && degs[1] == n - 1 && n1cycle == 0) n1cycle = p;
        int twos = 0, ones = 0;
        for (int d : degs) {
            if (d == 2) ++twos;
            if (d == 1) ++ones;
        }
        if (twos == 1 && ones == n - 2 && transp == 0) transp = p;
        bool done = possible.empty() &&
                    (n == 3 || (ncycle != 0 && n1cycle != 0 && transp != 0));
        if (done) break;
    }

    if (!possible.empty()) {
        // Could still be reducible; a rational linear factor is decidable
        // when the outer coefficients factor within budget.
        if (possible.count(1)) {
            auto fn = try_factor(abs(F.f[static_cast<size_t>(n)]));
            auto f0 = try_factor(abs(F.f[0]));
            if (fn && f0) {
                std::vector<mpz_class> us = {1}, vs = {1};
                for (const auto& [q, e] : *fn) {
                    std::vector<mpz_class> nx;
                    for (const auto& u : us) {
                        mpz_class pw = 1;
                        for (unsigned i = 0; i <= e; ++i, pw *= q) nx.push_back(u * pw);
                    }
                    us = std::move(nx);
                    if (us.size() > 4096) break;
                }
                for (const auto& [q, e] : *f0) {
                    std::vector<mpz_class> nx;
                    for (const auto& v : vs) {
                        mpz_class pw = 1;
                        for (unsigned i = 0; i <= e; ++i, pw *= q) nx.push_back(v * pw);
                    }
                    vs = std::move(nx);
                    if (vs.size() > 4096) break;
                }
                if (us.size() <= 4096 && vs.size() <= 4096) {
                    for (const auto& u : us)
                        for (const auto& v : vs) {
                            if (gcd(u, v) != 1) continue;
                            if (evaluate(F, u, v) == 0 || evaluate(F, -u, v) == 0)
                                throw std::domain_error(
                                    "form is reducible over Q: rational root");
                        }
                }
            }
        }
        GaloisCertificate gc;
        gc.certified = false;
        gc.method = "inconclusive";
        return gc;
    }

    GaloisCertificate gc;
    if (n == 3) {
        bool square = disc > 0 && mpz_perfect_square_p(disc.get_mpz_t());
        gc.certified = !square;
        gc.method = square ? "disc-square" : "disc-nonsquare";
        return gc;
    }
    if (ncycle != 0 && n1cycle != 0 && transp != 0) {
        gc.certified = true;
        gc.method = "cycle-type-witnesses";
        gc.witness_primes = {ncycle, n1cycle, transp};
    } else {
        gc.certified = false;
        gc.method = "witnesses-not-found";
    }
    return gc;
}

BuildReport build_F(const PipelineParams& params) {
    int n = params.degree;
    if (n < 3) throw std::domain_error("degree must be >= 3");
    if (params.h == 0) throw std::domain_error("h must be nonzero");
    if (params.k < 1) throw std::domain_error("k must be >= 1");
    if (params.threshold_override && params.scale == Scale::full)
        throw std::domain_error("threshold override is a demo-scale feature");
    if (params.threshold_override && *params.threshold_override < 1)
        throw std::domain_error("threshold override must be >= 1");

    PrimeChoice pc = choose_primes(n, params.h, params.k);
    mpz_class threshold = params.threshold_override
                              ? *params.threshold_override
                              : disc_threshold(n, params.h, pc.m);

    std::vector<CrtTarget> targets = build_targets(n, params.h, pc);
    mpz_class M = 1;
    for (const auto& t : targets) {
        if (gcd(M, t.modulus) != 1) throw std::logic_error("CRT moduli overlap");
        M *= t.modulus;
    }
    std::vector<mpz_class> resid(static_cast<size_t>(n) + 1, 0);
    for (size_t i = 0; i <= static_cast<size_t>(n); ++i) {
        mpz_class r = 0, mod = 1;
        for (const auto& t : targets) {
            r = crt_pair(r, mod, t.coeffs[i], t.modulus);
            mod *= t.modulus;
        }
        resid[i] = r;
    }
    // A zero trailing coefficient would put the factor x into F; lift it to
    // the modulus itself instead.
    if (resid[static_cast<size_t>(n)] == 0) resid[static_cast<size_t>(n)] = M;

    auto form_at = [&](const mpz_class& t) {
        std::vector<mpz_class> c = resid;
        c[0] = resid[0] + t * M;
        return BinaryForm(c);
    };
    auto disc_at = [&](const mpz_class& t) { return abs(discriminant(form_at(t))); };

    // Doubling then binary search for the first leading coefficient whose
    // discriminant clears the threshold.
    mpz_class hi = 1;
    int doublings = 0;
    while (disc_at(hi) <= threshold) {
        hi *= 2;
        if (++doublings > 2048) throw BudgetExhausted("discriminant never cleared threshold");
    }
    mpz_class lo = 1;
    while (lo < hi) {
        mpz_class mid = (lo + hi) / 2;
        if (disc_at(mid) > threshold) hi = mid;
        else lo = mid + 1;
    }
    mpz_class t = hi;
    if (params.seed != 0) {
        Rng rng(params.seed);
        t += static_cast<unsigned long>(rng.below(1u << 20));
    }

    std::map<std::string, uint64_t> histogram;
    long g = static_cast<long>(n - 1) * (n - 2) / 2;
    mpz_class small_bound((2 * g + 1) * (2 * g + 1));
    mpz_class pk_max = pc.primes.back();

    for (uint64_t tries = 0; tries < 4096; ++tries, t += 1) {
        BinaryForm F = form_at(t);
        if (form_content(F) != 1) {
            ++histogram["content"];
            continue;
        }
        mpz_class disc = discriminant(F);
        if (abs(disc) <= threshold) {
            ++histogram["disc-threshold"];
            continue;
        }
        bool ok = true;
        for (const auto& tg : targets) {
            if (!verify_target(F, tg, n)) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            ++histogram["congruence"];
            continue;
        }
        // Large-prime power-pattern conditions, checked at the candidate bad
        // primes (a pattern c M^r forces a repeated factor mod p, so any
        // offending prime is in this set). Correctness needs the full prime
        // support, so a candidate whose support resists the factorization
        // budget is discarded and the search advances.
        bool maximal = false;
        try {
            for (const auto& q : candidate_bad_primes(F)) {
                bool construction = q == 2 || q == 3 || abs(params.h) % q == 0 ||
                                    std::find(pc.primes.begin(), pc.primes.end(), q) !=
                                        pc.primes.end();
                if (n == 3) {
                    if (construction || q <= pk_max || q % 3 != 1) continue;
                    auto pat = is_const_times_power(F, q);
                    if (pat && pat->r == 3) {
                        ok = false;
                        break;
                    }
                } else {
                    if (construction || q < small_bound) continue;
                    if (is_const_times_power(F, q)) {
                        ok = false;
                        break;
                    }
                }
            }
            maximal = ok && is_maximal(F);
        } catch (const BudgetExhausted&) {
            ++histogram["factorization-budget"];
            continue;
        }
        if (!ok) {
            ++histogram["power-pattern"];
            continue;
        }
        if (!maximal) {
            ++histogram["maximality"];
            continue;
        }
        GaloisCertificate gc;
        try {
            gc = certify_galois(F);
        } catch (const std::domain_error&) {
            ++histogram["irreducibility"];
            continue;
        }
        if (!gc.certified) {
            ++histogram["galois"];
            continue;
        }

        BuildReport br;
        br.F = F;
        br.primes = pc;
        br.threshold = threshold;
        br.disc = disc;
        br.galois = gc;
        br.candidates_tried = tries + 1;
        for (const auto& tg : targets) br.conditions.push_back({tg.description, true});
        br.conditions.push_back({"content 1", true});
        br.conditions.push_back({"|disc| > threshold", true});
        br.conditions.push_back({"no excluded power pattern at candidate bad primes", true});
        br.conditions.push_back({"maximal", true});
        br.conditions.push_back({"Galois group S_n certified (" + gc.method + ")", true});
        br.conditions.push_back({"positive leading coefficient", F.f[0] > 0});
        return br;
    }
    std::ostringstream os;
    os << "candidate search budget exhausted; failures:";
    for (const auto& [key, count] : histogram) os << " " << key << "=" << count;
    throw BudgetExhausted(os.str());
}

PipelineResult run_pipeline(const PipelineParams& params) {
    int n = params.degree;
    bool full = params.scale == Scale::full;
    if (params.box < 0) throw std::domain_error("box must be >= 0");
    mpz_class nk_z = zpow(mpz_class(n), static_cast<unsigned long>(params.k));
    if (nk_z > 200000) throw std::domain_error("n^k too large for the pipeline");
    if (full) {
        mpz_class defect = (n <= 4) ? mpz_class(n == 3 ? 34 : 13 * n) : mpz_class(11 * n);
        if (nk_z <= defect)
            throw std::domain_error("full scale requires n^k to exceed the count bound");
    }

    PipelineResult res;
    res.build = build_F(params);
    const BinaryForm& F = res.build.F;

    SolutionCountBound scb = theorem_bound(n, res.build.disc,
                                           abs(params.h) * res.build.primes.m, 1,
                                           pipeline_eps_den(n));
    if (full && !scb.hypothesis_ok)
        throw std::logic_error("full-scale run fails the count bound hypothesis");

    std::vector<DescentOutput> outs = descend_chain(F, res.build.primes.primes);
    uint64_t nk = nk_z.get_ui();
    if (outs.size() != nk) throw std::logic_error("descent fan-out size mismatch");

    struct PerForm {
        const DescentOutput* out;
        bool maximal;
        std::vector<LocalEvidence> evidence;
        SolutionSet sols;
    };
    std::vector<PerForm> rows;
    rows.reserve(outs.size());
    uint64_t with_solutions = 0, everywhere = 0;
    std::set<std::vector<mpz_class>> coefficient_sets;
    for (const auto& out : outs) {
        const BinaryForm& G = out.form;
        coefficient_sets.insert(G.f);
        if (form_content(G) != 1)
            throw std::logic_error("descended form is imprimitive");
        bool maximal = is_maximal(G);
        if (!maximal) throw std::logic_error("descended form is non-maximal");
        EverywhereResult ev = locally_represents_everywhere(G, params.h);
        if (ev.kind != EverywhereResult::Kind::yes) {
            const LocalEvidence& last = ev.evidence.back();
            throw std::logic_error(
                "descended form is not everywhere locally soluble at " +
                (last.real_place ? std::string("the real place") : last.prime.get_str()));
        }
        ++everywhere;
        SolutionSet sols = enumerate_solutions(G, params.h, params.box);
        if (!sols.solutions.empty()) ++with_solutions;
        rows.push_back({&out, maximal, std::move(ev.evidence), std::move(sols)});
    }
    if (coefficient_sets.size() != outs.size())
        throw std::logic_error("descended forms are not distinct");
    if (full && scb.hypothesis_ok && mpz_class(with_solutions) > scb.bound)
        throw std::logic_error(
            "more solution-bearing forms than the count bound allows");

    bool guaranteed = full && scb.hypothesis_ok;
    for (const auto& row : rows) {
        if (!row.sols.solutions.empty()) continue;
        FailureCertificate cert;
        cert.form = row.out->form;
        cert.h = params.h;
        cert.origin = F;
        cert.path = row.out->path;
        cert.maximal = row.maximal;
        cert.local_evidence = row.evidence;
        cert.search.box = params.box;
        cert.search.solutions = row.sols.solutions;
        cert.m = res.build.primes.m;
        cert.theorem_bound_value = scb.bound;
        cert.siblings_with_solutions = with_solutions;
        cert.total_siblings = nk;
        cert.guaranteed = guaranteed;
        res.certificates.push_back(std::move(cert));
    }

    PipelineSummary& s = res.summary;
    s.degree = n;
    s.h = params.h;
    s.k = params.k;
    s.scale = params.scale;
    s.box = params.box;
    s.seed = params.seed;
    s.primes = res.build.primes;
    s.threshold = res.build.threshold;
    s.disc = res.build.disc;
    s.total_forms = nk;
    s.forms_with_solutions = with_solutions;
    s.forms_everywhere_local = everywhere;
    s.certificates_emitted = res.certificates.size();
    s.hypothesis_ok = scb.hypothesis_ok;
    s.theorem_bound_value = scb.bound;
    s.guarantee = nk_z > scb.bound ? mpz_class(nk_z - scb.bound) : mpz_class(0);
    s.guaranteed = guaranteed;
    return res;
}

std::string audit_reason_name(AuditReason r) {
    switch (r) {
        case AuditReason::content_law: return "content-law";
        case AuditReason::disc_law: return "disc-law";
        case AuditReason::maximality_check_failed: return "maximality-check-failed";
        case AuditReason::witness_check_failed: return "witness-check-failed";
        case AuditReason::obstruction_recheck_failed: return "obstruction-recheck-failed";
        case AuditReason::box_search_mismatch: return "box-search-mismatch";
        case AuditReason::aggregate_arithmetic: return "aggregate-arithmetic";
        case AuditReason::integer_encoding: return "integer-encoding";
        case AuditReason::malformed: return "malformed";
    }
    throw std::logic_error("unreachable audit reason");
}

namespace {

AuditResult audit_fail(AuditReason r, std::string detail) {
    AuditResult a;
    a.valid = false;
    a.reason = r;
    a.detail = std::move(detail);
    return a;
}

// Valuation of x at p, capped at cap (and covering x = 0).
unsigned capped_val(const mpz_class& x, const mpz_class& p, unsigned cap) {
    if (x == 0) return cap;
    unsigned v = 0;
    mpz_class r = x;
    while (v < cap && r % p == 0) {
        r /= p;
        ++v;
    }
    return v;
}

}  // namespace

AuditResult audit_certificate(const FailureCertificate& cert) {
    int n = cert.form.degree();
    if (n < 3 || cert.origin.degree() != n)
        return audit_fail(AuditReason::malformed, "degree mismatch or degree < 3");
    if (cert.h == 0) return audit_fail(AuditReason::malformed, "h = 0");
    if (cert.path.steps.empty())
        return audit_fail(AuditReason::malformed, "empty descent path");

    if (form_content(cert.origin) != 1)
        return audit_fail(AuditReason::content_law, "origin form is imprimitive");
    if (form_content(cert.form) != 1)
        return audit_fail(AuditReason::content_law, "certified form is imprimitive");

    // Path primes must be distinct, ascending, and prime.
    mpz_class m_check = 1;
    for (size_t i = 0; i < cert.path.steps.size(); ++i) {
        const mpz_class& p = cert.path.steps[i].prime;
        if (!is_prime(p)) return audit_fail(AuditReason::malformed, "path entry not prime");
        if (i > 0 && cert.path.steps[i - 1].prime >= p)
            return audit_fail(AuditReason::malformed, "path primes not ascending");
        m_check *= p;
    }

    // Discriminant law: disc(G) = disc(F) * prod p^{(n-1)(n-2)}.
    mpz_class disc_F = discriminant(cert.origin);
    mpz_class disc_G = discriminant(cert.form);
    if (disc_F == 0 || disc_G == 0)
        return audit_fail(AuditReason::disc_law, "zero discriminant");
    mpz_class expect = disc_F;
    unsigned long e = static_cast<unsigned long>(n - 1) * (n - 2);
    for (const auto& st : cert.path.steps) expect *= zpow(st.prime, e);
    if (expect != disc_G)
        return audit_fail(AuditReason::disc_law,
                          "disc(G) != disc(F) * prod p^{(n-1)(n-2)}");

    // Re-derive G from origin + path.
    BinaryForm cur = cert.origin;
    for (const auto& st : cert.path.steps) {
        const mpz_class& p = st.prime;
        IntegerSubstitution sub;
        if (st.label.infinite) {
            sub = {1, 0, 0, p};
        } else {
            sub = {p, st.label.value, 0, 1};
        }
        BinaryForm tr = act(cur, sub);
        if (valuation(form_content(tr), p) != 1)
            return audit_fail(AuditReason::content_law,
                              "step at " + p.get_str() +
                                  " does not have content valuation exactly 1");
        for (auto& c : tr.f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        cur = tr;
    }
    if (!(cur == cert.form))
        return audit_fail(AuditReason::malformed, "path does not reproduce the form");

    if (!cert.maximal || !is_maximal(cert.form))
        return audit_fail(AuditReason::maximality_check_failed,
                          "maximality attestation does not re-verify");

    // Local evidence: all entries must attest solubility and re-verify.
    if (cert.local_evidence.empty() || !cert.local_evidence.front().real_place)
        return audit_fail(AuditReason::witness_check_failed,
                          "missing real-place evidence");
    std::set<mpz_class> attested;
    for (const auto& ev : cert.local_evidence) {
        if (ev.verdict != LocalVerdict::soluble || ev.obstruction)
            return audit_fail(AuditReason::obstruction_recheck_failed,
                              "certificate carries a non-soluble local verdict");
        if (ev.real_place) {
            if (!represents_over_reals(cert.form, cert.h))
                return audit_fail(AuditReason::obstruction_recheck_failed,
                                  "real-place attestation does not re-verify");
            continue;
        }
        if (!is_prime(ev.prime))
            return audit_fail(AuditReason::malformed, "evidence place is not prime");
        if (!ev.witness)
            return audit_fail(AuditReason::witness_check_failed,
                              "prime evidence without witness");
        const LocalWitness& w = *ev.witness;
        if (w.l < 1 || w.l > 100000)
            return audit_fail(AuditReason::witness_check_failed, "witness level out of range");
        mpz_class pl = zpow(ev.prime, w.l);
        if (mod_reduce(evaluate(cert.form, w.x, w.y) - cert.h, pl) != 0)
            return audit_fail(AuditReason::witness_check_failed,
                              "witness congruence fails at " + ev.prime.get_str());
        // Gradient margin: recompute e from the witness point, capped at l.
        mpz_class gx = 0, gy = 0;
        for (int i = 0; i <= n; ++i) {
            const mpz_class& c = cert.form.f[static_cast<size_t>(i)];
            if (i < n)
                gx += (n - i) * c * zpow(w.x, static_cast<unsigned long>(n - i - 1)) *
                      zpow(w.y, static_cast<unsigned long>(i));
            if (i > 0)
                gy += i * c * zpow(w.x, static_cast<unsigned long>(n - i)) *
                      zpow(w.y, static_cast<unsigned long>(i - 1));
        }
        unsigned ecap = std::min(capped_val(gx, ev.prime, w.l),
                                 capped_val(gy, ev.prime, w.l));
        if (w.l <= 2 * ecap)
            return audit_fail(AuditReason::witness_check_failed,
                              "witness margin l > 2e fails at " + ev.prime.get_str());
        attested.insert(ev.prime);
    }
    // Coverage must mirror generation: the required set, or the effective
    // fallback when the required set is not computable within budget.
    std::vector<mpz_class> places;
    try {
        places = required_prime_set(cert.form, cert.h);
    } catch (const BudgetExhausted&) {
        places = effective_prime_set(cert.form, cert.h);
    }
    for (const auto& p : places) {
        if (!attested.count(p))
            return audit_fail(AuditReason::witness_check_failed,
                              "no evidence at required place " + p.get_str());
    }

    // Box search re-run must agree and find nothing.
    SolutionSet re = enumerate_solutions(cert.form, cert.h, cert.search.box);
    if (re.solutions.size() != cert.search.solutions.size())
        return audit_fail(AuditReason::box_search_mismatch, "solution lists differ");
    for (size_t i = 0; i < re.solutions.size(); ++i) {
        if (re.solutions[i].x != cert.search.solutions[i].x ||
            re.solutions[i].y != cert.search.solutions[i].y)
            return audit_fail(AuditReason::box_search_mismatch, "solution lists differ");
    }
    if (!re.solutions.empty())
        return audit_fail(AuditReason::box_search_mismatch,
                          "certificate carries box solutions");

    // Aggregate arithmetic.
    if (cert.m != m_check)
        return audit_fail(AuditReason::aggregate_arithmetic,
                          "m != product of path primes");
    mpz_class nk = zpow(mpz_class(n), static_cast<unsigned long>(cert.path.steps.size()));
    if (mpz_class(cert.total_siblings) != nk)
        return audit_fail(AuditReason::aggregate_arithmetic, "total siblings != n^k");
    if (cert.siblings_with_solutions > cert.total_siblings)
        return audit_fail(AuditReason::aggregate_arithmetic,
                          "solution-bearing count exceeds total");
    SolutionCountBound scb = theorem_bound(n, disc_F, abs(cert.h) * cert.m, 1,
                                           pipeline_eps_den(n));
    if (cert.theorem_bound_value != scb.bound)
        return audit_fail(AuditReason::aggregate_arithmetic,
                          "stated count bound does not recompute");
    if (cert.guaranteed && !scb.hypothesis_ok)
        return audit_fail(AuditReason::aggregate_arithmetic,
                          "guarantee claimed without the count bound hypothesis");
    if (scb.hypothesis_ok && mpz_class(cert.siblings_with_solutions) > scb.bound)
        return audit_fail(AuditReason::aggregate_arithmetic,
                          "solution-bearing count exceeds the count bound");

    AuditResult a;
    a.valid = true;
    a.detail = "ok";
    return a;
}

}  // namespace thuegap

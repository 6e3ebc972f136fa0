#include "thuegap/descent.hpp"

#include <algorithm>

#include "thuegap/int_util.hpp"

namespace thuegap {

namespace {

std::string form_str(const BinaryForm& F) {
    std::string s = "[";
    for (size_t i = 0; i < F.f.size(); ++i) {
        if (i) s += ",";
        s += F.f[i].get_str();
    }
    return s + "]";
}

}  // namespace

std::vector<std::pair<RootLabel, BinaryForm>> descend_at_prime(
    const BinaryForm& F, const mpz_class& p) {
    if (F.degree() < 2)
        throw DescentError("descent requires degree >= 2 at " + form_str(F), F, p);
    if (mod_reduce(form_content(F), p) == 0)
        throw DescentError("content divisible by " + p.get_str() + " at " +
                               form_str(F),
                           F, p);
    // n distinct simple roots mod p is equivalent to p not dividing disc(F).
    auto labels = splits_completely(F, p);
    if (!labels)
        throw DescentError("form does not split completely mod " + p.get_str() +
                               " at " + form_str(F),
                           F, p);
    std::vector<std::pair<RootLabel, BinaryForm>> out;
    for (const RootLabel& lab : *labels) {
        IntegerSubstitution A;
        if (lab.infinite) {
            A = {1, 0, 0, p};  // F(x, py)
        } else {
            A = {p, lab.value, 0, 1};  // F(px + ay, y)
        }
        BinaryForm G = act(F, A);
        mpz_class c = form_content(G);
        if (valuation(c, p) != 1)
            throw DescentError("pre-division content not exactly divisible by " +
                                   p.get_str() + " at " + form_str(F),
                               F, p);
        std::vector<mpz_class> reduced;
        reduced.reserve(G.f.size());
        for (const auto& coef : G.f) {
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), coef.get_mpz_t(), p.get_mpz_t());
            reduced.push_back(q);
        }
        out.push_back({lab, BinaryForm(std::move(reduced))});
    }
    return out;
}

std::vector<DescentOutput> descend_chain(const BinaryForm& F,
                                         std::vector<mpz_class> primes) {
    std::sort(primes.begin(), primes.end());
    for (size_t i = 1; i < primes.size(); ++i)
        if (primes[i] == primes[i - 1])
            throw std::domain_error("descend_chain: repeated prime " +
                                    primes[i].get_str());
    std::vector<DescentOutput> results;
    {
        DescentOutput root;
        root.origin = F;
        root.form = F;
        results.push_back(std::move(root));
    }
    for (const mpz_class& p : primes) {
        std::vector<DescentOutput> next;
        next.reserve(results.size() * static_cast<size_t>(F.degree() + 1));
        for (const DescentOutput& res : results) {
            for (auto& [lab, G] : descend_at_prime(res.form, p)) {
                DescentOutput o;
                o.origin = F;
                o.path.steps = res.path.steps;
                o.path.steps.push_back({p, lab});
                o.form = G;
                next.push_back(std::move(o));
            }
        }
        results = std::move(next);
    }
    for (size_t i = 0; i < results.size(); ++i)
        results[i].path.j = static_cast<unsigned long>(i + 1);
    return results;
}

std::pair<RootLabel, std::pair<mpz_class, mpz_class>> pushforward_solution(
    const BinaryForm& F, const mpz_class& p, const mpz_class& x0,
    const mpz_class& y0) {
    if (gcd(x0, y0) != 1)
        throw std::domain_error("pushforward_solution: pair not primitive");
    mpz_class val = evaluate(F, x0, y0);
    if (mod_reduce(val, p) != 0)
        throw std::domain_error("pushforward_solution: p does not divide F(x0,y0)");
    auto labels = splits_completely(F, p);
    if (!labels)
        throw DescentError("form does not split completely mod " + p.get_str() +
                               " at " + form_str(F),
                           F, p);
    RootLabel lab;
    mpz_class xp, yp;
    if (mod_reduce(y0, p) != 0) {
        lab.infinite = false;
        lab.prime = p;
        lab.value = mod_reduce(x0 * invmod(mod_reduce(y0, p), p), p);
        mpz_class num = x0 - lab.value * y0;
        mpz_divexact(xp.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        yp = y0;
    } else {
        lab.infinite = true;
        lab.prime = p;
        xp = x0;
        mpz_divexact(yp.get_mpz_t(), y0.get_mpz_t(), p.get_mpz_t());
    }
    bool found = false;
    for (const RootLabel& l : *labels)
        if (l == lab) found = true;
    if (!found)
        throw std::logic_error("pushforward_solution: derived label is not a root");
    return {lab, {xp, yp}};
}

std::pair<mpz_class, mpz_class> pullback_solution(const DescentOutput& out,
                                                  const mpz_class& xp,
                                                  const mpz_class& yp) {
    mpz_class x = xp, y = yp;
    for (auto it = out.path.steps.rbegin(); it != out.path.steps.rend(); ++it) {
        if (it->label.infinite) {
            y = it->prime * y;
        } else {
            x = it->prime * x + it->label.value * y;
        }
    }
    return {x, y};
}

}  // namespace thuegap

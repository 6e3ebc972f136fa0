#include "thuegap/jsonio.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace thuegap {

namespace {

bool canonical_decimal(const std::string& s) {
    size_t i = 0;
    if (s.empty()) return false;
    if (s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    if (s.size() - i > 1 && s[i] == '0') return false;  // leading zeros
    if (s[0] == '-' && s[i] == '0') return false;       // "-0"
    return true;
}

mpz_class read_mpz(const json& j, const std::string& ctx) {
    if (j.is_number())
        throw JsonDecodeError(AuditReason::integer_encoding,
                              ctx + ": integers must be decimal strings");
    if (!j.is_string())
        throw JsonDecodeError(AuditReason::malformed, ctx + ": expected a string");
    std::string s = j.get<std::string>();
    if (!canonical_decimal(s))
        throw JsonDecodeError(AuditReason::malformed,
                              ctx + ": not a canonical decimal integer");
    return mpz_class(s);
}

uint64_t read_count(const json& j, const std::string& ctx) {
    if (!j.is_number_unsigned())
        throw JsonDecodeError(AuditReason::malformed,
                              ctx + ": expected an unsigned JSON number");
    return j.get<uint64_t>();
}

bool read_bool(const json& j, const std::string& ctx) {
    if (!j.is_boolean())
        throw JsonDecodeError(AuditReason::malformed, ctx + ": expected a boolean");
    return j.get<bool>();
}

const json& field(const json& j, const char* key, const std::string& ctx) {
    if (!j.is_object() || !j.contains(key))
        throw JsonDecodeError(AuditReason::malformed, ctx + ": missing key " + key);
    return j.at(key);
}

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& ctx) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw JsonDecodeError(AuditReason::malformed,
                                  ctx + ": unknown key " + it.key());
}

}  // namespace

std::string verdict_name(LocalVerdict v) {
    switch (v) {
        case LocalVerdict::soluble: return "soluble";
        case LocalVerdict::insoluble: return "insoluble";
        case LocalVerdict::undetermined: return "undetermined";
    }
    throw std::logic_error("unreachable verdict");
}

LocalVerdict verdict_from_name(const std::string& s) {
    if (s == "soluble") return LocalVerdict::soluble;
    if (s == "insoluble") return LocalVerdict::insoluble;
    if (s == "undetermined") return LocalVerdict::undetermined;
    throw JsonDecodeError(AuditReason::malformed, "unknown verdict: " + s);
}

BinaryForm parse_form(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::domain_error("form syntax: expected \"[f0,f1,...,fn]\"");
    s = s.substr(1, s.size() - 2);
    std::vector<mpz_class> coeffs;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
        if (tok.empty() || !canonical_decimal(tok))
            throw std::domain_error("form syntax: bad coefficient \"" + tok + "\"");
        coeffs.emplace_back(tok);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (coeffs.size() < 2)
        throw std::domain_error("form syntax: need at least 2 coefficients");
    return BinaryForm(coeffs);
}

std::string form_to_text(const BinaryForm& F) {
    std::string out = "[";
    for (size_t i = 0; i < F.f.size(); ++i) {
        if (i) out += ",";
        out += F.f[i].get_str();
    }
    return out + "]";
}

json form_to_json(const BinaryForm& F) {
    json a = json::array();
    for (const auto& c : F.f) a.push_back(c.get_str());
    return a;
}

BinaryForm form_from_json(const json& j) {
    if (!j.is_array() || j.size() < 2)
        throw JsonDecodeError(AuditReason::malformed,
                              "form: expected an array of >= 2 coefficients");
    std::vector<mpz_class> coeffs;
    for (const auto& c : j) coeffs.push_back(read_mpz(c, "form coefficient"));
    return BinaryForm(coeffs);
}

json solution_to_json(const ThueSolution& s) {
    return json{{"primitive", s.primitive}, {"x", s.x.get_str()}, {"y", s.y.get_str()}};
}

ThueSolution solution_from_json(const json& j) {
    check_keys(j, {"primitive", "x", "y"}, "solution");
    ThueSolution s;
    s.x = read_mpz(field(j, "x", "solution"), "solution.x");
    s.y = read_mpz(field(j, "y", "solution"), "solution.y");
    s.primitive = read_bool(field(j, "primitive", "solution"), "solution.primitive");
    return s;
}

json path_to_json(const DescentPath& p) {
    json a = json::array();
    for (const auto& st : p.steps) {
        json pair = json::array();
        pair.push_back(st.prime.get_str());
        pair.push_back(st.label.infinite ? "inf" : st.label.value.get_str());
        a.push_back(pair);
    }
    return a;
}

DescentPath path_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw JsonDecodeError(AuditReason::malformed, "path: expected a nonempty array");
    DescentPath p;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw JsonDecodeError(AuditReason::malformed,
                                  "path: each step is a [prime, label] pair");
        DescentStep st;
        st.prime = read_mpz(e[0], "path prime");
        if (e[1].is_string() && e[1].get<std::string>() == "inf") {
            st.label.infinite = true;
        } else {
            st.label.infinite = false;
            st.label.value = read_mpz(e[1], "path label");
        }
        st.label.prime = st.prime;
        p.steps.push_back(std::move(st));
    }
    return p;
}

json evidence_to_json(const LocalEvidence& ev) {
    json o;
    o["place"] = ev.real_place ? std::string("real") : ev.prime.get_str();
    o["verdict"] = verdict_name(ev.verdict);
    if (ev.witness) {
        const LocalWitness& w = *ev.witness;
        o["witness"] = json{{"e", w.e}, {"l", w.l}, {"x", w.x.get_str()},
                            {"y", w.y.get_str()}};
    }
    if (ev.obstruction) o["obstruction"] = obstruction_name(*ev.obstruction);
    return o;
}

LocalEvidence evidence_from_json(const json& j) {
    check_keys(j, {"place", "verdict", "witness", "obstruction"}, "evidence");
    LocalEvidence ev;
    const json& place = field(j, "place", "evidence");
    if (place.is_string() && place.get<std::string>() == "real") {
        ev.real_place = true;
    } else {
        ev.real_place = false;
        ev.prime = read_mpz(place, "evidence place");
    }
    const json& v = field(j, "verdict", "evidence");
    if (!v.is_string())
        throw JsonDecodeError(AuditReason::malformed, "evidence verdict: expected string");
    ev.verdict = verdict_from_name(v.get<std::string>());
    if (j.contains("witness")) {
        const json& w = j.at("witness");
        check_keys(w, {"e", "l", "x", "y"}, "witness");
        LocalWitness lw;
        lw.x = read_mpz(field(w, "x", "witness"), "witness.x");
        lw.y = read_mpz(field(w, "y", "witness"), "witness.y");
        lw.l = static_cast<unsigned>(read_count(field(w, "l", "witness"), "witness.l"));
        lw.e = static_cast<unsigned>(read_count(field(w, "e", "witness"), "witness.e"));
        ev.witness = lw;
    }
    if (j.contains("obstruction")) {
        const json& o = j.at("obstruction");
        if (!o.is_string())
            throw JsonDecodeError(AuditReason::malformed, "obstruction: expected string");
        auto ob = obstruction_from_name(o.get<std::string>());
        if (!ob)
            throw JsonDecodeError(AuditReason::malformed,
                                  "unknown obstruction: " + o.get<std::string>());
        ev.obstruction = ob;
    }
    return ev;
}

json certificate_to_json(const FailureCertificate& cert) {
    json o;
    o["box"] = cert.search.box.get_str();
    o["form"] = form_to_json(cert.form);
    o["guaranteed"] = cert.guaranteed;
    o["h"] = cert.h.get_str();
    o["j"] = cert.path.j;
    json ev = json::array();
    for (const auto& e : cert.local_evidence) ev.push_back(evidence_to_json(e));
    o["local_evidence"] = std::move(ev);
    o["m"] = cert.m.get_str();
    o["maximal"] = cert.maximal;
    o["origin"] = form_to_json(cert.origin);
    o["path"] = path_to_json(cert.path);
    o["siblings_with_solutions"] = cert.siblings_with_solutions;
    json sols = json::array();
    for (const auto& s : cert.search.solutions) sols.push_back(solution_to_json(s));
    o["solutions"] = std::move(sols);
    o["theorem_bound"] = cert.theorem_bound_value.get_str();
    o["total_siblings"] = cert.total_siblings;
    return o;
}

FailureCertificate certificate_from_json(const json& j) {
    if (!j.is_object())
        throw JsonDecodeError(AuditReason::malformed, "certificate: expected an object");
    check_keys(j,
               {"box", "form", "guaranteed", "h", "j", "local_evidence", "m", "maximal",
                "origin", "path", "siblings_with_solutions", "solutions",
                "theorem_bound", "total_siblings"},
               "certificate");
    FailureCertificate c;
    c.form = form_from_json(field(j, "form", "certificate"));
    c.origin = form_from_json(field(j, "origin", "certificate"));
    c.h = read_mpz(field(j, "h", "certificate"), "certificate.h");
    c.path = path_from_json(field(j, "path", "certificate"));
    c.path.j = read_count(field(j, "j", "certificate"), "certificate.j");
    c.maximal = read_bool(field(j, "maximal", "certificate"), "certificate.maximal");
    const json& ev = field(j, "local_evidence", "certificate");
    if (!ev.is_array())
        throw JsonDecodeError(AuditReason::malformed, "local_evidence: expected array");
    for (const auto& e : ev) c.local_evidence.push_back(evidence_from_json(e));
    c.search.box = read_mpz(field(j, "box", "certificate"), "certificate.box");
    const json& sols = field(j, "solutions", "certificate");
    if (!sols.is_array())
        throw JsonDecodeError(AuditReason::malformed, "solutions: expected array");
    for (const auto& s : sols) c.search.solutions.push_back(solution_from_json(s));
    c.m = read_mpz(field(j, "m", "certificate"), "certificate.m");
    c.theorem_bound_value =
        read_mpz(field(j, "theorem_bound", "certificate"), "certificate.theorem_bound");
    c.siblings_with_solutions = read_count(
        field(j, "siblings_with_solutions", "certificate"), "siblings_with_solutions");
    c.total_siblings =
        read_count(field(j, "total_siblings", "certificate"), "total_siblings");
    c.guaranteed = read_bool(field(j, "guaranteed", "certificate"), "guaranteed");
    return c;
}

json summary_to_json(const PipelineSummary& s) {
    json o;
    o["box"] = s.box.get_str();
    o["certificates_emitted"] = s.certificates_emitted;
    o["degree"] = s.degree;
    o["disc"] = s.disc.get_str();
    o["forms_everywhere_local"] = s.forms_everywhere_local;
    o["forms_with_solutions"] = s.forms_with_solutions;
    o["guarantee"] = s.guarantee.get_str();
    o["guaranteed"] = s.guaranteed;
    o["h"] = s.h.get_str();
    o["hypothesis_ok"] = s.hypothesis_ok;
    o["k"] = s.k;
    o["m"] = s.primes.m.get_str();
    json pr = json::array();
    for (const auto& p : s.primes.primes) pr.push_back(p.get_str());
    o["primes"] = std::move(pr);
    o["scale"] = scale_name(s.scale);
    o["seed"] = std::to_string(s.seed);
    o["theorem_bound"] = s.theorem_bound_value.get_str();
    o["threshold"] = s.threshold.get_str();
    o["total_forms"] = s.total_forms;
    return o;
}

json solution_set_to_json(const SolutionSet& s) {
    json o;
    o["box"] = s.box.get_str();
    o["form"] = form_to_json(s.F);
    o["h"] = s.h.get_str();
    o["primitive_count"] = s.primitive_count;
    json sols = json::array();
    for (const auto& sol : s.solutions) sols.push_back(solution_to_json(sol));
    o["solutions"] = std::move(sols);
    return o;
}

json density_to_json(const DensityValue& d) {
    json o;
    o["cutoff"] = d.cutoff;
    o["degree"] = d.degree;
    json fs = json::array();
    for (const auto& [desc, q] : d.exact_factors) {
        json pair = json::array();
        pair.push_back(desc);
        pair.push_back(q.get_str());
        fs.push_back(pair);
    }
    o["exact_factors"] = std::move(fs);
    o["k"] = d.k;
    o["kind"] = density_kind_name(d.kind);
    o["leading"] = json{{"hi", d.leading.hi.get_str()}, {"lo", d.leading.lo.get_str()}};
    o["tail_bound"] = d.tail_bound.get_str();
    o["truncated"] = json{{"hi", d.truncated_product.hi.get_str()},
                          {"lo", d.truncated_product.lo.get_str()}};
    return o;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace thuegap

#include "thuegap/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "thuegap/construct.hpp"
#include "thuegap/density.hpp"
#include "thuegap/descent.hpp"
#include "thuegap/forms.hpp"
#include "thuegap/int_util.hpp"
#include "thuegap/jsonio.hpp"
#include "thuegap/local.hpp"
#include "thuegap/sha256.hpp"
#include "thuegap/solve.hpp"

namespace thuegap {

namespace {

constexpr const char* kVersion = "thuegap 1.0.0";

std::string utc_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::domain_error("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct FileDigest {
    std::string file;
    std::string sha256;
};

json manifest_json(const std::string& command, const std::vector<std::string>& args,
                   const std::string& seed, const std::vector<FileDigest>& inputs,
                   const std::vector<FileDigest>& outputs) {
    json m;
    m["args"] = args;
    m["command"] = command;
    json in = json::array();
    for (const auto& d : inputs) in.push_back({{"file", d.file}, {"sha256", d.sha256}});
    m["inputs"] = std::move(in);
    json out = json::array();
    for (const auto& d : outputs) out.push_back({{"file", d.file}, {"sha256", d.sha256}});
    m["outputs"] = std::move(out);
    m["seed"] = seed;
    m["timestamp"] = utc_now();
    m["version"] = kVersion;
    return m;
}

// Single-file output: --out FILE plus FILE.manifest.json, or stdout.
void emit_single(const json& j, const std::string& out_path, const std::string& command,
                 const std::vector<std::string>& args, const std::string& seed,
                 const std::vector<FileDigest>& inputs) {
    std::string body = dump_json(j);
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::filesystem::path p(out_path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    write_file(p, body);
    json m = manifest_json(command, args, seed, inputs,
                           {{p.filename().string(), sha256_hex(body)}});
    write_file(p.string() + ".manifest.json", dump_json(m));
}

int cmd_analyze(const std::string& form_text, const std::string& out,
                const std::vector<std::string>& args) {
    BinaryForm F = parse_form(form_text);
    json o;
    json bad = json::array();
    for (const auto& p : candidate_bad_primes(F)) bad.push_back(p.get_str());
    o["bad_primes"] = std::move(bad);
    o["content"] = form_content(F).get_str();
    o["degree"] = F.degree();
    o["disc"] = discriminant(F).get_str();
    o["form"] = form_to_json(F);
    json gal;
    try {
        GaloisCertificate gc = certify_galois(F);
        gal["certified"] = gc.certified;
        gal["method"] = gc.method;
        json wp = json::array();
        for (const auto& p : gc.witness_primes) wp.push_back(p.get_str());
        gal["witness_primes"] = std::move(wp);
    } catch (const std::domain_error& e) {
        gal["certified"] = false;
        gal["method"] = "reducible";
        gal["detail"] = e.what();
    }
    o["galois"] = std::move(gal);
    o["height"] = form_height(F).get_str();
    o["maximal"] = discriminant(F) != 0 && is_maximal(F);
    o["primitive"] = form_content(F) == 1;
    emit_single(o, out, "analyze", args, "0", {});
    return 0;
}

int cmd_descend(const std::string& form_text, const std::vector<std::string>& prime_texts,
                const std::string& out, const std::vector<std::string>& args) {
    BinaryForm F = parse_form(form_text);
    std::vector<mpz_class> primes;
    for (const auto& t : prime_texts) primes.emplace_back(t);
    auto outs = descend_chain(F, primes);
    json o;
    json forms = json::array();
    for (const auto& d : outs) {
        json e;
        e["form"] = form_to_json(d.form);
        e["j"] = d.path.j;
        e["path"] = path_to_json(d.path);
        forms.push_back(std::move(e));
    }
    o["forms"] = std::move(forms);
    o["origin"] = form_to_json(F);
    emit_single(o, out, "descend", args, "0", {});
    return 0;
}

int cmd_local(const std::string& form_text, const std::string& h_text,
              const std::string& p_text, unsigned depth, const std::string& out,
              const std::vector<std::string>& args) {
    BinaryForm F = parse_form(form_text);
    mpz_class h(h_text);
    json o;
    if (!p_text.empty()) {
        mpz_class p(p_text);
        o = evidence_to_json(soluble_p_adic(F, h, p, depth));
    } else {
        EverywhereResult r = locally_represents_everywhere(F, h);
        json ev = json::array();
        for (const auto& e : r.evidence) ev.push_back(evidence_to_json(e));
        o["evidence"] = std::move(ev);
        o["kind"] = r.kind == EverywhereResult::Kind::yes
                        ? "yes"
                        : (r.kind == EverywhereResult::Kind::no ? "no" : "undetermined");
    }
    emit_single(o, out, "local", args, "0", {});
    return 0;
}

int cmd_solve(const std::string& form_text, const std::string& h_text,
              const std::string& box_text, const std::string& out,
              const std::vector<std::string>& args) {
    BinaryForm F = parse_form(form_text);
    mpz_class h(h_text), box(box_text);
    SolutionSet s = enumerate_solutions(F, h, box);
    // Human-readable table on stderr; JSON is the machine output.
    size_t w = 1;
    for (const auto& sol : s.solutions)
        w = std::max({w, sol.x.get_str().size(), sol.y.get_str().size()});
    std::ostringstream table;
    table << std::setw(static_cast<int>(w)) << "x" << "  "
          << std::setw(static_cast<int>(w)) << "y" << "  primitive\n";
    for (const auto& sol : s.solutions)
        table << std::setw(static_cast<int>(w)) << sol.x.get_str() << "  "
              << std::setw(static_cast<int>(w)) << sol.y.get_str() << "  "
              << (sol.primitive ? "yes" : "no") << "\n";
    if (s.solutions.empty()) table << "(no solutions in box)\n";
    std::cerr << table.str();
    emit_single(solution_set_to_json(s), out, "solve", args, "0", {});
    return s.solutions.empty() ? 0 : 1;
}

int cmd_construct(const PipelineParams& params, const std::string& out,
                  const std::vector<std::string>& args) {
    PipelineResult res = run_pipeline(params);
    json certs = json::array();
    for (const auto& c : res.certificates) certs.push_back(certificate_to_json(c));
    json summary = summary_to_json(res.summary);
    if (out.empty()) {
        json o;
        o["certificates"] = std::move(certs);
        o["summary"] = summary;
        std::cout << dump_json(o);
        return 0;
    }
    std::filesystem::path dir(out);
    std::filesystem::create_directories(dir);
    std::string cert_body = dump_json(certs);
    std::string summary_body = dump_json(summary);
    write_file(dir / "certificates.json", cert_body);
    write_file(dir / "summary.json", summary_body);
    json m = manifest_json("construct", args, std::to_string(params.seed), {},
                           {{"certificates.json", sha256_hex(cert_body)},
                            {"summary.json", sha256_hex(summary_body)}});
    write_file(dir / "manifest.json", dump_json(m));
    std::cout << dump_json(summary);
    return 0;
}

int cmd_density(int degree, int k, const std::string& kind_name, unsigned long cutoff,
                const std::string& out, const std::vector<std::string>& args) {
    DensityKind kind = density_kind_from_name(kind_name);
    DensityValue d = density_lower_bound(degree, k, kind, cutoff);
    std::cerr << density_kind_name(d.kind) << " truncated product in ["
              << d.truncated_product.lo.get_str() << ", "
              << d.truncated_product.hi.get_str() << "], tail factor >= 1 - "
              << d.tail_bound.get_str() << "\n";
    emit_single(density_to_json(d), out, "density", args, "0", {});
    return 0;
}

int cmd_audit(const std::string& file, const std::string& out,
              const std::vector<std::string>& args) {
    json report;
    report["file"] = file;
    std::string content = read_file(file);
    std::vector<FileDigest> inputs = {{file, sha256_hex(content)}};
    bool all_valid = true;
    json results = json::array();
    try {
        json doc = json::parse(content);
        const json* cert_array = nullptr;
        if (doc.is_array()) {
            cert_array = &doc;
        } else if (doc.is_object() && doc.contains("certificates") &&
                   doc.at("certificates").is_array()) {
            cert_array = &doc.at("certificates");
        } else {
            throw JsonDecodeError(AuditReason::malformed,
                                  "expected a certificate array");
        }
        size_t index = 0;
        for (const auto& cj : *cert_array) {
            json r;
            r["index"] = index++;
            try {
                FailureCertificate cert = certificate_from_json(cj);
                AuditResult a = audit_certificate(cert);
                r["valid"] = a.valid;
                r["detail"] = a.detail;
                if (!a.valid) {
                    r["reason"] = audit_reason_name(*a.reason);
                    all_valid = false;
                }
            } catch (const JsonDecodeError& e) {
                r["valid"] = false;
                r["reason"] = audit_reason_name(e.reason);
                r["detail"] = e.what();
                all_valid = false;
            }
            results.push_back(std::move(r));
        }
        if (cert_array->empty()) {
            all_valid = false;
            report["file_error"] = {{"detail", "no certificates in file"},
                                    {"reason", audit_reason_name(AuditReason::malformed)}};
        }
    } catch (const JsonDecodeError& e) {
        all_valid = false;
        report["file_error"] = {{"detail", e.what()},
                                {"reason", audit_reason_name(e.reason)}};
    } catch (const json::parse_error& e) {
        all_valid = false;
        report["file_error"] = {{"detail", e.what()},
                                {"reason", audit_reason_name(AuditReason::malformed)}};
    }
    report["results"] = std::move(results);
    report["valid"] = all_valid;
    emit_single(report, out, "audit", args, "0", inputs);
    return all_valid ? 0 : 3;
}

}  // namespace

int run_cli(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* t = std::getenv("THREADS")) {
        int nt = std::atoi(t);
        if (nt > 0) omp_set_num_threads(nt);
    }
#endif
    std::vector<std::string> args(argv, argv + argc);

    CLI::App app{"constructive families of Thue equations that fail the integral "
                 "Hasse principle: descent, local analysis, certificates, densities"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string form_text, h_text = "1", p_text, box_text = "1000", out_path;
    std::string kind_name, audit_file, scale_name_opt = "demo", threshold_text;
    std::vector<std::string> prime_texts;
    unsigned depth = 0;
    int degree = 3, k = 4;
    unsigned long cutoff = 100000;
    uint64_t seed = 0;

    CLI::App* a_analyze = app.add_subcommand("analyze", "invariants of one form");
    a_analyze->add_option("form", form_text, "coefficients \"[f0,...,fn]\"")->required();
    a_analyze->add_option("--out", out_path, "write JSON here instead of stdout");

    CLI::App* a_descend = app.add_subcommand("descend", "descent fan-out at primes");
    a_descend->add_option("form", form_text)->required();
    a_descend->add_option("--primes", prime_texts, "split primes, ascending")
        ->required()
        ->delimiter(',');
    a_descend->add_option("--out", out_path);

    CLI::App* a_local = app.add_subcommand("local", "local solubility of F = h");
    a_local->set_help_flag("--help", "print help");  // frees -h for --h
    a_local->add_option("form", form_text)->required();
    a_local->add_option("--h", h_text)->required();
    a_local->add_option("--p", p_text, "single prime; omit for all places");
    a_local->add_option("--depth", depth, "p-adic search depth override");
    a_local->add_option("--out", out_path);

    CLI::App* a_solve = app.add_subcommand("solve", "box search for F = h");
    a_solve->set_help_flag("--help", "print help");
    a_solve->add_option("form", form_text)->required();
    a_solve->add_option("--h", h_text)->required();
    a_solve->add_option("--box", box_text, "search |x|,|y| <= box");
    a_solve->add_option("--out", out_path);

    CLI::App* a_construct = app.add_subcommand(
        "construct", "build F, descend, certify Hasse-principle failures");
    a_construct->set_help_flag("--help", "print help");
    a_construct->add_option("--degree", degree)->required();
    a_construct->add_option("--h", h_text)->required();
    a_construct->add_option("--k", k, "number of split primes")->required();
    a_construct->add_option("--scale", scale_name_opt)
        ->required()
        ->check(CLI::IsMember({"full", "demo"}));
    a_construct->add_option("--box", box_text);
    a_construct->add_option("--seed", seed);
    a_construct->add_option("--out", out_path, "output directory");
    a_construct->add_option("--threshold-override", threshold_text,
                            "demo-scale discriminant threshold");

    CLI::App* a_density = app.add_subcommand("density", "certified density lower bound");
    a_density->add_option("--degree", degree)->required();
    a_density->add_option("--k", k)->required();
    a_density->add_option("--kind", kind_name)
        ->required()
        ->check(CLI::IsMember({"F-cubic", "G-cubic", "F-general", "G-general"}));
    a_density->add_option("--cutoff", cutoff)->check(CLI::Range(4ul, 100000000ul));
    a_density->add_option("--out", out_path);

    CLI::App* a_audit = app.add_subcommand("audit", "re-validate a certificate file");
    a_audit->add_option("file", audit_file)->required();
    a_audit->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }

    try {
        if (a_analyze->parsed()) return cmd_analyze(form_text, out_path, args);
        if (a_descend->parsed()) return cmd_descend(form_text, prime_texts, out_path, args);
        if (a_local->parsed())
            return cmd_local(form_text, h_text, p_text, depth, out_path, args);
        if (a_solve->parsed()) return cmd_solve(form_text, h_text, box_text, out_path, args);
        if (a_construct->parsed()) {
            PipelineParams params;
            params.degree = degree;
            params.h = mpz_class(h_text);
            params.k = k;
            params.scale = scale_from_name(scale_name_opt);
            params.box = mpz_class(box_text);
            params.seed = seed;
            if (!threshold_text.empty()) params.threshold_override = mpz_class(threshold_text);
            return cmd_construct(params, out_path, args);
        }
        if (a_density->parsed())
            return cmd_density(degree, k, kind_name, cutoff, out_path, args);
        if (a_audit->parsed()) return cmd_audit(audit_file, out_path, args);
        return 64;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 2;
    } catch (const DescentError& e) {
        std::cerr << "descent error at " << e.prime.get_str() << ": " << e.what() << "\n";
        return 64;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}

}  // namespace thuegap

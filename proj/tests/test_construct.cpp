#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "thuegap/construct.hpp"
#include "thuegap/int_util.hpp"
#include "thuegap/jsonio.hpp"
#include "thuegap/modp.hpp"

using namespace thuegap;

namespace {

PipelineParams demo_params() {
    PipelineParams pp;
    pp.degree = 3;
    pp.h = 1;
    pp.k = 2;
    pp.scale = Scale::demo;
    pp.box = 300;
    pp.seed = 0;
    pp.threshold_override = mpz_class(1000000);
    return pp;
}

}  // namespace

TEST_CASE("prime choice") {
    PrimeChoice c = choose_primes(3, 1, 4);
    CHECK(c.primes == std::vector<mpz_class>({5, 7, 11, 13}));
    CHECK(c.m == 5005);
    CHECK(choose_primes(3, 5, 4).primes == std::vector<mpz_class>({7, 11, 13, 17}));
    CHECK(choose_primes(3, 35, 2).primes == std::vector<mpz_class>({11, 13}));
    PrimeChoice q = choose_primes(5, 1, 3);
    CHECK(q.primes == std::vector<mpz_class>({5, 7, 11}));
    CHECK(q.m == 385);
    CHECK(choose_primes(4, 1, 2).primes == std::vector<mpz_class>({5, 7}));
    CHECK(choose_primes(6, 1, 2).primes == std::vector<mpz_class>({7, 11}));
}

TEST_CASE("discriminant threshold exact ceilings") {
    CHECK(disc_threshold(3, 1, 1) == mpz_class("301203595169350669647332"));
    CHECK(disc_threshold(5, 1, 385) ==
          mpz_class("1317630045965091620928319856956602405517109181232603893541469389363"
                    "3746"));
    // monotone in |h| and m
    CHECK(disc_threshold(3, 2, 1) > disc_threshold(3, 1, 1));
    CHECK(disc_threshold(3, -2, 1) == disc_threshold(3, 2, 1));
    CHECK(disc_threshold(3, 1, 35) > disc_threshold(3, 1, 5));
    CHECK(disc_threshold(4, 1, 35) > 0);
}

TEST_CASE("galois certification") {
    GaloisCertificate a = certify_galois(BinaryForm({1, 0, -1, -1}));
    CHECK(a.certified);
    CHECK(a.method == "disc-nonsquare");

    GaloisCertificate b = certify_galois(BinaryForm({1, 1, -2, -1}));
    CHECK_FALSE(b.certified);
    CHECK(b.method == "disc-square");

    GaloisCertificate c = certify_galois(BinaryForm({1, 0, 0, 0, -1, -1}));
    CHECK(c.certified);
    CHECK(c.method == "cycle-type-witnesses");
    CHECK(c.witness_primes.size() == 3);

    GaloisCertificate d = certify_galois(BinaryForm({1, 0, 0, 0, 1}));
    CHECK_FALSE(d.certified);
    CHECK(d.method == "inconclusive");

    CHECK_THROWS_AS(certify_galois(BinaryForm({1, 0, 0, 1})), std::domain_error);
    CHECK_THROWS_AS(certify_galois(BinaryForm({0, 1, 1, 0})), std::domain_error);
}

TEST_CASE("construction satisfies every congruence target") {
    BuildReport br = build_F(demo_params());
    const BinaryForm& F = br.F;
    REQUIRE(F.degree() == 3);
    CHECK(br.primes.primes == std::vector<mpz_class>({5, 7}));

    for (const auto& cond : br.conditions) CHECK(cond.holds);

    // independent re-verification of each demanded reduction
    CHECK(reduce_form_mod_p(F, 2).f == std::vector<mpz_class>({1, 0, 1, 1}));
    CHECK(reduce_form_mod_p(F, 3).f == std::vector<mpz_class>({1, 0, 2, 2}));
    // split pattern x(x-y)(x-2y) = x^3 - 3x^2 y + 2x y^2
    CHECK(reduce_form_mod_p(F, 5).f == std::vector<mpz_class>({1, 2, 2, 0}));
    CHECK(reduce_form_mod_p(F, 7).f == std::vector<mpz_class>({1, 4, 2, 0}));
    auto lab5 = splits_completely(F, 5);
    auto lab7 = splits_completely(F, 7);
    REQUIRE(lab5.has_value());
    REQUIRE(lab7.has_value());
    CHECK((*lab5)[0].value == 0);
    CHECK((*lab5)[1].value == 1);
    CHECK((*lab5)[2].value == 2);

    CHECK(form_content(F) == 1);
    CHECK(F.f[0] > 0);
    CHECK(abs(br.disc) > 1000000);
    CHECK(br.disc == discriminant(F));
    CHECK(is_maximal(F));
    CHECK(br.galois.certified);
    CHECK(br.threshold == 1000000);

    // h = 2 switches the mod-2 target to x^2(x+y)
    PipelineParams p2 = demo_params();
    p2.h = 2;
    BuildReport br2 = build_F(p2);
    CHECK(reduce_form_mod_p(br2.F, 2).f == std::vector<mpz_class>({1, 1, 0, 0}));
    CHECK(br2.primes.primes == std::vector<mpz_class>({5, 7}));

    // 3 | h is structurally impossible for cubics
    PipelineParams p6 = demo_params();
    p6.h = 6;
    CHECK_THROWS_AS(build_F(p6), std::domain_error);
}

TEST_CASE("demo pipeline end to end") {
    PipelineResult r = run_pipeline(demo_params());
    CHECK(r.summary.total_forms == 9);
    CHECK(r.summary.theorem_bound_value == 34);
    CHECK(r.summary.guarantee == 0);  // 9 < 34, clamped
    CHECK_FALSE(r.summary.hypothesis_ok);
    CHECK_FALSE(r.summary.guaranteed);
    CHECK(r.summary.k == 2);
    CHECK(r.summary.primes.m == 35);
    CHECK(r.summary.forms_everywhere_local <= 9);
    CHECK(r.summary.certificates_emitted == r.certificates.size());

    for (const auto& cert : r.certificates) {
        CHECK(cert.h == 1);
        CHECK(cert.m == 35);
        CHECK(cert.total_siblings == 9);
        CHECK(cert.theorem_bound_value == 34);
        CHECK_FALSE(cert.guaranteed);
        CHECK(cert.search.solutions.empty());
        CHECK(cert.origin == r.build.F);
        REQUIRE(cert.path.steps.size() == 2);
        CHECK(cert.path.steps[0].prime == 5);
        CHECK(cert.path.steps[1].prime == 7);
        AuditResult audit = audit_certificate(cert);
        CHECK(audit.valid);
        CHECK_FALSE(audit.reason.has_value());
    }

    // descent disc law visible on every certificate form
    for (const auto& cert : r.certificates)
        CHECK(discriminant(cert.form) == r.summary.disc * 35 * 35);
}

TEST_CASE("pipeline is deterministic for a fixed seed") {
    PipelineResult a = run_pipeline(demo_params());
    PipelineResult b = run_pipeline(demo_params());
    CHECK(dump_json(summary_to_json(a.summary)) == dump_json(summary_to_json(b.summary)));
    REQUIRE(a.certificates.size() == b.certificates.size());
    for (size_t i = 0; i < a.certificates.size(); ++i)
        CHECK(dump_json(certificate_to_json(a.certificates[i])) ==
              dump_json(certificate_to_json(b.certificates[i])));

    PipelineParams seeded = demo_params();
    seeded.seed = 12345;
    PipelineResult c = run_pipeline(seeded);
    CHECK(c.summary.seed == 12345);
    // a different seed still yields a valid, auditable run
    for (const auto& cert : c.certificates) CHECK(audit_certificate(cert).valid);
}

TEST_CASE("audit rejects tampered certificates") {
    PipelineResult r = run_pipeline(demo_params());
    REQUIRE(!r.certificates.empty());
    const FailureCertificate& good = r.certificates.front();
    REQUIRE(audit_certificate(good).valid);

    // break a local witness congruence
    {
        FailureCertificate bad = good;
        bool tampered = false;
        for (auto& ev : bad.local_evidence) {
            if (ev.real_place || !ev.witness) continue;
            mpz_class pl = 1;
            for (unsigned i = 0; i < ev.witness->l; ++i) pl *= ev.prime;
            for (long delta = 1; delta <= 16; ++delta) {
                mpz_class nx = ev.witness->x + delta;
                if (mod_reduce(evaluate(bad.form, nx, ev.witness->y) - bad.h, pl) != 0) {
                    ev.witness->x = nx;
                    tampered = true;
                    break;
                }
            }
            if (tampered) break;
        }
        REQUIRE(tampered);
        AuditResult res = audit_certificate(bad);
        CHECK_FALSE(res.valid);
        REQUIRE(res.reason.has_value());
        CHECK(audit_reason_name(*res.reason) == "witness-check-failed");
    }

    // rewrite a path prime: the discriminant law must catch it
    {
        FailureCertificate bad = good;
        bad.path.steps[1].prime = 17;  // (5,17) stays ascending, breaks disc ratio
        AuditResult res = audit_certificate(bad);
        CHECK_FALSE(res.valid);
        REQUIRE(res.reason.has_value());
        CHECK(audit_reason_name(*res.reason) == "disc-law");
    }

    // non-ascending path is structurally malformed
    {
        FailureCertificate bad = good;
        bad.path.steps[0].prime = 17;  // (17,7) descends
        AuditResult res = audit_certificate(bad);
        CHECK_FALSE(res.valid);
        REQUIRE(res.reason.has_value());
        CHECK(audit_reason_name(*res.reason) == "malformed");
    }

    // corrupt the aggregate modulus
    {
        FailureCertificate bad = good;
        bad.m *= 2;
        AuditResult res = audit_certificate(bad);
        CHECK_FALSE(res.valid);
        REQUIRE(res.reason.has_value());
        CHECK(audit_reason_name(*res.reason) == "aggregate-arithmetic");
    }

    // claim a guarantee the hypothesis cannot support
    {
        FailureCertificate bad = good;
        bad.guaranteed = true;
        AuditResult res = audit_certificate(bad);
        CHECK_FALSE(res.valid);
        REQUIRE(res.reason.has_value());
        CHECK(audit_reason_name(*res.reason) == "aggregate-arithmetic");
    }

    // sneak in a fake box solution
    {
        FailureCertificate bad = good;
        ThueSolution s;
        s.x = 1;
        s.y = 1;
        s.primitive = true;
        bad.search.solutions.push_back(s);
        AuditResult res = audit_certificate(bad);
        CHECK_FALSE(res.valid);
        REQUIRE(res.reason.has_value());
        CHECK(audit_reason_name(*res.reason) == "box-search-mismatch");
    }

    // misreport maximality
    {
        FailureCertificate bad = good;
        bad.maximal = false;
        AuditResult res = audit_certificate(bad);
        CHECK_FALSE(res.valid);
        REQUIRE(res.reason.has_value());
        CHECK(audit_reason_name(*res.reason) == "maximality-check-failed");
    }
}

TEST_CASE("pipeline parameter validation") {
    PipelineParams full = demo_params();
    full.scale = Scale::full;
    CHECK_THROWS_AS(run_pipeline(full), std::domain_error);  // override on full

    PipelineParams degenerate = demo_params();
    degenerate.threshold_override = mpz_class(0);
    CHECK_THROWS_AS(run_pipeline(degenerate), std::domain_error);

    PipelineParams low = demo_params();
    low.degree = 2;
    CHECK_THROWS_AS(run_pipeline(low), std::domain_error);

    PipelineParams fullsmall;
    fullsmall.degree = 3;
    fullsmall.h = 1;
    fullsmall.k = 3;  // 27 <= 34: cannot guarantee anything
    fullsmall.scale = Scale::full;
    CHECK_THROWS_AS(run_pipeline(fullsmall), std::domain_error);

    PipelineParams huge = demo_params();
    huge.k = 12;  // 3^12 > 200000 cap
    CHECK_THROWS_AS(run_pipeline(huge), std::domain_error);

    CHECK(scale_from_name("full") == Scale::full);
    CHECK(scale_from_name("demo") == Scale::demo);
    CHECK(scale_name(Scale::full) == "full");
    CHECK_THROWS_AS(scale_from_name("bogus"), std::domain_error);
}

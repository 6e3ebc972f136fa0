#pragma once
// End-to-end pipeline: prime selection, CRT-directed construction of a
// suitable form F, descent fan-out, per-form local analysis and box search,
// failure-certificate emission, and independent certificate auditing.
#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thuegap/descent.hpp"
#include "thuegap/forms.hpp"
#include "thuegap/local.hpp"
#include "thuegap/solve.hpp"

namespace thuegap {

enum class Scale { full, demo };

std::string scale_name(Scale s);
Scale scale_from_name(const std::string& name);

struct PipelineParams {
    int degree = 3;
    mpz_class h = 1;
    int k = 4;
    Scale scale = Scale::demo;
    mpz_class box = 1000;
    uint64_t seed = 0;
    // Demo runs may replace the full-scale discriminant threshold.
    std::optional<mpz_class> threshold_override;
};

struct PrimeChoice {
    std::vector<mpz_class> primes;  // ascending
    mpz_class m;                    // product of the primes
};

// Cubic: the k smallest primes > 3 coprime to h.
// General n >= 4: the k smallest primes >= n coprime to h.
PrimeChoice choose_primes(int n, const mpz_class& h, int k);

// Exact integer ceiling of the discriminant threshold:
//   n = 3: (|h| m)^20 (7/2)^30 3^15
//   n >= 4: (7/2)^{2n(n-1)} n^{2n} (|h| m)^{4(n-1)}
mpz_class disc_threshold(int n, const mpz_class& h, const mpz_class& m);

struct GaloisCertificate {
    bool certified = false;
    // "disc-nonsquare" for n = 3, "cycle-type-witnesses" for n >= 4.
    std::string method;
    // For the witness method: primes exhibiting an n-cycle, an (n-1)-cycle,
    // and a transposition in the factorization of F mod p.
    std::vector<mpz_class> witness_primes;
};

// Certifies Gal(splitting field of F(x,1)) = S_n.  Requires F irreducible
// over Q (throws std::domain_error otherwise, after checking).  Returns an
// uncertified result if no witness triple is found within the prime budget.
GaloisCertificate certify_galois(const BinaryForm& F, uint64_t prime_budget = 50000);

struct ConditionReport {
    std::string description;
    bool holds = false;
};

struct BuildReport {
    BinaryForm F;
    PrimeChoice primes;
    mpz_class threshold;
    mpz_class disc;
    GaloisCertificate galois;
    std::vector<ConditionReport> conditions;
    uint64_t candidates_tried = 0;
};

// Constructs F by CRT over the required congruence targets, then advances the
// leading coefficient until size, irreducibility, Galois, and maximality
// checks all pass.  Throws BudgetExhausted with a condition histogram in the
// message if the search budget runs out.
BuildReport build_F(const PipelineParams& params);

struct SearchAttestation {
    mpz_class box;
    std::vector<ThueSolution> solutions;
};

struct FailureCertificate {
    BinaryForm form;  // G_j
    mpz_class h;
    BinaryForm origin;  // F
    DescentPath path;
    bool maximal = false;
    std::vector<LocalEvidence> local_evidence;
    SearchAttestation search;
    // Aggregate context shared by all sibling certificates.
    mpz_class m;
    mpz_class theorem_bound_value;
    uint64_t siblings_with_solutions = 0;
    uint64_t total_siblings = 0;
    // True only on full-scale runs where the count bound hypothesis holds.
    bool guaranteed = false;
};

struct PipelineSummary {
    int degree = 3;
    mpz_class h = 1;
    int k = 0;
    Scale scale = Scale::demo;
    mpz_class box;
    uint64_t seed = 0;
    PrimeChoice primes;
    mpz_class threshold;
    mpz_class disc;
    uint64_t total_forms = 0;  // n^k
    uint64_t forms_with_solutions = 0;
    uint64_t forms_everywhere_local = 0;
    uint64_t certificates_emitted = 0;
    bool hypothesis_ok = false;
    mpz_class theorem_bound_value;
    // n^k - theorem bound when the hypothesis holds; meaningful only then.
    mpz_class guarantee;
    bool guaranteed = false;
};

struct PipelineResult {
    BuildReport build;
    std::vector<FailureCertificate> certificates;
    PipelineSummary summary;
};

// Builds F, descends along all k primes, and for each of the n^k resulting
// forms checks maximality, local solubility of G = h everywhere, and runs the
// box search.  Emits a certificate for every form with no solution in the
// box.  Aborts with std::logic_error if more than theorem-bound many siblings
// carry solutions on a full-scale run (that would falsify the implementation).
PipelineResult run_pipeline(const PipelineParams& params);

// Closed set of audit failure reasons.
enum class AuditReason {
    content_law,
    disc_law,
    maximality_check_failed,
    witness_check_failed,
    obstruction_recheck_failed,
    box_search_mismatch,
    aggregate_arithmetic,
    integer_encoding,
    malformed,
};

std::string audit_reason_name(AuditReason r);

struct AuditResult {
    bool valid = false;
    std::optional<AuditReason> reason;
    std::string detail;
};

// Re-derives G_j from origin + path, re-checks content, the discriminant
// law, maximality, every local witness/obstruction, re-runs the box search,
// and validates the aggregate arithmetic.  Uses only modular and integer
// arithmetic plus the library's own primitives.
AuditResult audit_certificate(const FailureCertificate& cert);

}  // namespace thuegap

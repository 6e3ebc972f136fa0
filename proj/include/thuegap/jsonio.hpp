#pragma once
// JSON serialization for every CLI-facing type.  Contract: integers that can
// exceed 2^53 travel as decimal strings; small counts, exponents, and flags
// are JSON numbers; object keys are sorted (nlohmann default); output is
// UTF-8 with LF line endings.
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "thuegap/construct.hpp"
#include "thuegap/density.hpp"
#include "thuegap/descent.hpp"
#include "thuegap/forms.hpp"
#include "thuegap/local.hpp"
#include "thuegap/solve.hpp"

namespace thuegap {

using json = nlohmann::json;

// Raised by the deserializers; reason is integer_encoding when a big-integer
// field arrives as a JSON number, malformed for every other schema violation.
struct JsonDecodeError : std::runtime_error {
    AuditReason reason;
    JsonDecodeError(AuditReason r, const std::string& what)
        : std::runtime_error(what), reason(r) {}
};

std::string verdict_name(LocalVerdict v);
LocalVerdict verdict_from_name(const std::string& s);

// Bracketed coefficient list "[f0,f1,...,fn]"; whitespace-tolerant,
// arbitrary-precision, at least two coefficients.
BinaryForm parse_form(const std::string& text);
std::string form_to_text(const BinaryForm& F);

json form_to_json(const BinaryForm& F);
BinaryForm form_from_json(const json& j);

json solution_to_json(const ThueSolution& s);
ThueSolution solution_from_json(const json& j);

json path_to_json(const DescentPath& p);   // [["5","3"],["7","inf"]]
DescentPath path_from_json(const json& j);

json evidence_to_json(const LocalEvidence& ev);
LocalEvidence evidence_from_json(const json& j);

json certificate_to_json(const FailureCertificate& cert);
FailureCertificate certificate_from_json(const json& j);

json summary_to_json(const PipelineSummary& s);
json solution_set_to_json(const SolutionSet& s);
json density_to_json(const DensityValue& d);

// dump with 2-space indent and a trailing newline.
std::string dump_json(const json& j);

}  // namespace thuegap

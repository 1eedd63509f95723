#pragma once

#include <json.hpp>

#include "attainment.hpp"
#include "extremal.hpp"
#include "kr_norm.hpp"

namespace freespace {

using Json = nlohmann::json;

inline constexpr const char* kToolName = "freespace-lab";
inline constexpr const char* kToolVersion = "0.1.0";

// ---- space / function / element serialisation -------------------------------

Json space_to_json(const MetricSpace& space);

/// Structural parse only: square full matrix, unique labels, base listed
/// first, parsable entries. Symmetry and the metric axioms are left to
/// validate(); gallery coherence is still enforced.
MetricSpace space_from_json_unchecked(const Json& doc);

/// Structural parse + asymmetry rejection + metric validation.
MetricSpace space_from_json(const Json& doc);

Json function_to_json(const LipFunction& f);
LipFunction function_from_json(const MetricSpace& space, const Json& doc);

Json element_to_json(const FreeElement& mu);
FreeElement element_from_json(const MetricSpace& space, const Json& doc);

// ---- reports -----------------------------------------------------------------

/// Common header: tool, version, arithmetic mode, kind, embedded space.
Json report_envelope(const MetricSpace& space, const std::string& kind);

Json verdict_to_json(const Verdict& verdict);
Json classification_row_to_json(const MetricSpace& space, const ClassificationRow& row);

Json classification_report(const MetricSpace& space, const std::vector<ClassificationRow>& rows,
                           const ClassifyOptions& options);
Json validation_report(const MetricSpace& space, const std::vector<Violation>& violations);
Json segment_report(const MetricSpace& space, int x, int y);
Json norm_report(const MetricSpace& space, const FreeElement& mu, const std::string& method);
Json oracle_report(const MetricSpace& space, const std::vector<Molecule>& vertices);
Json slice_report(const MetricSpace& space, const LipFunction& f, const Rational& alpha,
                  bool restrict_to_molecules);
Json attainment_report(const MetricSpace& space, const LipFunction& f);
Json attainment_random_report(const MetricSpace& space, const NormAttainmentResult& result);

// ---- evidence checker ----------------------------------------------------------

struct CheckResult {
    bool passed = true;
    long checked_items = 0;
    long skipped_items = 0;
    std::vector<std::string> failures;
};

/// Re-verifies every evidence item of a report from the raw distances of the
/// embedded space (rebuilding gallery certificates where the report cites
/// them). Never re-runs the solvers that produced the report, except that
/// norm witnesses and transport plans are checked against their own claims.
CheckResult check_report(const Json& report);

Json check_result_to_json(const CheckResult& result);

}  // namespace freespace

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spiralkit/measures.hpp"
#include "spiralkit/spiral_functions.hpp"
#include "spiralkit/verification.hpp"

namespace spiralkit {

/// Rounds to 12 significant digits so serialized output is stable across platforms.
double round_significant(double value);

/// {"atoms": [{"angle": theta, "weight": sigma}, ...]}
nlohmann::json measure_to_json(const AtomicCircleMeasure& measure);
AtomicCircleMeasure measure_from_json(const nlohmann::json& doc);

struct FunctionSpec {
  ClassParams params;
  ProductForm f;
};

/// {"mu": [re, im], "beta": b, "factors": [{"node": [re, im], "exponent": [re, im]}]}
/// or {"mu": ..., "beta": ..., "measure": {...}}. An optional "prefactor"
/// overrides the (1-z) exponent, which otherwise equals mu.
FunctionSpec function_from_json(const nlohmann::json& doc);
nlohmann::json function_to_json(const FunctionSpec& spec);

/// {check, passed, worst_margin, worst_z: [re, im], tolerance, samples, indeterminate}
nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace spiralkit

#include "spiralkit/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace spiralkit {

using nlohmann::json;

namespace {

Complex complex_from_json(const json& value, const char* what) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
    throw std::invalid_argument(std::string("expected [re, im] for ") + what);
  }
  return {value[0].get<double>(), value[1].get<double>()};
}

json complex_to_json(Complex w) { return json::array({round_significant(w.real()), round_significant(w.imag())}); }

json number_or_string(double value) {
  if (std::isfinite(value)) return round_significant(value);
  return value > 0 ? "inf" : (value < 0 ? "-inf" : "nan");
}

}  // namespace

double round_significant(double value) {
  if (value == 0.0) return 0.0;
  if (!std::isfinite(value)) return value;
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return std::strtod(buffer, nullptr);
}

json measure_to_json(const AtomicCircleMeasure& measure) {
  json atoms = json::array();
  for (const auto& atom : measure.atoms()) {
    atoms.push_back({{"angle", round_significant(std::arg(atom.point))}, {"weight", round_significant(atom.weight)}});
  }
  return {{"atoms", atoms}};
}

AtomicCircleMeasure measure_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("atoms") || !doc["atoms"].is_array()) {
    throw std::invalid_argument("measure spec: expected an object with an \"atoms\" array");
  }
  std::vector<std::pair<double, double>> atoms;
  for (const auto& atom : doc["atoms"]) {
    if (!atom.is_object() || !atom.contains("angle") || !atom.contains("weight")) {
      throw std::invalid_argument("measure spec: each atom needs \"angle\" and \"weight\"");
    }
    atoms.emplace_back(atom["angle"].get<double>(), atom["weight"].get<double>());
  }
  return measure_from_angles(atoms);
}

FunctionSpec function_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("mu") || !doc.contains("beta")) {
    throw std::invalid_argument("function spec: \"mu\" and \"beta\" are required");
  }
  const ClassParams params(complex_from_json(doc["mu"], "mu"), doc["beta"].get<double>());
  if (doc.contains("measure")) return {params, construct(params, measure_from_json(doc["measure"]))};

  const Complex prefactor = doc.contains("prefactor") ? complex_from_json(doc["prefactor"], "prefactor") : params.mu();
  std::vector<Factor> factors;
  if (doc.contains("factors")) {
    if (!doc["factors"].is_array()) throw std::invalid_argument("function spec: \"factors\" must be an array");
    for (const auto& factor : doc["factors"]) {
      if (!factor.is_object() || !factor.contains("node") || !factor.contains("exponent")) {
        throw std::invalid_argument("function spec: each factor needs \"node\" and \"exponent\"");
      }
      factors.push_back({complex_from_json(factor["node"], "node"), complex_from_json(factor["exponent"], "exponent")});
    }
  }
  return {params, ProductForm(prefactor, std::move(factors))};
}

json function_to_json(const FunctionSpec& spec) {
  json factors = json::array();
  for (const auto& factor : spec.f.factors()) {
    factors.push_back({{"node", complex_to_json(factor.node)}, {"exponent", complex_to_json(factor.exponent)}});
  }
  json doc{{"mu", complex_to_json(spec.params.mu())},
           {"beta", round_significant(spec.params.beta())},
           {"factors", factors}};
  if (spec.f.prefactor() != spec.params.mu()) doc["prefactor"] = complex_to_json(spec.f.prefactor());
  return doc;
}

json report_to_json(const VerificationReport& report) {
  return {{"check", report.check_name},
          {"passed", report.passed},
          {"worst_margin", number_or_string(report.worst_margin)},
          {"worst_z", complex_to_json(report.worst_location)},
          {"tolerance", round_significant(report.tolerance)},
          {"samples", report.samples},
          {"indeterminate", report.indeterminate}};
}

json reports_to_json(const std::vector<VerificationReport>& reports) {
  json out = json::array();
  for (const auto& report : reports) out.push_back(report_to_json(report));
  return out;
}

}  // namespace spiralkit

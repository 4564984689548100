#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fixtures.hpp"
#include "spiralkit/json_io.hpp"

using namespace spiralkit;
using nlohmann::json;

TEST_CASE("round_significant keeps twelve digits") {
  CHECK(round_significant(0.1234567890123456) == 0.123456789012);
  CHECK(round_significant(-98765.43210987654) == -98765.4321099);
  CHECK(round_significant(0.0) == 0.0);
  CHECK(round_significant(1e-300) == doctest::Approx(1e-300));
}

TEST_CASE("measure json round trip") {
  const auto measure = random_measure(5, 3);
  const auto back = measure_from_json(measure_to_json(measure));
  REQUIRE(back.size() == measure.size());
  for (std::size_t i = 0; i < measure.size(); ++i) {
    CHECK(std::abs(back.atoms()[i].point - measure.atoms()[i].point) <= 1e-11);
    CHECK(back.atoms()[i].weight == doctest::Approx(measure.atoms()[i].weight).epsilon(1e-11));
  }
  const auto doc = json::parse(R"({"atoms": [{"angle": 3.141592653589793, "weight": 1}]})");
  CHECK(std::abs(measure_from_json(doc).atoms()[0].point + 1.0) <= 1e-15);
  CHECK_THROWS(measure_from_json(json::parse(R"({"atoms": [{"angle": 0.0}]})")));
  CHECK_THROWS(measure_from_json(json::parse(R"({"atoms": [{"angle": 0.0, "weight": 0.5}]})")));
  CHECK_THROWS(measure_from_json(json::parse(R"([1, 2])")));
}

TEST_CASE("function spec parsing") {
  const auto doc = json::parse(R"({
    "mu": [1, 0], "beta": 0.6,
    "factors": [{"node": [0.9, 0.4], "exponent": [0.2, 0]}, {"node": [0.9, -0.4], "exponent": [0.2, 0]}]
  })");
  const auto spec = function_from_json(doc);
  CHECK(spec.params.mu() == Complex{1.0, 0.0});
  CHECK(spec.params.beta() == 0.6);
  for (Complex z : {Complex{0.3, 0.4}, Complex{-0.8, 0.1}}) {
    CHECK(std::abs(eval_log_f(spec.f, z) - eval_log_f(fixtures::figure_example(), z)) <= 1e-15);
  }

  const auto scalar_mu = function_from_json(json::parse(R"({"mu": 1.5, "beta": 0.2})"));
  CHECK(scalar_mu.params.mu() == Complex{1.5, 0.0});
  CHECK(scalar_mu.f.prefactor() == Complex{1.5, 0.0});
  CHECK(scalar_mu.f.factors().empty());

  const auto with_prefactor = function_from_json(json::parse(R"({"mu": 1.5, "beta": 0.2, "prefactor": 0.3})"));
  CHECK(with_prefactor.f.prefactor() == Complex{0.3, 0.0});

  const auto from_measure = function_from_json(
      json::parse(R"({"mu": [1, 0.5], "beta": 0.25, "measure": {"atoms": [{"angle": 0.0, "weight": 1.0}]}})"));
  CHECK(std::abs(from_measure.f.prefactor() - Complex{1.0, 0.5} * 0.25) <= 1e-15);
}

TEST_CASE("function spec errors") {
  CHECK_THROWS(function_from_json(json::parse(R"({"beta": 0.2})")));
  CHECK_THROWS(function_from_json(json::parse(R"({"mu": 1.0})")));
  CHECK_THROWS(function_from_json(json::parse(R"({"mu": 3.0, "beta": 0.2})")));
  CHECK_THROWS(function_from_json(json::parse(R"({"mu": 1.0, "beta": 1.0})")));
  CHECK_THROWS(function_from_json(json::parse(R"({"mu": [1], "beta": 0.2})")));
  CHECK_THROWS(function_from_json(json::parse(R"({"mu": "one", "beta": 0.2})")));
  CHECK_THROWS(function_from_json(json::parse(R"({"mu": 1.0, "beta": 0.2, "factors": {}})")));
  CHECK_THROWS(function_from_json(json::parse(R"({"mu": 1.0, "beta": 0.2, "factors": [{"node": [1, 0]}]})")));
  CHECK_THROWS(function_from_json(json::parse(R"({"mu": 1.0, "beta": 0.2, "factors": [{"node": [2, 0], "exponent": 1}]})")));
}

TEST_CASE("property: function spec round trip") {
  for (const auto& member : sample_population(20, 8)) {
    const auto back = function_from_json(function_to_json({member.params, member.f}));
    CHECK(std::abs(back.params.mu() - member.params.mu()) <= 1e-11);
    REQUIRE(back.f.factors().size() == member.f.factors().size());
    for (Complex z : {Complex{0.5, 0.2}, Complex{-0.3, -0.9}}) {
      CHECK(std::abs(eval_log_f(back.f, z) - eval_log_f(member.f, z)) <= 1e-9);
    }
  }
}

TEST_CASE("report serialization") {
  VerificationReport report;
  report.check_name = "membership";
  report.passed = true;
  report.worst_margin = 0.123456789012345;
  report.worst_location = {0.5, -0.25};
  report.samples = 896;
  const auto doc = report_to_json(report);
  CHECK(doc["check"] == "membership");
  CHECK(doc["passed"] == true);
  CHECK(doc["worst_margin"].get<double>() == 0.123456789012);
  CHECK(doc["worst_z"] == json::array({0.5, -0.25}));
  CHECK(doc["tolerance"].get<double>() == 1e-9);
  CHECK(doc["samples"] == 896);
  CHECK(doc["indeterminate"] == 0);

  report.worst_margin = std::numeric_limits<double>::infinity();
  CHECK_NOTHROW(report_to_json(report).dump());
  CHECK(reports_to_json({report, report}).size() == 2);
}

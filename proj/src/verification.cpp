#include "spiralkit/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace spiralkit {

namespace {

struct Worst {
  double margin = std::numeric_limits<double>::infinity();
  std::size_t index = std::numeric_limits<std::size_t>::max();
};

Worst scan_range(std::span<const Complex> points, std::size_t begin, std::size_t end,
                 const std::function<double(Complex)>& margin) {
  Worst worst;
  for (std::size_t i = begin; i < end; ++i) {
    const double m = margin(points[i]);
    // NaN margins count as failures.
    const double value = std::isnan(m) ? -std::numeric_limits<double>::infinity() : m;
    if (value < worst.margin || worst.index == std::numeric_limits<std::size_t>::max()) {
      worst = {value, i};
    }
  }
  return worst;
}

}  // namespace

GridSpec GridSpec::default_grid() { return {{0.1, 0.3, 0.5, 0.7, 0.9, 0.97, 0.995}, 128, 1e-3}; }

void GridSpec::validate() const {
  if (radii.empty()) throw std::invalid_argument("grid: no radii");
  for (double r : radii) {
    if (!(r > 0.0 && r <= 0.999)) throw std::invalid_argument("grid: radii must lie in (0, 0.999]");
  }
  if (angles_per_ring == 0) throw std::invalid_argument("grid: angles_per_ring must be positive");
  if (!(exclusion_radius >= 0.0)) throw std::invalid_argument("grid: exclusion_radius must be nonnegative");
}

std::vector<Complex> GridSpec::points() const {
  validate();
  std::vector<Complex> out;
  out.reserve(radii.size() * angles_per_ring);
  for (double r : radii) {
    for (std::size_t k = 0; k < angles_per_ring; ++k) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                          static_cast<double>(angles_per_ring));
      if (std::abs(z - 1.0) < exclusion_radius) continue;
      out.push_back(z);
    }
  }
  return out;
}

std::size_t scan_threads() {
  static const std::size_t threads = [] {
    const char* env = std::getenv("SPIRALKIT_THREADS");
    if (env == nullptr) return std::size_t{1};
    const long value = std::strtol(env, nullptr, 10);
    return value > 0 ? static_cast<std::size_t>(value) : std::size_t{1};
  }();
  return threads;
}

VerificationReport scan_margin(std::string name, std::span<const Complex> points, double tolerance,
                               const std::function<double(Complex)>& margin) {
  VerificationReport report;
  report.check_name = std::move(name);
  report.tolerance = tolerance;
  report.samples = points.size();
  if (points.empty()) {
    report.passed = true;
    report.worst_margin = std::numeric_limits<double>::infinity();
    return report;
  }

  const std::size_t threads = std::min(scan_threads(), points.size());
  Worst worst;
  if (threads <= 1) {
    worst = scan_range(points, 0, points.size(), margin);
  } else {
    std::vector<Worst> partial(threads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (points.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(points.size(), begin + chunk);
      pool.emplace_back([&, t, begin, end] {
        if (begin < end) partial[t] = scan_range(points, begin, end, margin);
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : partial) {
      if (p.index == std::numeric_limits<std::size_t>::max()) continue;
      if (p.margin < worst.margin || (p.margin == worst.margin && p.index < worst.index) ||
          worst.index == std::numeric_limits<std::size_t>::max()) {
        worst = p;
      }
    }
  }
  report.worst_margin = worst.margin;
  report.worst_location = points[worst.index];
  report.passed = worst.margin >= -tolerance;
  return report;
}

double class_margin(const ProductForm& f, const ClassParams& params, Complex z) {
  if (z == Complex{1.0, 0.0}) throw std::domain_error("class_margin: z = 1");
  const Complex expr = (2.0 / params.mu()) * z * log_derivative(f, z) + (1.0 + z) / (1.0 - z);
  return expr.real() - params.beta();
}

VerificationReport check_membership(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                    double tolerance) {
  const auto points = grid.points();
  return scan_margin("membership", points, tolerance, [&](Complex z) { return class_margin(f, params, z); });
}

Complex distortion_log(const ProductForm& f, const ClassParams& params, Complex z) {
  return log_principal(1.0 - z) - eval_log_f(f, z) / params.mu();
}

Complex distortion_lambda(const ProductForm& f, const ClassParams& params, Complex z) {
  if (z == Complex{0.0, 0.0}) throw std::domain_error("distortion_lambda: undefined at z = 0");
  const Complex q = distortion_log(f, params, z);
  return (std::exp(q / (1.0 - params.beta())) - 1.0) / z;
}

DerivativeDisk derivative_functional(const ProductForm& f, const ClassParams& params, Complex z) {
  const double shrink = 1.0 - std::norm(z);
  const double beta = params.beta();
  return {log_derivative(f, z) / params.mu() + 1.0 / (1.0 - z), (1.0 - beta) * std::conj(z) / shrink,
          (1.0 - beta) / shrink};
}

std::pair<double, double> f_modulus_bounds(const ClassParams& params, Complex z) {
  if (!params.real_mu()) throw std::invalid_argument("f_modulus_bounds: mu must be real");
  const double mu = params.mu().real();
  const double r = std::abs(z);
  const double top = std::pow(std::abs(1.0 - z), mu);
  const double power = mu * (1.0 - params.beta());
  return {top / std::pow(1.0 + r, power), top / std::pow(1.0 - r, power)};
}

ModulusArgBounds modulus_arg_bounds(const ClassParams& params, Complex z) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw std::domain_error("modulus_arg_bounds: point outside the open unit disk");
  const double power = 1.0 - params.beta();
  ModulusArgBounds bounds{std::pow(1.0 - r, power), std::pow(1.0 + r, power), power * std::asin(r),
                          std::nullopt, std::nullopt};
  if (params.real_mu()) {
    const auto [lo, hi] = f_modulus_bounds(params, z);
    bounds.f_lo = lo;
    bounds.f_hi = hi;
  }
  return bounds;
}

DerivativeBounds derivative_bounds(const ClassParams& params, Complex z) {
  if (!params.real_mu() || !(params.mu().real() > 0.0 && params.mu().real() <= 2.0)) {
    throw std::invalid_argument("derivative_bounds: mu must be real in (0, 2]");
  }
  const double r = std::abs(z);
  if (!(r < 1.0)) throw std::domain_error("derivative_bounds: point outside the open unit disk");
  const double mu = params.mu().real();
  const double beta = params.beta();
  const double shrink = 1.0 - r * r;
  const double top = mu * std::pow(std::abs(1.0 - z), mu);
  const double power = mu * (1.0 - beta);
  const double bracket = std::abs((1.0 - std::conj(z)) / (1.0 - z) + beta * std::conj(z));

  DerivativeBounds bounds{};
  bounds.lower_raw = top / (shrink * std::pow(1.0 + r, power)) * (bracket - 1.0 + beta);
  bounds.lower = std::max(0.0, bounds.lower_raw);
  bounds.upper = top / (shrink * std::pow(1.0 - r, power)) * (bracket + 1.0 - beta);
  bounds.simple_upper = 2.0 * top / (shrink * std::pow(1.0 - r, power));
  return bounds;
}

Complex schwarz_omega(const ProductForm& f, const ClassParams& params, Complex z) {
  const Complex inner = eval_log_f(f, z) - params.mu() * log_principal(1.0 - z);
  return 1.0 - std::exp(-inner / (params.mu() * (1.0 - params.beta())));
}

InteriorSpirallike::InteriorSpirallike(ProductForm f, ClassParams params)
    : f_(std::move(f)), params_(params), phi_(std::arg(params.mu())) {
  order_ = std::cos(phi_) - std::abs(params.mu()) * (1.0 - params.beta()) / 2.0;
  if (order_ < -ClassParams::kOmegaSlack) {
    throw std::invalid_argument("interior spirallike: negative order, mu outside Omega");
  }
}

Complex InteriorSpirallike::log_ratio(Complex z) const {
  return eval_log_f(f_, z) - params_.mu() * log_principal(1.0 - z);
}

Complex InteriorSpirallike::value(Complex z) const { return z * std::exp(log_ratio(z)); }

Complex InteriorSpirallike::log_derivative_ratio(Complex z) const {
  return 1.0 + z * log_derivative(f_, z) + params_.mu() * z / (1.0 - z);
}

double InteriorSpirallike::margin(Complex z) const {
  return (std::polar(1.0, -phi_) * log_derivative_ratio(z)).real() - order_;
}

InteriorSpirallike to_interior_spirallike(const ProductForm& f, const ClassParams& params) {
  return InteriorSpirallike(f, params);
}

double growth_inequality(const ProductForm& f, const ClassParams& params, Complex z, double t) {
  const double phi = std::arg(params.mu());
  const double limit = 2.0 * std::cos(phi);
  if (!(t > 0.0 && t < limit)) throw std::invalid_argument("growth_inequality: t outside (0, 2 cos phi)");
  const Complex shifted = z * (1.0 - std::polar(t, -phi));
  if (!(std::abs(shifted) < 1.0)) throw std::domain_error("growth_inequality: shifted point leaves the disk");

  const double lhs = std::exp((eval_log_f(f, shifted) - eval_log_f(f, z)).real());
  const Complex ratio_log = params.mu() * (log_principal(1.0 - shifted) - log_principal(1.0 - z));
  const double rhs = std::exp(ratio_log.real()) *
                     std::pow(1.0 - t / limit, -params.mu().real() * (1.0 - params.beta()));
  return rhs - lhs;
}

VerificationReport check_distortion(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                    double tolerance) {
  const auto points = grid.points();
  return scan_margin("distortion_lambda", points, tolerance,
                     [&](Complex z) { return 1.0 - std::abs(distortion_lambda(f, params, z)); });
}

VerificationReport check_union_identity(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                        double tolerance) {
  const auto points = grid.points();
  return scan_margin("union_identity", points, tolerance, [&](Complex z) {
    const Complex q = distortion_log(f, params, z);
    return 1.0 - std::abs(std::exp(q / (1.0 - params.beta())) - 1.0);
  });
}

VerificationReport check_derivative_disk(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                         double tolerance) {
  const auto points = grid.points();
  return scan_margin("derivative_disk", points, tolerance, [&](Complex z) {
    const auto disk = derivative_functional(f, params, z);
    return disk.radius - std::abs(disk.value - disk.center);
  });
}

VerificationReport check_modulus_bounds(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                        double tolerance) {
  const auto points = grid.points();
  return scan_margin("modulus_bounds", points, tolerance, [&](Complex z) {
    const auto bounds = modulus_arg_bounds(params, z);
    const double modulus = std::exp(distortion_log(f, params, z).real());
    return std::min(modulus - bounds.mod_lo, bounds.mod_hi - modulus);
  });
}

VerificationReport check_arg_bound(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                   double tolerance) {
  const auto points = grid.points();
  return scan_margin("arg_bound", points, tolerance, [&](Complex z) {
    return modulus_arg_bounds(params, z).arg_cap - std::abs(distortion_log(f, params, z).imag());
  });
}

VerificationReport check_f_bounds(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                  double tolerance) {
  if (!params.real_mu()) throw std::invalid_argument("check_f_bounds: mu must be real");
  const auto points = grid.points();
  return scan_margin("f_bounds", points, tolerance, [&](Complex z) {
    const auto [lo, hi] = f_modulus_bounds(params, z);
    const double modulus = std::abs(eval(f, z));
    return std::min(modulus - lo, hi - modulus);
  });
}

VerificationReport check_derivative_bounds(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                           double tolerance) {
  const auto points = grid.points();
  return scan_margin("derivative_bounds", points, tolerance, [&](Complex z) {
    const auto bounds = derivative_bounds(params, z);
    const double derivative = std::abs(eval(f, z) * log_derivative(f, z));
    return std::min({derivative - bounds.lower, bounds.upper - derivative, bounds.simple_upper - bounds.upper});
  });
}

VerificationReport check_schwarz(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                 double tolerance) {
  const auto points = grid.points();
  return scan_margin("schwarz_omega", points, tolerance,
                     [&](Complex z) { return std::abs(z) - std::abs(schwarz_omega(f, params, z)); });
}

VerificationReport check_interior_identity(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                           double tolerance) {
  const auto points = grid.points();
  const InteriorSpirallike s(f, params);
  const double half_modulus = std::abs(params.mu()) / 2.0;
  return scan_margin("interior_identity", points, tolerance, [&](Complex z) {
    return -std::abs(s.margin(z) - half_modulus * class_margin(f, params, z));
  });
}

VerificationReport check_growth(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                std::size_t t_samples, double tolerance) {
  const auto points = grid.points();
  const double phi = std::arg(params.mu());
  const double limit = 2.0 * std::cos(phi);
  const Complex rotation = std::polar(1.0, -phi);
  auto report = scan_margin("growth_inequality", points, tolerance, [&](Complex z) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= t_samples; ++k) {
      const double t = limit * static_cast<double>(k) / static_cast<double>(t_samples + 1);
      if (!(std::abs(z * (1.0 - t * rotation)) < 0.999)) continue;
      worst = std::min(worst, growth_inequality(f, params, z, t));
    }
    return worst;
  });
  // Recount evaluated (z, t) pairs; scan_margin only knows about grid points.
  std::size_t pairs = 0;
  for (Complex z : points) {
    for (std::size_t k = 1; k <= t_samples; ++k) {
      const double t = limit * static_cast<double>(k) / static_cast<double>(t_samples + 1);
      if (std::abs(z * (1.0 - t * rotation)) < 0.999) ++pairs;
    }
  }
  report.samples = pairs;
  return report;
}

std::vector<VerificationReport> run_all_checks(const ProductForm& f, const ClassParams& params,
                                               const GridSpec& grid) {
  std::vector<VerificationReport> reports{
      check_membership(f, params, grid),      check_distortion(f, params, grid),
      check_union_identity(f, params, grid),  check_derivative_disk(f, params, grid),
      check_modulus_bounds(f, params, grid),  check_arg_bound(f, params, grid),
      check_schwarz(f, params, grid),         check_interior_identity(f, params, grid),
      check_growth(f, params, grid),
  };
  if (params.real_mu()) {
    reports.push_back(check_f_bounds(f, params, grid));
    if (params.mu().real() <= 2.0) reports.push_back(check_derivative_bounds(f, params, grid));
  }
  return reports;
}

}  // namespace spiralkit

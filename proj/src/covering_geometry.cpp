#include "spiralkit/covering_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace spiralkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxTurn = 0.2;
constexpr double kWindingGuard = 1e-12;

double segment_distance(Complex a, Complex b, Complex w) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  double t = len2 > 0.0 ? ((w - a) * std::conj(ab)).real() / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(w - (a + t * ab));
}

double turning_angle(Complex prev, Complex cur, Complex next) {
  const Complex in = cur - prev;
  const Complex out = next - cur;
  if (in == Complex{} || out == Complex{}) return kPi;
  return std::abs(std::arg(out / in));
}

}  // namespace

PolyLine::PolyLine(std::vector<Complex> points, bool closed) : points_(std::move(points)), closed_(closed) {
  if (points_.size() < 2) throw std::invalid_argument("polyline: need at least two points");
  if (closed_ && points_.size() < kMinClosedPoints) {
    throw std::invalid_argument("polyline: closed curves need at least 16 points");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!is_finite(points_[i])) throw std::invalid_argument("polyline: non-finite point");
    if (i + 1 < points_.size() && points_[i] == points_[i + 1]) {
      throw std::invalid_argument("polyline: consecutive points coincide");
    }
  }
  if (closed_ && points_.front() == points_.back()) {
    throw std::invalid_argument("polyline: closing point duplicates the first point");
  }
}

double PolyLine::diameter() const {
  double lo_x = points_[0].real(), hi_x = lo_x, lo_y = points_[0].imag(), hi_y = lo_y;
  for (Complex p : points_) {
    lo_x = std::min(lo_x, p.real());
    hi_x = std::max(hi_x, p.real());
    lo_y = std::min(lo_y, p.imag());
    hi_y = std::max(hi_y, p.imag());
  }
  return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

PolyLine PolyLine::reversed() const {
  return PolyLine(std::vector<Complex>(points_.rbegin(), points_.rend()), closed_);
}

PolyLine PolyLine::rotated(std::size_t shift) const {
  std::vector<Complex> out(points_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
  return PolyLine(std::move(out), closed_);
}

Disk::Disk(Complex center_, double radius_) : center(center_), radius(radius_) {
  if (!(radius >= 0.0)) throw std::invalid_argument("disk: negative radius");
}

PolyLine boundary_curve(const ComplexMap& map, double rho, const CurveOptions& options) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("boundary_curve: rho must lie in (0, 1)");
  const std::size_t n = options.initial_samples;
  if (n < 64) throw std::invalid_argument("boundary_curve: need at least 64 initial samples");
  if (!(options.refine_tol > 0.0)) throw std::invalid_argument("boundary_curve: refine_tol must be positive");

  struct Sample {
    double theta;
    Complex w;
  };
  std::vector<Sample> samples;
  samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    samples.push_back({theta, map(std::polar(rho, theta))});
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (samples[k].w == samples[(k + 1) % n].w) {
      throw std::invalid_argument("boundary_curve: degenerate image (consecutive samples coincide)");
    }
  }

  const std::size_t cap = 16 * n;
  while (samples.size() < cap) {
    const std::size_t count = samples.size();
    std::vector<double> turn(count);
    for (std::size_t i = 0; i < count; ++i) {
      turn[i] = turning_angle(samples[(i + count - 1) % count].w, samples[i].w, samples[(i + 1) % count].w);
    }

    std::vector<Sample> refined;
    refined.reserve(std::min(cap, 2 * count));
    std::size_t budget = cap - count;
    bool split_any = false;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = (i + 1) % count;
      refined.push_back(samples[i]);
      const double theta_next = j == 0 ? samples[j].theta + 2.0 * kPi : samples[j].theta;
      if (budget == 0 || theta_next - samples[i].theta < 1e-12) continue;

      const double chord = std::abs(samples[j].w - samples[i].w);
      const double scale = std::max(std::abs(samples[i].w), std::abs(samples[j].w));
      if (chord > options.refine_tol * scale || turn[i] > kMaxTurn || turn[j] > kMaxTurn) {
        const double theta = 0.5 * (samples[i].theta + theta_next);
        refined.push_back({theta, map(std::polar(rho, theta))});
        --budget;
        split_any = true;
      }
    }
    samples = std::move(refined);
    if (!split_any) break;
  }

  std::vector<Complex> points;
  points.reserve(samples.size());
  for (const auto& s : samples) points.push_back(s.w);
  return PolyLine(std::move(points), true);
}

PolyLine boundary_curve(const ProductForm& f, double rho, const CurveOptions& options) {
  return boundary_curve([&f](Complex z) { return eval(f, z); }, rho, options);
}

WindingQuery winding_query(const PolyLine& poly, Complex w) {
  if (!poly.closed()) throw std::invalid_argument("winding_number: polyline is not closed");
  const auto points = poly.points();
  const std::size_t count = points.size();
  double total = 0.0;
  double distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i) {
    const Complex a = points[i];
    const Complex b = points[(i + 1) % count];
    distance = std::min(distance, segment_distance(a, b, w));
    const Complex turn = (b - w) * std::conj(a - w);
    total += std::atan2(turn.imag(), turn.real());
  }
  WindingQuery result{std::nullopt, distance};
  if (distance > kWindingGuard * poly.diameter()) {
    result.winding = static_cast<int>(std::lround(total / (2.0 * kPi)));
  }
  return result;
}

std::optional<int> winding_number(const PolyLine& poly, Complex w) { return winding_query(poly, w).winding; }

Containment contains_point(const PolyLine& boundary, Complex w) {
  const auto winding = winding_number(boundary, w);
  if (!winding) return Containment::indeterminate;
  return *winding == 1 ? Containment::inside : Containment::outside;
}

Containment contains_point(const ProductForm& f, Complex w, double rho, const CurveOptions& options) {
  return contains_point(boundary_curve(f, rho, options), w);
}

namespace {

VerificationReport containment_report(std::string name, const PolyLine& outer, std::span<const Complex> samples) {
  VerificationReport report;
  report.check_name = std::move(name);
  report.tolerance = 0.0;
  report.samples = samples.size();
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (Complex w : samples) {
    const auto query = winding_query(outer, w);
    double margin;
    if (!query.winding) {
      ++report.indeterminate;
      margin = -kWindingGuard * outer.diameter();
    } else {
      margin = *query.winding == 1 ? query.distance : -query.distance;
    }
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_location = w;
    }
  }
  report.passed = report.indeterminate == 0 && report.worst_margin >= -report.tolerance;
  return report;
}

}  // namespace

VerificationReport check_covering(const ProductForm& f, const ClassParams& params, double r_inner,
                                  double rho_outer, std::size_t m, const CurveOptions& options) {
  if (!(r_inner > 0.0 && r_inner < rho_outer && rho_outer < 1.0)) {
    throw std::invalid_argument("check_covering: need 0 < r_inner < rho_outer < 1");
  }
  if (m == 0) throw std::invalid_argument("check_covering: need at least one sample");
  const PolyLine outer = boundary_curve(f, rho_outer, options);
  const ProductForm f0 = covering_function(params);
  std::vector<Complex> samples;
  samples.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    samples.push_back(eval(f0, std::polar(r_inner, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m))));
  }
  return containment_report("covering", outer, samples);
}

double covering_radius(double s) {
  if (!(s > 0.0 && s <= 2.0)) throw std::invalid_argument("covering_radius: s must lie in (0, 2]");
  return s <= 1.0 ? std::exp2(s) - 1.0 : 1.0;
}

double a_s_profile(double s, double t) {
  if (!(s > 0.0 && s <= 2.0)) throw std::invalid_argument("a_s_profile: s must lie in (0, 2]");
  if (!(std::abs(t) <= kPi)) throw std::invalid_argument("a_s_profile: t must lie in [-pi, pi]");
  const double base = 2.0 * std::cos(t / 2.0);
  if (std::abs(t) == kPi || base <= 0.0) return 1.0;
  const double power = std::pow(base, s);
  return power * power + 1.0 - 2.0 * power * std::cos(s * t / 2.0);
}

ScalarMinimum minimize_a_s(double s) {
  if (!(s > 0.0 && s <= 2.0)) throw std::invalid_argument("minimize_a_s: s must lie in (0, 2]");
  return golden_section_minimize([s](double t) { return a_s_profile(s, t); }, 0.0, kPi - 1e-9, 1e-10);
}

std::pair<PolyLine, PolyLine> wedge_spirals(Complex nu, double a, double t_lo, double t_hi, std::size_t n) {
  if (!in_omega(nu)) throw std::invalid_argument("wedge_spirals: nu outside Omega");
  if (!(std::abs(a) < kPi / 2)) throw std::invalid_argument("wedge_spirals: need |a| < pi/2");
  if (!(t_lo < t_hi)) throw std::invalid_argument("wedge_spirals: empty parameter range");
  if (n < 2) throw std::invalid_argument("wedge_spirals: need at least two samples");

  const Complex i{0.0, 1.0};
  const Complex w_plus = std::exp(i * nu * (a + kPi / 2));
  const Complex w_minus = std::exp(i * nu * (a - kPi / 2));
  std::vector<Complex> upper, lower;
  upper.reserve(n);
  lower.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = t_lo + (t_hi - t_lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    const Complex scale = std::exp(-nu * t);
    upper.push_back(scale * w_plus);
    lower.push_back(scale * w_minus);
  }
  return {PolyLine(std::move(upper), false), PolyLine(std::move(lower), false)};
}

double wedge_offset(const ProductForm& f, Complex nu, double a, Complex z) {
  return (eval_log_f(f, z) / nu).imag() - a;
}

VerificationReport check_wedge_containment(const ProductForm& f, Complex nu, double a, double rho,
                                           std::size_t n) {
  std::vector<Complex> points;
  points.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    points.push_back(std::polar(rho, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n)));
  }
  return scan_margin("wedge_containment", points, kMarginTolerance,
                     [&](Complex z) { return kPi / 2 - std::abs(wedge_offset(f, nu, a, z)); });
}

CoveringComposition::CoveringComposition(InteriorSpirallike s, double phi, double alpha, double beta)
    : s_(std::move(s)), beta_(beta) {
  if (!(std::abs(phi) < kPi / 2)) throw std::invalid_argument("covering_composition: phi outside (-pi/2, pi/2)");
  const double cos_phi = std::cos(phi);
  if (!(alpha < cos_phi)) throw std::invalid_argument("covering_composition: need alpha < cos phi");
  if (!(beta > 0.0 && beta <= alpha / cos_phi)) {
    throw std::invalid_argument("covering_composition: need beta in (0, alpha/cos phi]");
  }
  if (std::abs(s_.phi() - phi) > 1e-12) {
    throw std::invalid_argument("covering_composition: s is spirallike for a different angle");
  }
  if (alpha > s_.order() + 1e-12) {
    throw std::invalid_argument("covering_composition: s is not spirallike of order alpha");
  }
  mu_ = std::polar(2.0 * (cos_phi - alpha) / (1.0 - beta), phi);
}

Complex CoveringComposition::value(Complex z) const {
  return 1.0 - std::exp(log_principal(1.0 - z) / beta_ + s_.log_ratio(z) / (mu_ * beta_));
}

Complex CoveringComposition::log_backing(Complex z) const {
  return mu_ * log_principal(1.0 - z) + s_.log_ratio(z);
}

Complex CoveringComposition::half_plane(Complex z) const {
  const Complex u = 1.0 - value(z);
  return u / (2.0 - u);
}

VerificationReport check_disk_coverage(const CoveringComposition& g, double rho, std::size_t m,
                                       double sample_radius, const CurveOptions& options) {
  if (!(sample_radius > 0.0 && sample_radius < 1.0)) {
    throw std::invalid_argument("check_disk_coverage: sample_radius must lie in (0, 1)");
  }
  const PolyLine outer = boundary_curve([&g](Complex z) { return g.log_backing(z); }, rho, options);
  const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
  const Complex scale = g.mu() * g.beta();
  std::vector<Complex> samples;
  samples.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double radius = sample_radius * std::sqrt((static_cast<double>(k) + 0.5) / static_cast<double>(m));
    samples.push_back(scale * log_principal(1.0 - std::polar(radius, golden_angle * static_cast<double>(k))));
  }
  return containment_report("disk_coverage", outer, samples);
}

CompositionResult covering_composition(const InteriorSpirallike& s, double phi, double alpha, double beta,
                                       double rho, std::size_t m) {
  CoveringComposition map(s, phi, alpha, beta);
  auto report = check_disk_coverage(map, rho, m);
  return {std::move(map), std::move(report)};
}

}  // namespace spiralkit

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "spiralkit/complex_kernel.hpp"
#include "spiralkit/covering_geometry.hpp"

using namespace spiralkit;

namespace {

constexpr double kPi = std::numbers::pi;

PolyLine regular_polygon(std::size_t n, double radius = 1.0) {
  std::vector<Complex> points;
  for (std::size_t k = 0; k < n; ++k) points.push_back(std::polar(radius, 2 * kPi * k / n));
  return PolyLine(points, true);
}

/// x = sin t, y = sin t cos t; the left lobe is traversed counterclockwise.
PolyLine figure_eight(std::size_t n) {
  std::vector<Complex> points;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2 * kPi * k / n;
    points.push_back({std::sin(t), std::sin(t) * std::cos(t)});
  }
  return PolyLine(points, true);
}

/// Even-odd ray casting along +x; independent of the angle-sum winding code.
bool ray_cast_inside(const PolyLine& poly, Complex w) {
  const auto pts = poly.points();
  bool inside = false;
  for (std::size_t i = 0, j = pts.size() - 1; i < pts.size(); j = i++) {
    const Complex a = pts[i], b = pts[j];
    if ((a.imag() > w.imag()) != (b.imag() > w.imag())) {
      const double x = a.real() + (w.imag() - a.imag()) / (b.imag() - a.imag()) * (b.real() - a.real());
      if (w.real() < x) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

TEST_CASE("polyline validation") {
  CHECK_THROWS_AS(PolyLine({0.0, 1.0, 2.0}, true), std::invalid_argument);
  CHECK_NOTHROW(PolyLine({0.0, 1.0}, false));
  std::vector<Complex> repeated(16, 0.0);
  for (std::size_t k = 0; k < 16; ++k) repeated[k] = std::polar(1.0, 2 * kPi * k / 16);
  repeated[5] = repeated[4];
  CHECK_THROWS_AS(PolyLine(repeated, true), std::invalid_argument);
  auto closing = regular_polygon(16).points();
  std::vector<Complex> with_duplicate(closing.begin(), closing.end());
  with_duplicate.push_back(with_duplicate.front());
  CHECK_THROWS_AS(PolyLine(with_duplicate, true), std::invalid_argument);
  CHECK(regular_polygon(256).diameter() == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-3));
}

TEST_CASE("winding_number examples") {
  const auto gon = regular_polygon(256);
  CHECK(winding_number(gon, 0.0) == 1);
  CHECK(winding_number(gon, 2.0) == 0);
  CHECK(winding_number(gon.reversed(), 0.0) == -1);
  CHECK_FALSE(winding_number(gon, 1.0).has_value());
  CHECK_FALSE(winding_query(gon, 1.0).winding.has_value());

  const auto eight = figure_eight(512);
  CHECK(winding_number(eight, -0.5) == 1);
  CHECK(winding_number(eight, 0.5) == -1);
  CHECK(winding_number(eight, Complex{0.0, 0.8}) == 0);
  CHECK(winding_number(eight.reversed(), -0.5) == -1);
}

TEST_CASE("property: winding number is invariant under rotation and negates under reversal") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(-1.5, 1.5);
  const auto eight = figure_eight(300);
  const auto curve = boundary_curve(fixtures::figure_example(), 0.99);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex w{unit(rng), unit(rng)};
    for (const PolyLine* poly : {&eight, &curve}) {
      const auto base = winding_number(*poly, w);
      REQUIRE(base.has_value());
      const std::size_t shift = static_cast<std::size_t>(trial * 37) % poly->size();
      CHECK(winding_number(poly->rotated(shift), w) == base);
      CHECK(winding_number(poly->reversed(), w) == -*base);
    }
  }
}

TEST_CASE("property: winding agrees with even-odd ray casting on Jordan image curves") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const auto& member : sample_population(6, 31)) {
    const auto curve = boundary_curve(member.f, 0.95);
    const Complex center = eval(member.f, 0.0);
    const double spread = curve.diameter();
    for (int trial = 0; trial < 100; ++trial) {
      const Complex w = center + spread * Complex{unit(rng) - 0.5, unit(rng) - 0.5};
      const auto winding = winding_number(curve, w);
      if (!winding) continue;
      CHECK(std::abs(*winding) == (ray_cast_inside(curve, w) ? 1 : 0));
    }
  }
}

TEST_CASE("boundary_curve examples") {
  CHECK_THROWS_AS(boundary_curve(ProductForm(0.0), 0.9), std::invalid_argument);
  CHECK_THROWS(boundary_curve(ProductForm(0.6), 1.0));
  CHECK_THROWS_AS(boundary_curve(ProductForm(0.6), 0.9, CurveOptions{32, 0.02}), std::invalid_argument);

  const auto f0 = boundary_curve(ProductForm(0.6), 0.9);
  CHECK(f0.closed());
  CHECK(f0.size() >= 1024);
  CHECK(f0.size() <= 16 * 1024);
  for (Complex w : f0.points()) {
    CHECK(std::abs(w) >= std::pow(0.1, 0.6) - 1e-12);
    CHECK(std::abs(w) <= std::pow(1.9, 0.6) + 1e-12);
  }

  const auto h = boundary_curve(canonical_wedge(1.0, 0.0), 0.99);
  for (Complex w : h.points()) CHECK(w.real() > 0.0);

  // refinement resolves the corner of the image near z = 1
  const auto sharp = boundary_curve(ProductForm(0.6), 0.999, CurveOptions{64, 0.02});
  CHECK(sharp.size() > 64);
  CHECK(sharp.size() <= 16 * 64);
}

TEST_CASE("boundary_curve of the figure example is positively oriented around f(0)") {
  const auto curve = boundary_curve(fixtures::figure_example(), 0.999);
  CHECK(winding_number(curve, 1.0) == 1);
}

TEST_CASE("contains_point examples") {
  const auto example = fixtures::figure_example();
  for (double rho : {0.3, 0.9, 0.999}) CHECK(contains_point(example, 1.0, rho) == Containment::inside);
  CHECK(contains_point(ProductForm(0.6), 11.0, 0.99) == Containment::outside);
  CHECK(contains_point(example, std::pow(0.5, 0.6), 0.999) == Containment::inside);

  const auto gon = regular_polygon(64);
  CHECK(contains_point(gon, gon.points()[3]) == Containment::indeterminate);
}

TEST_CASE("check_covering examples") {
  const ClassParams params = fixtures::figure_params();
  const auto self = check_covering(covering_function(params), params, 0.9, 0.99, 256);
  CHECK(self.passed);
  CHECK(self.indeterminate == 0);
  CHECK(self.samples == 256);
  CHECK(self.worst_margin > 0.0);

  const auto start = std::chrono::steady_clock::now();
  const auto figure = check_covering(fixtures::figure_example(), params, 0.95, 0.999, 512);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(figure.passed);
  CHECK(figure.indeterminate == 0);
  CHECK(seconds < 5.0);

  for (const ClassParams& p : {ClassParams(1.0, 0.5), ClassParams(1.8, 0.2), ClassParams(Complex{0.8, 0.6}, 0.4)}) {
    const auto report = check_covering(extremal(p, -1.0), p, 0.9, 0.99, 256);
    INFO(report.worst_margin);
    CHECK(report.passed);
  }

  CHECK_THROWS_AS(check_covering(covering_function(params), params, 0.99, 0.9, 16), std::invalid_argument);
}

TEST_CASE("covering radius examples") {
  CHECK(covering_radius(1.0) == doctest::Approx(1.0));
  CHECK(covering_radius(0.5) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
  CHECK(covering_radius(0.5) == doctest::Approx(0.414214).epsilon(1e-6));
  CHECK(covering_radius(1.7) == 1.0);
  CHECK_THROWS_AS(covering_radius(0.0), std::invalid_argument);
  CHECK_THROWS_AS(covering_radius(2.1), std::invalid_argument);
}

TEST_CASE("a_s profile examples") {
  for (double s : {0.25, 0.5, 1.0, 1.5, 2.0}) {
    CHECK(a_s_profile(s, 0.0) == doctest::Approx(std::pow(std::pow(2.0, s) - 1.0, 2)).epsilon(1e-14));
  }
  CHECK(a_s_profile(0.5, kPi) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a_s_profile(0.5, kPi - 1e-9) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK_THROWS_AS(a_s_profile(0.5, 3.5), std::invalid_argument);
}

TEST_CASE("property: a_s profile is even and matches the modulus definition") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double s = 2.0 * (1.0 - unit(rng));
    const double t = (kPi - 1e-6) * (2.0 * unit(rng) - 1.0);
    CHECK(a_s_profile(s, t) == doctest::Approx(a_s_profile(s, -t)).epsilon(1e-12));
    const Complex base = 1.0 + std::polar(1.0, t);
    const double oracle = std::norm(pow_principal(base, s) - 1.0);
    CHECK(a_s_profile(s, t) == doctest::Approx(oracle).epsilon(1e-10));
  }
}

TEST_CASE("minimize_a_s examples") {
  const auto half = minimize_a_s(0.5);
  CHECK(half.value == doctest::Approx(0.171573).epsilon(1e-6));
  CHECK(std::sqrt(half.value) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-8));
  CHECK(half.argmin < 1e-6);

  const auto high = minimize_a_s(1.5);
  CHECK(high.value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(high.argmin > kPi - 1e-6);

  CHECK(minimize_a_s(1.0).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("property: numeric minimum reproduces the covering radius") {
  for (int k = 1; k <= 64; ++k) {
    const double s = 2.0 * k / 64.0;
    INFO("s = " << s);
    CHECK(std::abs(std::sqrt(minimize_a_s(s).value) - covering_radius(s)) <= 1e-8);
    CHECK(covering_radius(s) >= s / 4);
  }
}

TEST_CASE("wedge_spirals examples") {
  const auto [upper, lower] = wedge_spirals(1.0, 0.0, 0.0, 3.0, 31);
  CHECK_FALSE(upper.closed());
  CHECK(upper.size() == 31);
  CHECK(std::abs(upper.points()[0] - Complex{0, 1}) <= 1e-15);
  CHECK(std::abs(lower.points()[0] - Complex{0, -1}) <= 1e-15);
  CHECK(std::abs(upper.points()[30] - Complex{0, std::exp(-3.0)}) <= 1e-15);
  for (Complex w : upper.points()) CHECK(std::arg(w) == doctest::Approx(kPi / 2));

  const auto [ray_up, ray_down] = wedge_spirals(1.4, 0.3, -2.0, 2.0, 50);
  const double arg_up = std::arg(ray_up.points()[0]), arg_down = std::arg(ray_down.points()[0]);
  for (std::size_t k = 0; k < 50; ++k) {
    CHECK(std::arg(ray_up.points()[k]) == doctest::Approx(arg_up).epsilon(1e-12));
    CHECK(std::arg(ray_down.points()[k]) == doctest::Approx(arg_down).epsilon(1e-12));
  }

  const auto [spiral, unused] = wedge_spirals(Complex{1.0, 0.5}, 0.0, 0.0, 4.0, 64);
  CHECK(std::abs(std::arg(spiral.points()[0]) - std::arg(spiral.points()[63])) > 0.1);

  CHECK_THROWS_AS(wedge_spirals(1.0, 0.0, 1.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(wedge_spirals(1.0, 2.0, 0.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(wedge_spirals(3.0, 0.0, 0.0, 1.0, 10), std::invalid_argument);
}

TEST_CASE("canonical wedge maps onto the wedge") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex nu = 1.0 + std::polar(unit(rng), 2 * kPi * unit(rng));
    const double a = (kPi / 2 - 1e-3) * (2 * unit(rng) - 1);
    const auto h = canonical_wedge(nu, a);
    CHECK(check_wedge_containment(h, nu, a, 0.999, 720).passed);
    // h^{1/nu} is the Moebius map (1-z)/(1 + e^{-2ia} z), whose image is the half-plane |arg - a| < pi/2
    for (int k = 0; k < 20; ++k) {
      const Complex z = std::polar(0.99 * unit(rng), 2 * kPi * unit(rng));
      const Complex moebius = (1.0 - z) / (1.0 + std::polar(1.0, -2 * a) * z);
      CHECK(wedge_offset(h, nu, a, z) == doctest::Approx(std::arg(moebius) - a).epsilon(1e-10));
    }
  }
}

TEST_CASE("property: population images lie inside their spiral wedge") {
  for (const auto& member : sample_population(30, 99)) {
    const Complex nu = compute_nu(member.f);
    const double a = compute_a(member.f, nu);
    for (double rho : {0.5, 0.9, 0.999}) {
      const auto report = check_wedge_containment(member.f, nu, a, rho, 512);
      INFO(report.worst_margin);
      CHECK(report.passed);
    }
  }
}

TEST_CASE("covering composition examples") {
  // s(z) = z/(1-z) arises from f = 1 - z in G(2, 1/2); then g(z) = z.
  const ClassParams params(2.0, 0.5);
  const auto s = to_interior_spirallike(covering_function(params), params);
  CHECK(s.order() == doctest::Approx(0.5));
  const CoveringComposition g(s, 0.0, 0.5, 0.5);
  CHECK(g.mu() == Complex{2.0, 0.0});
  for (Complex z : {Complex{0.3, 0.1}, Complex{-0.7, 0.2}, Complex{0.0, 0.9}}) {
    CHECK(std::abs(g.value(z) - z) <= 1e-12);
    CHECK(std::abs(g.half_plane(z) - (1.0 - z) / (1.0 + z)) <= 1e-12);
    CHECK(g.half_plane(z).real() > 0.0);
  }
  const auto result = covering_composition(s, 0.0, 0.5, 0.5);
  CHECK(result.report.passed);
  CHECK(result.report.samples == 256);

  CHECK_THROWS_AS(CoveringComposition(s, 0.0, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(CoveringComposition(s, 0.0, 0.5, 0.6), std::invalid_argument);
  CHECK_THROWS_AS(CoveringComposition(s, 0.0, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(CoveringComposition(s, 0.2, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(CoveringComposition(s, 0.0, 0.6, 0.5), std::invalid_argument);
}

TEST_CASE("property: compositions vanish at the origin and cover the disk") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  for (const auto& member : sample_population(40, 123)) {
    const auto s = to_interior_spirallike(member.f, member.params);
    const double cos_phi = std::cos(s.phi());
    if (s.order() < 0.05) continue;
    const double beta = (0.1 + 0.9 * unit(rng)) * s.order() / cos_phi;
    const auto result = covering_composition(s, s.phi(), s.order(), beta, 0.999, 64);
    CHECK(std::abs(result.map.value(0.0)) <= 1e-15);
    INFO(result.report.worst_margin);
    CHECK(result.report.passed);
    if (++checked == 6) break;
  }
  CHECK(checked > 0);
}

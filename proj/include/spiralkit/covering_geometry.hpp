#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spiralkit/golden_section.hpp"
#include "spiralkit/spiral_functions.hpp"
#include "spiralkit/verification.hpp"

namespace spiralkit {

/// Ordered curve sample in the image plane. Closed curves need at least 16
/// points; consecutive points (cyclically, when closed) must differ.
class PolyLine {
 public:
  static constexpr std::size_t kMinClosedPoints = 16;

  PolyLine(std::vector<Complex> points, bool closed);

  std::span<const Complex> points() const { return points_; }
  bool closed() const { return closed_; }
  std::size_t size() const { return points_.size(); }
  /// Diagonal of the bounding box.
  double diameter() const;

  PolyLine reversed() const;
  PolyLine rotated(std::size_t shift) const;

 private:
  std::vector<Complex> points_;
  bool closed_;
};

struct Disk {
  Complex center;
  double radius;

  Disk(Complex center_, double radius_);
  bool contains(Complex w) const { return std::abs(w - center) < radius; }
};

using ComplexMap = std::function<Complex(Complex)>;

struct CurveOptions {
  std::size_t initial_samples = 1024;
  double refine_tol = 0.02;
};

/// Image of the circle |z| = rho. Starts from n equally spaced angles and
/// bisects segments whose chord exceeds refine_tol * max(|w_a|, |w_b|) or
/// that touch a vertex turning by more than 0.2 rad, up to 16 n points.
PolyLine boundary_curve(const ComplexMap& map, double rho, const CurveOptions& options = {});
PolyLine boundary_curve(const ProductForm& f, double rho, const CurveOptions& options = {});

/// Winding number of a closed polyline around w, or nullopt when w lies
/// within 1e-12 * diameter of the curve.
std::optional<int> winding_number(const PolyLine& poly, Complex w);

/// Winding number together with the distance from w to the curve.
struct WindingQuery {
  std::optional<int> winding;
  double distance;
};
WindingQuery winding_query(const PolyLine& poly, Complex w);

enum class Containment { inside, outside, indeterminate };

Containment contains_point(const PolyLine& boundary, Complex w);
/// Membership of w in f(|z| < rho) by winding number of the image circle.
Containment contains_point(const ProductForm& f, Complex w, double rho, const CurveOptions& options = {});

/// Certifies f0(|z| <= r_inner) inside f(|z| < rho_outer) on m samples of
/// f0(|z| = r_inner), f0 = (1-z)^{mu beta}. Margins are signed distances to
/// the outer curve (negative outside); indeterminate samples fail the check.
VerificationReport check_covering(const ProductForm& f, const ClassParams& params, double r_inner,
                                  double rho_outer, std::size_t m, const CurveOptions& options = {});

/// Radius of the disk about 1 covered by every f with mu beta = s:
/// 2^s - 1 on (0, 1] and 1 on (1, 2].
double covering_radius(double s);

/// a_s(t) = |(1 + e^{it})^s - 1|^2 for t in [-pi, pi]; returns the limit 1 at t = +-pi.
double a_s_profile(double s, double t);

/// Golden-section minimum of a_s over [0, pi - 1e-9] at 1e-10 abscissa tolerance.
ScalarMinimum minimize_a_s(double s);

/// The two spirals e^{-nu t} exp(i nu (a +- pi/2)), t in [t_lo, t_hi].
std::pair<PolyLine, PolyLine> wedge_spirals(Complex nu, double a, double t_lo, double t_hi, std::size_t n);

/// Im(log f(z)/nu) - a: the angular position of f(z) inside the spiral wedge,
/// which is |.| < pi/2 exactly when f(z) lies strictly between the spirals.
double wedge_offset(const ProductForm& f, Complex nu, double a, Complex z);

/// pi/2 - |wedge_offset| over n angles of the circle |z| = rho.
VerificationReport check_wedge_containment(const ProductForm& f, Complex nu, double a, double rho,
                                           std::size_t n);

/// g(z) = 1 - (1-z)^{1/beta} (s(z)/z)^{1/(mu beta)} with
/// mu = e^{i phi} 2 (cos phi - alpha)/(1 - beta), built from canonical logs.
class CoveringComposition {
 public:
  CoveringComposition(InteriorSpirallike s, double phi, double alpha, double beta);

  Complex mu() const { return mu_; }
  double beta() const { return beta_; }
  Complex value(Complex z) const;
  /// Canonical log of f = s (1-z)^mu / z, so that g = 1 - exp(log_backing / (mu beta)).
  Complex log_backing(Complex z) const;
  /// (1-g)/(1+g) = u/(2-u) with u = 1 - g; covers the right half-plane.
  Complex half_plane(Complex z) const;

 private:
  InteriorSpirallike s_;
  Complex mu_;
  double beta_;
};

/// m points w of the disk |w| < sample_radius (sunflower layout) tested for
/// membership in g(|z| < rho). g need not be univalent, so the test runs in
/// the log coordinate: mu beta Log(1-w) inside log f(|z| < rho) gives a
/// preimage of w. Margins are distances in that coordinate.
VerificationReport check_disk_coverage(const CoveringComposition& g, double rho, std::size_t m,
                                       double sample_radius = 0.95, const CurveOptions& options = {});

struct CompositionResult {
  CoveringComposition map;
  VerificationReport report;
};

CompositionResult covering_composition(const InteriorSpirallike& s, double phi, double alpha, double beta,
                                       double rho = 0.999, std::size_t m = 256);

}  // namespace spiralkit

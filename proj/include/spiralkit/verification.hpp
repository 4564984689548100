#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spiralkit/spiral_functions.hpp"

namespace spiralkit {

inline constexpr double kMarginTolerance = 1e-9;

/// Polar sample grid of the open disk. Points within `exclusion_radius` of
/// z = 1 are skipped; the class inequality degenerates (favorably) there.
struct GridSpec {
  std::vector<double> radii;
  std::size_t angles_per_ring = 128;
  double exclusion_radius = 1e-3;

  /// radii {0.1, 0.3, 0.5, 0.7, 0.9, 0.97, 0.995}, 128 angles, 1e-3 exclusion.
  static GridSpec default_grid();

  void validate() const;
  std::vector<Complex> points() const;
};

struct VerificationReport {
  std::string check_name;
  bool passed = false;
  double worst_margin = 0.0;
  Complex worst_location{0.0, 0.0};
  double tolerance = kMarginTolerance;
  std::size_t samples = 0;
  std::size_t indeterminate = 0;  // containment checks only
};

/// Evaluates `margin` at every point and keeps the minimum; passed iff the
/// minimum is >= -tolerance. Ties resolve to the earliest point, so the
/// result does not depend on the thread count (SPIRALKIT_THREADS).
VerificationReport scan_margin(std::string name, std::span<const Complex> points, double tolerance,
                               const std::function<double(Complex)>& margin);

std::size_t scan_threads();

/// Re((2/mu) z f'/f + (1+z)/(1-z)) - beta.
double class_margin(const ProductForm& f, const ClassParams& params, Complex z);

VerificationReport check_membership(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                    double tolerance = kMarginTolerance);

/// lambda(z) with (1-z)/f(z)^{1/mu} = (1 + lambda z)^{1-beta}, via the
/// canonical log q = Log(1-z) - log f(z)/mu. |lambda| <= 1 on the class.
Complex distortion_lambda(const ProductForm& f, const ClassParams& params, Complex z);

/// Canonical log of (1-z)/f(z)^{1/mu}.
Complex distortion_log(const ProductForm& f, const ClassParams& params, Complex z);

struct DerivativeDisk {
  Complex value;   // f'/(mu f) + 1/(1-z)
  Complex center;  // (1-beta) conj(z)/(1-|z|^2)
  double radius;   // (1-beta)/(1-|z|^2)
};

DerivativeDisk derivative_functional(const ProductForm& f, const ClassParams& params, Complex z);

struct ModulusArgBounds {
  double mod_lo;
  double mod_hi;
  double arg_cap;
  std::optional<double> f_lo;  // present only for real mu
  std::optional<double> f_hi;
};

ModulusArgBounds modulus_arg_bounds(const ClassParams& params, Complex z);

/// |1-z|^mu / (1 +- |z|)^{mu(1-beta)}; throws std::invalid_argument for non-real mu.
std::pair<double, double> f_modulus_bounds(const ClassParams& params, Complex z);

struct DerivativeBounds {
  double lower;      // clamped at 0
  double lower_raw;
  double upper;
  double simple_upper;
};

/// Envelope for |f'(z)|; mu must be real in (0, 2].
DerivativeBounds derivative_bounds(const ClassParams& params, Complex z);

/// Schwarz function omega with f/(1-z)^mu = (1 - omega)^{-mu(1-beta)}.
Complex schwarz_omega(const ProductForm& f, const ClassParams& params, Complex z);

/// s(z) = z f(z)/(1-z)^mu, spirallike about the origin with angle phi = arg mu
/// and order cos(phi) - |mu|(1-beta)/2.
class InteriorSpirallike {
 public:
  InteriorSpirallike(ProductForm f, ClassParams params);

  double phi() const { return phi_; }
  double order() const { return order_; }
  const ProductForm& backing() const { return f_; }
  const ClassParams& params() const { return params_; }

  Complex value(Complex z) const;
  /// Canonical log of s(z)/z.
  Complex log_ratio(Complex z) const;
  /// z s'(z)/s(z) = 1 + z f'/f + mu z/(1-z).
  Complex log_derivative_ratio(Complex z) const;
  /// Re(e^{-i phi} z s'/s) - order.
  double margin(Complex z) const;

 private:
  ProductForm f_;
  ClassParams params_;
  double phi_;
  double order_;
};

InteriorSpirallike to_interior_spirallike(const ProductForm& f, const ClassParams& params);

/// RHS - LHS of
///   |f(z(1 - e^{-i phi} t))/f(z)| <= |((1 - z(1 - e^{-i phi} t))/(1-z))^mu| (1 - t/(2 cos phi))^{-Re mu (1-beta)}
/// for t in (0, 2 cos phi).
double growth_inequality(const ProductForm& f, const ClassParams& params, Complex z, double t);

// Grid checks built from the pointwise evaluators above.

VerificationReport check_distortion(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                    double tolerance = kMarginTolerance);
VerificationReport check_union_identity(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                        double tolerance = kMarginTolerance);
VerificationReport check_derivative_disk(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                         double tolerance = kMarginTolerance);
VerificationReport check_modulus_bounds(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                        double tolerance = kMarginTolerance);
VerificationReport check_arg_bound(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                   double tolerance = kMarginTolerance);
/// Requires real mu.
VerificationReport check_f_bounds(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                  double tolerance = kMarginTolerance);
/// Requires real mu in (0, 2].
VerificationReport check_derivative_bounds(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                           double tolerance = kMarginTolerance);
VerificationReport check_schwarz(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                 double tolerance = kMarginTolerance);
/// Margin relation Re(e^{-i phi} z s'/s) - order = (|mu|/2) * class_margin,
/// which is exact algebra; default tolerance 1e-12.
VerificationReport check_interior_identity(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                           double tolerance = 1e-12);
/// Samples t on `t_samples` interior points of (0, 2 cos phi) at each grid
/// point whose shifted point stays inside radius 0.999.
VerificationReport check_growth(const ProductForm& f, const ClassParams& params, const GridSpec& grid,
                                std::size_t t_samples = 32, double tolerance = kMarginTolerance);

/// Every report applicable to (f, params): membership, distortion, derivative
/// disk, modulus/argument bounds, Schwarz, interior identity, growth, plus the
/// real-mu bounds when mu is real (and in (0, 2] for the derivative bounds).
std::vector<VerificationReport> run_all_checks(const ProductForm& f, const ClassParams& params,
                                               const GridSpec& grid);

}  // namespace spiralkit

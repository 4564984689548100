#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spiralkit/complex_kernel.hpp"
#include "spiralkit/measures.hpp"

namespace spiralkit {

/// The pair (mu, beta) of a class G(mu, beta): mu in the closed disk
/// |mu - 1| <= 1 with 0 removed, beta in [0, 1).
class ClassParams {
 public:
  static constexpr double kOmegaSlack = 1e-12;

  ClassParams(Complex mu, double beta);

  Complex mu() const { return mu_; }
  double beta() const { return beta_; }
  bool real_mu() const;

 private:
  Complex mu_;
  double beta_;
};

bool in_omega(Complex mu);

struct Factor {
  Complex node;      // |node| <= 1
  Complex exponent;
};

/// log f(z) = prefactor * Log(1 - z) - sum_j exponent_j * Log(1 - node_j z).
///
/// Canonical on construction: factors whose node is 1 are folded into the
/// prefactor, factors sharing a node are merged, and zero exponents dropped.
/// f(0) = 1 for every instance.
class ProductForm {
 public:
  static constexpr double kNodeSlack = 1e-12;

  explicit ProductForm(Complex prefactor, std::vector<Factor> factors = {});

  Complex prefactor() const { return prefactor_; }
  std::span<const Factor> factors() const { return factors_; }

  /// True when some node lies strictly inside the disk (not measure-backed).
  bool has_interior_nodes() const;

 private:
  Complex prefactor_;
  std::vector<Factor> factors_;
};

/// Canonical branch of log f; every power of f in the library goes through this.
Complex eval_log_f(const ProductForm& f, Complex z);
Complex eval(const ProductForm& f, Complex z);
/// f'(z)/f(z) in closed form.
Complex log_derivative(const ProductForm& f, Complex z);

/// Integral representation with an atomic measure: nodes conj(zeta_j),
/// exponents mu (1 - beta) sigma_j.
ProductForm construct(const ClassParams& params, const AtomicCircleMeasure& sigma);
/// Lebesgue-mixed measure: the Lebesgue part contributes nothing, the reduced
/// atomic part enters with total exponent mu (1 - lebesgue_weight).
ProductForm construct(Complex mu, const MixedMeasure& sigma);

/// f~(z) = (1-z)^{mu2 (beta2 - beta1) / (1 - beta1)} f(z)^{mu2 (1-beta2) / (mu1 (1-beta1))}.
ProductForm transform_class(const ProductForm& f, const ClassParams& from, const ClassParams& to);

/// (1-z)^mu / (1 - z conj(xi))^{(1-beta) mu}.
ProductForm extremal(const ClassParams& params, Complex xi);

/// f0(z) = (1-z)^{mu beta}, covered by every member of the class.
ProductForm covering_function(const ClassParams& params);

/// h_{nu,a}(z) = ((1-z)/(1 + e^{-2ia} z))^nu, whose image is the spiral wedge.
ProductForm canonical_wedge(Complex nu, double a);

/// Boundary limit nu = lim_{r->1-} f'(r)(r-1)/f(r). Closed form for products
/// with unit-circle nodes only; throws std::invalid_argument for interior nodes.
Complex compute_nu(const ProductForm& f);
/// a = lim_{r->1-} arg f^{1/nu}(r) in closed form; same restriction as compute_nu.
double compute_a(const ProductForm& f, Complex nu);

/// Radial estimates of the same limits from r = 1 - 10^{-k}, k = 3..6, with
/// Richardson extrapolation. Valid for interior nodes as well.
Complex radial_nu(const ProductForm& f);
double radial_a(const ProductForm& f, Complex nu);

/// Extrapolates samples taken at h = 10^{-3}, ..., 10^{-6} to h = 0 assuming
/// an expansion in integer powers of h.
template <typename T>
T richardson_decade(std::span<const T> samples);

/// Uniform draw of mu from the Omega disk (|mu| >= 1e-3) and beta from [0, 1).
ClassParams random_class_params(std::uint64_t seed);
/// Real mu uniform on (0, 2], beta uniform on [0, 1).
ClassParams random_real_class_params(std::uint64_t seed);

struct PopulationMember {
  ClassParams params;
  AtomicCircleMeasure measure;
  ProductForm f;
};

/// `count` measure-constructed functions with 1..8 atoms each, seeded.
std::vector<PopulationMember> sample_population(std::size_t count, std::uint64_t seed,
                                                bool real_mu = false);

}  // namespace spiralkit

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spiralkit/complex_kernel.hpp"

namespace spiralkit {

struct Atom {
  Complex point;  // on the unit circle
  double weight;
};

/// Probability measure on the unit circle with finitely many atoms.
///
/// Construction validates and normalizes: points within 1e-9 of the circle
/// are projected onto it, atoms closer than 1e-12 are merged, and a total
/// mass off by more than 1e-12 (but less than 1e-6) is rescaled to 1.
/// Instances are immutable afterwards.
class AtomicCircleMeasure {
 public:
  static constexpr double kOnCircleTolerance = 1e-9;
  static constexpr double kMergeDistance = 1e-12;
  static constexpr double kMassTolerance = 1e-12;
  static constexpr double kMaxMassDeviation = 1e-6;

  explicit AtomicCircleMeasure(std::vector<Atom> atoms);

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  /// Mass carried by atoms within kMergeDistance of `point`.
  double mass_at(Complex point) const;

 private:
  std::vector<Atom> atoms_;
};

/// dsigma = lebesgue_weight * dlambda + (1 - lebesgue_weight) * d(reduced),
/// with dlambda the normalized arc length. Only the reduced part enters the
/// product form, since the log kernel integrates to zero against dlambda.
struct MixedMeasure {
  MixedMeasure(double lebesgue_weight, AtomicCircleMeasure reduced);

  double lebesgue_weight;
  AtomicCircleMeasure reduced;
};

AtomicCircleMeasure make_measure(std::vector<Atom> atoms);

/// Atoms given by angle (radians) and weight; keeps points exactly on the circle.
AtomicCircleMeasure measure_from_angles(std::span<const std::pair<double, double>> angle_weight);

/// Re-weighting used for class inclusion when mu1 = r mu2:
///   r(1-beta1)/(1-r beta1) * sigma + (1-r)/(1-r beta1) * delta_1.
AtomicCircleMeasure dirac_reweight(const AtomicCircleMeasure& sigma, double r, double beta1);

/// n atoms, angles uniform on [0, 2pi), weights a normalized uniform sample.
AtomicCircleMeasure random_measure(std::size_t n, std::uint64_t seed);

}  // namespace spiralkit

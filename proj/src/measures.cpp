#include "spiralkit/measures.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace spiralkit {

AtomicCircleMeasure::AtomicCircleMeasure(std::vector<Atom> atoms) {
  if (atoms.empty()) throw std::invalid_argument("measure: no atoms");

  double total = 0.0;
  for (auto& atom : atoms) {
    if (!is_finite(atom.point) || !std::isfinite(atom.weight)) {
      throw std::invalid_argument("measure: non-finite atom");
    }
    if (atom.weight < 0.0) throw std::invalid_argument("measure: negative weight");
    const double modulus = std::abs(atom.point);
    if (std::abs(modulus - 1.0) > kOnCircleTolerance) {
      throw std::invalid_argument("measure: point off the unit circle (|z| = " +
                                  std::to_string(modulus) + ")");
    }
    atom.point /= modulus;
    total += atom.weight;
  }
  if (!(total > 0.0)) throw std::invalid_argument("measure: zero total mass");
  const double deviation = std::abs(total - 1.0);
  if (deviation >= kMaxMassDeviation) {
    throw std::invalid_argument("measure: total mass " + std::to_string(total) + " is not 1");
  }

  for (const auto& atom : atoms) {
    if (atom.weight == 0.0) continue;
    bool merged = false;
    for (auto& kept : atoms_) {
      if (std::abs(kept.point - atom.point) <= kMergeDistance) {
        kept.weight += atom.weight;
        merged = true;
        break;
      }
    }
    if (!merged) atoms_.push_back(atom);
  }
  if (deviation > kMassTolerance) {
    for (auto& atom : atoms_) atom.weight /= total;
  }
}

double AtomicCircleMeasure::mass_at(Complex point) const {
  double mass = 0.0;
  for (const auto& atom : atoms_) {
    if (std::abs(atom.point - point) <= kMergeDistance) mass += atom.weight;
  }
  return mass;
}

MixedMeasure::MixedMeasure(double lebesgue_weight_, AtomicCircleMeasure reduced_)
    : lebesgue_weight(lebesgue_weight_), reduced(std::move(reduced_)) {
  if (!(lebesgue_weight >= 0.0 && lebesgue_weight < 1.0)) {
    throw std::invalid_argument("mixed measure: Lebesgue weight must lie in [0, 1)");
  }
}

AtomicCircleMeasure make_measure(std::vector<Atom> atoms) {
  return AtomicCircleMeasure(std::move(atoms));
}

AtomicCircleMeasure measure_from_angles(std::span<const std::pair<double, double>> angle_weight) {
  std::vector<Atom> atoms;
  atoms.reserve(angle_weight.size());
  for (const auto& [angle, weight] : angle_weight) {
    atoms.push_back({std::polar(1.0, angle), weight});
  }
  return AtomicCircleMeasure(std::move(atoms));
}

AtomicCircleMeasure dirac_reweight(const AtomicCircleMeasure& sigma, double r, double beta1) {
  if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("dirac_reweight: r must lie in (0, 1]");
  if (!(beta1 >= 0.0 && beta1 < 1.0)) {
    throw std::invalid_argument("dirac_reweight: beta1 must lie in [0, 1)");
  }
  const double denom = 1.0 - r * beta1;
  const double scale = r * (1.0 - beta1) / denom;
  const double dirac = (1.0 - r) / denom;

  std::vector<Atom> atoms;
  atoms.reserve(sigma.size() + 1);
  for (const auto& atom : sigma.atoms()) atoms.push_back({atom.point, scale * atom.weight});
  if (dirac > 0.0) atoms.push_back({Complex{1.0, 0.0}, dirac});
  return AtomicCircleMeasure(std::move(atoms));
}

AtomicCircleMeasure random_measure(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_measure: need at least one atom");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Atom> atoms(n);
  double total = 0.0;
  for (auto& atom : atoms) {
    atom.point = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
    atom.weight = 1.0 - unit(rng);  // (0, 1], never an empty atom
    total += atom.weight;
  }
  for (auto& atom : atoms) atom.weight /= total;
  return AtomicCircleMeasure(std::move(atoms));
}

}  // namespace spiralkit

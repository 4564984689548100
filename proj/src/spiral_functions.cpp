#include "spiralkit/spiral_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace spiralkit {

namespace {

void require_in_disk(Complex z, const char* where) {
  if (!is_finite(z) || !(std::abs(z) < 1.0)) {
    throw std::domain_error(std::string(where) + ": point outside the open unit disk");
  }
}

bool is_unit_node(Complex node) { return std::abs(node - Complex{1.0, 0.0}) <= ProductForm::kNodeSlack; }

constexpr std::array<double, 4> kRadialSteps = {1e-3, 1e-4, 1e-5, 1e-6};

}  // namespace

bool in_omega(Complex mu) {
  return is_finite(mu) && std::abs(mu - Complex{1.0, 0.0}) <= 1.0 + ClassParams::kOmegaSlack &&
         std::abs(mu) > ClassParams::kOmegaSlack;
}

ClassParams::ClassParams(Complex mu, double beta) : mu_(mu), beta_(beta) {
  if (!in_omega(mu)) throw std::invalid_argument("class params: mu outside Omega = {|mu - 1| <= 1, mu != 0}");
  if (!(beta >= 0.0 && beta < 1.0)) throw std::invalid_argument("class params: beta must lie in [0, 1)");
}

bool ClassParams::real_mu() const { return std::abs(mu_.imag()) <= 1e-14 * std::abs(mu_); }

ProductForm::ProductForm(Complex prefactor, std::vector<Factor> factors) : prefactor_(prefactor) {
  if (!is_finite(prefactor)) throw std::invalid_argument("product form: non-finite prefactor");
  for (const auto& factor : factors) {
    if (!is_finite(factor.node) || !is_finite(factor.exponent)) {
      throw std::invalid_argument("product form: non-finite factor");
    }
    if (std::abs(factor.node) > 1.0 + kNodeSlack) {
      throw std::invalid_argument("product form: node outside the closed unit disk");
    }
    if (is_unit_node(factor.node)) {
      prefactor_ -= factor.exponent;
      continue;
    }
    bool merged = false;
    for (auto& kept : factors_) {
      if (std::abs(kept.node - factor.node) <= kNodeSlack) {
        kept.exponent += factor.exponent;
        merged = true;
        break;
      }
    }
    if (!merged) factors_.push_back(factor);
  }
  std::erase_if(factors_, [](const Factor& f) { return f.exponent == Complex{0.0, 0.0}; });
}

bool ProductForm::has_interior_nodes() const {
  for (const auto& factor : factors_) {
    if (std::abs(factor.node) < 1.0 - kNodeSlack) return true;
  }
  return false;
}

Complex eval_log_f(const ProductForm& f, Complex z) {
  require_in_disk(z, "eval_log_f");
  Complex sum = f.prefactor() * log_principal(1.0 - z);
  for (const auto& factor : f.factors()) sum -= factor.exponent * log_principal(1.0 - factor.node * z);
  return sum;
}

Complex eval(const ProductForm& f, Complex z) { return std::exp(eval_log_f(f, z)); }

Complex log_derivative(const ProductForm& f, Complex z) {
  require_in_disk(z, "log_derivative");
  Complex sum = -f.prefactor() / (1.0 - z);
  for (const auto& factor : f.factors()) sum += factor.exponent * factor.node / (1.0 - factor.node * z);
  return sum;
}

ProductForm construct(const ClassParams& params, const AtomicCircleMeasure& sigma) {
  const Complex scale = params.mu() * (1.0 - params.beta());
  std::vector<Factor> factors;
  factors.reserve(sigma.size());
  for (const auto& atom : sigma.atoms()) factors.push_back({std::conj(atom.point), scale * atom.weight});
  return ProductForm(params.mu(), std::move(factors));
}

ProductForm construct(Complex mu, const MixedMeasure& sigma) {
  return construct(ClassParams(mu, sigma.lebesgue_weight), sigma.reduced);
}

ProductForm transform_class(const ProductForm& f, const ClassParams& from, const ClassParams& to) {
  const Complex power = to.mu() * (1.0 - to.beta()) / (from.mu() * (1.0 - from.beta()));
  std::vector<Factor> factors;
  factors.reserve(f.factors().size());
  for (const auto& factor : f.factors()) factors.push_back({factor.node, power * factor.exponent});
  // (1-z) exponent mu2 - power*mu1 keeps the representing measure fixed
  const Complex shift = to.mu() * (to.beta() - from.beta()) / (1.0 - from.beta());
  return ProductForm(shift + power * f.prefactor(), std::move(factors));
}

ProductForm extremal(const ClassParams& params, Complex xi) {
  if (!is_finite(xi) || std::abs(std::abs(xi) - 1.0) > AtomicCircleMeasure::kOnCircleTolerance) {
    throw std::invalid_argument("extremal: xi must lie on the unit circle");
  }
  xi /= std::abs(xi);
  return ProductForm(params.mu(), {{std::conj(xi), params.mu() * (1.0 - params.beta())}});
}

ProductForm covering_function(const ClassParams& params) { return ProductForm(params.mu() * params.beta()); }

ProductForm canonical_wedge(Complex nu, double a) {
  if (!in_omega(nu)) throw std::invalid_argument("canonical_wedge: nu outside Omega");
  if (!(std::abs(a) < std::numbers::pi / 2)) throw std::invalid_argument("canonical_wedge: need |a| < pi/2");
  return ProductForm(nu, {{-std::polar(1.0, -2.0 * a), nu}});
}

Complex compute_nu(const ProductForm& f) {
  if (f.has_interior_nodes()) {
    throw std::invalid_argument("compute_nu: interior nodes present, only the radial estimate applies");
  }
  // Every factor with node != 1 contributes (1-r) c/(1 - c r) -> 0; node-1
  // factors were folded into the prefactor at construction.
  return f.prefactor();
}

double compute_a(const ProductForm& f, Complex nu) {
  if (f.has_interior_nodes()) {
    throw std::invalid_argument("compute_a: interior nodes present, only the radial estimate applies");
  }
  if (std::abs(nu) == 0.0) throw std::invalid_argument("compute_a: nu = 0");
  Complex sum{0.0, 0.0};
  for (const auto& factor : f.factors()) sum += factor.exponent * log_principal(1.0 - factor.node);
  return -(sum / nu).imag();
}

template <typename T>
T richardson_decade(std::span<const T> samples) {
  std::vector<T> table(samples.begin(), samples.end());
  double factor = 1.0;
  for (std::size_t level = 1; level < table.size(); ++level) {
    factor *= 10.0;
    for (std::size_t i = table.size() - 1; i >= level; --i) {
      table[i] = table[i] + (table[i] - table[i - 1]) / (factor - 1.0);
    }
  }
  return table.back();
}

template Complex richardson_decade<Complex>(std::span<const Complex>);
template double richardson_decade<double>(std::span<const double>);

Complex radial_nu(const ProductForm& f) {
  std::array<Complex, kRadialSteps.size()> samples;
  for (std::size_t k = 0; k < kRadialSteps.size(); ++k) {
    const double h = kRadialSteps[k];
    samples[k] = -h * log_derivative(f, Complex{1.0 - h, 0.0});
  }
  return richardson_decade<Complex>(samples);
}

double radial_a(const ProductForm& f, Complex nu) {
  if (std::abs(nu) == 0.0) throw std::invalid_argument("radial_a: nu = 0");
  std::array<double, kRadialSteps.size()> samples;
  for (std::size_t k = 0; k < kRadialSteps.size(); ++k) {
    samples[k] = (eval_log_f(f, Complex{1.0 - kRadialSteps[k], 0.0}) / nu).imag();
  }
  return richardson_decade<double>(samples);
}

ClassParams random_class_params(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Complex mu;
  do {
    mu = Complex{2.0 * unit(rng), 2.0 * unit(rng) - 1.0};
  } while (std::abs(mu - 1.0) > 1.0 || std::abs(mu) < 1e-3);
  return ClassParams(mu, unit(rng));
}

ClassParams random_real_class_params(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double mu = 2.0 * (1.0 - unit(rng));
  return ClassParams(Complex{mu, 0.0}, unit(rng));
}

std::vector<PopulationMember> sample_population(std::size_t count, std::uint64_t seed, bool real_mu) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> atoms(1, 8);
  std::vector<PopulationMember> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = atoms(rng);
    auto measure = random_measure(n, rng());
    auto params = real_mu ? random_real_class_params(rng()) : random_class_params(rng());
    auto f = construct(params, measure);
    out.push_back({params, std::move(measure), std::move(f)});
  }
  return out;
}

}  // namespace spiralkit

#pragma once

#include "pwlab/group_model.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <vector>

namespace pwlab {

using GridPtr = std::shared_ptr<const QuadratureGrid>;

/// Finitely supported operator-valued function on the unitary dual: each
/// stored weight carries a dim x dim complex matrix.
class FourierCoefficients {
 public:
  explicit FourierCoefficients(ModelPtr model);

  const ModelPtr& model() const { return model_; }
  const std::map<Weight, ComplexMatrix>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Stores m at w. Throws InvalidWeight if w is not a weight of the model or
  /// m is not dim(w) x dim(w).
  void set(const Weight& w, ComplexMatrix m);
  /// The stored matrix, or the zero matrix of the right size.
  ComplexMatrix at(const Weight& w) const;
  /// Largest weight level among stored entries, 0 if empty.
  int level() const;

  FourierCoefficients operator+(const FourierCoefficients& other) const;
  FourierCoefficients operator*(Complex scalar) const;

 private:
  ModelPtr model_;
  std::map<Weight, ComplexMatrix> entries_;
};

/// Values of a function at the nodes of a quadrature grid, together with the
/// declared band (largest weight level in its Fourier support).
class SampledFunction {
 public:
  SampledFunction(GridPtr grid, std::vector<Complex> values, int band);

  const GridPtr& grid() const { return grid_; }
  const std::vector<Complex>& values() const { return values_; }
  int band() const { return band_; }

 private:
  GridPtr grid_;
  std::vector<Complex> values_;
  int band_;
};

SampledFunction sample(const GroupFunction& f, GridPtr grid, int band);

/// F f(pi) = sum_j w_j f(g_j) pi(g_j) over the requested weights.
/// Throws BandLimitError unless band(f) + max weight level <= 2 * bandlimit,
/// the condition under which every integrand is integrated exactly.
FourierCoefficients forward_transform(ModelPtr model, const SampledFunction& f,
                                      std::span<const Weight> weights);

/// f(g) = sum_pi dim(pi) tr(phi(pi) pi(g)^*) at every grid node.
SampledFunction inverse_transform(const FourierCoefficients& phi, GridPtr grid);

/// The inversion sum at a single point.
Complex evaluate(const FourierCoefficients& phi, const GroupPoint& g);
GroupFunction as_function(FourierCoefficients phi);

struct SupportSet {
  std::set<Weight> weights;
  double threshold_rel = 0.0;
};

/// Weights whose Hilbert-Schmidt norm exceeds tau_rel times the largest one.
SupportSet support(const FourierCoefficients& phi, double tau_rel = 1e-10);

/// q_s(phi) = max over stored weights of |lambda|^s * ||phi(lambda)||_HS.
double schwartz_seminorm(const FourierCoefficients& phi, int s);

inline double hilbert_schmidt_norm(const ComplexMatrix& m) { return m.norm(); }

/// Uniform random coefficients in [-scale, scale) + i[-scale, scale) for every
/// weight up to `cutoff`. Reproducible for a given seed on any platform.
FourierCoefficients random_band_limited(ModelPtr model, int cutoff, std::uint64_t seed,
                                        double scale = 1.0);

}  // namespace pwlab

#include "pwlab/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace pwlab {

FourierCoefficients::FourierCoefficients(ModelPtr model) : model_(std::move(model)) {
  if (!model_) throw PreconditionError("FourierCoefficients needs a group model");
}

void FourierCoefficients::set(const Weight& w, ComplexMatrix m) {
  const int dim = model_->dimension(w);
  if (m.rows() != dim || m.cols() != dim) {
    throw InvalidWeight("coefficient at " + to_string(w) + " must be " + std::to_string(dim) +
                        "x" + std::to_string(dim));
  }
  entries_[w] = std::move(m);
}

ComplexMatrix FourierCoefficients::at(const Weight& w) const {
  auto it = entries_.find(w);
  if (it != entries_.end()) return it->second;
  const int dim = model_->dimension(w);
  return ComplexMatrix::Zero(dim, dim);
}

int FourierCoefficients::level() const {
  int level = 0;
  for (const auto& [w, m] : entries_) level = std::max(level, model_->weight_level(w));
  return level;
}

FourierCoefficients FourierCoefficients::operator+(const FourierCoefficients& other) const {
  if (other.model_ != model_) throw PreconditionError("adding coefficients of different models");
  FourierCoefficients out = *this;
  for (const auto& [w, m] : other.entries_) {
    auto [it, inserted] = out.entries_.try_emplace(w, m);
    if (!inserted) it->second += m;
  }
  return out;
}

FourierCoefficients FourierCoefficients::operator*(Complex scalar) const {
  FourierCoefficients out = *this;
  for (auto& [w, m] : out.entries_) m *= scalar;
  return out;
}

SampledFunction::SampledFunction(GridPtr grid, std::vector<Complex> values, int band)
    : grid_(std::move(grid)), values_(std::move(values)), band_(band) {
  if (!grid_) throw PreconditionError("sampled function needs a grid");
  if (values_.size() != grid_->size()) {
    throw PreconditionError("sampled function has " + std::to_string(values_.size()) +
                            " values for a grid of " + std::to_string(grid_->size()) + " nodes");
  }
  if (band_ < 0) throw PreconditionError("band must be nonnegative");
}

SampledFunction sample(const GroupFunction& f, GridPtr grid, int band) {
  std::vector<Complex> values;
  values.reserve(grid->size());
  for (const auto& g : grid->nodes) values.push_back(f(g));
  return SampledFunction(std::move(grid), std::move(values), band);
}

FourierCoefficients forward_transform(ModelPtr model, const SampledFunction& f,
                                      std::span<const Weight> weights) {
  const QuadratureGrid& grid = *f.grid();
  int top = 0;
  for (const auto& w : weights) top = std::max(top, model->weight_level(w));
  if (f.band() + top > grid.exact_level()) {
    throw BandLimitError("forward transform of a band-" + std::to_string(f.band()) +
                         " function up to weight level " + std::to_string(top) +
                         " needs bandlimit >= " + std::to_string((f.band() + top + 1) / 2) +
                         ", grid has " + std::to_string(grid.bandlimit));
  }

  std::vector<ComplexMatrix> acc;
  acc.reserve(weights.size());
  for (const auto& w : weights) {
    const int dim = model->dimension(w);
    acc.push_back(ComplexMatrix::Zero(dim, dim));
  }
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const Complex wf = grid.weights[j] * f.values()[j];
    if (wf == Complex(0.0, 0.0)) continue;
    const auto mats = model->irrep_matrices(weights, grid.nodes[j]);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += wf * mats[i];
  }

  FourierCoefficients out(model);
  for (std::size_t i = 0; i < acc.size(); ++i) out.set(weights[i], std::move(acc[i]));
  return out;
}

namespace {

struct FlatCoefficients {
  std::vector<Weight> weights;
  std::vector<const ComplexMatrix*> mats;
  std::vector<double> dims;
};

FlatCoefficients flatten(const FourierCoefficients& phi) {
  FlatCoefficients flat;
  for (const auto& [w, m] : phi.entries()) {
    flat.weights.push_back(w);
    flat.mats.push_back(&m);
    flat.dims.push_back(static_cast<double>(phi.model()->dimension(w)));
  }
  return flat;
}

Complex evaluate_flat(const GroupModel& model, const FlatCoefficients& flat, const GroupPoint& g) {
  if (flat.weights.empty()) return Complex(0.0, 0.0);
  const auto pis = model.irrep_matrices(flat.weights, g);
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < pis.size(); ++i) {
    // tr(A B^*) = sum_ab A_ab conj(B_ab)
    sum += flat.dims[i] * (flat.mats[i]->array() * pis[i].array().conjugate()).sum();
  }
  return sum;
}

}  // namespace

SampledFunction inverse_transform(const FourierCoefficients& phi, GridPtr grid) {
  const FlatCoefficients flat = flatten(phi);
  std::vector<Complex> values;
  values.reserve(grid->size());
  for (const auto& g : grid->nodes) values.push_back(evaluate_flat(*phi.model(), flat, g));
  return SampledFunction(std::move(grid), std::move(values), phi.level());
}

Complex evaluate(const FourierCoefficients& phi, const GroupPoint& g) {
  return evaluate_flat(*phi.model(), flatten(phi), g);
}

GroupFunction as_function(FourierCoefficients phi) {
  auto owned = std::make_shared<const FourierCoefficients>(std::move(phi));
  auto flat = std::make_shared<const FlatCoefficients>(flatten(*owned));
  return [owned, flat](const GroupPoint& g) { return evaluate_flat(*owned->model(), *flat, g); };
}

SupportSet support(const FourierCoefficients& phi, double tau_rel) {
  if (!(tau_rel > 0.0 && tau_rel < 1.0)) throw PreconditionError("tau_rel must lie in (0, 1)");
  double top = 0.0;
  for (const auto& [w, m] : phi.entries()) top = std::max(top, hilbert_schmidt_norm(m));
  if (top == 0.0) top = 1.0;
  SupportSet out;
  out.threshold_rel = tau_rel;
  for (const auto& [w, m] : phi.entries()) {
    if (hilbert_schmidt_norm(m) > tau_rel * top) out.weights.insert(w);
  }
  return out;
}

double schwartz_seminorm(const FourierCoefficients& phi, int s) {
  if (s < 0) throw PreconditionError("seminorm order must be nonnegative");
  double out = 0.0;
  for (const auto& [w, m] : phi.entries()) {
    out = std::max(out, std::pow(phi.model()->weight_norm(w), s) * hilbert_schmidt_norm(m));
  }
  return out;
}

FourierCoefficients random_band_limited(ModelPtr model, int cutoff, std::uint64_t seed,
                                        double scale) {
  std::mt19937_64 rng(seed);
  // Explicit bit conversion: std::uniform_real_distribution is not portable.
  auto uniform = [&rng, scale] {
    return scale * (2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0);
  };
  FourierCoefficients out(model);
  for (const auto& w : model->enumerate_weights(cutoff)) {
    const int dim = model->dimension(w);
    ComplexMatrix m(dim, dim);
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        const double re = uniform();
        const double im = uniform();
        m(a, b) = Complex(re, im);
      }
    }
    out.set(w, std::move(m));
  }
  return out;
}

}  // namespace pwlab

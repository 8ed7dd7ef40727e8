#include "pwlab/local_spectral.hpp"

#include "pwlab/repr_theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pwlab {

OperatorAction::OperatorAction(ModelPtr model, CentralElement d, int cutoff)
    : model_(std::move(model)), d_(std::move(d)) {
  if (d_.arity() != model_->generator_count()) {
    throw StructuralError("central element arity " + std::to_string(d_.arity()) +
                          " does not match " + model_->name());
  }
  for (const auto& w : model_->enumerate_weights(cutoff)) {
    cache_.emplace(w, character_of_contragredient(d_, w, *model_));
  }
}

Complex OperatorAction::multiplier(const Weight& w) const {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  return character_of_contragredient(d_, w, *model_);
}

namespace {

Complex int_pow(Complex base, unsigned e) {
  Complex out(1.0, 0.0);
  while (e > 0) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace

namespace detail {

// Each stored weight's contribution dim(pi) tr(phi(pi) pi(g_j)^*) at every
// node, so D^n f(g_j) = sum_pi chi_pi^n h_pi(g_j) without re-evaluating irreps.
struct ModeTable {
  std::vector<Weight> weights;
  std::vector<Complex> multipliers;
  std::vector<double> hs_norms;
  std::vector<double> dims;
  std::vector<bool> in_support;
  std::vector<std::vector<Complex>> values;
  double max_multiplier = 0.0;      // over stored nonzero entries
  double support_sup = 0.0;         // over the support
  double bound_constant = 0.0;      // M
  std::size_t below_threshold = 0;  // nonzero entries outside the support
};

}  // namespace detail

namespace {

using detail::ModeTable;

ModeTable build_modes(const OperatorAction& action, const FourierCoefficients& phi,
                      const QuadratureGrid& grid, double tau_rel) {
  const GroupModel& model = *phi.model();
  const SupportSet supp = support(phi, tau_rel);
  ModeTable t;
  for (const auto& [w, m] : phi.entries()) {
    const double hs = hilbert_schmidt_norm(m);
    if (hs == 0.0) continue;
    t.weights.push_back(w);
    t.multipliers.push_back(action.multiplier(w));
    t.hs_norms.push_back(hs);
    t.dims.push_back(static_cast<double>(model.dimension(w)));
    const bool inside = supp.weights.count(w) > 0;
    t.in_support.push_back(inside);
    if (!inside) ++t.below_threshold;
    t.max_multiplier = std::max(t.max_multiplier, std::abs(t.multipliers.back()));
    if (inside) t.support_sup = std::max(t.support_sup, std::abs(t.multipliers.back()));
  }
  t.values.assign(t.weights.size(), std::vector<Complex>(grid.size()));
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const auto pis = model.irrep_matrices(t.weights, grid.nodes[j]);
    for (std::size_t i = 0; i < t.weights.size(); ++i) {
      const ComplexMatrix& a = phi.entries().at(t.weights[i]);
      t.values[i][j] = t.dims[i] * (a.array() * pis[i].array().conjugate()).sum();
    }
  }
  for (const auto& row : t.values) {
    double top = 0.0;
    for (const Complex& v : row) top = std::max(top, std::abs(v));
    t.bound_constant += top;
  }
  return t;
}

std::vector<Complex> combine(const ModeTable& t, const std::vector<Complex>& factors,
                             std::size_t nodes) {
  std::vector<Complex> out(nodes, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < t.weights.size(); ++i) {
    if (factors[i] == Complex(0.0, 0.0)) continue;
    for (std::size_t j = 0; j < nodes; ++j) out[j] += factors[i] * t.values[i][j];
  }
  return out;
}

double lp_of_values(const std::vector<Complex>& values, const std::vector<double>& weights,
                    double p) {
  if (std::isinf(p)) {
    double top = 0.0;
    for (const Complex& v : values) top = std::max(top, std::abs(v));
    return top;
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    sum += weights[j] * std::pow(std::abs(values[j]), p);
  }
  return std::pow(sum, 1.0 / p);
}

void check_p(double p) {
  if (!(p >= 1.0)) throw PreconditionError("norm exponent p must be >= 1");
}

void check_grid(const FourierCoefficients& phi, const QuadratureGrid& grid) {
  if (phi.level() > grid.bandlimit) {
    throw BandLimitError("coefficients reach weight level " + std::to_string(phi.level()) +
                         " but the grid bandlimit is " + std::to_string(grid.bandlimit));
  }
}

double relative_slack(double rhs, double lhs) {
  const double scale = std::max(rhs, lhs);
  return scale == 0.0 ? 0.0 : (rhs - lhs) / scale;
}

// ||D^n f||_p / R^n with R = max |chi| over stored modes.
double scaled_norm(const ModeTable& t, unsigned n, const QuadratureGrid& grid, double p) {
  if (n > 0 && t.max_multiplier == 0.0) return 0.0;
  std::vector<Complex> factors(t.weights.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    factors[i] = n == 0 ? Complex(1.0, 0.0) : int_pow(t.multipliers[i] / t.max_multiplier, n);
  }
  return lp_of_values(combine(t, factors, grid.size()), grid.weights, p);
}

BoundCheck check_bounds(const ModeTable& t, unsigned n, double scaled) {
  BoundCheck out;
  out.n = n;
  out.bound_constant = t.bound_constant;
  const double r_max = t.max_multiplier;
  out.log_norm = (n > 0 && r_max > 0.0) ? n * std::log(r_max) + std::log(scaled)
                                        : std::log(scaled);
  out.lower_slack = 1.0;
  for (std::size_t i = 0; i < t.weights.size(); ++i) {
    if (!t.in_support[i]) continue;
    const double ratio = r_max > 0.0 ? std::abs(t.multipliers[i]) / r_max : 0.0;
    const double lhs = (n == 0 ? 1.0 : std::pow(ratio, static_cast<double>(n))) * t.hs_norms[i];
    const double rhs = std::sqrt(t.dims[i]) * scaled;
    const double slack = relative_slack(rhs, lhs);
    if (slack < out.lower_slack || out.worst_weight.size() == 0) {
      out.lower_slack = slack;
      out.worst_weight = t.weights[i];
    }
  }
  const double sup_ratio = r_max > 0.0 ? t.support_sup / r_max : 0.0;
  const double upper_rhs =
      t.bound_constant * (n == 0 ? 1.0 : std::pow(sup_ratio, static_cast<double>(n)));
  out.upper_slack = relative_slack(upper_rhs, scaled);
  return out;
}

}  // namespace

FourierCoefficients apply_power(const OperatorAction& action, unsigned n,
                                const FourierCoefficients& phi) {
  FourierCoefficients out(phi.model());
  for (const auto& [w, m] : phi.entries()) out.set(w, m * int_pow(action.multiplier(w), n));
  return out;
}

double lp_norm(const SampledFunction& f, double p) {
  check_p(p);
  return lp_of_values(f.values(), f.grid()->weights, p);
}

std::vector<Complex> local_spectrum(const OperatorAction& action, const FourierCoefficients& phi,
                                    double tau_rel) {
  std::vector<Complex> points;
  for (const auto& w : support(phi, tau_rel).weights) {
    const Complex chi = action.multiplier(w);
    const bool seen = std::any_of(points.begin(), points.end(),
                                  [&](const Complex& q) { return std::abs(q - chi) <= 1e-12; });
    if (!seen) points.push_back(chi);
  }
  std::sort(points.begin(), points.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return points;
}

double spectral_sup(const std::vector<Complex>& points) {
  double out = 0.0;
  for (const Complex& z : points) out = std::max(out, std::abs(z));
  return out;
}

LocalSpectralAnalysis::LocalSpectralAnalysis(OperatorAction action, FourierCoefficients phi,
                                             GridPtr grid, double tau_rel)
    : action_(std::move(action)), phi_(std::move(phi)), grid_(std::move(grid)), tau_rel_(tau_rel) {
  check_grid(phi_, *grid_);
  spectrum_ = local_spectrum(action_, phi_, tau_rel_);
  modes_ = std::make_shared<const detail::ModeTable>(build_modes(action_, phi_, *grid_, tau_rel_));
  sampled_ = std::make_shared<const SampledFunction>(inverse_transform(phi_, grid_));
}

double LocalSpectralAnalysis::bound_constant() const { return modes_->bound_constant; }

double LocalSpectralAnalysis::distance_to_spectrum(Complex z) const {
  double d = infinity_norm;
  for (const Complex& s : spectrum_) d = std::min(d, std::abs(s - z));
  return d;
}

BoundCheck LocalSpectralAnalysis::bounds(double p, unsigned n) const {
  check_p(p);
  const ModeTable& t = *modes_;
  if (t.weights.empty()) throw PreconditionError("bounds need a nonzero function");
  return check_bounds(t, n, scaled_norm(t, n, *grid_, p));
}

SpectrumReport LocalSpectralAnalysis::radius_sequence(double p, unsigned n_max) const {
  check_p(p);
  const ModeTable& t = *modes_;

  SpectrumReport rep;
  rep.p = p;
  rep.n_max = n_max;
  rep.spectrum_points = spectrum_;
  rep.radius = radius();
  rep.bound_constant = t.bound_constant;
  if (std::isinf(p)) {
    rep.caveats.push_back(
        "p=inf is the maximum over quadrature nodes and can underestimate the true supremum");
  }
  if (t.below_threshold > 0) {
    rep.caveats.push_back(std::to_string(t.below_threshold) +
                          " nonzero coefficient(s) below the support threshold enter the norms "
                          "but not the spectrum");
  }

  for (unsigned n = 1; n <= n_max; ++n) {
    const double nn = static_cast<double>(n);
    double sandwich_lower = 0.0;
    for (std::size_t i = 0; i < t.weights.size(); ++i) {
      if (!t.in_support[i]) continue;
      sandwich_lower =
          std::max(sandwich_lower, std::abs(t.multipliers[i]) *
                                       std::pow(t.hs_norms[i] / std::sqrt(t.dims[i]), 1.0 / nn));
    }
    rep.sandwich_lower.push_back(sandwich_lower);
    rep.sandwich_upper.push_back(std::pow(t.bound_constant, 1.0 / nn) * t.support_sup);

    if (t.weights.empty()) {
      rep.r.push_back(0.0);
      rep.log_norms.push_back(-infinity_norm);
      rep.lower_slack.push_back(0.0);
      rep.upper_slack.push_back(0.0);
      continue;
    }
    const double scaled = scaled_norm(t, n, *grid_, p);
    const BoundCheck b = check_bounds(t, n, scaled);
    rep.log_norms.push_back(b.log_norm);
    rep.r.push_back(scaled == 0.0 ? 0.0 : t.max_multiplier * std::pow(scaled, 1.0 / nn));
    rep.lower_slack.push_back(b.lower_slack);
    rep.upper_slack.push_back(b.upper_slack);
  }
  return rep;
}

namespace {

std::vector<Complex> resolvent_factors(const ModeTable& t, Complex z) {
  std::vector<Complex> f(t.weights.size(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (t.in_support[i]) f[i] = 1.0 / (t.multipliers[i] - z);
  }
  return f;
}

}  // namespace

ResolventProbe LocalSpectralAnalysis::resolvent_probe(Complex z) const {
  const double dist = distance_to_spectrum(z);
  if (dist <= 1e-12) {
    throw PreconditionError("resolvent probe at a point of the local spectrum");
  }
  const SupportSet supp = support(phi_, tau_rel_);
  FourierCoefficients psi(phi_.model());
  FourierCoefficients applied(phi_.model());
  for (const Weight& w : supp.weights) {
    const Complex gap = action_.multiplier(w) - z;
    ComplexMatrix m = phi_.entries().at(w) / gap;
    applied.set(w, m * gap);
    psi.set(w, std::move(m));
  }
  SampledFunction solution = inverse_transform(psi, grid_);
  const SampledFunction lhs = inverse_transform(applied, grid_);
  double residual = 0.0;
  for (std::size_t j = 0; j < grid_->size(); ++j) {
    residual = std::max(residual, std::abs(lhs.values()[j] - sampled_->values()[j]));
  }
  return ResolventProbe{z, dist, residual, std::move(psi), std::move(solution)};
}

double LocalSpectralAnalysis::holomorphy_check(Complex z0, double radius, unsigned points) const {
  if (!(radius > 0.0)) throw PreconditionError("holomorphy circle radius must be positive");
  if (points == 0) throw PreconditionError("holomorphy check needs at least one point");
  if (!(distance_to_spectrum(z0) > radius)) {
    throw PreconditionError("holomorphy disk meets the local spectrum");
  }
  const ModeTable& t = *modes_;
  const std::size_t nodes = grid_->size();
  std::vector<Complex> mean(nodes, Complex(0.0, 0.0));
  for (unsigned k = 0; k < points; ++k) {
    const Complex z = z0 + std::polar(radius, 2.0 * std::numbers::pi * k / points);
    const auto values = combine(t, resolvent_factors(t, z), nodes);
    for (std::size_t j = 0; j < nodes; ++j) mean[j] += values[j];
  }
  const auto center = combine(t, resolvent_factors(t, z0), nodes);
  double out = 0.0;
  for (std::size_t j = 0; j < nodes; ++j) {
    out = std::max(out, std::abs(mean[j] / static_cast<double>(points) - center[j]));
  }
  return out;
}

BoundCheck two_sided_bounds(const OperatorAction& action, const FourierCoefficients& phi, double p,
                            unsigned n, GridPtr grid, double tau_rel) {
  return LocalSpectralAnalysis(action, phi, std::move(grid), tau_rel).bounds(p, n);
}

SpectrumReport radius_sequence(const OperatorAction& action, const FourierCoefficients& phi,
                               double p, unsigned n_max, GridPtr grid, double tau_rel) {
  return LocalSpectralAnalysis(action, phi, std::move(grid), tau_rel).radius_sequence(p, n_max);
}

ResolventProbe resolvent_probe(const OperatorAction& action, const FourierCoefficients& phi,
                               Complex z, GridPtr grid, double tau_rel) {
  return LocalSpectralAnalysis(action, phi, std::move(grid), tau_rel).resolvent_probe(z);
}

double holomorphy_check(const OperatorAction& action, const FourierCoefficients& phi, Complex z0,
                        double radius, unsigned points, GridPtr grid, double tau_rel) {
  return LocalSpectralAnalysis(action, phi, std::move(grid), tau_rel)
      .holomorphy_check(z0, radius, points);
}

}  // namespace pwlab

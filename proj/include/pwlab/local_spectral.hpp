#pragma once

#include "pwlab/central_element.hpp"
#include "pwlab/fourier.hpp"

#include <limits>
#include <map>
#include <string>
#include <vector>

namespace pwlab {

inline constexpr double default_tau_rel = 1e-10;
inline constexpr double infinity_norm = std::numeric_limits<double>::infinity();

/// A central element D acting on L^p(G) through its Fourier multiplier
/// F(Df)(pi) = chi_{contragredient pi}(D) F f(pi).
class OperatorAction {
 public:
  /// Multipliers for weights up to `cutoff` are computed eagerly; others on
  /// demand. Throws StructuralError if D's arity does not match the model.
  OperatorAction(ModelPtr model, CentralElement d, int cutoff = 0);

  const ModelPtr& model() const { return model_; }
  const CentralElement& element() const { return d_; }
  Complex multiplier(const Weight& w) const;

 private:
  ModelPtr model_;
  CentralElement d_;
  std::map<Weight, Complex> cache_;
};

/// Multiplies each coefficient by multiplier^n. n = 0 is the identity.
FourierCoefficients apply_power(const OperatorAction& action, unsigned n,
                                const FourierCoefficients& phi);

/// (sum_j w_j |f(g_j)|^p)^(1/p), or max_j |f(g_j)| for p = infinity.
double lp_norm(const SampledFunction& f, double p);

/// {multiplier(lambda) : lambda in supp phi}, merged within 1e-12 and sorted
/// by (real, imag). Finite support makes the closure a no-op.
std::vector<Complex> local_spectrum(const OperatorAction& action, const FourierCoefficients& phi,
                                    double tau_rel = default_tau_rel);

/// Largest modulus in `points`; 0 for the empty set.
double spectral_sup(const std::vector<Complex>& points);

/// Both inequalities bounding ||D^n f||_p, checked at one n.
///
/// lower: |chi|^n ||F f(pi)||_HS <= dim(pi)^{1/2} ||D^n f||_p for each pi in the support,
/// upper: ||D^n f||_p <= M (sup |chi|)^n, M = sum_pi dim(pi) max_j |tr(F f(pi) pi(g_j)^*)|.
/// Slacks are (rhs - lhs) / max(rhs, lhs); negative means violated.
struct BoundCheck {
  unsigned n = 0;
  double log_norm = 0.0;
  double lower_slack = 0.0;
  Weight worst_weight;
  double upper_slack = 0.0;
  double bound_constant = 0.0;
};

BoundCheck two_sided_bounds(const OperatorAction& action, const FourierCoefficients& phi, double p,
                            unsigned n, GridPtr grid, double tau_rel = default_tau_rel);

struct SpectrumReport {
  double p = 2.0;
  unsigned n_max = 0;
  std::vector<Complex> spectrum_points;
  double radius = 0.0;
  double bound_constant = 0.0;
  std::vector<double> r;               ///< r_n = ||D^n f||_p^(1/n), n = 1..n_max
  std::vector<double> log_norms;       ///< log ||D^n f||_p
  std::vector<double> sandwich_lower;  ///< max_pi |chi| (||F f(pi)|| / dim^{1/2})^(1/n)
  std::vector<double> sandwich_upper;  ///< M^(1/n) sup |chi|
  std::vector<double> lower_slack;
  std::vector<double> upper_slack;
  std::vector<std::string> caveats;
};

/// Computes r_1..r_{n_max} in log space with max |chi|^n factored out of every
/// mode, so large n does not overflow. Throws BandLimitError if the grid is not
/// exact for phi.
SpectrumReport radius_sequence(const OperatorAction& action, const FourierCoefficients& phi,
                               double p, unsigned n_max, GridPtr grid,
                               double tau_rel = default_tau_rel);

struct ResolventProbe {
  Complex z;
  double distance_to_spectrum = 0.0;
  double residual_sup = 0.0;
  FourierCoefficients coefficients;  ///< psi_z
  SampledFunction solution;          ///< phi_z = F^{-1} psi_z on the grid
};

/// Solves (D - z) phi_z = f mode by mode on the support of F f and measures
/// the residual on the grid. Throws PreconditionError if z is within 1e-12 of
/// the local spectrum.
ResolventProbe resolvent_probe(const OperatorAction& action, const FourierCoefficients& phi,
                               Complex z, GridPtr grid, double tau_rel = default_tau_rel);

/// Cauchy mean-value test of z -> phi_z: max over nodes of
/// |mean over the circle |z - z0| = r of phi_z - phi_{z0}|. The closed disk
/// must stay away from the spectrum.
double holomorphy_check(const OperatorAction& action, const FourierCoefficients& phi, Complex z0,
                        double radius, unsigned points, GridPtr grid,
                        double tau_rel = default_tau_rel);

namespace detail {
struct ModeTable;
}

/// Everything above for one (D, f, grid) triple, with the per-mode values
/// dim(pi) tr(F f(pi) pi(g_j)^*) evaluated once and shared by all queries.
/// The free functions are one-shot wrappers around this class.
class LocalSpectralAnalysis {
 public:
  LocalSpectralAnalysis(OperatorAction action, FourierCoefficients phi, GridPtr grid,
                        double tau_rel = default_tau_rel);

  const std::vector<Complex>& spectrum() const { return spectrum_; }
  double radius() const { return spectral_sup(spectrum_); }
  /// M = sum_pi dim(pi) max_j |tr(F f(pi) pi(g_j)^*)|.
  double bound_constant() const;
  /// Distance from z to the local spectrum; +inf for empty support.
  double distance_to_spectrum(Complex z) const;

  SpectrumReport radius_sequence(double p, unsigned n_max) const;
  BoundCheck bounds(double p, unsigned n) const;
  ResolventProbe resolvent_probe(Complex z) const;
  double holomorphy_check(Complex z0, double radius, unsigned points) const;

 private:
  OperatorAction action_;
  FourierCoefficients phi_;
  GridPtr grid_;
  double tau_rel_;
  std::vector<Complex> spectrum_;
  std::shared_ptr<const detail::ModeTable> modes_;
  std::shared_ptr<const SampledFunction> sampled_;
};

}  // namespace pwlab

#include "pwlab/su2.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace pwlab {

namespace {

constexpr double pi = std::numbers::pi;

int highest_weight(const Weight& w) { return w[0]; }

}  // namespace

Su2Model::Su2Model() {
  table_.characters.emplace_back([](const Weight& w) {
    const double n = static_cast<double>(w[0]);
    return Complex(n * (n + 2.0) / 4.0, 0.0);
  });
  // (X^2)^dagger = (-X)(-X) = X^2, so a sum of squares is fixed.
  table_.dagger_images.push_back(CentralElement::generator(1, 0));
}

std::vector<LieWord> Su2Model::generator_words(std::size_t index) const {
  if (index != 0) throw StructuralError("su2 has a single central generator");
  return {LieWord{-1.0, {0, 0}}, LieWord{-1.0, {1, 1}}, LieWord{-1.0, {2, 2}}};
}

std::vector<Weight> Su2Model::enumerate_weights(int cutoff) const {
  if (cutoff < 0) throw PreconditionError("cutoff must be nonnegative");
  std::vector<Weight> out;
  for (int n = 0; n <= cutoff; ++n) out.push_back(Weight::su2(n));
  return out;
}

void Su2Model::validate_weight(const Weight& w) const {
  if (w.size() != 1) throw InvalidWeight("su2 weight " + to_string(w) + " must have one component");
  if (w[0] < 0) throw InvalidWeight("su2 highest weight must be nonnegative, got " + to_string(w));
  if (w[0] > max_weight) {
    throw InvalidWeight("su2 highest weight " + to_string(w) + " exceeds supported maximum " +
                        std::to_string(max_weight));
  }
}

int Su2Model::weight_level(const Weight& w) const {
  validate_weight(w);
  return highest_weight(w);
}

double Su2Model::weight_norm(const Weight& w) const {
  validate_weight(w);
  return static_cast<double>(highest_weight(w));
}

int Su2Model::dimension(const Weight& w) const {
  validate_weight(w);
  return highest_weight(w) + 1;
}

Weight Su2Model::contragredient_weight(const Weight& w) const {
  validate_weight(w);
  return w;
}

Matrix2c su2_matrix(const GroupPoint& g) {
  const double alpha = g.coords[0], beta = g.coords[1], gamma = g.coords[2];
  const double c = std::cos(beta / 2.0), s = std::sin(beta / 2.0);
  Matrix2c u;
  u(0, 0) = std::polar(c, -(alpha + gamma) / 2.0);
  u(0, 1) = std::polar(-s, -(alpha - gamma) / 2.0);
  u(1, 0) = std::polar(s, (alpha - gamma) / 2.0);
  u(1, 1) = std::polar(c, (alpha + gamma) / 2.0);
  return u;
}

GroupPoint euler_angles(const Matrix2c& u) {
  const double c = std::abs(u(0, 0)), s = std::abs(u(1, 0));
  const double beta = 2.0 * std::atan2(s, c);
  // arg(0) == 0 resolves the gimbal-lock cases beta = 0 and beta = pi.
  const double sum = -2.0 * std::arg(u(0, 0));
  const double diff = 2.0 * std::arg(u(1, 0));
  double alpha = (sum + diff) / 2.0;
  double gamma = (sum - diff) / 2.0;
  // Shifting alpha and gamma by 2pi together leaves the matrix unchanged.
  const double k = std::floor(alpha / (2.0 * pi));
  alpha -= 2.0 * pi * k;
  gamma -= 2.0 * pi * k;
  if (alpha >= 2.0 * pi) {
    alpha -= 2.0 * pi;
    gamma -= 2.0 * pi;
  }
  if (alpha < 0.0) alpha = 0.0;
  gamma = std::fmod(gamma, 4.0 * pi);
  if (gamma < 0.0) gamma += 4.0 * pi;
  if (gamma >= 4.0 * pi) gamma = 0.0;
  return GroupPoint{{alpha, std::clamp(beta, 0.0, pi), gamma}};
}

Matrix2c su2_exp(std::size_t basis_index, double t) {
  const Complex ci(0.0, 1.0);
  Matrix2c sigma;
  switch (basis_index) {
    case 0: sigma << 0.0, 1.0, 1.0, 0.0; break;
    case 1: sigma << 0.0, -ci, ci, 0.0; break;
    case 2: sigma << 1.0, 0.0, 0.0, -1.0; break;
    default: throw StructuralError("su2 basis index out of range");
  }
  return std::cos(t / 2.0) * Matrix2c::Identity() - ci * std::sin(t / 2.0) * sigma;
}

std::vector<ComplexMatrix> wigner_ladder(const Matrix2c& u, int n_max) {
  static const auto roots = [] {
    std::array<double, Su2Model::max_weight + 2> r{};
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::sqrt(static_cast<double>(i));
    return r;
  }();
  if (n_max < 0 || n_max > Su2Model::max_weight) {
    throw InvalidWeight("su2 ladder limited to weights in [0, " +
                        std::to_string(Su2Model::max_weight) + "]");
  }
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  out.push_back(ComplexMatrix::Ones(1, 1));
  for (int n = 1; n <= n_max; ++n) {
    const ComplexMatrix& prev = out.back();
    ComplexMatrix cur(n + 1, n + 1);
    // Column k is x' e_k or y' e_{k-1} of the previous weight, with
    // x' = u00 x + u10 y and y' = u01 x + u11 y. Taking the branch whose
    // divisor is at least sqrt(n/2) keeps rounding from compounding in n.
    for (int k = 0; k <= n; ++k) {
      const bool use_x = 2 * k < n;
      const int src = use_x ? k : k - 1;
      const double div = use_x ? roots[n - k] : roots[k];
      const Complex c0 = (use_x ? u(0, 0) : u(0, 1)) / div;
      const Complex c1 = (use_x ? u(1, 0) : u(1, 1)) / div;
      cur(0, k) = c0 * roots[n] * prev(0, src);
      for (int a = 1; a < n; ++a) {
        cur(a, k) = c0 * roots[n - a] * prev(a, src) + c1 * roots[a] * prev(a - 1, src);
      }
      cur(n, k) = c1 * roots[n] * prev(n - 1, src);
    }
    out.push_back(std::move(cur));
  }
  return out;
}

ComplexMatrix Su2Model::irrep_matrix(const Weight& w, const GroupPoint& g) const {
  validate_weight(w);
  return wigner_ladder(su2_matrix(g), highest_weight(w)).back();
}

std::vector<ComplexMatrix> Su2Model::irrep_matrices(std::span<const Weight> ws,
                                                    const GroupPoint& g) const {
  int top = 0;
  for (const auto& w : ws) {
    validate_weight(w);
    top = std::max(top, highest_weight(w));
  }
  auto ladder = wigner_ladder(su2_matrix(g), top);
  std::vector<ComplexMatrix> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(ladder[static_cast<std::size_t>(highest_weight(w))]);
  return out;
}

QuadratureGrid Su2Model::haar_quadrature(int bandlimit) const {
  if (bandlimit < 0) throw PreconditionError("bandlimit must be nonnegative");
  // alpha: integer frequencies up to B. gamma: half-integer frequencies up to
  // B, i.e. integer frequencies up to 2B in gamma/2 over a 4pi period.
  // cos(beta): polynomial degree up to B, Gauss-Legendre exact to 2B+1.
  const int n_alpha = 2 * bandlimit + 1;
  const int n_gamma = 4 * bandlimit + 2;
  const int n_beta = bandlimit + 1;
  std::vector<double> x, wx;
  gauss_legendre(n_beta, x, wx);

  QuadratureGrid grid;
  grid.bandlimit = bandlimit;
  const std::size_t total = static_cast<std::size_t>(n_alpha) * n_beta * n_gamma;
  grid.nodes.reserve(total);
  grid.weights.reserve(total);
  const double scale = 1.0 / (2.0 * n_alpha * n_gamma);
  for (int ia = 0; ia < n_alpha; ++ia) {
    const double alpha = 2.0 * pi * ia / n_alpha;
    for (int ib = 0; ib < n_beta; ++ib) {
      const double beta = std::acos(x[ib]);
      for (int ig = 0; ig < n_gamma; ++ig) {
        const double gamma = 4.0 * pi * ig / n_gamma;
        grid.nodes.push_back(GroupPoint{{alpha, beta, gamma}});
        grid.weights.push_back(wx[ib] * scale);
      }
    }
  }
  return grid;
}

GroupPoint Su2Model::multiply(const GroupPoint& a, const GroupPoint& b) const {
  return euler_angles(su2_matrix(a) * su2_matrix(b));
}

GroupPoint Su2Model::exp_flow(const GroupPoint& g, std::size_t basis_index, double t) const {
  return euler_angles(su2_matrix(g) * su2_exp(basis_index, t));
}

void Su2Model::validate_point(const GroupPoint& g) const {
  if (g.coords.size() != 3) throw PreconditionError("su2 point needs three Euler angles");
  const double alpha = g.coords[0], beta = g.coords[1], gamma = g.coords[2];
  if (!(alpha >= 0.0 && alpha < 2.0 * pi)) throw PreconditionError("alpha outside [0, 2pi)");
  if (!(beta >= 0.0 && beta <= pi)) throw PreconditionError("beta outside [0, pi]");
  if (!(gamma >= 0.0 && gamma < 4.0 * pi)) throw PreconditionError("gamma outside [0, 4pi)");
}

ModelPtr make_su2() { return std::make_shared<Su2Model>(); }

}  // namespace pwlab

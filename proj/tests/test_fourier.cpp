#include "pwlab/fourier.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "pwlab/serialization.hpp"
#include "pwlab/su2.hpp"

namespace pwlab {
namespace {

constexpr double pi = std::numbers::pi;
const Complex I(0.0, 1.0);

GridPtr grid_of(const ModelPtr& model, int b) {
  return std::make_shared<const QuadratureGrid>(model->haar_quadrature(b));
}

double sup_diff(const SampledFunction& a, const SampledFunction& b) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.values().size(); ++j) {
    worst = std::max(worst, std::abs(a.values()[j] - b.values()[j]));
  }
  return worst;
}

// g^{-1} through the group structure rather than through unitarity.
GroupPoint inverse_point(const GroupModel& model, const GroupPoint& g) {
  if (model.kind() == GroupKind::su2) return euler_angles(su2_matrix(g).adjoint());
  GroupPoint out;
  for (double x : g.coords) out.coords.push_back(x == 0.0 ? 0.0 : 2 * pi - x);
  return out;
}

TEST(ForwardTransform, ConstantFunction) {
  for (const auto& model : {make_torus(2), make_su2()}) {
    auto grid = grid_of(model, 3);
    auto f = sample([](const GroupPoint&) { return Complex(1.0); }, grid, 0);
    auto ws = model->enumerate_weights(3);
    auto phi = forward_transform(model, f, ws);
    for (const auto& w : ws) {
      const double expected = (w == model->trivial_weight()) ? 1.0 : 0.0;
      auto m = phi.at(w);
      EXPECT_LE(std::abs(m(0, 0) - expected), 1e-13) << to_string(w);
      if (w != model->trivial_weight()) EXPECT_LE(m.cwiseAbs().maxCoeff(), 1e-13);
    }
  }
}

TEST(ForwardTransform, TorusExponentialLandsOnNegativeWeight) {
  auto t = make_torus(1);
  auto grid = grid_of(t, 4);
  auto ws = t->enumerate_weights(4);
  for (int k = -4; k <= 4; ++k) {
    auto f = sample([k](const GroupPoint& g) { return std::exp(I * (k * g.coords[0])); }, grid,
                    std::abs(k));
    auto phi = forward_transform(t, f, ws);
    for (const auto& w : ws) {
      const double expected = (w[0] == -k) ? 1.0 : 0.0;
      EXPECT_LE(std::abs(phi.at(w)(0, 0) - expected), 1e-13);
    }
  }
}

TEST(ForwardTransform, ConjugatedSpinOneEntryIsSchurDelta) {
  auto su2 = make_su2();
  auto grid = grid_of(su2, 2);
  auto ws = su2->enumerate_weights(2);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      GroupFunction f = [su2, a, b](const GroupPoint& g) {
        return std::conj(su2->irrep_matrix(Weight::su2(2), g)(a, b));
      };
      auto phi = forward_transform(su2, sample(f, grid, 2), ws);
      for (const auto& w : ws) {
        ComplexMatrix expected = ComplexMatrix::Zero(w[0] + 1, w[0] + 1);
        if (w[0] == 2) expected(a, b) = 1.0 / 3.0;
        EXPECT_LE((phi.at(w) - expected).cwiseAbs().maxCoeff(), 1e-13);
      }
    }
  }
}

TEST(ForwardTransform, RejectsInexactGrid) {
  auto su2 = make_su2();
  auto grid = grid_of(su2, 3);
  auto f = sample(as_function(random_band_limited(su2, 4, 1)), grid, 4);
  auto ws = su2->enumerate_weights(4);
  EXPECT_THROW(forward_transform(su2, f, ws), BandLimitError);
  auto low = su2->enumerate_weights(2);
  EXPECT_NO_THROW(forward_transform(su2, f, low));
}

TEST(SampledFunction, LengthMustMatchGrid) {
  auto grid = grid_of(make_torus(1), 2);
  EXPECT_THROW(SampledFunction(grid, std::vector<Complex>(3), 0), PreconditionError);
}

TEST(FourierCoefficients, RejectsWrongShape) {
  FourierCoefficients phi(make_su2());
  EXPECT_THROW(phi.set(Weight::su2(2), ComplexMatrix::Zero(2, 2)), InvalidWeight);
  EXPECT_THROW(phi.set(Weight::su2(-1), ComplexMatrix::Zero(1, 1)), InvalidWeight);
  phi.set(Weight::su2(3), ComplexMatrix::Identity(4, 4));
  EXPECT_EQ(phi.level(), 3);
  EXPECT_EQ(phi.at(Weight::su2(1)), ComplexMatrix::Zero(2, 2));
}

TEST(InverseTransform, SingleEntryFormula) {
  std::mt19937_64 rng(31);
  for (const auto& model : {make_torus(2), make_su2()}) {
    auto grid = grid_of(model, 3);
    for (const auto& w : model->enumerate_weights(3)) {
      const int dim = model->dimension(w);
      ComplexMatrix a = ComplexMatrix::Random(dim, dim);
      FourierCoefficients phi(model);
      phi.set(w, a);
      auto f = inverse_transform(phi, grid);
      for (std::size_t j = 0; j < grid->size(); j += 5) {
        const auto ginv = inverse_point(*model, grid->nodes[j]);
        const Complex expected = static_cast<double>(dim) * (a * model->irrep_matrix(w, ginv)).trace();
        EXPECT_LE(std::abs(f.values()[j] - expected), 1e-12) << model->name() << to_string(w);
        EXPECT_LE(std::abs(evaluate(phi, grid->nodes[j]) - expected), 1e-12);
      }
    }
  }
}

TEST(InverseTransform, ZeroCoefficientsGiveZeroFunction) {
  for (const auto& model : {make_torus(3), make_su2()}) {
    auto grid = grid_of(model, 2);
    auto f = inverse_transform(FourierCoefficients(model), grid);
    EXPECT_EQ(oracle::sup_abs(f.values()), 0.0);
  }
}

TEST(InverseTransform, TwoSidedInverseOnBand) {
  for (const auto& model : {make_torus(1), make_torus(2), make_su2()}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const int cutoff = 4;
      auto grid = grid_of(model, cutoff);
      auto phi = random_band_limited(model, cutoff, seed);
      auto f = inverse_transform(phi, grid);
      auto ws = model->enumerate_weights(cutoff);
      auto phi_back = forward_transform(model, f, ws);
      EXPECT_LE(oracle::max_entry_diff(phi, phi_back), 1e-12) << model->name();
      auto f_back = inverse_transform(phi_back, grid);
      EXPECT_LE(sup_diff(f, f_back), 1e-10);
    }
  }
}

TEST(Transforms, Parseval) {
  for (const auto& model : {make_torus(2), make_su2()}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const int cutoff = 5;
      auto grid = grid_of(model, cutoff);
      auto phi = random_band_limited(model, cutoff, seed);
      auto f = inverse_transform(phi, grid);
      double l2 = 0.0;
      for (std::size_t j = 0; j < grid->size(); ++j) l2 += grid->weights[j] * std::norm(f.values()[j]);
      const double energy = oracle::parseval_energy(phi);
      EXPECT_LE(std::abs(l2 - energy) / energy, 1e-10);
    }
  }
}

TEST(Transforms, Linearity) {
  for (const auto& model : {make_torus(2), make_su2()}) {
    const int cutoff = 3;
    auto grid = grid_of(model, cutoff);
    auto ws = model->enumerate_weights(cutoff);
    auto f = inverse_transform(random_band_limited(model, cutoff, 7), grid);
    auto g = inverse_transform(random_band_limited(model, cutoff, 8), grid);
    const Complex a(0.3, -1.2), b(-2.0, 0.5);
    std::vector<Complex> combo(grid->size());
    for (std::size_t j = 0; j < combo.size(); ++j) combo[j] = a * f.values()[j] + b * g.values()[j];
    auto lhs = forward_transform(model, SampledFunction(grid, combo, cutoff), ws);
    auto rhs = forward_transform(model, f, ws) * a + forward_transform(model, g, ws) * b;
    double scale = 0.0;
    for (const auto& [w, m] : rhs.entries()) scale = std::max(scale, m.cwiseAbs().maxCoeff());
    EXPECT_LE(oracle::max_entry_diff(lhs, rhs) / scale, 1e-13);
  }
}

TEST(Transforms, InjectivityOnBand) {
  for (const auto& model : {make_torus(2), make_su2()}) {
    const int cutoff = 3;
    auto grid = grid_of(model, cutoff);
    auto f = inverse_transform(random_band_limited(model, cutoff, 3), grid);
    auto phi = forward_transform(model, f, model->enumerate_weights(cutoff));
    FourierCoefficients zeroed(model);
    for (const auto& [w, m] : phi.entries()) zeroed.set(w, ComplexMatrix::Zero(m.rows(), m.cols()));
    EXPECT_LE(oracle::sup_abs(inverse_transform(zeroed, grid).values()), 1e-10);
  }
}

TEST(Support, Examples) {
  auto t = make_torus(1);
  auto grid = grid_of(t, 5);
  auto ws = t->enumerate_weights(5);
  for (int k : {-3, 0, 2}) {
    auto f = sample([k](const GroupPoint& g) { return std::exp(I * (k * g.coords[0])); }, grid, 3);
    auto s = support(forward_transform(t, f, ws), 1e-10);
    EXPECT_EQ(s.weights, std::set<Weight>{Weight({-k})});
    EXPECT_EQ(s.threshold_rel, 1e-10);
  }
  EXPECT_TRUE(support(FourierCoefficients(t)).weights.empty());

  auto tiny = sample(
      [](const GroupPoint& g) {
        return std::exp(I * g.coords[0]) + 1e-14 * std::exp(I * (5.0 * g.coords[0]));
      },
      grid, 5);
  EXPECT_EQ(support(forward_transform(t, tiny, ws), 1e-10).weights, std::set<Weight>{Weight({-1})});
}

TEST(Support, ThresholdMustBeInUnitInterval) {
  FourierCoefficients phi(make_torus(1));
  EXPECT_THROW(support(phi, 0.0), PreconditionError);
  EXPECT_THROW(support(phi, 1.0), PreconditionError);
}

TEST(SchwartzSeminorm, Examples) {
  auto t = make_torus(2);
  FourierCoefficients phi(t);
  phi.set(Weight({0, 2}), ComplexMatrix::Constant(1, 1, Complex(0.0, 1.5)));
  EXPECT_NEAR(schwartz_seminorm(phi, 3), 8 * 1.5, 1e-15);
  auto su2 = make_su2();
  FourierCoefficients psi(su2);
  psi.set(Weight::su2(2), ComplexMatrix::Identity(3, 3) * 0.5);
  EXPECT_NEAR(schwartz_seminorm(psi, 3), 8 * 0.5 * std::sqrt(3.0), 1e-14);
  for (int s = 0; s <= 5; ++s) {
    EXPECT_EQ(schwartz_seminorm(FourierCoefficients(t), s), 0.0);
  }
}

// sup over real x >= 0 of x^s sqrt(x + 1) exp(-t x (x + 2) / 4), by a dense
// scan followed by golden-section refinement.
double heat_envelope_sup(int s, double t) {
  auto h = [s, t](double x) {
    return std::pow(x, s) * std::sqrt(x + 1.0) * std::exp(-t * x * (x + 2.0) / 4.0);
  };
  double best_x = 0.0, best = h(0.0);
  for (double x = 0.0; x <= 60.0; x += 1e-3) {
    if (h(x) > best) best = h(best_x = x);
  }
  double lo = std::max(0.0, best_x - 1e-3), hi = best_x + 1e-3;
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 100; ++it) {
    const double m1 = hi - r * (hi - lo), m2 = lo + r * (hi - lo);
    if (h(m1) < h(m2)) lo = m1; else hi = m2;
  }
  return std::max(best, h((lo + hi) / 2));
}

TEST(SchwartzSeminorm, HeatKernelBelowContinuousEnvelope) {
  auto su2 = make_su2();
  const double t = 0.5;
  FourierCoefficients phi(su2);
  for (int n = 0; n <= 20; ++n) {
    phi.set(Weight::su2(n), ComplexMatrix::Identity(n + 1, n + 1) * std::exp(-t * n * (n + 2) / 4.0));
  }
  double prev = -1.0;
  for (int s = 0; s <= 8; ++s) {
    const double q = schwartz_seminorm(phi, s);
    EXPECT_GT(q, prev) << s;
    EXPECT_LE(q, heat_envelope_sup(s, t) * (1 + 1e-12)) << s;
    prev = q;
  }
}

TEST(RandomBandLimited, ReproducibleAndComplete) {
  auto su2 = make_su2();
  auto a = random_band_limited(su2, 4, 99, 2.0);
  auto b = random_band_limited(su2, 4, 99, 2.0);
  auto c = random_band_limited(su2, 4, 100, 2.0);
  EXPECT_EQ(oracle::max_entry_diff(a, b), 0.0);
  EXPECT_GT(oracle::max_entry_diff(a, c), 0.0);
  EXPECT_EQ(a.entries().size(), 5u);
  for (const auto& [w, m] : a.entries()) {
    EXPECT_LE(m.real().cwiseAbs().maxCoeff(), 2.0);
    EXPECT_LE(m.imag().cwiseAbs().maxCoeff(), 2.0);
  }
}

TEST(Serialization, CoefficientsRoundTripExactly) {
  for (const auto& model : {make_torus(2), make_su2()}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto phi = random_band_limited(model, 3, seed);
      const std::string text = coefficients_to_json(phi).dump();
      auto back = coefficients_from_json(Json::parse(text), model, "f");
      EXPECT_EQ(oracle::max_entry_diff(phi, back), 0.0);
    }
  }
}

TEST(Serialization, MalformedCoefficientsNamePath) {
  auto su2 = make_su2();
  auto bad = Json::parse(R"([{"weight": [1], "matrix": [[1, 0], [0, 0], [0, 0]]}])");
  try {
    coefficients_from_json(bad, su2, "function.coefficients");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.path(), "function.coefficients[0].matrix");
  }
  auto dup = Json::parse(R"([{"weight": [0], "matrix": [[1, 0]]}, {"weight": [0], "matrix": [[1, 0]]}])");
  EXPECT_THROW(coefficients_from_json(dup, su2, "f"), ConfigError);
}

}  // namespace
}  // namespace pwlab

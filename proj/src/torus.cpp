#include "pwlab/torus.hpp"

#include <cmath>
#include <numbers>

namespace pwlab {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_angle(double x) {
  double y = std::fmod(x, two_pi);
  if (y < 0.0) y += two_pi;
  if (y >= two_pi) y = 0.0;
  return y;
}

}  // namespace

TorusModel::TorusModel(int dimension) : d_(dimension) {
  if (d_ < 1) throw PreconditionError("torus dimension must be at least 1");
  const auto arity = static_cast<std::size_t>(d_);
  for (std::size_t j = 0; j < arity; ++j) {
    table_.characters.emplace_back(
        [j](const Weight& w) { return Complex(0.0, static_cast<double>(w[j])); });
    table_.dagger_images.push_back(CentralElement::generator(arity, j) * Complex(-1.0, 0.0));
  }
}

std::string TorusModel::name() const { return "torus(d=" + std::to_string(d_) + ")"; }

std::vector<LieWord> TorusModel::generator_words(std::size_t index) const {
  if (index >= static_cast<std::size_t>(d_)) throw StructuralError("torus generator out of range");
  return {LieWord{1.0, {index}}};
}

std::vector<Weight> TorusModel::enumerate_weights(int cutoff) const {
  if (cutoff < 0) throw PreconditionError("cutoff must be nonnegative");
  std::vector<Weight> out;
  std::vector<int> cur(d_, -cutoff);
  while (true) {
    out.emplace_back(cur);
    int pos = d_ - 1;
    while (pos >= 0 && cur[pos] == cutoff) {
      cur[pos] = -cutoff;
      --pos;
    }
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

void TorusModel::validate_weight(const Weight& w) const {
  if (w.size() != static_cast<std::size_t>(d_)) {
    throw InvalidWeight("torus weight " + to_string(w) + " does not have " + std::to_string(d_) +
                        " components");
  }
}

int TorusModel::weight_level(const Weight& w) const {
  validate_weight(w);
  int level = 0;
  for (int c : w.components) level = std::max(level, std::abs(c));
  return level;
}

double TorusModel::weight_norm(const Weight& w) const {
  validate_weight(w);
  double s = 0.0;
  for (int c : w.components) s += static_cast<double>(c) * c;
  return std::sqrt(s);
}

int TorusModel::dimension(const Weight& w) const {
  validate_weight(w);
  return 1;
}

Weight TorusModel::contragredient_weight(const Weight& w) const {
  validate_weight(w);
  std::vector<int> c(w.components);
  for (int& x : c) x = -x;
  return Weight(std::move(c));
}

ComplexMatrix TorusModel::irrep_matrix(const Weight& w, const GroupPoint& g) const {
  validate_weight(w);
  double phase = 0.0;
  for (int j = 0; j < d_; ++j) phase += w[j] * g.coords[j];
  ComplexMatrix m(1, 1);
  m(0, 0) = std::polar(1.0, phase);
  return m;
}

QuadratureGrid TorusModel::haar_quadrature(int bandlimit) const {
  if (bandlimit < 0) throw PreconditionError("bandlimit must be nonnegative");
  // Trapezoid with N points integrates e^{ik theta} exactly for |k| < N.
  const int n = 2 * bandlimit + 1;
  QuadratureGrid grid;
  grid.bandlimit = bandlimit;
  std::size_t total = 1;
  for (int j = 0; j < d_; ++j) total *= static_cast<std::size_t>(n);
  grid.nodes.reserve(total);
  grid.weights.assign(total, 1.0 / static_cast<double>(total));
  std::vector<int> idx(d_, 0);
  for (std::size_t k = 0; k < total; ++k) {
    GroupPoint p{std::vector<double>(d_)};
    for (int j = 0; j < d_; ++j) p.coords[j] = two_pi * idx[j] / n;
    grid.nodes.push_back(std::move(p));
    for (int j = d_ - 1; j >= 0; --j) {
      if (++idx[j] < n) break;
      idx[j] = 0;
    }
  }
  return grid;
}

GroupPoint TorusModel::multiply(const GroupPoint& a, const GroupPoint& b) const {
  GroupPoint out{std::vector<double>(d_)};
  for (int j = 0; j < d_; ++j) out.coords[j] = wrap_angle(a.coords[j] + b.coords[j]);
  return out;
}

GroupPoint TorusModel::exp_flow(const GroupPoint& g, std::size_t basis_index, double t) const {
  if (basis_index >= static_cast<std::size_t>(d_)) throw StructuralError("basis index out of range");
  GroupPoint out = g;
  out.coords[basis_index] = wrap_angle(out.coords[basis_index] + t);
  return out;
}

void TorusModel::validate_point(const GroupPoint& g) const {
  if (g.coords.size() != static_cast<std::size_t>(d_)) {
    throw PreconditionError("torus point has the wrong number of angles");
  }
  for (double x : g.coords) {
    if (!(x >= 0.0 && x < two_pi)) throw PreconditionError("torus angle outside [0, 2pi)");
  }
}

ModelPtr make_torus(int dimension) { return std::make_shared<TorusModel>(dimension); }

}  // namespace pwlab

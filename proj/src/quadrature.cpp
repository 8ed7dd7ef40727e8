#include "pwlab/group_model.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace pwlab {

void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights) {
  if (count < 1) throw PreconditionError("Gauss-Legendre rule needs at least one node");
  nodes.assign(count, 0.0);
  weights.assign(count, 0.0);
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton on P_count.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      if (count == 1) p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_count(x), p0 = P_{count-1}(x)
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= count; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = count * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[count - 1 - i] = x;
    weights[i] = w;
    weights[count - 1 - i] = w;
  }
  if (count % 2 == 1) nodes[count / 2] = 0.0;
}

void write_grid(std::ostream& os, const QuadratureGrid& grid) {
  const std::size_t dim = grid.nodes.empty() ? 0 : grid.nodes.front().coords.size();
  for (std::size_t c = 0; c < dim; ++c) os << "x" << c << ",";
  os << "weight\n";
  char buf[32];
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (double x : grid.nodes[i].coords) {
      std::snprintf(buf, sizeof buf, "%.17g", x);
      os << buf << ",";
    }
    std::snprintf(buf, sizeof buf, "%.17g", grid.weights[i]);
    os << buf << "\n";
  }
}

}  // namespace pwlab

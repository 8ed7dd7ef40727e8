#pragma once

#include "pwlab/repr_theory.hpp"
#include "pwlab/types.hpp"

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pwlab {

enum class GroupKind { torus, su2 };

/// Normalized Haar quadrature on a compact group.
///
/// `bandlimit` B means: the integral of a product of two matrix coefficients
/// of irreps with weight level <= B is exact. Equivalently, any single matrix
/// coefficient of level <= 2B integrates exactly.
struct QuadratureGrid {
  std::vector<GroupPoint> nodes;
  std::vector<double> weights;
  int bandlimit = 0;

  std::size_t size() const { return nodes.size(); }
  int exact_level() const { return 2 * bandlimit; }
};

/// One term c * X_{a1} X_{a2} ... of a generator written in a basis of the
/// Lie algebra; used to realize generators as differential operators.
struct LieWord {
  double coefficient;
  std::vector<std::size_t> letters;
};

/// Concrete compact group: unitary dual, irreps, Haar quadrature and the
/// realization of central generators as left-invariant operators.
class GroupModel {
 public:
  virtual ~GroupModel() = default;

  virtual GroupKind kind() const = 0;
  virtual std::string name() const = 0;

  /// Number of central generators of the center of U(g)_C.
  std::size_t generator_count() const { return character_table().arity(); }
  virtual const GeneratorCharacterTable& character_table() const = 0;
  /// Expansion of central generator `index` in the Lie algebra basis.
  virtual std::vector<LieWord> generator_words(std::size_t index) const = 0;
  virtual std::size_t algebra_dimension() const = 0;

  virtual std::vector<Weight> enumerate_weights(int cutoff) const = 0;
  virtual void validate_weight(const Weight& w) const = 0;
  /// Size of a weight for band-limit bookkeeping: max-norm on T^d, n on SU(2).
  /// Levels are subadditive under tensor products.
  virtual int weight_level(const Weight& w) const = 0;
  /// Norm used by the Schwartz seminorms: Euclidean on T^d, n on SU(2).
  virtual double weight_norm(const Weight& w) const = 0;
  virtual int dimension(const Weight& w) const = 0;
  virtual Weight contragredient_weight(const Weight& w) const = 0;
  virtual Weight trivial_weight() const = 0;

  virtual ComplexMatrix irrep_matrix(const Weight& w, const GroupPoint& g) const = 0;
  /// Batched evaluation at one point; backends may share work across weights.
  virtual std::vector<ComplexMatrix> irrep_matrices(std::span<const Weight> ws,
                                                    const GroupPoint& g) const;

  virtual QuadratureGrid haar_quadrature(int bandlimit) const = 0;

  virtual GroupPoint identity() const = 0;
  virtual GroupPoint multiply(const GroupPoint& a, const GroupPoint& b) const = 0;
  /// g * exp(t X_k) for basis element X_k of the Lie algebra.
  virtual GroupPoint exp_flow(const GroupPoint& g, std::size_t basis_index, double t) const = 0;
  virtual void validate_point(const GroupPoint& g) const = 0;
};

using ModelPtr = std::shared_ptr<const GroupModel>;

ModelPtr make_torus(int dimension);
ModelPtr make_su2();

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights);

/// CSV export of a grid: one node per line, coordinates then weight.
void write_grid(std::ostream& os, const QuadratureGrid& grid);

}  // namespace pwlab

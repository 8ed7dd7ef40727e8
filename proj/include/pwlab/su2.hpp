#pragma once

#include "pwlab/group_model.hpp"

namespace pwlab {

using Matrix2c = Eigen::Matrix2cd;

/// SU(2) in Euler angles g = exp(alpha X3) exp(beta X2) exp(gamma X3) with
/// X_k = -(i/2) sigma_k, alpha in [0, 2pi), beta in [0, pi], gamma in [0, 4pi).
///
/// Irreps are labelled by the highest weight n >= 0 (spin n/2). The center of
/// U(su(2))_C is generated by the Casimir Omega = -(X1^2 + X2^2 + X3^2), which
/// acts by (n/2)(n/2 + 1) in the irrep of weight n.
class Su2Model final : public GroupModel {
 public:
  /// Largest supported highest weight.
  static constexpr int max_weight = 64;

  Su2Model();

  GroupKind kind() const override { return GroupKind::su2; }
  std::string name() const override { return "su2"; }

  const GeneratorCharacterTable& character_table() const override { return table_; }
  std::vector<LieWord> generator_words(std::size_t index) const override;
  std::size_t algebra_dimension() const override { return 3; }

  std::vector<Weight> enumerate_weights(int cutoff) const override;
  void validate_weight(const Weight& w) const override;
  int weight_level(const Weight& w) const override;
  double weight_norm(const Weight& w) const override;
  int dimension(const Weight& w) const override;
  Weight contragredient_weight(const Weight& w) const override;
  Weight trivial_weight() const override { return Weight::su2(0); }

  ComplexMatrix irrep_matrix(const Weight& w, const GroupPoint& g) const override;
  std::vector<ComplexMatrix> irrep_matrices(std::span<const Weight> ws,
                                            const GroupPoint& g) const override;
  QuadratureGrid haar_quadrature(int bandlimit) const override;

  GroupPoint identity() const override { return GroupPoint{{0.0, 0.0, 0.0}}; }
  GroupPoint multiply(const GroupPoint& a, const GroupPoint& b) const override;
  GroupPoint exp_flow(const GroupPoint& g, std::size_t basis_index, double t) const override;
  void validate_point(const GroupPoint& g) const override;

 private:
  GeneratorCharacterTable table_;
};

/// Defining 2x2 representation of an Euler-angle point.
Matrix2c su2_matrix(const GroupPoint& g);

/// Euler angles of a unitary 2x2 matrix with determinant one, normalized to
/// the canonical ranges.
GroupPoint euler_angles(const Matrix2c& u);

/// exp(t X_k) in the defining representation, k in {0, 1, 2}.
Matrix2c su2_exp(std::size_t basis_index, double t);

/// Irrep matrices of weights 0..n_max at u, built by the recursion
/// D^n = Sym^n(u) in the orthonormal monomial basis
/// x^{n-a} y^a / sqrt((n-a)! a!). Rows/columns are ordered m = n/2 - a.
std::vector<ComplexMatrix> wigner_ladder(const Matrix2c& u, int n_max);

}  // namespace pwlab

#pragma once

#include "pwlab/group_model.hpp"

namespace pwlab {

/// The torus T^d = R^d / 2 pi Z^d. Irreps are characters
/// theta -> exp(i <lambda, theta>), lambda in Z^d; the center of U(t)_C is
/// the polynomial algebra on d_1..d_d with chi_lambda(d_j) = i lambda_j.
class TorusModel final : public GroupModel {
 public:
  explicit TorusModel(int dimension);

  GroupKind kind() const override { return GroupKind::torus; }
  std::string name() const override;
  int dimension_of_torus() const { return d_; }

  const GeneratorCharacterTable& character_table() const override { return table_; }
  std::vector<LieWord> generator_words(std::size_t index) const override;
  std::size_t algebra_dimension() const override { return static_cast<std::size_t>(d_); }

  std::vector<Weight> enumerate_weights(int cutoff) const override;
  void validate_weight(const Weight& w) const override;
  int weight_level(const Weight& w) const override;
  double weight_norm(const Weight& w) const override;
  int dimension(const Weight& w) const override;
  Weight contragredient_weight(const Weight& w) const override;
  Weight trivial_weight() const override { return Weight(std::vector<int>(d_, 0)); }

  ComplexMatrix irrep_matrix(const Weight& w, const GroupPoint& g) const override;
  QuadratureGrid haar_quadrature(int bandlimit) const override;

  GroupPoint identity() const override { return GroupPoint{std::vector<double>(d_, 0.0)}; }
  GroupPoint multiply(const GroupPoint& a, const GroupPoint& b) const override;
  GroupPoint exp_flow(const GroupPoint& g, std::size_t basis_index, double t) const override;
  void validate_point(const GroupPoint& g) const override;

 private:
  int d_;
  GeneratorCharacterTable table_;
};

}  // namespace pwlab

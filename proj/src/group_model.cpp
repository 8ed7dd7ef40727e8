#include "pwlab/group_model.hpp"

namespace pwlab {

std::vector<ComplexMatrix> GroupModel::irrep_matrices(std::span<const Weight> ws,
                                                      const GroupPoint& g) const {
  std::vector<ComplexMatrix> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(irrep_matrix(w, g));
  return out;
}

}  // namespace pwlab

#pragma once

#include "pwlab/central_element.hpp"
#include "pwlab/group_model.hpp"

namespace pwlab {

/// Central-difference realization of left-invariant differential operators,
/// (X f)(g) = d/dt f(g exp(tX)) at t = 0. Serves as an oracle independent of
/// the Fourier-side characters.
struct FiniteDifferenceOptions {
  enum class Stencil { central3, central5 };

  double step = 1e-4;
  Stencil stencil = Stencil::central3;
};

Complex directional_derivative(const GroupModel& model, const GroupFunction& f,
                               std::size_t basis_index, const GroupPoint& g,
                               const FiniteDifferenceOptions& opts = {});

Complex second_directional_derivative(const GroupModel& model, const GroupFunction& f,
                                      std::size_t basis_index, const GroupPoint& g,
                                      const FiniteDifferenceOptions& opts = {});

/// X_{a1} ... X_{ak} f. A letter repeated twice in a row uses the
/// second-derivative stencil; other letters nest first derivatives.
GroupFunction apply_word(ModelPtr model, GroupFunction f, const std::vector<std::size_t>& letters,
                         FiniteDifferenceOptions opts = {});

/// The central generator `index` applied to f through its Lie-word expansion.
GroupFunction apply_generator(ModelPtr model, GroupFunction f, std::size_t index,
                              FiniteDifferenceOptions opts = {});

/// D f for a polynomial D in the central generators, by nested finite
/// differences. Throws StructuralError on arity mismatch.
GroupFunction apply_central_element(ModelPtr model, const CentralElement& d, GroupFunction f,
                                    FiniteDifferenceOptions opts = {});

}  // namespace pwlab

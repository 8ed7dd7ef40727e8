#pragma once

#include "pwlab/central_element.hpp"

#include <functional>
#include <vector>

namespace pwlab {

class GroupModel;

/// Per-generator data a backend supplies: the scalar each central generator
/// acts by in the irrep of a given weight, and the generator's image under
/// the anti-homomorphism X -> -X.
struct GeneratorCharacterTable {
  std::vector<std::function<Complex(const Weight&)>> characters;
  std::vector<CentralElement> dagger_images;

  std::size_t arity() const { return characters.size(); }
};

/// chi_lambda(D): substitutes each generator's character value into the
/// polynomial. Throws StructuralError on arity mismatch.
Complex infinitesimal_character(const CentralElement& d, const Weight& lambda,
                                const GeneratorCharacterTable& table);

/// Complex-linear anti-homomorphism with X^dagger = -X, applied monomial-wise.
/// Generators are central, so the order reversal is invisible and each
/// monomial maps to the product of the generator images.
CentralElement dagger(const CentralElement& d, const GeneratorCharacterTable& table);

/// chi of the contragredient of pi_lambda at D. Agrees with
/// infinitesimal_character(dagger(d), lambda).
Complex character_of_contragredient(const CentralElement& d, const Weight& lambda,
                                    const GroupModel& model);

}  // namespace pwlab

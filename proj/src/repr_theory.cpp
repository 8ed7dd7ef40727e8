#include "pwlab/repr_theory.hpp"

#include "pwlab/group_model.hpp"

#include <cmath>

namespace pwlab {

namespace {

void check_arity(const CentralElement& d, const GeneratorCharacterTable& table) {
  if (d.arity() != table.arity() || table.dagger_images.size() != table.arity()) {
    throw StructuralError("central element has arity " + std::to_string(d.arity()) +
                          " but the backend declares " + std::to_string(table.arity()) +
                          " generators");
  }
}

Complex int_pow(Complex base, int e) {
  Complex out(1.0, 0.0);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace

Complex infinitesimal_character(const CentralElement& d, const Weight& lambda,
                                const GeneratorCharacterTable& table) {
  check_arity(d, table);
  std::vector<Complex> gen(table.arity());
  for (std::size_t i = 0; i < gen.size(); ++i) gen[i] = table.characters[i](lambda);

  Complex value(0.0, 0.0);
  for (const auto& [exps, coeff] : d.terms()) {
    Complex term = coeff;
    for (std::size_t i = 0; i < exps.size(); ++i) term *= int_pow(gen[i], exps[i]);
    value += term;
  }
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw Error("infinitesimal character at " + to_string(lambda) + " is not finite");
  }
  return value;
}

CentralElement dagger(const CentralElement& d, const GeneratorCharacterTable& table) {
  check_arity(d, table);
  CentralElement out(d.arity());
  for (const auto& [exps, coeff] : d.terms()) {
    CentralElement mono = CentralElement::constant(d.arity(), coeff);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      mono = mono * table.dagger_images[i].pow(static_cast<unsigned>(exps[i]));
    }
    out = out + mono;
  }
  return out;
}

Complex character_of_contragredient(const CentralElement& d, const Weight& lambda,
                                    const GroupModel& model) {
  return infinitesimal_character(d, model.contragredient_weight(lambda), model.character_table());
}

}  // namespace pwlab

#include "pwlab/finite_difference.hpp"

namespace pwlab {

namespace {

Complex at(const GroupModel& model, const GroupFunction& f, std::size_t k, const GroupPoint& g,
           double t) {
  return f(model.exp_flow(g, k, t));
}

}  // namespace

Complex directional_derivative(const GroupModel& model, const GroupFunction& f,
                               std::size_t basis_index, const GroupPoint& g,
                               const FiniteDifferenceOptions& opts) {
  const double h = opts.step;
  if (!(h > 0.0)) throw PreconditionError("finite-difference step must be positive");
  const std::size_t k = basis_index;
  if (opts.stencil == FiniteDifferenceOptions::Stencil::central3) {
    return (at(model, f, k, g, h) - at(model, f, k, g, -h)) / (2.0 * h);
  }
  return (-at(model, f, k, g, 2.0 * h) + 8.0 * at(model, f, k, g, h) -
          8.0 * at(model, f, k, g, -h) + at(model, f, k, g, -2.0 * h)) /
         (12.0 * h);
}

Complex second_directional_derivative(const GroupModel& model, const GroupFunction& f,
                                      std::size_t basis_index, const GroupPoint& g,
                                      const FiniteDifferenceOptions& opts) {
  const double h = opts.step;
  if (!(h > 0.0)) throw PreconditionError("finite-difference step must be positive");
  const std::size_t k = basis_index;
  const Complex f0 = f(g);
  if (opts.stencil == FiniteDifferenceOptions::Stencil::central3) {
    return (at(model, f, k, g, h) - 2.0 * f0 + at(model, f, k, g, -h)) / (h * h);
  }
  return (-at(model, f, k, g, 2.0 * h) + 16.0 * at(model, f, k, g, h) - 30.0 * f0 +
          16.0 * at(model, f, k, g, -h) - at(model, f, k, g, -2.0 * h)) /
         (12.0 * h * h);
}

GroupFunction apply_word(ModelPtr model, GroupFunction f, const std::vector<std::size_t>& letters,
                         FiniteDifferenceOptions opts) {
  // Innermost letter acts first: X_a X_b f = X_a (X_b f).
  GroupFunction cur = std::move(f);
  std::size_t i = letters.size();
  while (i > 0) {
    if (i >= 2 && letters[i - 1] == letters[i - 2]) {
      const std::size_t k = letters[i - 1];
      cur = [model, inner = std::move(cur), k, opts](const GroupPoint& g) {
        return second_directional_derivative(*model, inner, k, g, opts);
      };
      i -= 2;
    } else {
      const std::size_t k = letters[i - 1];
      cur = [model, inner = std::move(cur), k, opts](const GroupPoint& g) {
        return directional_derivative(*model, inner, k, g, opts);
      };
      i -= 1;
    }
  }
  return cur;
}

GroupFunction apply_generator(ModelPtr model, GroupFunction f, std::size_t index,
                              FiniteDifferenceOptions opts) {
  std::vector<std::pair<double, GroupFunction>> parts;
  for (const auto& word : model->generator_words(index)) {
    parts.emplace_back(word.coefficient, apply_word(model, f, word.letters, opts));
  }
  return [parts = std::move(parts)](const GroupPoint& g) {
    Complex sum(0.0, 0.0);
    for (const auto& [c, fn] : parts) sum += c * fn(g);
    return sum;
  };
}

GroupFunction apply_central_element(ModelPtr model, const CentralElement& d, GroupFunction f,
                                    FiniteDifferenceOptions opts) {
  if (d.arity() != model->generator_count()) {
    throw StructuralError("central element arity " + std::to_string(d.arity()) +
                          " does not match backend " + model->name());
  }
  std::vector<std::pair<Complex, GroupFunction>> parts;
  for (const auto& [exps, coeff] : d.terms()) {
    GroupFunction cur = f;
    for (std::size_t j = 0; j < exps.size(); ++j) {
      for (int e = 0; e < exps[j]; ++e) cur = apply_generator(model, cur, j, opts);
    }
    parts.emplace_back(coeff, std::move(cur));
  }
  return [parts = std::move(parts)](const GroupPoint& g) {
    Complex sum(0.0, 0.0);
    for (const auto& [c, fn] : parts) sum += c * fn(g);
    return sum;
  };
}

}  // namespace pwlab

#pragma once

#include "pwlab/types.hpp"

#include <map>
#include <utility>
#include <vector>

namespace pwlab {

/// Element of the center of U(g)_C, written as a commutative polynomial in
/// the backend's central generators (d_1..d_d on T^d, the Casimir on SU(2)).
///
/// Terms are keyed by exponent vectors in lexicographic order and zero
/// coefficients are never stored, so equality is structural.
class CentralElement {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Complex>;

  explicit CentralElement(std::size_t arity);
  CentralElement(std::size_t arity, const std::vector<std::pair<Exponents, Complex>>& terms);

  static CentralElement constant(std::size_t arity, Complex c);
  static CentralElement generator(std::size_t arity, std::size_t index);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  Complex coefficient(const Exponents& e) const;

  CentralElement operator+(const CentralElement& other) const;
  CentralElement operator-(const CentralElement& other) const;
  CentralElement operator*(const CentralElement& other) const;
  CentralElement operator*(Complex scalar) const;
  CentralElement pow(unsigned n) const;

  bool operator==(const CentralElement& other) const = default;

 private:
  void add_term(const Exponents& e, Complex c);
  void check_same_arity(const CentralElement& other) const;

  std::size_t arity_;
  Terms terms_;
};

inline CentralElement operator*(Complex scalar, const CentralElement& d) { return d * scalar; }

}  // namespace pwlab

#include "pwlab/central_element.hpp"

#include <algorithm>
#include <numeric>

namespace pwlab {

std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.components.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.components[i]);
  }
  return s + ")";
}

CentralElement::CentralElement(std::size_t arity) : arity_(arity) {}

CentralElement::CentralElement(std::size_t arity,
                               const std::vector<std::pair<Exponents, Complex>>& terms)
    : arity_(arity) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

CentralElement CentralElement::constant(std::size_t arity, Complex c) {
  return CentralElement(arity, {{Exponents(arity, 0), c}});
}

CentralElement CentralElement::generator(std::size_t arity, std::size_t index) {
  if (index >= arity) {
    throw StructuralError("generator index " + std::to_string(index) + " out of range for arity " +
                          std::to_string(arity));
  }
  Exponents e(arity, 0);
  e[index] = 1;
  return CentralElement(arity, {{e, Complex(1.0, 0.0)}});
}

void CentralElement::add_term(const Exponents& e, Complex c) {
  if (e.size() != arity_) {
    throw StructuralError("exponent vector of length " + std::to_string(e.size()) +
                          " for a central element of arity " + std::to_string(arity_));
  }
  if (std::any_of(e.begin(), e.end(), [](int k) { return k < 0; })) {
    throw StructuralError("negative exponent in central element");
  }
  if (c == Complex(0.0, 0.0)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
  }
}

void CentralElement::check_same_arity(const CentralElement& other) const {
  if (other.arity_ != arity_) {
    throw StructuralError("arity mismatch: " + std::to_string(arity_) + " vs " +
                          std::to_string(other.arity_));
  }
}

int CentralElement::degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

Complex CentralElement::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

CentralElement CentralElement::operator+(const CentralElement& other) const {
  check_same_arity(other);
  CentralElement out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

CentralElement CentralElement::operator-(const CentralElement& other) const {
  return *this + other * Complex(-1.0, 0.0);
}

CentralElement CentralElement::operator*(const CentralElement& other) const {
  check_same_arity(other);
  CentralElement out(arity_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      Exponents e(arity_);
      for (std::size_t i = 0; i < arity_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

CentralElement CentralElement::operator*(Complex scalar) const {
  CentralElement out(arity_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * scalar);
  return out;
}

CentralElement CentralElement::pow(unsigned n) const {
  CentralElement out = constant(arity_, 1.0);
  for (unsigned i = 0; i < n; ++i) out = out * *this;
  return out;
}

}  // namespace pwlab

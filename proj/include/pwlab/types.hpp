#pragma once

#include <Eigen/Dense>

#include <complex>
#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pwlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Label of an irreducible unitary representation.
///
/// Torus T^d: an integer vector of length d. SU(2): a single nonnegative
/// highest weight n (spin n/2, dimension n+1). Ordering is lexicographic,
/// which is the canonical order used for all weight maps.
struct Weight {
  std::vector<int> components;

  Weight() = default;
  explicit Weight(std::vector<int> c) : components(std::move(c)) {}

  static Weight su2(int n) { return Weight({n}); }

  std::size_t size() const { return components.size(); }
  int operator[](std::size_t i) const { return components[i]; }

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;
};

std::string to_string(const Weight& w);

/// Group element in coordinates: angles on T^d, Euler angles (alpha, beta,
/// gamma) on SU(2).
struct GroupPoint {
  std::vector<double> coords;
};

using GroupFunction = std::function<Complex(const GroupPoint&)>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generator arity of a central element does not match the backend.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class InvalidWeight : public Error {
 public:
  using Error::Error;
};

/// A quadrature grid is not exact for the requested transform.
class BandLimitError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace pwlab

#pragma once

#include "pwlab/central_element.hpp"
#include "pwlab/fourier.hpp"
#include "pwlab/local_spectral.hpp"

#include "json.hpp"

namespace pwlab {

using Json = nlohmann::ordered_json;

/// Thrown for malformed documents; `path` names the offending field.
class ConfigError : public Error {
 public:
  ConfigError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& path);

/// Non-finite values become the strings "inf", "-inf", "nan".
Json real_to_json(double x);

/// [{"exponents": [...], "re": x, "im": y}, ...] in lexicographic term order.
Json central_element_to_json(const CentralElement& d);
CentralElement central_element_from_json(const Json& j, std::size_t arity, const std::string& path);

/// [{"weight": [...], "matrix": [[re, im], ...]}, ...] with the matrix
/// flattened row-major.
Json coefficients_to_json(const FourierCoefficients& phi);
FourierCoefficients coefficients_from_json(const Json& j, ModelPtr model, const std::string& path);

Json spectrum_report_to_json(const SpectrumReport& rep);

/// Rejects keys of `obj` outside `allowed`.
void require_known_keys(const Json& obj, std::initializer_list<const char*> allowed,
                        const std::string& path);

}  // namespace pwlab

#include "pwlab/serialization.hpp"

#include <cmath>

namespace pwlab {

namespace {

double number_at(const Json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) throw ConfigError(path + "." + key, "missing");
  const Json& v = j.at(key);
  if (!v.is_number()) throw ConfigError(path + "." + key, "expected a number");
  return v.get<double>();
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected a list of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) {
      throw ConfigError(path + "[" + std::to_string(i) + "]", "expected an integer");
    }
    out.push_back(j[i].get<int>());
  }
  return out;
}

}  // namespace

void require_known_keys(const Json& obj, std::initializer_list<const char*> allowed,
                        const std::string& path) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || item.key() == k;
    if (!known) throw ConfigError(path + "." + item.key(), "unknown key");
  }
}

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j, const std::string& path) {
  require_known_keys(j, {"re", "im"}, path);
  return {number_at(j, "re", path), j.contains("im") ? number_at(j, "im", path) : 0.0};
}

Json real_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json central_element_to_json(const CentralElement& d) {
  Json out = Json::array();
  for (const auto& [e, c] : d.terms()) {
    out.push_back(Json{{"exponents", e}, {"re", c.real()}, {"im", c.imag()}});
  }
  return out;
}

CentralElement central_element_from_json(const Json& j, std::size_t arity,
                                         const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected a list of {exponents, re, im} records");
  std::vector<std::pair<CentralElement::Exponents, Complex>> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    require_known_keys(j[i], {"exponents", "re", "im"}, p);
    if (!j[i].contains("exponents")) throw ConfigError(p + ".exponents", "missing");
    auto e = int_list(j[i].at("exponents"), p + ".exponents");
    if (e.size() != arity) {
      throw ConfigError(p + ".exponents", "expected " + std::to_string(arity) + " exponents");
    }
    for (int k : e) {
      if (k < 0) throw ConfigError(p + ".exponents", "exponents must be nonnegative");
    }
    const double im = j[i].contains("im") ? number_at(j[i], "im", p) : 0.0;
    terms.emplace_back(std::move(e), Complex(number_at(j[i], "re", p), im));
  }
  return CentralElement(arity, terms);
}

Json coefficients_to_json(const FourierCoefficients& phi) {
  Json out = Json::array();
  for (const auto& [w, m] : phi.entries()) {
    Json mat = Json::array();
    for (Eigen::Index a = 0; a < m.rows(); ++a) {
      for (Eigen::Index b = 0; b < m.cols(); ++b) {
        mat.push_back(Json::array({m(a, b).real(), m(a, b).imag()}));
      }
    }
    out.push_back(Json{{"weight", w.components}, {"matrix", std::move(mat)}});
  }
  return out;
}

FourierCoefficients coefficients_from_json(const Json& j, ModelPtr model, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected a list of {weight, matrix} records");
  FourierCoefficients out(model);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    require_known_keys(j[i], {"weight", "matrix"}, p);
    if (!j[i].contains("weight")) throw ConfigError(p + ".weight", "missing");
    if (!j[i].contains("matrix")) throw ConfigError(p + ".matrix", "missing");
    Weight w(int_list(j[i].at("weight"), p + ".weight"));
    int dim = 0;
    try {
      dim = model->dimension(w);
    } catch (const InvalidWeight& e) {
      throw ConfigError(p + ".weight", e.what());
    }
    if (out.entries().count(w)) throw ConfigError(p + ".weight", "duplicate weight");
    const Json& mat = j[i].at("matrix");
    if (!mat.is_array() || mat.size() != static_cast<std::size_t>(dim * dim)) {
      throw ConfigError(p + ".matrix", "expected " + std::to_string(dim * dim) +
                                           " [re, im] pairs in row-major order");
    }
    ComplexMatrix m(dim, dim);
    for (int k = 0; k < dim * dim; ++k) {
      const Json& pair = mat[static_cast<std::size_t>(k)];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
        throw ConfigError(p + ".matrix[" + std::to_string(k) + "]", "expected [re, im]");
      }
      m(k / dim, k % dim) = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
    out.set(w, std::move(m));
  }
  return out;
}

Json spectrum_report_to_json(const SpectrumReport& rep) {
  auto reals = [](const std::vector<double>& xs) {
    Json out = Json::array();
    for (double x : xs) out.push_back(real_to_json(x));
    return out;
  };
  Json points = Json::array();
  for (const Complex& z : rep.spectrum_points) points.push_back(complex_to_json(z));
  return Json{{"p", real_to_json(rep.p)},
              {"n_max", rep.n_max},
              {"spectrum_points", std::move(points)},
              {"radius", real_to_json(rep.radius)},
              {"bound_constant", real_to_json(rep.bound_constant)},
              {"r", reals(rep.r)},
              {"log_norms", reals(rep.log_norms)},
              {"sandwich_lower", reals(rep.sandwich_lower)},
              {"sandwich_upper", reals(rep.sandwich_upper)},
              {"lower_slack", reals(rep.lower_slack)},
              {"upper_slack", reals(rep.upper_slack)},
              {"caveats", rep.caveats}};
}

}  // namespace pwlab

#include "pwlab/experiment.hpp"

#include "pwlab/su2.hpp"
#include "pwlab/torus.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef PWLAB_VERSION
#define PWLAB_VERSION "dev"
#endif

namespace pwlab {

const char* version() { return PWLAB_VERSION; }

namespace {

int integer_field(const Json& doc, const char* key, const std::string& path, int lo, int hi) {
  const Json& v = doc.at(key);
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > hi) {
    throw ConfigError(path, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(x);
}

const Json& required(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw ConfigError(key, "missing");
  return doc.at(key);
}

double number_field(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  return j.get<double>();
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string p_tag(double p) {
  if (std::isinf(p)) return "inf";
  if (p == std::floor(p)) return std::to_string(static_cast<long long>(p));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  return buf;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  cfg.text = text;
  try {
    cfg.document = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("<document>", std::string("not valid JSON: ") + e.what());
  }
  const Json& doc = cfg.document;
  require_known_keys(doc,
                     {"group", "cutoff", "bandlimit", "operator", "function", "p", "n_max",
                      "tau_rel", "probes", "holomorphy", "output", "seed", "export_grid"},
                     "<document>");

  const Json& group = required(doc, "group");
  require_known_keys(group, {"kind", "dimension"}, "group");
  if (!group.contains("kind") || !group.at("kind").is_string()) {
    throw ConfigError("group.kind", "expected \"torus\" or \"su2\"");
  }
  const auto kind = group.at("kind").get<std::string>();
  if (kind == "torus") {
    cfg.kind = GroupKind::torus;
    cfg.torus_dimension =
        group.contains("dimension") ? integer_field(group, "dimension", "group.dimension", 1, 8) : 1;
  } else if (kind == "su2") {
    if (group.contains("dimension")) throw ConfigError("group.dimension", "not used for su2");
    cfg.kind = GroupKind::su2;
  } else {
    throw ConfigError("group.kind", "expected \"torus\" or \"su2\", got \"" + kind + "\"");
  }

  required(doc, "cutoff");
  const int max_cutoff = cfg.kind == GroupKind::su2 ? Su2Model::max_weight : 64;
  cfg.cutoff = integer_field(doc, "cutoff", "cutoff", 0, max_cutoff);
  required(doc, "bandlimit");
  cfg.bandlimit = integer_field(doc, "bandlimit", "bandlimit", 0, 4 * max_cutoff);
  // Applying central operators never raises the band, so exactness for the
  // function at level `cutoff` needs bandlimit >= cutoff.
  if (cfg.bandlimit < cfg.cutoff) {
    throw ConfigError("bandlimit", "must be at least cutoff (" + std::to_string(cfg.cutoff) + ")");
  }

  const std::size_t arity =
      cfg.kind == GroupKind::torus ? static_cast<std::size_t>(cfg.torus_dimension) : 1;
  try {
    cfg.op = central_element_from_json(required(doc, "operator"), arity, "operator");
  } catch (const StructuralError& e) {
    throw ConfigError("operator", e.what());
  }

  const Json& fn = required(doc, "function");
  require_known_keys(fn, {"preset", "params", "coefficients"}, "function");
  if (fn.contains("preset") == fn.contains("coefficients")) {
    throw ConfigError("function", "give exactly one of \"preset\" or \"coefficients\"");
  }
  if (fn.contains("preset")) {
    if (!fn.at("preset").is_string()) throw ConfigError("function.preset", "expected a name");
    cfg.preset = fn.at("preset").get<std::string>();
    if (fn.contains("params")) {
      if (!fn.at("params").is_object()) throw ConfigError("function.params", "expected an object");
      cfg.preset_params = fn.at("params");
    }
  } else {
    if (fn.contains("params")) throw ConfigError("function.params", "only valid with a preset");
    cfg.coefficients = fn.at("coefficients");
  }

  const Json& ps = required(doc, "p");
  if (!ps.is_array() || ps.empty()) throw ConfigError("p", "expected a nonempty list");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string path = "p[" + std::to_string(i) + "]";
    if (ps[i].is_string() && ps[i].get<std::string>() == "inf") {
      cfg.p_values.push_back(infinity_norm);
    } else if (ps[i].is_number() && ps[i].get<double>() >= 1.0 &&
               std::isfinite(ps[i].get<double>())) {
      cfg.p_values.push_back(ps[i].get<double>());
    } else {
      throw ConfigError(path, "expected a number >= 1 or \"inf\"");
    }
  }

  required(doc, "n_max");
  cfg.n_max = static_cast<unsigned>(integer_field(doc, "n_max", "n_max", 1, 100000));

  if (doc.contains("tau_rel")) {
    cfg.tau_rel = number_field(doc.at("tau_rel"), "tau_rel");
    if (!(cfg.tau_rel > 0.0 && cfg.tau_rel < 1.0)) throw ConfigError("tau_rel", "must lie in (0, 1)");
  }

  if (doc.contains("probes")) {
    const Json& pr = doc.at("probes");
    if (!pr.is_array()) throw ConfigError("probes", "expected a list of {re, im}");
    for (std::size_t i = 0; i < pr.size(); ++i) {
      cfg.probes.push_back(complex_from_json(pr[i], "probes[" + std::to_string(i) + "]"));
    }
  }

  if (doc.contains("holomorphy")) {
    const Json& h = doc.at("holomorphy");
    require_known_keys(h, {"radius", "points"}, "holomorphy");
    HolomorphySettings s;
    if (h.contains("radius")) s.radius = number_field(h.at("radius"), "holomorphy.radius");
    if (!(s.radius > 0.0)) throw ConfigError("holomorphy.radius", "must be positive");
    if (h.contains("points")) {
      s.points = static_cast<unsigned>(integer_field(h, "points", "holomorphy.points", 1, 1 << 20));
    }
    cfg.holomorphy = s;
  }

  if (doc.contains("output")) {
    if (!doc.at("output").is_string()) throw ConfigError("output", "expected a path");
    cfg.output = doc.at("output").get<std::string>();
  }
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned() && !doc.at("seed").is_number_integer()) {
      throw ConfigError("seed", "expected a nonnegative integer");
    }
    if (doc.at("seed").is_number_integer() && doc.at("seed").get<long long>() < 0) {
      throw ConfigError("seed", "expected a nonnegative integer");
    }
    cfg.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("export_grid")) {
    if (!doc.at("export_grid").is_boolean()) throw ConfigError("export_grid", "expected a boolean");
    cfg.export_grid = doc.at("export_grid").get<bool>();
  }
  return cfg;
}

ModelPtr make_model(const ExperimentConfig& config) {
  return config.kind == GroupKind::torus ? make_torus(config.torus_dimension) : make_su2();
}

std::vector<PresetInfo> list_presets() {
  return {
      {"zero", "the zero function (empty support); any group"},
      {"single_mode_torus", "f = exp(i k theta_1); params: k (default 3); torus"},
      {"two_mode_torus", "f = exp(i theta_1) + exp(2 i theta_1); torus"},
      {"symmetric_torus", "f = 1 + exp(i theta_1) + exp(-i theta_1); torus"},
      {"su2_low_modes",
       "coefficients at weights 0, 1, 2 (spins 0, 1/2, 1); the weight-2 block is "
       "sqrt(2)/3 on its highest-weight entry; su2"},
      {"su2_heat",
       "heat-kernel coefficients exp(-t n(n+2)/4) Id truncated at the cutoff; params: t "
       "(default 0.5); su2"},
      {"random", "uniform random coefficients at every weight up to the cutoff, drawn from the "
                 "seed; params: scale (default 1); any group"},
  };
}

namespace {

double param_number(const Json& params, const char* key, double fallback) {
  if (!params.contains(key)) return fallback;
  return number_field(params.at(key), std::string("function.params.") + key);
}

void require_torus(const ExperimentConfig& cfg) {
  if (cfg.kind != GroupKind::torus) {
    throw ConfigError("function.preset", "preset \"" + cfg.preset + "\" requires a torus group");
  }
}

Weight first_axis(const ExperimentConfig& cfg, int k) {
  std::vector<int> c(static_cast<std::size_t>(cfg.torus_dimension), 0);
  c[0] = k;
  return Weight(std::move(c));
}

ComplexMatrix scalar_block(Complex c) {
  ComplexMatrix m(1, 1);
  m(0, 0) = c;
  return m;
}

FourierCoefficients preset_function(const ExperimentConfig& cfg, ModelPtr model) {
  const Json& params = cfg.preset_params;
  FourierCoefficients phi(model);
  const std::string& name = cfg.preset;
  if (name == "zero") {
    require_known_keys(params, {}, "function.params");
  } else if (name == "single_mode_torus") {
    require_torus(cfg);
    require_known_keys(params, {"k"}, "function.params");
    int k = 3;
    if (params.contains("k")) {
      if (!params.at("k").is_number_integer()) {
        throw ConfigError("function.params.k", "expected an integer");
      }
      k = params.at("k").get<int>();
    }
    if (std::abs(k) > cfg.cutoff) {
      throw ConfigError("function.params.k", "|k| exceeds cutoff " + std::to_string(cfg.cutoff));
    }
    // F(e^{ik theta})(lambda) = delta_{lambda, -k}
    phi.set(first_axis(cfg, -k), scalar_block(1.0));
  } else if (name == "two_mode_torus") {
    require_torus(cfg);
    require_known_keys(params, {}, "function.params");
    phi.set(first_axis(cfg, -1), scalar_block(1.0));
    phi.set(first_axis(cfg, -2), scalar_block(1.0));
  } else if (name == "symmetric_torus") {
    require_torus(cfg);
    require_known_keys(params, {}, "function.params");
    for (int k : {-1, 0, 1}) phi.set(first_axis(cfg, k), scalar_block(1.0));
  } else if (name == "su2_low_modes") {
    if (cfg.kind != GroupKind::su2) throw ConfigError("function.preset", "preset requires su2");
    require_known_keys(params, {}, "function.params");
    phi.set(Weight::su2(0), scalar_block(1.0));
    phi.set(Weight::su2(1), 0.5 * ComplexMatrix::Identity(2, 2));
    ComplexMatrix top = ComplexMatrix::Zero(3, 3);
    top(0, 0) = std::sqrt(2.0) / 3.0;
    phi.set(Weight::su2(2), top);
  } else if (name == "su2_heat") {
    if (cfg.kind != GroupKind::su2) throw ConfigError("function.preset", "preset requires su2");
    require_known_keys(params, {"t"}, "function.params");
    const double t = param_number(params, "t", 0.5);
    if (!(t > 0.0)) throw ConfigError("function.params.t", "must be positive");
    for (int n = 0; n <= cfg.cutoff; ++n) {
      const double decay = std::exp(-t * n * (n + 2.0) / 4.0);
      phi.set(Weight::su2(n), decay * ComplexMatrix::Identity(n + 1, n + 1));
    }
  } else if (name == "random") {
    require_known_keys(params, {"scale"}, "function.params");
    const double scale = param_number(params, "scale", 1.0);
    if (!(scale > 0.0)) throw ConfigError("function.params.scale", "must be positive");
    phi = random_band_limited(model, cfg.cutoff, cfg.seed, scale);
  } else {
    throw ConfigError("function.preset", "unknown preset \"" + name + "\"");
  }
  return phi;
}

}  // namespace

FourierCoefficients build_function(const ExperimentConfig& config, ModelPtr model) {
  FourierCoefficients phi = config.preset.empty()
                                ? coefficients_from_json(config.coefficients, model,
                                                         "function.coefficients")
                                : preset_function(config, model);
  for (const auto& [w, m] : phi.entries()) {
    if (model->weight_level(w) > config.cutoff) {
      throw ConfigError(config.preset.empty() ? "function.coefficients" : "function.preset",
                        "weight " + to_string(w) + " exceeds cutoff " +
                            std::to_string(config.cutoff));
    }
  }
  return phi;
}

RunReport run(const ExperimentConfig& config) {
  const ModelPtr model = make_model(config);
  const FourierCoefficients phi = build_function(config, model);
  const auto grid = std::make_shared<const QuadratureGrid>(model->haar_quadrature(config.bandlimit));
  const LocalSpectralAnalysis analysis(OperatorAction(model, config.op, config.cutoff), phi, grid,
                                       config.tau_rel);

  RunReport out;
  Json& doc = out.document;
  doc["tool"] = "pwlab";
  doc["version"] = version();
  doc["config_text"] = config.text;
  doc["config"] = config.document;
  doc["group"] = model->name();
  doc["grid"] = Json{{"bandlimit", grid->bandlimit}, {"nodes", grid->size()}};
  doc["operator"] = central_element_to_json(config.op);

  Json support_list = Json::array();
  for (const auto& w : support(phi, config.tau_rel).weights) support_list.push_back(w.components);
  doc["function"] = Json{{"source", config.preset.empty() ? "coefficients" : config.preset},
                         {"stored_weights", phi.entries().size()},
                         {"level", phi.level()},
                         {"support", std::move(support_list)}};
  Json seminorms = Json::array();
  for (int s = 0; s <= 4; ++s) seminorms.push_back(real_to_json(schwartz_seminorm(phi, s)));
  doc["function"]["schwartz_seminorms"] = std::move(seminorms);

  const auto& spectrum = analysis.spectrum();
  Json points = Json::array();
  for (const Complex& z : spectrum) points.push_back(complex_to_json(z));
  doc["spectrum_points"] = std::move(points);
  const double radius = spectral_sup(spectrum);
  doc["radius"] = real_to_json(radius);

  Json caveats = Json::array();
  caveats.push_back("the spectrum of a finitely supported function is finite, so its closure is "
                    "the set itself");
  if (config.preset == "su2_heat") {
    caveats.push_back("heat-kernel coefficients are truncated at weight " +
                      std::to_string(config.cutoff) + "; results describe the truncated function");
  }
  doc["caveats"] = std::move(caveats);

  Json reports = Json::array();
  for (double p : config.p_values) {
    const SpectrumReport rep = analysis.radius_sequence(p, config.n_max);
    Json j = spectrum_report_to_json(rep);
    double worst_lower = 1.0, worst_upper = 1.0;
    for (double s : rep.lower_slack) worst_lower = std::min(worst_lower, s);
    for (double s : rep.upper_slack) worst_upper = std::min(worst_upper, s);
    j["bounds"] = Json{{"worst_lower_slack", real_to_json(worst_lower)},
                       {"worst_upper_slack", real_to_json(worst_upper)},
                       {"hold", worst_lower >= -1e-10 && worst_upper >= -1e-10}};
    reports.push_back(std::move(j));

    std::ostringstream table;
    table << "n,r_n,log_norm,sandwich_lower,sandwich_upper,lower_slack,upper_slack\n";
    for (unsigned n = 1; n <= rep.n_max; ++n) {
      const std::size_t i = n - 1;
      table << n << ',' << format_real(rep.r[i]) << ',' << format_real(rep.log_norms[i]) << ','
            << format_real(rep.sandwich_lower[i]) << ',' << format_real(rep.sandwich_upper[i])
            << ',' << format_real(rep.lower_slack[i]) << ',' << format_real(rep.upper_slack[i])
            << '\n';
    }
    out.files.emplace_back("radius_p" + p_tag(p) + ".csv", table.str());
  }
  doc["reports"] = std::move(reports);

  double max_chi = 0.0;
  for (const Complex& z : spectrum) max_chi = std::max(max_chi, std::abs(z));
  Json probes = Json::array();
  for (const Complex& z : config.probes) {
    Json pj{{"z", complex_to_json(z)}};
    try {
      const ResolventProbe probe = analysis.resolvent_probe(z);
      const double tol = 1e-9 * (1.0 + std::abs(z) + max_chi);
      pj["status"] = "ok";
      pj["distance_to_spectrum"] = real_to_json(probe.distance_to_spectrum);
      pj["residual_sup"] = real_to_json(probe.residual_sup);
      pj["tolerance"] = real_to_json(tol);
      pj["within_tolerance"] = probe.residual_sup <= tol;
      if (config.holomorphy) {
        try {
          pj["holomorphy"] = real_to_json(
              analysis.holomorphy_check(z, config.holomorphy->radius, config.holomorphy->points));
        } catch (const PreconditionError& e) {
          pj["holomorphy"] = std::string("skipped: ") + e.what();
        }
      }
    } catch (const PreconditionError& e) {
      pj["status"] = std::string("rejected: ") + e.what();
    }
    probes.push_back(std::move(pj));
  }
  doc["probes"] = std::move(probes);

  if (config.export_grid) {
    std::ostringstream g;
    write_grid(g, *grid);
    out.files.emplace_back("grid.csv", g.str());
  }
  return out;
}

void write_run(const RunReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&dir](const std::string& name, const std::string& contents) {
    std::ofstream os(dir / name, std::ios::binary);
    if (!os) throw Error("cannot write " + (dir / name).string());
    os << contents;
  };
  write("report.json", report.document.dump(2) + "\n");
  for (const auto& [name, contents] : report.files) write(name, contents);
}

std::filesystem::path output_directory(const ExperimentConfig& config) {
  if (const char* env = std::getenv("PWLAB_OUTPUT_DIR"); env && *env) return env;
  return config.output;
}

}  // namespace pwlab

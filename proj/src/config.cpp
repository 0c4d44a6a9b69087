#include "lipq/config.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace lipq {

namespace {

Polynomial parse_poly(const nlohmann::json& arr) {
  if (!arr.is_array() || arr.empty())
    throw config_error("polynomial must be a non-empty array of [re, im] pairs");
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw config_error("each coefficient must be an [re, im] pair");
    pairs.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return polynomial_from_pairs(pairs);
}

}  // namespace

Polynomial polynomial_from_pairs(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.empty()) throw config_error("empty coefficient list");
  std::vector<Complex> coeffs;
  coeffs.reserve(pairs.size());
  for (auto [re, im] : pairs) {
    if (!std::isfinite(re) || !std::isfinite(im))
      throw config_error("coefficients must be finite");
    coeffs.emplace_back(re, im);
  }
  return Polynomial(std::move(coeffs));
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("malformed config: ") + e.what());
  }
  JobConfig cfg;
  if (j.is_array()) {
    cfg.polynomial = parse_poly(j);
    return cfg;
  }
  if (!j.is_object())
    throw config_error("config must be a coefficient array or an object");
  for (const auto& [key, v] : j.items()) {
    if (key == "polynomial") {
      cfg.polynomial = parse_poly(v);
    } else if (key == "seed") {
      if (!v.is_number_integer() && !v.is_number_unsigned())
        throw config_error("seed must be an integer");
      cfg.seed = v.get<std::uint64_t>();
    } else if (key == "samples") {
      if (!v.is_number_integer() || v.get<long>() <= 0)
        throw config_error("samples must be a positive integer");
      cfg.samples = v.get<int>();
    } else if (key == "force_c") {
      if (!v.is_number() || v.get<double>() < 0.0)
        throw config_error("force_c must be a nonnegative number");
      cfg.force_c = v.get<double>();
    } else if (key == "suite") {
      if (!v.is_string()) throw config_error("suite must be a string");
      std::string s = v.get<std::string>();
      if (s != "all" && s != "construction" && s != "metric" && s != "demos")
        throw config_error("suite must be one of all|construction|metric|demos");
      cfg.suite = s;
    } else if (key == "out") {
      if (!v.is_string()) throw config_error("out must be a string");
      cfg.out = v.get<std::string>();
    } else if (key == "grid_include_h2") {
      if (!v.is_boolean()) throw config_error("grid_include_h2 must be a boolean");
      cfg.grid_include_h2 = v.get<bool>();
    } else if (key == "multiplicity_tol") {
      if (!v.is_number() || !(v.get<double>() > 0.0))
        throw config_error("multiplicity_tol must be a positive number");
      cfg.multiplicity_tol = v.get<double>();
    } else {
      throw config_error("unknown config key: " + key);
    }
  }
  return cfg;
}

}  // namespace lipq

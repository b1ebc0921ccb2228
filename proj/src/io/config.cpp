#include "qf/io/config.hpp"

#include <cstdlib>

namespace qf::io {

StabilityConfig JobConfig::stability() const {
  StabilityConfig s;
  s.max_subspace_checks = max_subspace_checks;
  s.parallel = false;
  return s;
}

CertificateConfig JobConfig::certificate() const {
  CertificateConfig c;
  c.primes = primes;
  c.stability = stability();
  return c;
}

IsoSearchOptions JobConfig::iso() const { return {iso_trials, iso_exhaustive}; }

CensusConfig JobConfig::census() const {
  CensusConfig c;
  c.max_points = max_points;
  c.max_field_order = max_field_order;
  c.max_total_dim = max_total_dim;
  c.stability = stability();
  return c;
}

namespace {

std::uint64_t positive(const Json& j, const std::string& path) {
  auto v = as_int(j, path);
  if (v <= 0) fail(path, "budget must be positive");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

JobConfig config_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  JobConfig c;
  for (const auto& [key, val] : j.items()) {
    const auto p = path + "." + key;
    if (key == "seed") {
      auto v = as_int(val, p);
      if (v < 0) fail(p, "seed must be nonnegative");
      c.seed = static_cast<std::uint64_t>(v);
    } else if (key == "max_subspace_checks") {
      c.max_subspace_checks = positive(val, p);
    } else if (key == "max_points") {
      c.max_points = positive(val, p);
    } else if (key == "max_field_order") {
      c.max_field_order = static_cast<std::uint32_t>(positive(val, p));
    } else if (key == "max_total_dim") {
      c.max_total_dim = static_cast<int>(positive(val, p));
    } else if (key == "iso_trials") {
      c.iso_trials = static_cast<int>(positive(val, p));
    } else if (key == "iso_exhaustive") {
      c.iso_exhaustive = positive(val, p);
    } else if (key == "primes") {
      if (!val.is_array() || val.empty()) fail(p, "expected a nonempty array of primes");
      c.primes.clear();
      for (std::size_t i = 0; i < val.size(); ++i) {
        auto v = as_int(val[i], p + "[" + std::to_string(i) + "]");
        if (v < 2 || !is_prime(Integer(std::to_string(v)))) fail(p + "[" + std::to_string(i) + "]", "not a prime");
        c.primes.push_back(static_cast<std::uint32_t>(v));
      }
    } else if (key == "format") {
      if (!val.is_string() || (val != "json" && val != "table")) fail(p, "expected \"json\" or \"table\"");
      c.format = val.get<std::string>();
    } else {
      fail(p, "unknown configuration key");
    }
  }
  return c;
}

Json to_json(const JobConfig& c) {
  return Json{{"seed", c.seed},
              {"max_subspace_checks", c.max_subspace_checks},
              {"max_points", c.max_points},
              {"max_field_order", c.max_field_order},
              {"max_total_dim", c.max_total_dim},
              {"iso_trials", c.iso_trials},
              {"iso_exhaustive", c.iso_exhaustive},
              {"primes", c.primes},
              {"format", c.format}};
}

JobConfig load_config(const std::optional<std::string>& explicit_path) {
  std::optional<std::string> path = explicit_path;
  if (!path) {
    if (const char* env = std::getenv(kConfigEnv); env && *env) path = env;
  }
  if (!path) return {};
  return config_from_json(read_file(*path), *path);
}

}  // namespace qf::io

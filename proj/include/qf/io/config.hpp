#pragma once

#include "qf/census/census.hpp"
#include "qf/io/json_io.hpp"
#include "qf/quiver/certificate.hpp"
#include "qf/quiver/isomorphism.hpp"
#include "qf/quiver/stability.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qf::io {

/// Environment variable naming the default configuration file.
inline constexpr const char* kConfigEnv = "QUIVERFORMS_CONFIG";

struct JobConfig {
  std::uint64_t seed = 0;
  std::uint64_t max_subspace_checks = 1000000;
  std::uint64_t max_points = std::uint64_t{1} << 24;
  std::uint32_t max_field_order = 256;
  int max_total_dim = 6;
  int iso_trials = 64;
  std::uint64_t iso_exhaustive = 1000000;
  std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
  std::string format = "table";

  StabilityConfig stability() const;
  CertificateConfig certificate() const;
  IsoSearchOptions iso() const;
  CensusConfig census() const;
};

/// Unknown keys and non-positive budgets are parse errors.
JobConfig config_from_json(const Json& j, const std::string& path = "config");
Json to_json(const JobConfig& c);

/// The file named by `explicit_path`, else by the environment variable, else defaults.
JobConfig load_config(const std::optional<std::string>& explicit_path);

}  // namespace qf::io

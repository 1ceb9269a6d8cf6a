#pragma once

#include "kmoduli/atlas.hpp"
#include "kmoduli/logpair.hpp"
#include "kmoduli/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

namespace kmoduli {

// Minimal TOML reader covering the subset used by the bundled data files:
// comments, [table] and [[array-of-table]] headers, keys with string,
// integer, boolean and (nested, multiline) array values.  Diagnostics carry
// line/column.
nlohmann::json toml_parse(const std::string& text);

// Dispatch on extension: .toml (subset) or .json.
nlohmann::json load_structured_file(const std::string& path);

// Golden-data directory: KMODULI_DATA_DIR overrides the build-time default.
std::string default_data_dir();

// Monomial support of an expanded polynomial expression over named
// variables ("x0*x2^3 - x1^3*x2").
std::vector<ivec> parse_poly_support(const std::string& expr,
                                     const std::vector<std::string>& vars);

toric_model load_toric_model(const std::string& name, const std::string& data_dir = "");
ns_surface load_ns_model(const std::string& name, const std::string& data_dir = "");

struct pair_config {
  std::string kind;  // "log-pair" or "complexity-one"
  std::string model_name;
  log_pair pair;
  std::optional<valuation> val;   // [valuation] block
  complexity_one_config c1;       // populated for complexity-one configs
};

pair_config load_pair_config(const std::string& path, const std::string& data_dir = "");

std::vector<k_wall> load_golden_kwalls(int d, const std::string& variant,
                                       const std::string& data_dir = "");

// Appendix rows used by the verification suites.
struct cstar_row {
  int row = 0;
  std::vector<ivec> f_support;
  std::vector<ivec> h_support;
  ivec lambda;
  std::vector<rat> mu_zero_at;  // t values where mu vanishes
};
std::vector<cstar_row> load_cstar_table(const std::string& data_dir = "");

struct kwall_row {
  int row = 0;
  rat wall;
  std::string config;            // bundled configuration file name
  linear_in_c beta;              // published beta formula
  std::string curve, line, weights;
};
std::vector<kwall_row> load_kwall_table(const std::string& data_dir = "");

}  // namespace kmoduli

#pragma once

#include <stdexcept>
#include <string>

namespace kmoduli {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct trace_error : error { using error::error; };
struct degenerate_error : error { using error::error; };
struct shape_error : error { using error::error; };
struct domain_error : error { using error::error; };
struct budget_error : error { using error::error; };
struct fan_error : error { using error::error; };
struct model_error : error { using error::error; };
struct chart_error : error { using error::error; };
struct nonlinearity_error : error { using error::error; };
struct consistency_error : error { using error::error; };

// Input-file diagnostics carry a position.
struct parse_error : error {
  int line = 0, column = 0;
  parse_error(const std::string& msg, int ln, int col)
      : error(msg + " (line " + std::to_string(ln) + ", column " + std::to_string(col) + ")"),
        line(ln), column(col) {}
  explicit parse_error(const std::string& msg) : error(msg) {}
};

}  // namespace kmoduli

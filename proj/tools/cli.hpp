#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mulint/branch.hpp"
#include "mulint/expr.hpp"
#include "mulint/quadrature.hpp"

namespace mulint::cli {

enum class OutputFormat { Json, Csv };

/// Everything one invocation needs, after argument parsing.
struct RunConfig {
  std::string subcommand;
  std::string function_source;
  ConstantTable constants;
  std::string curve_spec;
  BranchSelection k0{};
  std::int64_t n_lo = -8;
  std::int64_t n_hi = 8;
  QuadratureSettings quadrature{};
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> output_path;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMathDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTolerance = 3;

/// Runs the mulint command line. argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace mulint::cli

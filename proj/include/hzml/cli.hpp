#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hzml {

enum class OutputFormat { Default, Json, Csv };

struct RunConfig {
  std::string subcommand;
  int j = 0;
  int k = 0;
  double t_min = 2.0;
  double t_max = 0.0;
  std::optional<double> T;  // coeff: finite-mode height
  bool asymptotic = false;
  bool refined_roots = false;
  int j_max = 0;
  int k_max = 0;
  int density = 6;
  OutputFormat format = OutputFormat::Default;
  std::string out_path;  // empty: the output stream passed to run
  int workers = 1;
  std::optional<double> tol;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitAlarm = 3;

/// Executes one subcommand. Validation errors give 2, numerical alarms give 3
/// and also write a JSON alarm record to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses arguments (program name first) and calls run. The worker default
/// comes from HZML_WORKERS.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hzml

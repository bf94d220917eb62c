#pragma once

// umbral-lab <compute|verify|table|bench> <target>
//            [--n N | --max-n N] [--format text|csv|json|markdown]
//            [--jobs J] [--approx D]
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace umbral::cli {

enum class Command { Compute, Verify, Table, Bench };
enum class Format { Text, Csv, Json, Markdown };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  Command command = Command::Compute;
  std::string target;
  std::optional<unsigned> n;
  std::optional<unsigned> max_n;
  Format format = Format::Text;
  unsigned jobs = 1;
  std::optional<unsigned> approx_digits;
  /// Fault injection: run with D_k replaced by D_k + 1.
  std::optional<unsigned> perturb;
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace umbral::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "veronese/field.hpp"

namespace veronese::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsage = 2, kGenericity = 3 };

struct RunConfig {
  FieldCfg field;
  std::uint64_t seed = 1;
  std::size_t samples = 5;
  int degree_bound = 7;
  bool slow = false;
  bool timing = false;  // adds elapsed_ms, which makes output machine dependent
};

/// Thrown for bad input or configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Records in emission order. Every record carries an "ok" boolean.
struct Report {
  std::vector<Json> records;

  bool all_ok() const;
  int exit_code() const { return all_ok() ? kOk : kVerificationFailure; }
  /// One compact JSON object per line.
  std::string jsonl() const;
};

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_digest(const std::string& bytes);

Report cmd_classify(const std::vector<std::string>& paths, const RunConfig& cfg);
Report cmd_verify_theorem(const RunConfig& cfg);
Report cmd_pencil(const RunConfig& cfg);
Report cmd_gale(const RunConfig& cfg);
Report cmd_cremona(const RunConfig& cfg);

/// Parses arguments, runs one command, writes the report to `out` and
/// diagnostics to `err`. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace veronese::cli

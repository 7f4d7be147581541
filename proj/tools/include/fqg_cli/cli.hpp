#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fqg::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kInternal = 2, kVerificationFailed = 3 };

enum class Command { Factor, Decompose, Idempotents, Verify, Battery };
enum class Format { Text, Json };

struct RunConfig {
  Command command = Command::Decompose;
  /// Field order q = p^m.
  uint64_t q = 0;
  /// "split:n=4,s=3"; empty for `factor --N` and `battery`.
  std::string group;
  /// For `factor` without a group.
  uint64_t N = 0;
  Format format = Format::Text;
  bool include_noncentral = false;
  bool crt_fallback = false;
  uint64_t seed = 1;
  // battery filters
  std::string kind_filter;
  uint64_t max_n = 24;
  std::vector<uint64_t> qs{3, 5, 7, 9, 11, 13};
  std::optional<unsigned> q_mod4;
  bool nonabelian_only = false;
  unsigned threads = 0;
};

/// "9", "3^2" or "3**2". Throws fqg::Error(InvalidArgument) otherwise.
uint64_t parse_field_order(const std::string& text);

/// Runs one command. Errors are reported on `err` and mapped to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, char** argv);

}  // namespace fqg::cli

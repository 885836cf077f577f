#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ffgeom::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class OutputFormat { Json, Csv };

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// One CLI invocation. Exactly one point-set source (in_path, random,
/// all_points) except for `sweep`; a seed is required whenever randomness is used.
struct RunConfig {
  std::string command;
  std::string field;
  std::string in_path;
  std::optional<std::string> random;  ///< count, or "auto" = ceil(64 q log2 q)
  bool all_points = false;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> d;
  std::optional<std::string> pin;
  std::optional<std::uint32_t> k;
  std::optional<std::uint64_t> threshold;
  std::string mode = "exhaustive";
  std::uint64_t budget = 10'000'000;
  unsigned workers = 1;
  OutputFormat format = OutputFormat::Json;
  std::string out_path;
  bool hypothesis_check = false;

  // vinh
  bool all_lines = false;
  std::optional<std::uint64_t> random_lines;
  // l2
  std::string in_g_path;
  std::optional<std::uint64_t> random_g;
  // sweep
  std::uint64_t n = 0;
  std::string property = "theorem1i";
  std::uint64_t samples = 0;
  std::string checkpoint_dir;
};

/// Runs one command. The report goes to out_path when set, else to out;
/// diagnostics go to err. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ffgeom::cli

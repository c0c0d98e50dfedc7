#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "okaforge/cli/json_io.hpp"
#include "okaforge/error.hpp"

namespace okaforge::cli {

struct JobOptions {
  std::uint64_t seed = 0;
  double tol = 1e-10;
  int K = 10;
  int budget = 64;
  long precision = 64;
};

struct JobSpec {
  /// classify, construct, embed, verify, double-points, reduce, guard.
  std::string command;
  /// "plane" or "circular".
  std::string domain = "plane";
  std::vector<GaussianRational> punctures;
  std::vector<Hole> holes;
  std::optional<WindingClass> windings;
  std::optional<std::string> map;
  std::optional<GaussianRational> c;
  std::optional<std::string> f;
  std::optional<std::string> sigma;
  JobOptions options;
};

/// Exit statuses: certificates passed, a certificate failed, bad input,
/// search or precision exhausted.
enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kExhausted = 3 };

struct RunResult {
  Json output;
  int exit_code = kPass;
};

Json to_json(const JobSpec& job);
/// Applies defaults for every missing field. Throws ParseError.
JobSpec job_from_json(const Json& j);

/// Never throws for library errors: they become an "error" object and the
/// matching exit code.
RunResult run(const JobSpec& job);

/// One line per pair: x_re x_im y_re y_im k.
std::string dump_points(const Json& result);

struct CorpusEntry {
  std::string name;
  std::string description;
  JobSpec job;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);

int exit_code_for(ErrorCode code);

}  // namespace okaforge::cli

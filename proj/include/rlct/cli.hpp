#ifndef RLCT_CLI_HPP
#define RLCT_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rlct/json_io.hpp"

namespace rlct::cli {

/// Environment variable holding the default seed; --seed overrides it.
inline constexpr const char* kSeedEnv = "RLCT_SEED";

enum class Status { Ok, Error, Inconclusive };

struct CommandResult {
  Status status = Status::Ok;
  Json payload = Json::object();
  std::vector<std::string> diagnostics;

  /// 0 for ok, 2 for inconclusive, 1 otherwise.
  int exit_code() const;
  Json to_json() const;
};

struct FamilyParams {
  std::optional<int> n;
  std::optional<int> d;
  std::optional<int> d1;
  std::optional<int> e;
  std::optional<int> c;
  std::vector<int> m;
};

struct RegionFlags {
  std::optional<std::string> kind;  ///< "ball" or "box"; unset = command default
  double radius = 1.0;
  std::vector<double> center;  ///< empty = origin
};

struct SamplingFlags {
  long samples = 1'000'000;
  std::optional<std::uint64_t> seed;
  int depth = 12;
  int shards = 1;
};

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

CommandResult cmd_rlct(const std::string& model_path);
CommandResult cmd_jumps(const std::string& model_path, const std::string& bound,
                        std::optional<int> box_bound);
CommandResult cmd_family(const std::string& name, const FamilyParams& params, const std::string& emit);
CommandResult cmd_estimate(const std::string& poly_path, const RegionFlags& region,
                           const SamplingFlags& sampling);
CommandResult cmd_check(const std::string& g_path, const std::string& poly_path, const std::string& alpha,
                        const RegionFlags& region, const SamplingFlags& sampling);
CommandResult cmd_reduce(const std::vector<std::string>& ideal_paths);
CommandResult cmd_verify(const std::string& fixture_name, const FamilyParams& params,
                         const RegionFlags& region, const SamplingFlags& sampling);

/// Parses argv-style arguments (args[0] is the program name), runs the
/// subcommand, prints one canonical JSON document to `out` and returns the
/// exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlct::cli

#endif  // RLCT_CLI_HPP

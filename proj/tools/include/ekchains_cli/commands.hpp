#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <ekchains/finite_group.hpp>

#include "ekchains_cli/catalog.hpp"
#include "ekchains_cli/report.hpp"

namespace ekcli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Bad flag values or inputs; maps to exit status 2.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A run that hit a cap after producing a partial report.
struct CommandResult {
  Report report;
  bool resource_exhausted = false;

  int exit_code() const;
};

struct EkChainOptions {
  std::filesystem::path group_file;
  std::filesystem::path subgroup_file;
  /// Defaults to ekc::default_kmax when unset.
  std::optional<std::size_t> kmax;
  std::size_t cap = ekc::kDefaultClosureCap;
};

enum class Suite { bryant, structure, nilpotent, all };

Suite parse_suite(const std::string& name);
const char* to_string(Suite s);

struct VerifyOptions {
  Suite suite = Suite::all;
  std::size_t kmax = 4;
  std::size_t cap = ekc::kDefaultClosureCap;
  std::optional<std::filesystem::path> catalog_dir;
};

struct CounterexampleOptions {
  std::size_t levels = 8;
  std::size_t scan_max = 12;
  std::size_t oracle_depth = 3;
  /// Bound on bits stored by the model across all levels.
  std::size_t max_cells = std::size_t{1} << 26;
};

CommandResult cmd_ekchain(const EkChainOptions& opts);
CommandResult cmd_ekchain(const ekc::GroupFile& group, const ekc::GroupFile& subgroup,
                          std::optional<std::size_t> kmax, std::size_t cap,
                          const std::string& command);
CommandResult cmd_verify(const VerifyOptions& opts);
/// Runs the suites over an explicit catalog.
CommandResult cmd_verify(const VerifyOptions& opts, const std::vector<CatalogEntry>& catalog);
CommandResult cmd_counterexample(const CounterexampleOptions& opts);

/// Lists catalog groups with their orders, optionally writing each one as
/// <dir>/<name>.grp.
CommandResult cmd_catalog(const std::optional<std::filesystem::path>& catalog_dir,
                          const std::optional<std::filesystem::path>& export_dir,
                          std::size_t cap);

/// Entry point behind the ekchains executable. Writes the rendered report
/// to `out` and diagnostics to `err`; returns the exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string tool_version();

} // namespace ekcli

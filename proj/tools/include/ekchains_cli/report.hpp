#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <ekchains/verify.hpp>

namespace ekcli {

using Json = nlohmann::ordered_json;

/// A named record of computed data (chain orders, model witnesses, ...).
struct Witness {
  std::string id;
  Json data = Json::object();
};

struct Timing {
  std::string name;
  double seconds = 0.0;
};

/// One run of a command. Everything except `timings` is a deterministic
/// function of the inputs.
struct Report {
  std::string tool_version;
  std::string command;
  std::vector<ekc::Check> checks;
  std::vector<Witness> witnesses;
  std::vector<Timing> timings;
  /// Set when the run stopped early; the report is then partial.
  std::string error;

  void add_checks(const ekc::VerificationReport& r, const std::string& prefix);
  std::size_t count(ekc::CheckStatus s) const;
};

enum class Format { text, json };

/// Accepts "text", "json" and "json-like".
Format parse_format(const std::string& name);

Json to_json(const Report& r, bool with_timings = true);
std::string render_text(const Report& r, bool with_timings = true);
std::string render(const Report& r, Format f, bool with_timings = true);

} // namespace ekcli

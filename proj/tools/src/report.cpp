#include "ekchains_cli/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ekcli {

void Report::add_checks(const ekc::VerificationReport& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    checks.push_back({prefix + c.id, c.claim, c.status, c.detail});
}

std::size_t Report::count(ekc::CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks)
    n += c.status == s;
  return n;
}

Format parse_format(const std::string& name) {
  if (name == "text")
    return Format::text;
  if (name == "json" || name == "json-like")
    return Format::json;
  throw std::invalid_argument("unknown format '" + name + "' (expected text or json-like)");
}

namespace {

std::string seconds_str(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

std::string scalar_text(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

} // namespace

Json to_json(const Report& r, bool with_timings) {
  Json doc = Json::object();
  doc["tool_version"] = r.tool_version;
  doc["command"] = r.command;
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id},
                      {"claim", c.claim},
                      {"status", ekc::to_string(c.status)},
                      {"detail", c.detail}});
  doc["checks"] = std::move(checks);
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"id", w.id}, {"data", w.data}});
  doc["witnesses"] = std::move(witnesses);
  doc["summary"] = {{"pass", r.count(ekc::CheckStatus::pass)},
                    {"fail", r.count(ekc::CheckStatus::fail)},
                    {"skipped", r.count(ekc::CheckStatus::skipped)}};
  if (!r.error.empty())
    doc["error"] = r.error;
  if (with_timings) {
    Json t = Json::object();
    for (const auto& x : r.timings)
      t[x.name] = x.seconds;
    doc["timings"] = std::move(t);
  }
  return doc;
}

std::string render_text(const Report& r, bool with_timings) {
  std::ostringstream os;
  os << "ekchains " << r.tool_version << "\n";
  os << "command: " << r.command << "\n";
  os << "checks:\n";
  for (const auto& c : r.checks) {
    os << "  [" << ekc::to_string(c.status) << "] " << c.id << ": " << c.claim;
    if (!c.detail.empty())
      os << " -- " << c.detail;
    os << "\n";
  }
  os << "witnesses:\n";
  for (const auto& w : r.witnesses) {
    os << "  " << w.id << ":\n";
    for (const auto& [key, value] : w.data.items())
      os << "    " << key << " = " << scalar_text(value) << "\n";
  }
  os << "summary: " << r.count(ekc::CheckStatus::pass) << " pass, "
     << r.count(ekc::CheckStatus::fail) << " fail, " << r.count(ekc::CheckStatus::skipped)
     << " skipped\n";
  if (!r.error.empty())
    os << "error: " << r.error << "\n";
  if (with_timings) {
    os << "timings:\n";
    for (const auto& t : r.timings)
      os << "  " << t.name << ": " << seconds_str(t.seconds) << " s\n";
  }
  return os.str();
}

std::string render(const Report& r, Format f, bool with_timings) {
  if (f == Format::json)
    return to_json(r, with_timings).dump(2) + "\n";
  return render_text(r, with_timings);
}

} // namespace ekcli

#include "ekchains/group_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ekc {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

} // namespace

GroupFileError::GroupFileError(const std::string& what, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

GroupFile parse_group_file(std::string_view text) {
  GroupFile out;
  bool have_degree = false;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size())
        break;
      continue;
    }

    if (!have_degree) {
      constexpr std::string_view key = "degree:";
      if (line.substr(0, key.size()) != key)
        throw GroupFileError("expected 'degree: <n>'", lineno);
      auto value = trim(line.substr(key.size()));
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
      if (ec != std::errc{} || ptr != value.data() + value.size() || n == 0)
        throw GroupFileError("invalid degree '" + std::string(value) + "'", lineno);
      out.degree = n;
      have_degree = true;
    } else {
      try {
        out.generators.push_back(parse_cycles(line, out.degree));
      } catch (const CycleParseError& e) {
        throw GroupFileError(e.what(), lineno);
      }
    }
    if (end == text.size())
      break;
  }
  if (!have_degree)
    throw GroupFileError("missing 'degree:' line", lineno);
  return out;
}

GroupFile read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw GroupFileError("cannot open " + path.string(), 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str());
}

std::string format_group_file(const GroupFile& file) {
  std::ostringstream os;
  os << "degree: " << file.degree << '\n';
  for (const auto& g : file.generators)
    os << format_cycles(g) << '\n';
  return os.str();
}

} // namespace ekc

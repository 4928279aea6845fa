#include "ekchains_cli/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace ekcli {

namespace {

struct Builtin {
  const char* name;
  const char* text;
};

constexpr Builtin kBuiltins[] = {
    {"S3", "# symmetric group on 3 points\n# order: 6\ndegree: 3\n(0 1)\n(0 1 2)\n"},
    {"S4", "# symmetric group on 4 points\n# order: 24\ndegree: 4\n(0 1)\n(0 1 2 3)\n"},
    {"A4", "# alternating group on 4 points\n# order: 12\ndegree: 4\n(0 1 2)\n(0 1)(2 3)\n"},
    {"D8", "# dihedral group of the square\n# order: 8\ndegree: 4\n(0 1 2 3)\n(1 3)\n"},
    {"D16", "# dihedral group of the octagon\n# order: 16\ndegree: 8\n"
            "(0 1 2 3 4 5 6 7)\n(1 7)(2 6)(3 5)\n"},
    {"Q8", "# quaternion group, regular action\n# order: 8\ndegree: 8\n"
           "(0 1 4 5)(2 3 6 7)\n(0 2 4 6)(1 7 5 3)\n"},
    {"Z4xZ2", "# cyclic 4 times cyclic 2\n# order: 8\ndegree: 6\n(0 1 2 3)\n(4 5)\n"},
    {"Heis3", "# Heisenberg group mod 3, regular action\n# order: 27\ndegree: 27\n"
              "(3 4 5)(6 8 7)(12 13 14)(15 17 16)(21 22 23)(24 26 25)\n"
              "(9 12 15)(10 13 16)(11 14 17)(18 24 21)(19 25 22)(20 26 23)\n"},
    {"E8", "# elementary abelian group of order 8\n# order: 8\ndegree: 6\n(0 1)\n(2 3)\n(4 5)\n"},
};

std::optional<std::size_t> documented_order(const std::string& text) {
  static const std::regex re(R"(^\s*#\s*order:\s*(\d+)\s*$)");
  std::istringstream in(text);
  std::string line;
  std::smatch m;
  while (std::getline(in, line))
    if (std::regex_match(line, m, re))
      return std::stoull(m[1].str());
  return std::nullopt;
}

void sort_by_name(std::vector<CatalogEntry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
}

} // namespace

CatalogEntry make_entry(std::string name, std::string text) {
  CatalogEntry e;
  e.file = ekc::parse_group_file(text);
  e.documented_order = documented_order(text);
  e.name = std::move(name);
  e.text = std::move(text);
  return e;
}

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& b : kBuiltins)
    out.push_back(make_entry(b.name, b.text));
  sort_by_name(out);
  return out;
}

std::vector<CatalogEntry> load_catalog_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw std::invalid_argument("catalog directory not found: " + dir.string());
  std::vector<CatalogEntry> out;
  for (const auto& de : std::filesystem::directory_iterator(dir)) {
    if (!de.is_regular_file() || de.path().extension() != ".grp")
      continue;
    std::ifstream in(de.path(), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      out.push_back(make_entry(de.path().stem().string(), buf.str()));
    } catch (const ekc::GroupFileError& e) {
      throw std::invalid_argument(de.path().filename().string() + ": " + e.what());
    }
  }
  sort_by_name(out);
  return out;
}

} // namespace ekcli

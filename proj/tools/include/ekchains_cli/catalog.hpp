#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <ekchains/group_file.hpp>

namespace ekcli {

struct CatalogEntry {
  std::string name;
  std::string text;
  ekc::GroupFile file;
  /// From a "# order: N" comment line, when present.
  std::optional<std::size_t> documented_order;
};

/// S3, S4, A4, D8, D16, Q8, Z4xZ2, Heis3 and E8 (elementary abelian of
/// order 8), sorted by name.
std::vector<CatalogEntry> builtin_catalog();

/// Every *.grp file in `dir`, named by file stem and sorted by name.
/// A malformed file raises std::invalid_argument naming the file and line.
std::vector<CatalogEntry> load_catalog_dir(const std::filesystem::path& dir);

CatalogEntry make_entry(std::string name, std::string text);

} // namespace ekcli

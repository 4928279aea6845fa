#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ekchains/permutation.hpp"

namespace ekc {

/// Parse failure in a group file; `line` is 1-based.
class GroupFileError : public std::runtime_error {
public:
  GroupFileError(const std::string& what, std::size_t line);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Contents of a group file:
///
///     # comment
///     degree: 4
///     (0 1 2 3)
///     (1 3)
///
/// The first non-comment line gives the degree; each following line is one
/// generator in cycle notation. Text after '#' is ignored.
struct GroupFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

GroupFile parse_group_file(std::string_view text);
GroupFile read_group_file(const std::filesystem::path& path);
std::string format_group_file(const GroupFile& file);

} // namespace ekc

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ekc {

using Point = std::uint32_t;

/// Raised when two permutations of different degree are combined.
class DegreeMismatch : public std::invalid_argument {
public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs);
};

/// Raised by parse_cycles; `position` is the byte offset of the offending token.
class CycleParseError : public std::runtime_error {
public:
  CycleParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A bijection of {0, ..., degree-1}, stored as its image table.
///
/// Products act on the left: (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument unless `images` is a bijection.
  static Permutation from_images(std::vector<Point> images);

  /// Product of the given cycles, rightmost applied first.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  /// Same permutation on a larger point set; new points are fixed.
  Permutation extended(std::size_t degree) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<Point> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

Permutation inverse(const Permutation& a);

/// [g,h] = g^-1 h^-1 g h.
Permutation commutator(const Permutation& g, const Permutation& h);

/// h^g = g^-1 h g.
Permutation conjugate(const Permutation& h, const Permutation& g);

/// Moved points in increasing order.
std::vector<Point> support(const Permutation& a);

/// Cycles of length >= 2, each rotated to start at its least point, sorted by
/// that point.
std::vector<std::vector<Point>> cycles(const Permutation& a);

/// Parses text such as "(0 1)(2 3)" or "()" into a permutation of `degree`.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Canonical cycle text; the identity prints as "()".
std::string format_cycles(const Permutation& a);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

} // namespace ekc

template <>
struct std::hash<ekc::Permutation> : ekc::PermutationHash {};

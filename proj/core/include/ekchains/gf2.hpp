#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ekc {

/// Fixed-length vector over GF(2), packed 64 bits per word.
class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (v)
      words_[i / 64] |= bit;
    else
      words_[i / 64] &= ~bit;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool any() const noexcept;
  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Solution set of A x = b: particular + span(kernel).
struct Gf2Solution {
  BitVector particular;
  std::vector<BitVector> kernel;
};

/// Linear system over GF(2) with equations of the form sum(x_v) = rhs.
class Gf2System {
public:
  explicit Gf2System(std::size_t unknowns) : unknowns_(unknowns) {}

  /// Adds sum_{v in vars} x_v = rhs; repeated variables cancel.
  void add_equation(std::span<const std::size_t> vars, bool rhs);

  std::size_t unknowns() const noexcept { return unknowns_; }
  std::size_t equations() const noexcept { return rows_.size(); }

  /// Solves with the right-hand sides given to add_equation().
  std::optional<Gf2Solution> solve() const;

  /// Solves A x = b for several right-hand sides with one elimination.
  /// Each entry of `rhs` has one bit per equation.
  std::vector<std::optional<Gf2Solution>> solve_many(std::span<const BitVector> rhs) const;

private:
  std::size_t unknowns_;
  std::vector<BitVector> rows_;
  std::vector<bool> rhs_;
};

/// Rank of a family of equal-length vectors.
std::size_t gf2_rank(std::vector<BitVector> vectors);

} // namespace ekc

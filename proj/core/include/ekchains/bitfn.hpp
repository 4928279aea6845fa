#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ekc {

/// Block-index permutation of ℕ: evens move up by 2, odd x >= 3 move down by
/// 2, and 1 goes to 0. Its orbit is the single chain ... 5 3 1 0 2 4 ...
std::uint64_t f_map(std::uint64_t x);
std::uint64_t f_inv(std::uint64_t x);
/// f applied m times (m may be negative).
std::uint64_t f_pow(std::uint64_t x, std::int64_t m);

/// An eventually periodic function ℕ → {0,1}.
///
/// j(x) = prefix[x] for x < |prefix|, and block[(x - |prefix|) mod period]
/// afterwards. Values are always stored in canonical form (shortest prefix,
/// shortest period), so two BitFns are equal exactly when they agree on
/// every natural number.
class BitFn {
public:
  /// The zero function.
  BitFn() : block_{false} {}

  static BitFn make(std::vector<bool> prefix, std::vector<bool> block);
  static BitFn periodic(std::vector<bool> block) { return make({}, std::move(block)); }
  static BitFn zero() { return BitFn(); }
  static BitFn ones() { return periodic({true}); }

  /// Samples `fn`, which must be periodic with `period` from `stable_from` on.
  /// Throws std::logic_error when a second period disagrees with the first.
  static BitFn tabulate(const std::function<bool(std::uint64_t)>& fn, std::size_t stable_from,
                        std::size_t period);

  /// Parses "prefix|block", e.g. "|0110" or "1|0".
  static BitFn parse(std::string_view text);

  bool operator()(std::uint64_t x) const;

  const std::vector<bool>& prefix() const noexcept { return prefix_; }
  const std::vector<bool>& block() const noexcept { return block_; }
  std::size_t period() const noexcept { return block_.size(); }
  bool is_purely_periodic() const noexcept { return prefix_.empty(); }
  bool is_zero() const noexcept { return prefix_.empty() && block_.size() == 1 && !block_[0]; }
  /// Finitely many ones.
  bool has_finite_support() const noexcept { return block_.size() == 1 && !block_[0]; }

  std::string str() const;

  friend bool operator==(const BitFn&, const BitFn&) = default;
  /// Lexicographic order of the value sequences j(0), j(1), ...
  friend bool operator<(const BitFn& a, const BitFn& b);

  friend BitFn operator^(const BitFn& a, const BitFn& b);

private:
  std::vector<bool> prefix_;
  std::vector<bool> block_;
};

/// Length of an initial segment on which two BitFns must agree to be equal.
std::size_t agreement_bound(const BitFn& a, const BitFn& b);

/// x ↦ j(x) xor j(f(x)).
BitFn delta(const BitFn& j);

/// x ↦ j(f^m(x)).
BitFn compose_shift(const BitFn& j, std::int64_t m);

} // namespace ekc

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ekchains/bitfn.hpp"
#include "ekchains/permutation.hpp"

namespace ekc {

/// Finite-support permutation of block indices.
class BlockPerm {
public:
  BlockPerm() = default;

  /// Throws std::invalid_argument unless `moves` is a bijection on its keys.
  static BlockPerm from_map(std::map<std::uint64_t, std::uint64_t> moves);
  static BlockPerm from_cycles(const std::vector<std::vector<std::uint64_t>>& cycles);
  static BlockPerm swap(std::uint64_t a, std::uint64_t b);

  std::uint64_t operator()(std::uint64_t x) const;
  bool is_identity() const noexcept { return moves_.empty(); }
  /// Largest moved index plus one (0 for the identity).
  std::uint64_t extent() const noexcept;
  const std::map<std::uint64_t, std::uint64_t>& moves() const noexcept { return moves_; }

  BlockPerm inverse() const;
  /// f^m ∘ this ∘ f^-m
  BlockPerm conjugated_by_shift(std::int64_t m) const;

  /// Cycle text, "()" for the identity.
  std::string str() const;

  friend bool operator==(const BlockPerm&, const BlockPerm&) = default;

private:
  std::map<std::uint64_t, std::uint64_t> moves_;
};

/// a ∘ b (b first).
BlockPerm compose(const BlockPerm& a, const BlockPerm& b);

/// x ↦ j(σ^-1(x)).
BitFn relabel(const BitFn& j, const BlockPerm& sigma);

/// The permutation B(bits) · P(blocks) · F^shift of ℕ.
///
/// B(b) swaps 2x and 2x+1 for every x with b(x) = 1; P(σ) moves block x
/// rigidly onto block σ(x); F moves block x onto block f(x). All three act
/// on the left, so F^shift is applied first.
struct SymElem {
  BitFn bits;
  BlockPerm blocks;
  std::int64_t shift = 0;

  static SymElem identity() { return {}; }
  static SymElem from_bits(BitFn b) { return {std::move(b), {}, 0}; }
  static SymElem from_blocks(BlockPerm p) { return {BitFn::zero(), std::move(p), 0}; }
  static SymElem f_power(std::int64_t m) { return {BitFn::zero(), {}, m}; }

  bool is_identity() const noexcept {
    return bits.is_zero() && blocks.is_identity() && shift == 0;
  }

  /// "B(<bitfn>) P(<block cycles>) F^<m>"
  std::string str() const;

  friend bool operator==(const SymElem&, const SymElem&) = default;
};

SymElem sym_mul(const SymElem& a, const SymElem& b);
SymElem sym_inv(const SymElem& a);
/// a^-1 b^-1 a b
SymElem sym_commutator(const SymElem& a, const SymElem& b);
std::uint64_t sym_apply(const SymElem& a, std::uint64_t x);

/// The element as a finite permutation, when its support is finite.
std::optional<Permutation> finite_permutation(const SymElem& a);

} // namespace ekc

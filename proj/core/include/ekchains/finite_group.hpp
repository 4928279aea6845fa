#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ekchains/permutation.hpp"

namespace ekc {

using ElemId = std::uint32_t;

inline constexpr std::size_t kDefaultClosureCap = 20000;

/// Closure grew past the configured element cap.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(std::size_t cap, std::size_t partial);
  std::size_t cap() const noexcept { return cap_; }
  std::size_t partial() const noexcept { return partial_; }

private:
  std::size_t cap_;
  std::size_t partial_;
};

/// An element or subset handed to an operation is not inside the ambient group.
class NotContained : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class Subgroup;

/// A finite permutation group with all of its elements enumerated.
///
/// Elements are sorted by image table, and an ElemId is a position in that
/// order. Copies share the same immutable state, so a FiniteGroup can be
/// passed by value and queried from several threads.
class FiniteGroup {
public:
  /// Breadth-first closure of `generators`; throws CapExceeded past `cap`.
  /// An empty generator list needs `degree` to build the trivial group.
  static FiniteGroup closure(std::vector<Permutation> generators,
                             std::size_t cap = kDefaultClosureCap,
                             std::size_t degree = 0);

  std::size_t degree() const;
  std::size_t order() const;
  const std::vector<Permutation>& generators() const;
  const std::vector<Permutation>& elements() const;
  const Permutation& element(ElemId id) const;

  std::optional<ElemId> find(const Permutation& p) const;
  /// Like find(), but throws NotContained.
  ElemId index_of(const Permutation& p) const;
  ElemId identity() const;

  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const;
  /// [a,b] = a^-1 b^-1 a b
  ElemId commutator(ElemId a, ElemId b) const;
  /// b^-1 a b
  ElemId conjugate(ElemId a, ElemId b) const;

  Subgroup whole() const;
  Subgroup trivial() const;

  /// True when both handles refer to the same enumerated group.
  bool same_as(const FiniteGroup& other) const noexcept { return impl_ == other.impl_; }

private:
  struct Impl;
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// A subset of a FiniteGroup's elements, closed under the group law.
class Subgroup {
public:
  /// Subgroup of `parent` generated by `generators` (ElemIds of parent).
  static Subgroup generated(const FiniteGroup& parent, std::span<const ElemId> generators);

  /// Wraps an explicit member set without checking closure. Callers that
  /// build a member list by filtering (centralizers etc.) use this.
  static Subgroup from_members(const FiniteGroup& parent, std::vector<ElemId> members);

  const FiniteGroup& parent() const noexcept { return parent_; }
  std::size_t order() const noexcept { return members_.size(); }
  const std::vector<ElemId>& members() const noexcept { return members_; }
  bool contains(ElemId id) const { return mask_[id]; }
  bool contains(const Permutation& p) const;
  bool is_subset_of(const Subgroup& other) const;
  bool is_whole() const noexcept { return members_.size() == parent_.order(); }
  bool is_trivial() const noexcept { return members_.size() == 1; }

  std::vector<Permutation> permutations() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.same_as(b.parent_) && a.members_ == b.members_;
  }

private:
  Subgroup(FiniteGroup parent, std::vector<ElemId> members);

  FiniteGroup parent_;
  std::vector<ElemId> members_;
  std::vector<bool> mask_;
};

/// Subgroup of `parent` generated by explicit permutations.
Subgroup subgroup_of(const FiniteGroup& parent, std::span<const Permutation> generators);

/// Elements of `within` commuting with every element of `set`.
Subgroup centralizer(const Subgroup& within, std::span<const ElemId> set);
Subgroup centralizer(const Subgroup& within, const Subgroup& of);
Subgroup centralizer(const FiniteGroup& group, std::span<const Permutation> set);

/// Elements g of `within` with g^-1 S g = S.
Subgroup normalizer(const Subgroup& within, const Subgroup& of);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// True when `members` contains the identity and is closed under products
/// and inverses.
bool is_subgroup(const FiniteGroup& parent, std::span<const ElemId> members);

bool is_abelian(const Subgroup& s);

/// Upper central series Z_0 = 1 <= Z_1 <= ... of `s`, computed inside `s`.
///
/// The list stops at the first term equal to `s` itself, or at the first
/// term equal to its predecessor (the series stalls; that term is kept).
std::vector<Subgroup> upper_central_series(const Subgroup& s);

/// Z_k(s) for any k, reusing a series from upper_central_series().
const Subgroup& upper_central_term(const std::vector<Subgroup>& series, std::size_t k);

/// Least k with Z_k = s, or nullopt when the series stalls below s.
std::optional<std::size_t> nilpotency_class(const Subgroup& s);

/// Cyclic subgroups and subgroups generated by two elements, deduplicated by
/// member set and ordered by (order, members).
struct GeneratedSubgroup {
  Subgroup subgroup;
  std::vector<ElemId> generators;
};
std::vector<GeneratedSubgroup> small_subgroups(const FiniteGroup& group);

} // namespace ekc

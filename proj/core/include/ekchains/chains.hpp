#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ekchains/finite_group.hpp"

namespace ekc {

/// C^0(A) <= C^1(A) <= ... computed inside `ambient`.
///
/// C^0 = 1 and C^k(A) is the set of x in the intersection of the normalizers
/// N(C^n(A)), n < k, with [x, a] in C^{k-1}(A) for every a in A.
struct IteratedCentralizerChain {
  Subgroup ambient;
  Subgroup target;
  std::vector<Subgroup> levels;
  /// Index of the last computed level. Equal to kmax unless the chain
  /// became constant earlier, in which case every later level equals
  /// levels.back().
  std::size_t truncated_at = 0;

  const Subgroup& level(std::size_t k) const {
    return levels[k < levels.size() ? k : levels.size() - 1];
  }
};

IteratedCentralizerChain iterated_centralizers(const Subgroup& ambient, const Subgroup& target,
                                               std::size_t kmax);

/// {x in ambient : [x, h] in Z_i(ambient) for all h in target}.
Subgroup commutator_into_center_term(const Subgroup& ambient, const Subgroup& target,
                                     std::size_t i);

/// E_0(H) = G >= E_1(H) >= ... with per-term metadata.
struct EkChainReport {
  FiniteGroup ambient;
  Subgroup subgroup;
  std::vector<Subgroup> terms;
  std::vector<std::size_t> orders;
  /// Number of trailing terms equal to the last one (>= 1).
  std::size_t stable_run = 0;
  std::optional<std::size_t> subgroup_class;
  /// Set only when H is nilpotent of class c with 1 <= c <= kmax; then every
  /// E_l with l >= c equals E_c.
  bool guaranteed_stable = false;
  std::optional<std::size_t> stable_from;
  std::string stability_reason;
};

/// E_{k+1}(H) = {g in E_k(H) : [g, C^{k+1}_{E_k}(H)] <= C^k_{E_k}(H)}.
///
/// The iterated centralizers inside each E_k are recomputed from scratch.
EkChainReport ek_chain(const FiniteGroup& group, const Subgroup& subgroup, std::size_t kmax);

/// kmax used when the caller does not give one: the class of H when H is
/// nilpotent (at least 1), else 2*floor(log2 |G|) + 2.
std::size_t default_kmax(const FiniteGroup& group, const Subgroup& subgroup);

} // namespace ekc

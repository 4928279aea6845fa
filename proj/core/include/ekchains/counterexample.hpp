#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ekchains/bitfn.hpp"
#include "ekchains/permutation.hpp"
#include "ekchains/symelem.hpp"

namespace ekc {

// Symbolic model of the infinite example in Sym(ℕ). K is generated by the
// block transpositions (2x 2x+1), F moves blocks along f, and H = K ⋊ <F>.
// Every iterated centralizer C^i of H inside the envelopes E_k(H) lies in the
// full product of the block transpositions, so a member is described by its
// exponent function j: ℕ → {0,1}. The levels do not depend on k.

/// Level computation would exceed the configured cell budget.
class ModelBudgetExceeded : public std::runtime_error {
public:
  ModelBudgetExceeded(std::size_t level_reached, std::size_t cells, std::size_t budget);
  std::size_t level_reached() const noexcept { return level_reached_; }

private:
  std::size_t level_reached_;
};

/// No descent witness was found in the scanned range.
class NoDescentWitness : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ModelOptions {
  /// Upper bound on stored bits summed over all levels (members * period).
  std::size_t max_cells = std::size_t{1} << 26;
};

/// levels[i] holds C^i as a sorted list of exponent functions; levels[0] is
/// the trivial group {0}.
struct IterChainModel {
  std::vector<std::vector<BitFn>> levels;

  std::size_t depth() const noexcept { return levels.empty() ? 0 : levels.size() - 1; }
  const std::vector<BitFn>& level(std::size_t i) const { return levels.at(i); }
  bool contains(std::size_t i, const BitFn& j) const;
};

/// Builds C^0 .. C^imax. C^{i+1} is the set of 2^{i+1}-periodic j with
/// delta(j) in C^i, found by solving one GF(2) system per member of C^i.
IterChainModel iterated_centralizer_model(std::size_t imax, const ModelOptions& options = {});

/// Adds levels until model.depth() >= depth.
void extend_model(IterChainModel& model, std::size_t depth, const ModelOptions& options = {});

/// Enumeration oracle for C^i: all patterns of period 2^i whose delta lies in
/// the oracle's C^{i-1}. Only i <= 4 is accepted.
std::vector<BitFn> brute_force_level(std::size_t i);

/// Number of candidates brute_force_level(i) examines at its top level.
std::size_t brute_force_candidates(std::size_t i);

/// Smallest l with j(x) = j(x + 2^l) for every member j of `level`.
std::size_t minimal_period_exponent(const std::vector<BitFn>& level);

/// First place where j is 1; j must be nonzero.
std::uint64_t first_one(const BitFn& j);

/// g in C^{i+1} \ C^i with delta(g) = h, where h is the member of C^i whose
/// first 1 lies furthest right. Built by the seeded recursion along the
/// orbit of f and checked against the model. Needs 1 <= i < model.depth().
BitFn ascent_witness(std::size_t i, const IterChainModel& model);

/// The first `count` block swaps (x + 2^l i, x + 2^l i') with i < i',
/// ordered by (i', i). Needs x < 2^l.
std::vector<SymElem> gxl_generators(std::uint64_t x, unsigned l, std::size_t count);

struct DescentWitness {
  std::size_t k = 0;
  std::size_t k_prime = 0;
  unsigned l = 0;
  std::uint64_t x0 = 0;
  SymElem g;
  BitFn h;
  /// [g, B(h)] as a finite permutation of points.
  Permutation commutator;
};

/// Element g of E_{k+1}(H) outside E_{k'+1}(H) for some k' in (k, scan_max].
///
/// l is the least exponent making every member of C^{k+1} 2^l-periodic; the
/// scan takes the first (k', h, x0) in lexicographic order with h in
/// C^{k'+1}, x0 < 2^l and h(x0) != h(x0 + 2^l), and g swaps blocks x0 and
/// x0 + 2^l. The model is extended on demand. Throws NoDescentWitness when
/// the range holds no witness.
DescentWitness descent_witness(std::size_t k, std::size_t scan_max, IterChainModel& model,
                               const ModelOptions& options = {});

} // namespace ekc

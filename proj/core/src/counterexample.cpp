#include "ekchains/counterexample.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ekchains/gf2.hpp"

namespace ekc {

namespace {

// Equations of delta(g) = h for a g of period `period`: each entry lists the
// two unknowns and the point x whose value h(x) is the right-hand side.
struct DeltaEquation {
  std::size_t a;
  std::size_t b;
  std::uint64_t point;
};

std::vector<DeltaEquation> delta_equations(std::size_t period) {
  std::vector<DeltaEquation> eqs;
  for (std::size_t x = 0; x < period; x += 2)
    eqs.push_back({x, (x + 2) % period, x});
  for (std::size_t x = 3; x < period; x += 2)
    eqs.push_back({x, x - 2, x});
  eqs.push_back({1, 0, 1});
  // x = period + 1 reaches back into the previous copy of the block.
  eqs.push_back({1, period - 1, period + 1});
  return eqs;
}

BitVector expand(const BitFn& j, std::size_t length) {
  BitVector v(length);
  for (std::size_t x = 0; x < length; ++x)
    v.set(x, j(x));
  return v;
}

std::size_t stored_cells(const IterChainModel& model) {
  std::size_t cells = 0;
  for (const auto& level : model.levels)
    for (const auto& j : level)
      cells += j.prefix().size() + j.period();
  return cells;
}

std::vector<BitFn> next_level(const std::vector<BitFn>& prev, std::size_t period) {
  auto eqs = delta_equations(period);
  Gf2System sys(period);
  for (const auto& e : eqs) {
    std::size_t vars[] = {e.a, e.b};
    sys.add_equation(vars, false);
  }

  std::vector<BitVector> rhs;
  rhs.reserve(prev.size());
  for (const auto& h : prev) {
    if (!h.is_purely_periodic() || period % h.period() != 0)
      throw std::logic_error("centralizer level member " + h.str() +
                             " is not periodic with period dividing " + std::to_string(period));
    BitVector b(eqs.size());
    for (std::size_t r = 0; r < eqs.size(); ++r)
      b.set(r, h(eqs[r].point));
    rhs.push_back(std::move(b));
  }

  auto solutions = sys.solve_many(rhs);
  std::set<BitFn, std::less<>> found;
  for (std::size_t idx = 0; idx < solutions.size(); ++idx) {
    const auto& sol = solutions[idx];
    if (!sol)
      continue;
    const std::size_t dim = sol->kernel.size();
    if (dim > 16)
      throw std::logic_error("unexpected kernel dimension " + std::to_string(dim));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
      BitVector x = sol->particular;
      for (std::size_t d = 0; d < dim; ++d)
        if ((mask >> d) & 1u)
          x ^= sol->kernel[d];
      std::vector<bool> block(period);
      for (std::size_t t = 0; t < period; ++t)
        block[t] = x.get(t);
      BitFn g = BitFn::periodic(std::move(block));
      if (!(delta(g) == prev[idx]))
        throw std::logic_error("solver returned " + g.str() + " whose delta is not " +
                               prev[idx].str());
      found.insert(std::move(g));
    }
  }

  std::vector<BitFn> level(found.begin(), found.end());
  // XOR-closed with zero: a set containing 0 whose size equals the size of
  // its span is that span.
  std::vector<BitVector> vecs;
  for (const auto& j : level)
    vecs.push_back(expand(j, period));
  std::size_t rank = gf2_rank(vecs);
  if (level.empty() || !level.front().is_zero() || rank >= 64 ||
      level.size() != (std::size_t{1} << rank))
    throw std::logic_error("centralizer level of period " + std::to_string(period) +
                           " is not XOR-closed");
  return level;
}

} // namespace

ModelBudgetExceeded::ModelBudgetExceeded(std::size_t level_reached, std::size_t cells,
                                         std::size_t budget)
    : std::runtime_error("model budget exceeded after level " + std::to_string(level_reached) +
                         ": next level needs " + std::to_string(cells) + " cells, budget " +
                         std::to_string(budget)),
      level_reached_(level_reached) {}

bool IterChainModel::contains(std::size_t i, const BitFn& j) const {
  const auto& lv = level(i);
  return std::binary_search(lv.begin(), lv.end(), j);
}

void extend_model(IterChainModel& model, std::size_t depth, const ModelOptions& options) {
  if (model.levels.empty())
    model.levels.push_back({BitFn::zero()});
  std::size_t cells = stored_cells(model);
  while (model.depth() < depth) {
    const std::size_t i = model.depth();
    if (i + 1 >= 63)
      throw ModelBudgetExceeded(i, SIZE_MAX, options.max_cells);
    const std::size_t period = std::size_t{1} << (i + 1);
    const std::size_t predicted = cells + 2 * model.levels[i].size() * period;
    if (predicted > options.max_cells)
      throw ModelBudgetExceeded(i, predicted, options.max_cells);
    model.levels.push_back(next_level(model.levels[i], period));
    cells = stored_cells(model);
  }
}

IterChainModel iterated_centralizer_model(std::size_t imax, const ModelOptions& options) {
  if (imax < 1)
    throw std::invalid_argument("iterated_centralizer_model: imax must be at least 1");
  IterChainModel model;
  extend_model(model, imax, options);
  return model;
}

std::size_t brute_force_candidates(std::size_t i) {
  if (i > 4)
    throw std::invalid_argument("brute_force_level: i <= 4 required");
  return std::size_t{1} << (std::size_t{1} << i);
}

std::vector<BitFn> brute_force_level(std::size_t i) {
  if (i > 4)
    throw std::invalid_argument("brute_force_level: i <= 4 required, got " + std::to_string(i));
  if (i == 0)
    return {BitFn::zero()};

  std::vector<BitFn> lower;
  if (i > 1)
    lower = brute_force_level(i - 1);
  const std::size_t period = std::size_t{1} << i;
  std::vector<BitFn> out;
  for (std::uint64_t pattern = 0; pattern < brute_force_candidates(i); ++pattern) {
    std::vector<bool> block(period);
    for (std::size_t t = 0; t < period; ++t)
      block[t] = (pattern >> t) & 1u;
    BitFn j = BitFn::periodic(std::move(block));
    BitFn d = delta(j);
    // C^1: commuting with F means delta(j) = 0.
    bool keep = (i == 1) ? d.is_zero()
                         : std::find(lower.begin(), lower.end(), d) != lower.end();
    if (keep)
      out.push_back(std::move(j));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t minimal_period_exponent(const std::vector<BitFn>& level) {
  std::size_t l = 0;
  for (const auto& j : level) {
    if (!j.is_purely_periodic() || !std::has_single_bit(j.period()))
      throw std::logic_error("level member " + j.str() + " is not 2-power periodic");
    l = std::max<std::size_t>(l, static_cast<std::size_t>(std::countr_zero(j.period())));
  }
  return l;
}

std::uint64_t first_one(const BitFn& j) {
  const std::size_t n = j.prefix().size() + j.period();
  for (std::size_t x = 0; x < n; ++x)
    if (j(x))
      return x;
  throw std::invalid_argument("first_one: zero function");
}

BitFn ascent_witness(std::size_t i, const IterChainModel& model) {
  if (i < 1 || i >= model.depth())
    throw std::invalid_argument("ascent_witness: need 1 <= i < model depth");
  const auto& level = model.level(i);

  const BitFn* chosen = nullptr;
  std::uint64_t best = 0;
  for (const auto& h : level) {
    if (h.is_zero())
      continue;
    std::uint64_t x0 = first_one(h);
    bool better = !chosen || x0 > best;
    // Among equal x0 prefer a member new at this level.
    if (chosen && x0 == best && model.contains(i - 1, *chosen) && !model.contains(i - 1, h))
      better = true;
    if (better) {
      chosen = &h;
      best = x0;
    }
  }
  const BitFn& h = *chosen;

  const std::size_t period = std::size_t{1} << (i + 1);
  std::vector<bool> g(period);
  if (best % 2 == 0) {
    g[0] = false;
    g[1] = g[0] != h(1);
  } else {
    g[1] = false;
    g[0] = g[1] != h(1);
  }
  // Even places run forward along f, odd places backward.
  for (std::size_t x = 0; x + 2 < period; x += 2)
    g[x + 2] = g[x] != h(x);
  for (std::size_t x = 1; x + 2 < period; x += 2)
    g[x + 2] = g[x] != h(x + 2);

  BitFn out = BitFn::periodic(std::move(g));
  if (!(delta(out) == h) || !model.contains(i + 1, out) || model.contains(i, out))
    throw std::logic_error("ascent witness " + out.str() + " for h = " + h.str() +
                           " disagrees with the solver levels");
  return out;
}

std::vector<SymElem> gxl_generators(std::uint64_t x, unsigned l, std::size_t count) {
  if (l >= 62 || x >= (std::uint64_t{1} << l))
    throw std::invalid_argument("gxl_generators: need 0 <= x < 2^l");
  const std::uint64_t step = std::uint64_t{1} << l;
  std::vector<SymElem> out;
  for (std::uint64_t hi = 1; out.size() < count; ++hi)
    for (std::uint64_t lo = 0; lo < hi && out.size() < count; ++lo)
      out.push_back(SymElem::from_blocks(BlockPerm::swap(x + step * lo, x + step * hi)));
  return out;
}

DescentWitness descent_witness(std::size_t k, std::size_t scan_max, IterChainModel& model,
                               const ModelOptions& options) {
  if (scan_max <= k)
    throw std::invalid_argument("descent_witness: scan_max must exceed k");
  extend_model(model, k + 1, options);
  const auto l = static_cast<unsigned>(minimal_period_exponent(model.level(k + 1)));
  const std::uint64_t step = std::uint64_t{1} << l;

  for (std::size_t kp = k + 1; kp <= scan_max; ++kp) {
    extend_model(model, kp + 1, options);
    for (const auto& h : model.level(kp + 1)) {
      for (std::uint64_t x0 = 0; x0 < step; ++x0) {
        if (h(x0) == h(x0 + step))
          continue;

        DescentWitness w;
        w.k = k;
        w.k_prime = kp;
        w.l = l;
        w.x0 = x0;
        w.g = SymElem::from_blocks(BlockPerm::swap(x0, x0 + step));
        w.h = h;

        // g passes the membership test for E_{k+1}.
        for (const auto& lower : model.level(k + 1))
          if (!sym_commutator(w.g, SymElem::from_bits(lower)).is_identity())
            throw std::logic_error("descent witness does not centralize C^{k+1}");
        // ... but [g, h] is a nontrivial finite-support element, and every
        // nontrivial member of C^{k'} has infinite support.
        SymElem c = sym_commutator(w.g, SymElem::from_bits(h));
        auto perm = finite_permutation(c);
        if (c.is_identity() || !perm || model.contains(kp, c.bits))
          throw std::logic_error("descent witness commutator is not a finite nontrivial element");
        w.commutator = *perm;
        return w;
      }
    }
  }
  throw NoDescentWitness("no descent witness for k=" + std::to_string(k) + " with k' in [" +
                         std::to_string(k + 1) + ", " + std::to_string(scan_max) + "]");
}

} // namespace ekc

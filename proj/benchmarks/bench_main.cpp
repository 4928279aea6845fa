#include <benchmark/benchmark.h>

#include <ekchains/chains.hpp>
#include <ekchains/counterexample.hpp>
#include <ekchains/gf2.hpp>

using namespace ekc;

namespace {

FiniteGroup heisenberg() {
  return FiniteGroup::closure(
      {parse_cycles("(3 4 5)(6 8 7)(12 13 14)(15 17 16)(21 22 23)(24 26 25)", 27),
       parse_cycles("(9 12 15)(10 13 16)(11 14 17)(18 24 21)(19 25 22)(20 26 23)", 27)});
}

void BM_ClosureSymmetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i)
    cyc[i] = static_cast<Point>(i);
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}}),
                                Permutation::from_cycles(n, {cyc})};
  for (auto _ : state)
    benchmark::DoNotOptimize(FiniteGroup::closure(gens).order());
}
BENCHMARK(BM_ClosureSymmetric)->DenseRange(4, 7);

void BM_EkChainHeisenberg(benchmark::State& state) {
  auto g = heisenberg();
  auto subs = small_subgroups(g);
  for (auto _ : state)
    for (const auto& s : subs)
      benchmark::DoNotOptimize(ek_chain(g, s.subgroup, 4).orders.back());
}
BENCHMARK(BM_EkChainHeisenberg);

void BM_ModelLevels(benchmark::State& state) {
  const auto levels = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(iterated_centralizer_model(levels).depth());
}
BENCHMARK(BM_ModelLevels)->DenseRange(6, 10, 2);

void BM_Gf2SolveMany(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Gf2System sys(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t vars[] = {x, (x + 2) % n};
    sys.add_equation(vars, false);
  }
  std::vector<BitVector> rhs(64, BitVector(n));
  for (std::size_t c = 0; c < rhs.size(); ++c)
    for (std::size_t x = 0; x < n; x += 1 + c % 5)
      rhs[c].set(x);
  for (auto _ : state)
    benchmark::DoNotOptimize(sys.solve_many(rhs).size());
}
BENCHMARK(BM_Gf2SolveMany)->RangeMultiplier(4)->Range(64, 1024);

} // namespace
BENCHMARK_MAIN();

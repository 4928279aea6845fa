// Acceptance run: prints one [PASS]/[FAIL] line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <ekchains/chains.hpp>
#include <ekchains/counterexample.hpp>
#include <ekchains/verify.hpp>
#include <ekchains_cli/catalog.hpp>
#include <ekchains_cli/commands.hpp>

#include "random_symelem.hpp"

using namespace ekc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Instance {
  std::string name;
  FiniteGroup g;
  std::vector<Subgroup> subs;
};

std::vector<Instance> catalog_instances() {
  std::vector<Instance> out;
  for (const auto& e : ekcli::builtin_catalog()) {
    auto g = FiniteGroup::closure(e.file.generators, kDefaultClosureCap, e.file.degree);
    Instance inst{e.name, g, {}};
    bool has_whole = false;
    for (auto& s : small_subgroups(g)) {
      has_whole = has_whole || s.subgroup.is_whole();
      inst.subs.push_back(s.subgroup);
    }
    if (!has_whole)
      inst.subs.push_back(g.whole());
    out.push_back(std::move(inst));
  }
  return out;
}

Outcome lemma_suite() {
  ekcli::VerifyOptions opts;
  opts.suite = ekcli::Suite::all;
  opts.kmax = 4;
  auto res = ekcli::cmd_verify(opts);
  const auto& r = res.report;
  std::ostringstream os;
  os << r.count(CheckStatus::pass) << " pass, " << r.count(CheckStatus::fail) << " fail, "
     << r.count(CheckStatus::skipped) << " skipped (hypothesis not met or clause not applicable)";
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::fail) {
      os << "; first failure " << c.id << ": " << c.detail;
      break;
    }
  return {r.count(CheckStatus::fail) == 0 && !res.resource_exhausted && r.checks.size() > 0,
          os.str()};
}

Outcome nilpotent_envelopes() {
  std::size_t exact = 0, stable = 0, trivial = 0;
  for (const auto& inst : catalog_instances())
    for (const auto& h : inst.subs) {
      auto c = nilpotency_class(h);
      if (!c)
        continue;
      const std::size_t cc = std::max<std::size_t>(*c, 1);
      auto rep = ek_chain(inst.g, h, cc + 3);
      if (*c >= 1) {
        if (nilpotency_class(rep.terms[cc]) != c)
          return {false, inst.name + ": class of E_c differs from c = " + std::to_string(*c)};
        ++exact;
      } else {
        ++trivial;
      }
      for (std::size_t l = cc + 1; l <= cc + 3; ++l)
        if (!(rep.terms[l] == rep.terms[cc]))
          return {false, inst.name + ": E_" + std::to_string(l) + " != E_" + std::to_string(cc)};
      ++stable;
    }
  return {exact > 0,
          "class(E_c) = c on " + std::to_string(exact) + " nilpotent H with c >= 1; E_c = ... = "
          "E_{c+3} on " + std::to_string(stable) + " nilpotent H (" + std::to_string(trivial) +
          " trivial H taken with c = 1, since class 0 would make E_0 = G)"};
}

Outcome counterexample_chain() {
  auto m = iterated_centralizer_model(8);
  if (!(m.level(1) == std::vector<BitFn>{BitFn::zero(), BitFn::ones()}))
    return {false, "C^1 differs from {0^inf, 1^inf}"};
  std::string sizes;
  for (std::size_t i = 1; i <= 8; ++i) {
    if (m.level(i).size() <= m.level(i - 1).size())
      return {false, "|C^" + std::to_string(i) + "| does not increase"};
    sizes += (i > 1 ? "," : "") + std::to_string(m.level(i).size());
    for (const auto& j : m.level(i))
      if (!j.is_purely_periodic() || (std::size_t{1} << i) % j.period() != 0)
        return {false, "C^" + std::to_string(i) + " member " + j.str() + " not 2^i-periodic"};
  }
  return {true, "C^1 = {|0, |1}; |C^1..C^8| = [" + sizes + "]; all members 2^i-periodic"};
}

Outcome oracle_equivalence() {
  auto m = iterated_centralizer_model(3);
  std::size_t candidates = 0;
  for (std::size_t i = 1; i <= 3; ++i) {
    if (!(brute_force_level(i) == m.level(i)))
      return {false, "level " + std::to_string(i) + " differs from brute force"};
    candidates += brute_force_candidates(i);
  }
  return {true, "levels 1..3 equal; " + std::to_string(brute_force_candidates(1)) + "+" +
                    std::to_string(brute_force_candidates(2)) + "+" +
                    std::to_string(brute_force_candidates(3)) + " = " +
                    std::to_string(candidates) + " candidates enumerated"};
}

Outcome descent_witnesses() {
  IterChainModel m = iterated_centralizer_model(2);
  std::string kps;
  for (std::size_t k = 0; k <= 4; ++k) {
    DescentWitness w;
    try {
      w = descent_witness(k, 12, m);
    } catch (const std::exception& e) {
      return {false, "k=" + std::to_string(k) + ": " + e.what()};
    }
    const Point a = static_cast<Point>(w.x0), b = static_cast<Point>(w.x0 + (1u << w.l));
    auto want = Permutation::from_cycles(w.commutator.degree(), {{2 * a, 2 * a + 1}, {2 * b, 2 * b + 1}});
    if (!(w.commutator == want))
      return {false, "k=" + std::to_string(k) + ": [g,h] = " + format_cycles(w.commutator)};
    if (k == 0) {
      auto g = finite_permutation(w.g);
      if (!g || format_cycles(*g) != "(0 2)(1 3)" || !(w.h == BitFn::parse("|0110")) ||
          format_cycles(w.commutator) != "(0 1)(2 3)")
        return {false, "k=0 witness is " + w.g.str() + ", h = " + w.h.str()};
    }
    kps += (k ? "," : "") + std::to_string(w.k_prime);
  }
  return {true, "k=0..4 succeed with k' = [" + kps +
                    "]; k=0: g = (0 2)(1 3), h = |0110, [g,h] = (0 1)(2 3)"};
}

Outcome symbolic_algebra() {
  std::mt19937_64 rng(20261016);
  std::size_t hom = 0, assoc = 0;
  for (int t = 0; t < 1000; ++t) {
    auto a = testsupport::random_symelem(rng), b = testsupport::random_symelem(rng);
    auto ab = sym_mul(a, b);
    bool ok = true;
    for (std::uint64_t x = 0; x < 512 && ok; ++x)
      ok = sym_apply(ab, x) == sym_apply(a, sym_apply(b, x));
    hom += !ok;
  }
  for (int t = 0; t < 1000; ++t) {
    auto a = testsupport::random_symelem(rng), b = testsupport::random_symelem(rng),
         c = testsupport::random_symelem(rng);
    assoc += !(sym_mul(a, sym_mul(b, c)) == sym_mul(sym_mul(a, b), c));
  }
  return {hom == 0 && assoc == 0, std::to_string(hom) + " homomorphism failures over 1000 pairs x " +
                                      "512 points, " + std::to_string(assoc) +
                                      " associativity failures over 1000 triples"};
}

Outcome definition_fidelity() {
  std::size_t compared = 0;
  for (const auto& inst : catalog_instances())
    for (const auto& h : inst.subs) {
      auto rep = ek_chain(inst.g, h, 4);
      for (std::size_t k = 0; k <= 4; ++k) {
        auto chain = iterated_centralizers(rep.terms[k], h, k + 1);
        for (std::size_t i = 0; i <= k; ++i) {
          if (!(commutator_into_center_term(rep.terms[k], h, i) == chain.level(i + 1)))
            return {false, inst.name + ": k=" + std::to_string(k) + " i=" + std::to_string(i)};
          ++compared;
        }
      }
    }
  return {compared > 0, std::to_string(compared) + " (G, H, k, i) instances with i <= k <= 4 equal"};
}

struct Criterion {
  const char* id;
  const char* title;
  double bound_seconds;
  std::function<Outcome()> run;
};

} // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "lemma suite over the catalog (verify --suite all --kmax 4)", 60, lemma_suite},
      {"AC2", "nilpotent envelopes: class(E_c) = c and E_c = E_{c+1} = E_{c+2} = E_{c+3}", 60,
       nilpotent_envelopes},
      {"AC3", "symbolic chain C^1 = {0,1}, |C^i| increasing, 2^i-periodic (levels = 8)", 10,
       counterexample_chain},
      {"AC4", "GF(2) solver levels equal brute-force levels for i = 1, 2, 3", 0,
       oracle_equivalence},
      {"AC5", "strict descent witnesses for k = 0..4 within scan_max = 12", 0, descent_witnesses},
      {"AC6", "symbolic algebra: point-action homomorphism and associativity", 0,
       symbolic_algebra},
      {"AC7", "simplified C^{i+1} form equals the definition for i <= k <= 4", 0,
       definition_fidelity},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = std::to_string(secs).substr(0, 6) + " s";
    if (c.bound_seconds > 0) {
      timing += ", bound " + std::to_string(static_cast<int>(c.bound_seconds)) + " s";
      if (secs >= c.bound_seconds) {
        o.ok = false;
        o.detail += "; runtime bound exceeded";
      }
    }
    std::printf("[%s] %s %s -- %s (%s)\n", o.ok ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str(), timing.c_str());
    failed += !o.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}

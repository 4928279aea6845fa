#include "ekchains/chains.hpp"

#include <algorithm>
#include <bit>

namespace ekc {

namespace {

void require_within(const Subgroup& inner, const Subgroup& outer, const char* what) {
  if (!inner.parent().same_as(outer.parent()))
    throw std::invalid_argument(std::string(what) + ": subgroups of different groups");
  if (!inner.is_subset_of(outer))
    throw NotContained(std::string(what) + ": subgroup is not contained in the ambient group");
}

} // namespace

IteratedCentralizerChain iterated_centralizers(const Subgroup& ambient, const Subgroup& target,
                                               std::size_t kmax) {
  require_within(target, ambient, "iterated_centralizers");
  const auto& g = ambient.parent();

  IteratedCentralizerChain chain{ambient, target, {g.trivial()}, 0};
  // Running intersection of N(C^n), n < k.
  std::vector<ElemId> normalizing = ambient.members();

  for (std::size_t k = 1; k <= kmax; ++k) {
    const Subgroup& prev = chain.levels.back();
    Subgroup n_prev = normalizer(ambient, prev);
    std::erase_if(normalizing, [&](ElemId x) { return !n_prev.contains(x); });

    std::vector<ElemId> next;
    for (ElemId x : normalizing) {
      bool ok = std::all_of(target.members().begin(), target.members().end(),
                            [&](ElemId a) { return prev.contains(g.commutator(x, a)); });
      if (ok)
        next.push_back(x);
    }
    Subgroup level = Subgroup::from_members(g, std::move(next));
    if (level == prev) {
      chain.truncated_at = k - 1;
      return chain;
    }
    chain.levels.push_back(std::move(level));
    chain.truncated_at = k;
  }
  return chain;
}

Subgroup commutator_into_center_term(const Subgroup& ambient, const Subgroup& target,
                                     std::size_t i) {
  require_within(target, ambient, "commutator_into_center_term");
  const auto& g = ambient.parent();
  auto series = upper_central_series(ambient);
  const Subgroup& z = upper_central_term(series, i);
  std::vector<ElemId> out;
  for (ElemId x : ambient.members()) {
    bool ok = std::all_of(target.members().begin(), target.members().end(),
                          [&](ElemId h) { return z.contains(g.commutator(x, h)); });
    if (ok)
      out.push_back(x);
  }
  return Subgroup::from_members(g, std::move(out));
}

EkChainReport ek_chain(const FiniteGroup& group, const Subgroup& subgroup, std::size_t kmax) {
  if (kmax < 1)
    throw std::invalid_argument("ek_chain: kmax must be at least 1");
  if (!subgroup.parent().same_as(group))
    throw std::invalid_argument("ek_chain: subgroup belongs to another group");

  EkChainReport report{group, subgroup, {group.whole()}, {}, 0, std::nullopt, false,
                       std::nullopt, {}};
  for (std::size_t k = 0; k < kmax; ++k) {
    const Subgroup& ek = report.terms.back();
    auto chain = iterated_centralizers(ek, subgroup, k + 1);
    const Subgroup& upper = chain.level(k + 1);
    const Subgroup& lower = chain.level(k);
    std::vector<ElemId> next;
    for (ElemId x : ek.members()) {
      bool ok = std::all_of(upper.members().begin(), upper.members().end(),
                            [&](ElemId c) { return lower.contains(group.commutator(x, c)); });
      if (ok)
        next.push_back(x);
    }
    report.terms.push_back(Subgroup::from_members(group, std::move(next)));
  }

  for (const auto& t : report.terms)
    report.orders.push_back(t.order());
  report.stable_run = 1;
  for (std::size_t i = report.terms.size() - 1; i > 0; --i) {
    if (!(report.terms[i - 1] == report.terms.back()))
      break;
    ++report.stable_run;
  }

  report.subgroup_class = nilpotency_class(subgroup);
  if (report.subgroup_class) {
    std::size_t c = std::max<std::size_t>(*report.subgroup_class, 1);
    if (c <= kmax) {
      report.guaranteed_stable = true;
      report.stable_from = c;
      report.stability_reason = "H nilpotent of class " + std::to_string(*report.subgroup_class) +
                                ": E_l = E_" + std::to_string(c) + " for all l >= " +
                                std::to_string(c);
    } else {
      report.stability_reason = "H nilpotent of class " + std::to_string(c) +
                                " > kmax; stabilization not yet reached";
    }
  } else {
    report.stability_reason = "H not nilpotent; trailing run of " +
                              std::to_string(report.stable_run) +
                              " equal terms observed, not a proof of stabilization";
  }
  return report;
}

std::size_t default_kmax(const FiniteGroup& group, const Subgroup& subgroup) {
  if (auto c = nilpotency_class(subgroup))
    return std::max<std::size_t>(*c, 1);
  auto log2 = static_cast<std::size_t>(std::bit_width(group.order()) - 1);
  return 2 * log2 + 2;
}

} // namespace ekc

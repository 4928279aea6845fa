#include "ekchains/verify.hpp"

#include <algorithm>
#include <sstream>

namespace ekc {

namespace {

std::string range_text(std::size_t lo, std::size_t hi) {
  return "k=" + std::to_string(lo) + ".." + std::to_string(hi);
}

// Describes the first element in exactly one of the two subgroups.
std::string difference_witness(const Subgroup& a, const char* a_name, const Subgroup& b,
                               const char* b_name) {
  const auto& g = a.parent();
  for (ElemId x : a.members())
    if (!b.contains(x))
      return format_cycles(g.element(x)) + " in " + a_name + " but not in " + b_name;
  for (ElemId x : b.members())
    if (!a.contains(x))
      return format_cycles(g.element(x)) + " in " + b_name + " but not in " + a_name;
  return "sets agree";
}

} // namespace

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
  case CheckStatus::pass:
    return "pass";
  case CheckStatus::fail:
    return "fail";
  case CheckStatus::skipped:
    return "skipped";
  }
  return "?";
}

void VerificationReport::add(std::string id, std::string claim, CheckStatus status,
                             std::string detail) {
  checks.push_back({std::move(id), std::move(claim), status, std::move(detail)});
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

VerificationReport verify_bryant_lemma(const FiniteGroup& group, const Subgroup& h,
                                       std::size_t kmax) {
  VerificationReport out;
  auto cls = nilpotency_class(h);
  std::size_t depth = std::max(kmax, cls.value_or(0));
  auto chain = iterated_centralizers(group.whole(), h, depth);
  auto zh = upper_central_series(h);

  {
    std::string fail;
    for (std::size_t k = 0; k <= kmax && fail.empty(); ++k)
      if (!is_subgroup(group, chain.level(k).members()))
        fail = "k=" + std::to_string(k) + ": C^k not closed";
    out.add("bryant.i", "C^k(H) is a subgroup of G",
            fail.empty() ? CheckStatus::pass : CheckStatus::fail,
            fail.empty() ? range_text(0, kmax) : fail);
  }
  {
    std::string fail;
    for (std::size_t k = 0; k <= kmax && fail.empty(); ++k) {
      Subgroup lhs = intersect(chain.level(k), h);
      if (!(lhs == upper_central_term(zh, k)))
        fail = "k=" + std::to_string(k) + ": " +
               difference_witness(lhs, "C^k(H)∩H", upper_central_term(zh, k), "Z_k(H)");
    }
    out.add("bryant.ii", "C^k(H) ∩ H = Z_k(H)",
            fail.empty() ? CheckStatus::pass : CheckStatus::fail,
            fail.empty() ? range_text(0, kmax) : fail);
  }
  if (h.is_whole()) {
    auto zg = upper_central_series(group.whole());
    std::string fail;
    for (std::size_t k = 0; k <= kmax && fail.empty(); ++k)
      if (!(chain.level(k) == upper_central_term(zg, k)))
        fail = "k=" + std::to_string(k) + ": " +
               difference_witness(chain.level(k), "C^k(G)", upper_central_term(zg, k), "Z_k(G)");
    out.add("bryant.iii", "C^k(G) = Z_k(G)", fail.empty() ? CheckStatus::pass : CheckStatus::fail,
            fail.empty() ? range_text(0, kmax) : fail);
  } else {
    out.add("bryant.iii", "C^k(G) = Z_k(G)", CheckStatus::skipped, "H is a proper subgroup");
  }
  if (cls) {
    const Subgroup& level = chain.level(*cls);
    bool ok = h.is_subset_of(level);
    out.add("bryant.iv", "H <= C^c(H) for H of class c",
            ok ? CheckStatus::pass : CheckStatus::fail,
            ok ? "c=" + std::to_string(*cls)
               : "c=" + std::to_string(*cls) + ": " +
                     difference_witness(h, "H", intersect(h, level), "C^c(H)"));
  } else {
    out.add("bryant.iv", "H <= C^c(H) for H of class c", CheckStatus::skipped,
            "H is not nilpotent");
  }
  return out;
}

VerificationReport verify_abc_lemma(const Subgroup& a, const Subgroup& b, const Subgroup& c,
                                    std::size_t kmax) {
  if (!a.is_subset_of(b) || !b.is_subset_of(c))
    throw NotContained("verify_abc_lemma: expected A <= B <= C");

  VerificationReport out;
  auto c_a = iterated_centralizers(c, a, kmax + 1);
  auto c_b = iterated_centralizers(c, b, kmax + 1);
  auto b_a = iterated_centralizers(b, a, kmax + 1);
  auto zb = upper_central_series(b);
  auto zc = upper_central_series(c);

  // The hypothesis at k implies it at every smaller k.
  std::size_t hyp_max = 0;
  while (hyp_max < kmax && c_a.level(hyp_max + 1) == upper_central_term(zc, hyp_max + 1))
    ++hyp_max;
  std::string scope = "hypothesis holds for " + range_text(0, hyp_max);

  std::string fail_i, fail_ii, fail_iii;
  for (std::size_t j = 0; j <= hyp_max; ++j) {
    const Subgroup& zcj = upper_central_term(zc, j);
    const Subgroup& zbj = upper_central_term(zb, j);
    if (fail_i.empty() && !(c_b.level(j) == zcj))
      fail_i = "j=" + std::to_string(j) + ": " +
               difference_witness(c_b.level(j), "C^j_C(B)", zcj, "Z_j(C)");
    if (fail_ii.empty()) {
      if (!(b_a.level(j) == zbj))
        fail_ii = "j=" + std::to_string(j) + ": " +
                  difference_witness(b_a.level(j), "C^j_B(A)", zbj, "Z_j(B)");
      else if (Subgroup zc_b = intersect(zcj, b); !(zbj == zc_b))
        fail_ii = "j=" + std::to_string(j) + ": " +
                  difference_witness(zbj, "Z_j(B)", zc_b, "Z_j(C)∩B");
    }
    Subgroup rhs = intersect(c_a.level(j + 1), b);
    if (fail_iii.empty() && !(b_a.level(j + 1) == rhs))
      fail_iii = "k=" + std::to_string(j) + ": " +
                 difference_witness(b_a.level(j + 1), "C^{k+1}_B(A)", rhs, "C^{k+1}_C(A)∩B");
  }
  auto status = [](const std::string& f) { return f.empty() ? CheckStatus::pass : CheckStatus::fail; };
  out.add("abc.i", "C^j_C(A) = C^j_C(B) = Z_j(C)", status(fail_i), fail_i.empty() ? scope : fail_i);
  out.add("abc.ii", "C^j_B(A) = Z_j(B) = Z_j(C) ∩ B", status(fail_ii),
          fail_ii.empty() ? scope : fail_ii);
  out.add("abc.iii", "C^{k+1}_B(A) = C^{k+1}_C(A) ∩ B", status(fail_iii),
          fail_iii.empty() ? scope : fail_iii);
  return out;
}

VerificationReport verify_ek_structure(const FiniteGroup& group, const Subgroup& h,
                                       std::size_t kmax) {
  VerificationReport out;
  const std::size_t top = std::max<std::size_t>(kmax, 1);
  auto rep = ek_chain(group, h, top);
  const auto& e = rep.terms;

  {
    std::string fail;
    if (!(e[0] == group.whole()))
      fail = "E_0 differs from G";
    for (std::size_t k = 0; k + 1 < e.size() && fail.empty(); ++k)
      if (!e[k + 1].is_subset_of(e[k]))
        fail = "k=" + std::to_string(k) + ": " +
               difference_witness(e[k + 1], "E_{k+1}", intersect(e[k + 1], e[k]), "E_k");
    for (std::size_t k = 0; k < e.size() && fail.empty(); ++k)
      if (!h.is_subset_of(e[k]))
        fail = "k=" + std::to_string(k) + ": H not inside E_k";
    out.add("structure.chain", "G = E_0 >= E_1 >= ... >= H",
            fail.empty() ? CheckStatus::pass : CheckStatus::fail,
            fail.empty() ? range_text(0, top) : fail);
  }
  {
    Subgroup cc = centralizer(group.whole(), centralizer(group.whole(), h));
    bool ok = e[1] == cc;
    out.add("structure.double-centralizer", "E_1(H) = C_G(C_G(H))",
            ok ? CheckStatus::pass : CheckStatus::fail,
            ok ? "|E_1|=" + std::to_string(e[1].order())
               : difference_witness(e[1], "E_1", cc, "C_G(C_G(H))"));
  }

  std::vector<IteratedCentralizerChain> inner;
  std::vector<std::vector<Subgroup>> centers;
  for (std::size_t k = 0; k <= kmax; ++k) {
    inner.push_back(iterated_centralizers(e[k], h, k + 1));
    centers.push_back(upper_central_series(e[k]));
  }

  std::string fail_center, fail_simplified, fail_monotone, fail_meet, fail_equal;
  std::size_t equal_checked = 0;
  for (std::size_t k = 0; k <= kmax; ++k) {
    for (std::size_t j = 0; j <= k && fail_center.empty(); ++j) {
      const Subgroup& z = upper_central_term(centers[k], j);
      if (!(inner[k].level(j) == z))
        fail_center = "k=" + std::to_string(k) + ", j=" + std::to_string(j) + ": " +
                      difference_witness(inner[k].level(j), "C^j_{E_k}(H)", z, "Z_j(E_k)");
    }
    for (std::size_t i = 0; i <= k && fail_simplified.empty(); ++i) {
      Subgroup simple = commutator_into_center_term(e[k], h, i);
      if (!(inner[k].level(i + 1) == simple))
        fail_simplified = "k=" + std::to_string(k) + ", i=" + std::to_string(i) + ": " +
                          difference_witness(inner[k].level(i + 1), "C^{i+1}_{E_k}(H)", simple,
                                             "{x : [x,H] ⊆ Z_i(E_k)}");
    }
    for (std::size_t j = k; j <= kmax && fail_monotone.empty(); ++j) {
      const Subgroup& zi = upper_central_term(centers[k], k);
      const Subgroup& zj = upper_central_term(centers[j], j);
      if (!zi.is_subset_of(zj))
        fail_monotone = "i=" + std::to_string(k) + ", j=" + std::to_string(j) + ": " +
                        difference_witness(zi, "Z_i(E_i)", intersect(zi, zj), "Z_j(E_j)");
    }
    if (k + 1 <= kmax) {
      const Subgroup& here = inner[k].level(k + 1);
      const Subgroup& next = inner[k + 1].level(k + 1);
      Subgroup meet = intersect(here, e[k + 1]);
      if (fail_meet.empty() && !(next == meet))
        fail_meet = "k=" + std::to_string(k) + ": " +
                    difference_witness(next, "C^{k+1}_{E_{k+1}}(H)", meet,
                                       "C^{k+1}_{E_k}(H)∩E_{k+1}");
      if (here.is_subset_of(e[k + 1])) {
        ++equal_checked;
        if (fail_equal.empty() && !(next == here))
          fail_equal = "k=" + std::to_string(k) + ": " +
                       difference_witness(next, "C^{k+1}_{E_{k+1}}(H)", here, "C^{k+1}_{E_k}(H)");
      }
    }
  }
  auto status = [](const std::string& f) { return f.empty() ? CheckStatus::pass : CheckStatus::fail; };
  out.add("structure.center-agreement", "C^j_{E_k}(H) = Z_j(E_k) for j <= k", status(fail_center),
          fail_center.empty() ? range_text(0, kmax) : fail_center);
  out.add("structure.simplified-form", "C^{i+1}_{E_k}(H) = {x in E_k : [x,H] ⊆ Z_i(E_k)}",
          status(fail_simplified), fail_simplified.empty() ? range_text(0, kmax) : fail_simplified);
  out.add("structure.center-monotone", "Z_i(E_i) <= Z_j(E_j) for i <= j", status(fail_monotone),
          fail_monotone.empty() ? range_text(0, kmax) : fail_monotone);
  if (kmax >= 1) {
    out.add("structure.next-envelope-meet", "C^{k+1}_{E_{k+1}}(H) = C^{k+1}_{E_k}(H) ∩ E_{k+1}",
            status(fail_meet), fail_meet.empty() ? range_text(0, kmax - 1) : fail_meet);
    if (equal_checked == 0)
      out.add("structure.next-envelope-equal", "C^{k+1}_{E_{k+1}}(H) = C^{k+1}_{E_k}(H)",
              CheckStatus::skipped, "C^{k+1}_{E_k}(H) never inside E_{k+1}");
    else
      out.add("structure.next-envelope-equal", "C^{k+1}_{E_{k+1}}(H) = C^{k+1}_{E_k}(H)",
              status(fail_equal),
              fail_equal.empty() ? "checked at " + std::to_string(equal_checked) +
                                       " k where C^{k+1}_{E_k}(H) <= E_{k+1}"
                                 : fail_equal);
  }
  return out;
}

VerificationReport verify_nilpotent_envelope(const FiniteGroup& group, const Subgroup& h) {
  VerificationReport out;

  if (is_abelian(h)) {
    Subgroup cc = centralizer(group.whole(), centralizer(group.whole(), h));
    bool ok = is_abelian(cc);
    out.add("nilpotent.double-centralizer-abelian", "H abelian => C_G(C_G(H)) abelian",
            ok ? CheckStatus::pass : CheckStatus::fail,
            "|C_G(C_G(H))|=" + std::to_string(cc.order()));
  } else {
    out.add("nilpotent.double-centralizer-abelian", "H abelian => C_G(C_G(H)) abelian",
            CheckStatus::skipped, "H is not abelian");
  }

  auto cls = nilpotency_class(h);
  if (!cls) {
    for (const char* id : {"nilpotent.envelope-class", "nilpotent.envelope-class-exact",
                           "nilpotent.stable"})
      out.add(id, "requires nilpotent H", CheckStatus::skipped, "H is not nilpotent");
    return out;
  }

  const std::size_t c = std::max<std::size_t>(*cls, 1);
  auto rep = ek_chain(group, h, c + 3);
  const Subgroup& ec = rep.terms[c];
  auto ec_class = nilpotency_class(ec);
  std::string got = ec_class ? std::to_string(*ec_class) : std::string("not nilpotent");
  std::string c_text = "c=" + std::to_string(c);

  bool bounded = ec_class && *ec_class <= c;
  out.add("nilpotent.envelope-class", "E_c(H) nilpotent of class <= c",
          bounded ? CheckStatus::pass : CheckStatus::fail, c_text + ", class(E_c)=" + got);
  if (*cls == 0)
    out.add("nilpotent.envelope-class-exact", "class(E_c(H)) = c", CheckStatus::skipped,
            "H trivial; class(E_1)=" + got);
  else
    out.add("nilpotent.envelope-class-exact", "class(E_c(H)) = c",
            ec_class && *ec_class == c ? CheckStatus::pass : CheckStatus::fail,
            c_text + ", class(E_c)=" + got);

  std::string fail;
  for (std::size_t l = c + 1; l <= c + 3 && fail.empty(); ++l)
    if (!(rep.terms[l] == ec))
      fail = "l=" + std::to_string(l) + ": " +
             difference_witness(rep.terms[l], "E_l", ec, "E_c");
  out.add("nilpotent.stable", "E_c = E_{c+1} = E_{c+2} = E_{c+3}",
          fail.empty() ? CheckStatus::pass : CheckStatus::fail,
          fail.empty() ? c_text + ", |E_c|=" + std::to_string(ec.order()) : fail);
  return out;
}

} // namespace ekc

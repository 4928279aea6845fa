#include "ekchains_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include <ekchains/chains.hpp>
#include <ekchains/counterexample.hpp>
#include <ekchains/group_file.hpp>
#include <ekchains/verify.hpp>

#ifndef EKCHAINS_VERSION
#define EKCHAINS_VERSION "0.0.0"
#endif

namespace ekcli {

using ekc::CheckStatus;

namespace {

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report base_report(std::string command) {
  Report r;
  r.tool_version = tool_version();
  r.command = std::move(command);
  return r;
}

CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

std::string subgroup_key(const ekc::FiniteGroup& g, const std::vector<ekc::ElemId>& gens) {
  std::string key = "<";
  for (std::size_t i = 0; i < gens.size(); ++i)
    key += (i ? "," : "") + ekc::format_cycles(g.element(gens[i]));
  return key + ">";
}

ekc::GroupFile read_file(const std::filesystem::path& p) {
  try {
    return ekc::read_group_file(p);
  } catch (const ekc::GroupFileError& e) {
    throw UsageError(p.string() + ": " + e.what());
  }
}

Json orders_json(const ekc::EkChainReport& rep) {
  Json a = Json::array();
  for (auto o : rep.orders)
    a.push_back(o);
  return a;
}

void add_abc_checks(Report& r, const std::string& pfx, const ekc::FiniteGroup& g,
                    const ekc::Subgroup& h, std::size_t kmax) {
  auto chain = ekc::ek_chain(g, h, kmax);
  for (std::size_t i = 0; i <= kmax; ++i)
    for (std::size_t j = i; j <= kmax; ++j)
      r.add_checks(ekc::verify_abc_lemma(h, chain.terms[j], chain.terms[i], kmax),
                   pfx + "E" + std::to_string(j) + "<=E" + std::to_string(i) + "/");
  auto n = ekc::normalizer(g.whole(), h);
  r.add_checks(ekc::verify_abc_lemma(h, n, g.whole(), kmax), pfx + "N(H)<=G/");
}

} // namespace

std::string tool_version() { return EKCHAINS_VERSION; }

int CommandResult::exit_code() const {
  if (resource_exhausted)
    return kExitResource;
  return report.count(CheckStatus::fail) == 0 ? kExitPass : kExitFailures;
}

Suite parse_suite(const std::string& name) {
  if (name == "bryant")
    return Suite::bryant;
  if (name == "structure")
    return Suite::structure;
  if (name == "nilpotent")
    return Suite::nilpotent;
  if (name == "all")
    return Suite::all;
  throw UsageError("unknown suite '" + name + "' (expected bryant, structure, nilpotent or all)");
}

const char* to_string(Suite s) {
  switch (s) {
  case Suite::bryant:
    return "bryant";
  case Suite::structure:
    return "structure";
  case Suite::nilpotent:
    return "nilpotent";
  case Suite::all:
    return "all";
  }
  return "?";
}

CommandResult cmd_ekchain(const ekc::GroupFile& group, const ekc::GroupFile& subgroup,
                          std::optional<std::size_t> kmax, std::size_t cap,
                          const std::string& command) {
  Stopwatch total;
  CommandResult res{base_report(command)};
  Report& r = res.report;

  if (subgroup.degree > group.degree)
    throw UsageError("subgroup file has degree " + std::to_string(subgroup.degree) +
                     ", larger than the group's " + std::to_string(group.degree));
  std::vector<ekc::Permutation> hgens;
  for (const auto& p : subgroup.generators)
    hgens.push_back(p.extended(group.degree));

  auto g = ekc::FiniteGroup::closure(group.generators, cap, group.degree);
  ekc::Subgroup h = [&] {
    try {
      return ekc::subgroup_of(g, hgens);
    } catch (const ekc::NotContained&) {
      throw UsageError("subgroup generators are not contained in the group");
    }
  }();
  const std::size_t k = kmax.value_or(ekc::default_kmax(g, h));
  if (k < 1)
    throw UsageError("--kmax must be at least 1");
  r.timings.push_back({"closure", total.seconds()});

  Stopwatch chain_time;
  auto rep = ekc::ek_chain(g, h, k);
  r.timings.push_back({"ek_chain", chain_time.seconds()});

  r.checks.push_back({"chain.e0", "E_0(H) = G", status_of(rep.terms[0].is_whole()),
                      "|E_0| = " + std::to_string(rep.orders[0])});
  bool descending = true, contains = true;
  for (std::size_t i = 0; i < rep.terms.size(); ++i) {
    contains = contains && h.is_subset_of(rep.terms[i]);
    if (i > 0)
      descending = descending && rep.terms[i].is_subset_of(rep.terms[i - 1]);
  }
  r.checks.push_back({"chain.descending", "E_{k+1}(H) <= E_k(H)", status_of(descending),
                      "k=0.." + std::to_string(k)});
  r.checks.push_back({"chain.contains-subgroup", "H <= E_k(H)", status_of(contains),
                      "k=0.." + std::to_string(k)});
  if (rep.guaranteed_stable) {
    const std::size_t c = *rep.stable_from;
    bool stable = true;
    for (std::size_t l = c; l <= k; ++l)
      stable = stable && rep.terms[l] == rep.terms[c];
    r.checks.push_back({"chain.stable", "E_l(H) = E_c(H) for l >= c, H of class c",
                        status_of(stable),
                        "c=" + std::to_string(c) + ", l=" + std::to_string(c) + ".." +
                            std::to_string(k)});
  }

  Witness w{"chain"};
  w.data["group_order"] = g.order();
  w.data["subgroup_order"] = h.order();
  w.data["kmax"] = k;
  w.data["orders"] = orders_json(rep);
  w.data["stable_run"] = rep.stable_run;
  w.data["subgroup_class"] =
      rep.subgroup_class ? Json(*rep.subgroup_class) : Json("not nilpotent");
  w.data["guaranteed_stable"] = rep.guaranteed_stable;
  w.data["stable_from"] = rep.stable_from ? Json(*rep.stable_from) : Json(nullptr);
  w.data["stability"] = rep.stability_reason;
  r.witnesses.push_back(std::move(w));
  r.timings.push_back({"total", total.seconds()});
  return res;
}

CommandResult cmd_ekchain(const EkChainOptions& opts) {
  std::string command = "ekchains ekchain " + opts.group_file.string() + " " +
                        opts.subgroup_file.string();
  if (opts.kmax)
    command += " --kmax " + std::to_string(*opts.kmax);
  command += " --cap " + std::to_string(opts.cap);
  return cmd_ekchain(read_file(opts.group_file), read_file(opts.subgroup_file), opts.kmax,
                     opts.cap, command);
}

CommandResult cmd_verify(const VerifyOptions& opts, const std::vector<CatalogEntry>& catalog) {
  if (opts.kmax < 1)
    throw UsageError("--kmax must be at least 1");
  std::string command = "ekchains verify --suite " + std::string(to_string(opts.suite)) +
                        " --kmax " + std::to_string(opts.kmax) + " --cap " +
                        std::to_string(opts.cap);
  if (opts.catalog_dir)
    command += " --catalog-dir " + opts.catalog_dir->string();

  Stopwatch total;
  CommandResult res{base_report(command)};
  Report& r = res.report;
  const bool bryant = opts.suite == Suite::bryant || opts.suite == Suite::all;
  const bool structure = opts.suite == Suite::structure || opts.suite == Suite::all;
  const bool nilpotent = opts.suite == Suite::nilpotent || opts.suite == Suite::all;

  for (const auto& entry : catalog) {
    Stopwatch group_time;
    Witness w{"group/" + entry.name};
    std::optional<ekc::FiniteGroup> g;
    try {
      g = ekc::FiniteGroup::closure(entry.file.generators, opts.cap, entry.file.degree);
    } catch (const ekc::CapExceeded& e) {
      res.resource_exhausted = true;
      r.error += (r.error.empty() ? "" : "; ") + entry.name + ": " + e.what();
      continue;
    }
    w.data["degree"] = g->degree();
    w.data["order"] = g->order();
    if (entry.documented_order)
      r.checks.push_back({entry.name + "/catalog.order", "closure order matches the catalog",
                          status_of(g->order() == *entry.documented_order),
                          "|G| = " + std::to_string(g->order()) + ", documented " +
                              std::to_string(*entry.documented_order)});

    auto subs = ekc::small_subgroups(*g);
    // Groups needing three or more generators are missed by the pair
    // enumeration; H = G is always checked.
    if (std::none_of(subs.begin(), subs.end(), [](const auto& s) { return s.subgroup.is_whole(); })) {
      std::vector<ekc::ElemId> gens;
      for (const auto& p : g->generators())
        gens.push_back(g->index_of(p));
      subs.push_back({g->whole(), std::move(gens)});
    }
    w.data["subgroups"] = subs.size();
    for (const auto& s : subs) {
      const std::string pfx = entry.name + "/" + subgroup_key(*g, s.generators) + "/";
      if (bryant)
        r.add_checks(ekc::verify_bryant_lemma(*g, s.subgroup, opts.kmax), pfx);
      if (structure) {
        r.add_checks(ekc::verify_ek_structure(*g, s.subgroup, opts.kmax), pfx);
        add_abc_checks(r, pfx, *g, s.subgroup, opts.kmax);
      }
      if (nilpotent)
        r.add_checks(ekc::verify_nilpotent_envelope(*g, s.subgroup), pfx);
    }
    r.witnesses.push_back(std::move(w));
    r.timings.push_back({entry.name, group_time.seconds()});
  }
  r.timings.push_back({"total", total.seconds()});
  return res;
}

CommandResult cmd_verify(const VerifyOptions& opts) {
  auto catalog = opts.catalog_dir ? load_catalog_dir(*opts.catalog_dir) : builtin_catalog();
  return cmd_verify(opts, catalog);
}

CommandResult cmd_counterexample(const CounterexampleOptions& opts) {
  if (opts.levels < 2)
    throw UsageError("--levels must be at least 2");
  if (opts.oracle_depth > 4)
    throw UsageError("--oracle-depth must be at most 4");
  if (opts.scan_max < 1)
    throw UsageError("--scan-max must be at least 1");

  const std::string command = "ekchains counterexample --levels " + std::to_string(opts.levels) +
                              " --scan-max " + std::to_string(opts.scan_max) +
                              " --oracle-depth " + std::to_string(opts.oracle_depth);
  Stopwatch total;
  CommandResult res{base_report(command)};
  Report& r = res.report;
  ekc::ModelOptions mopts;
  mopts.max_cells = opts.max_cells;

  ekc::IterChainModel model;
  Stopwatch model_time;
  try {
    ekc::extend_model(model, opts.levels, mopts);
  } catch (const ekc::ModelBudgetExceeded& e) {
    res.resource_exhausted = true;
    r.error = e.what();
  }
  r.timings.push_back({"model", model_time.seconds()});
  const std::size_t depth = std::min(model.depth(), opts.levels);

  {
    const auto& c1 = model.level(std::min<std::size_t>(depth, 1));
    bool ok = depth >= 1 && c1 == std::vector<ekc::BitFn>{ekc::BitFn::zero(), ekc::BitFn::ones()};
    r.checks.push_back({"model.c1", "C^1 = {0^inf, 1^inf}", status_of(ok),
                        "|C^1| = " + std::to_string(c1.size())});
  }

  Witness levels_w{"levels"};
  Json sizes = Json::array(), periods = Json::array();
  for (std::size_t i = 1; i <= depth; ++i) {
    const auto& lv = model.level(i);
    const std::string is = std::to_string(i);
    sizes.push_back(lv.size());
    r.checks.push_back({"model.size." + is, "|C^" + is + "| > |C^" + std::to_string(i - 1) + "|",
                        status_of(lv.size() > model.level(i - 1).size()),
                        "|C^" + is + "| = " + std::to_string(lv.size())});

    const std::size_t bound = std::size_t{1} << i;
    bool periodic = true;
    for (const auto& j : lv)
      periodic = periodic && j.is_purely_periodic() && bound % j.period() == 0;
    r.checks.push_back({"model.periodic." + is,
                        "every member of C^" + is + " is purely periodic with period dividing 2^" +
                            is,
                        status_of(periodic), "period bound " + std::to_string(bound)});
    periods.push_back(periodic ? Json(ekc::minimal_period_exponent(lv)) : Json(nullptr));

    // A nonzero periodic function has a 1 in every window of one period, so
    // its support is infinite.
    bool support = true;
    for (const auto& j : lv) {
      if (j.is_zero())
        continue;
      for (std::size_t start = 0; start < 4 * bound && support; start += bound) {
        bool one = false;
        for (std::size_t x = start; x < start + bound && !one; ++x)
          one = j(x);
        support = one;
      }
    }
    r.checks.push_back({"model.support." + is,
                        "every nonzero member of C^" + is +
                            " has a 1 in each block of 2^" + is + " places below 4*2^" + is,
                        status_of(support), ""});
  }
  levels_w.data["sizes"] = std::move(sizes);
  levels_w.data["period_exponents"] = std::move(periods);
  r.witnesses.push_back(std::move(levels_w));

  Stopwatch oracle_time;
  for (std::size_t i = 1; i <= std::min(opts.oracle_depth, depth); ++i) {
    auto brute = ekc::brute_force_level(i);
    r.checks.push_back({"oracle." + std::to_string(i),
                        "solver C^" + std::to_string(i) + " equals brute-force enumeration",
                        status_of(brute == model.level(i)),
                        std::to_string(ekc::brute_force_candidates(i)) + " candidates, " +
                            std::to_string(brute.size()) + " kept"});
  }
  r.timings.push_back({"oracle", oracle_time.seconds()});

  for (std::size_t i = 1; i + 1 <= depth; ++i) {
    const std::string id = "ascent." + std::to_string(i);
    const std::string claim = "C^" + std::to_string(i) + " < C^" + std::to_string(i + 1);
    try {
      auto g = ekc::ascent_witness(i, model);
      r.checks.push_back({id, claim, CheckStatus::pass, "g = " + g.str()});
      Witness w{id};
      w.data["g"] = g.str();
      w.data["delta_g"] = ekc::delta(g).str();
      r.witnesses.push_back(std::move(w));
    } catch (const std::logic_error& e) {
      r.checks.push_back({id, claim, CheckStatus::fail, e.what()});
    }
  }

  Stopwatch descent_time;
  if (!res.resource_exhausted) {
    for (std::size_t k = 0; k + 2 <= opts.levels; ++k) {
      const std::string ks = std::to_string(k);
      const std::string id = "descent." + ks;
      const std::string claim = "some k' > " + ks + " has E_{k'+1}(H) < E_{" + ks + "+1}(H)";
      try {
        auto d = ekc::descent_witness(k, std::max(opts.scan_max, k + 1), model, mopts);
        const std::uint64_t a = d.x0, b = d.x0 + (std::uint64_t{1} << d.l);
        auto expected = ekc::Permutation::from_cycles(
            d.commutator.degree(), {{static_cast<ekc::Point>(2 * a), static_cast<ekc::Point>(2 * a + 1)},
                                    {static_cast<ekc::Point>(2 * b), static_cast<ekc::Point>(2 * b + 1)}});
        const std::string got = ekc::format_cycles(d.commutator);
        r.checks.push_back({id, claim, status_of(d.commutator == expected),
                            "k'=" + std::to_string(d.k_prime) + ", [g,h] = " + got});
        Witness w{id};
        w.data["k_prime"] = d.k_prime;
        w.data["l"] = d.l;
        w.data["x0"] = d.x0;
        w.data["g"] = d.g.str();
        w.data["g_points"] = ekc::format_cycles(*ekc::finite_permutation(d.g));
        w.data["h"] = d.h.str();
        w.data["commutator"] = got;
        r.witnesses.push_back(std::move(w));
      } catch (const ekc::NoDescentWitness& e) {
        r.checks.push_back({id, claim, CheckStatus::fail, e.what()});
      } catch (const ekc::ModelBudgetExceeded& e) {
        res.resource_exhausted = true;
        r.error = e.what();
        break;
      } catch (const std::logic_error& e) {
        r.checks.push_back({id, claim, CheckStatus::fail, e.what()});
      }
    }
  }
  r.timings.push_back({"descent", descent_time.seconds()});
  r.timings.push_back({"total", total.seconds()});
  return res;
}

CommandResult cmd_catalog(const std::optional<std::filesystem::path>& catalog_dir,
                          const std::optional<std::filesystem::path>& export_dir,
                          std::size_t cap) {
  std::string command = "ekchains catalog --cap " + std::to_string(cap);
  if (catalog_dir)
    command += " --catalog-dir " + catalog_dir->string();
  if (export_dir)
    command += " --export " + export_dir->string();
  Stopwatch total;
  CommandResult res{base_report(command)};
  auto catalog = catalog_dir ? load_catalog_dir(*catalog_dir) : builtin_catalog();
  if (export_dir)
    std::filesystem::create_directories(*export_dir);
  for (const auto& e : catalog) {
    Witness w{"group/" + e.name};
    w.data["degree"] = e.file.degree;
    try {
      auto g = ekc::FiniteGroup::closure(e.file.generators, cap, e.file.degree);
      w.data["order"] = g.order();
      if (e.documented_order)
        res.report.checks.push_back({e.name + "/catalog.order", "closure order matches the catalog",
                                     status_of(g.order() == *e.documented_order),
                                     "|G| = " + std::to_string(g.order())});
    } catch (const ekc::CapExceeded& ex) {
      res.resource_exhausted = true;
      res.report.error += (res.report.error.empty() ? "" : "; ") + e.name + ": " + ex.what();
    }
    Json gens = Json::array();
    for (const auto& p : e.file.generators)
      gens.push_back(ekc::format_cycles(p));
    w.data["generators"] = std::move(gens);
    res.report.witnesses.push_back(std::move(w));
    if (export_dir) {
      std::ofstream out(*export_dir / (e.name + ".grp"), std::ios::binary);
      out << e.text;
      if (!out)
        throw std::runtime_error("cannot write " + (*export_dir / (e.name + ".grp")).string());
    }
  }
  res.report.timings.push_back({"total", total.seconds()});
  return res;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ekchains: iterated centralizers, envelope chains E_k(H), and the symbolic "
               "Sym(N) model"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: text or json-like (alias json)")
        ->capture_default_str();
  };

  EkChainOptions ek;
  std::size_t ek_kmax = 0;
  auto* ek_cmd = app.add_subcommand("ekchain", "Compute E_0(H) >= E_1(H) >= ... for H <= G");
  ek_cmd->add_option("group_file", ek.group_file, "Group file for G")->required();
  ek_cmd->add_option("subgroup_file", ek.subgroup_file, "Group file with generators of H")
      ->required();
  auto* ek_kmax_opt = ek_cmd->add_option(
      "--kmax", ek_kmax, "Last envelope index (default: class of H if nilpotent, else 2*log2|G|+2)");
  ek_cmd->add_option("--cap", ek.cap, "Closure element cap")->capture_default_str();
  add_format(ek_cmd);

  VerifyOptions ver;
  std::string suite = "all";
  std::string catalog_dir;
  auto* ver_cmd = app.add_subcommand("verify", "Run verification suites over the group catalog");
  ver_cmd->add_option("--suite", suite, "bryant, structure, nilpotent or all")
      ->capture_default_str();
  ver_cmd->add_option("--kmax", ver.kmax, "Largest k checked")->capture_default_str();
  ver_cmd->add_option("--cap", ver.cap, "Closure element cap")->capture_default_str();
  ver_cmd->add_option("--catalog-dir", catalog_dir,
                      "Directory of *.grp files used instead of the built-in catalog");
  add_format(ver_cmd);

  CounterexampleOptions cx;
  auto* cx_cmd =
      app.add_subcommand("counterexample", "Build the symbolic chain C^1 < C^2 < ... and witnesses");
  cx_cmd->add_option("--levels", cx.levels, "Number of centralizer levels (>= 2)")
      ->capture_default_str();
  cx_cmd->add_option("--scan-max", cx.scan_max, "Largest k' scanned for descent witnesses")
      ->capture_default_str();
  cx_cmd->add_option("--oracle-depth", cx.oracle_depth,
                     "Levels cross-checked by brute force (<= 4)")
      ->capture_default_str();
  cx_cmd->add_option("--cap", cx.max_cells, "Model budget in stored bits")->capture_default_str();
  add_format(cx_cmd);

  std::string cat_dir, export_dir;
  std::size_t cat_cap = ekc::kDefaultClosureCap;
  auto* cat_cmd = app.add_subcommand("catalog", "List catalog groups and their orders");
  cat_cmd->add_option("--catalog-dir", cat_dir, "Directory of *.grp files");
  cat_cmd->add_option("--export", export_dir, "Write each group as <dir>/<name>.grp");
  cat_cmd->add_option("--cap", cat_cap, "Closure element cap")->capture_default_str();
  add_format(cat_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    Format fmt = parse_format(format);
    CommandResult res;
    if (*ek_cmd) {
      if (*ek_kmax_opt)
        ek.kmax = ek_kmax;
      res = cmd_ekchain(ek);
    } else if (*ver_cmd) {
      ver.suite = parse_suite(suite);
      if (!catalog_dir.empty())
        ver.catalog_dir = catalog_dir;
      res = cmd_verify(ver);
    } else if (*cx_cmd) {
      res = cmd_counterexample(cx);
    } else {
      std::optional<std::filesystem::path> cd, ed;
      if (!cat_dir.empty())
        cd = cat_dir;
      if (!export_dir.empty())
        ed = export_dir;
      res = cmd_catalog(cd, ed, cat_cap);
    }
    out << render(res.report, fmt);
    if (!res.report.error.empty())
      err << "ekchains: " << res.report.error << "\n";
    return res.exit_code();
  } catch (const ekc::CapExceeded& e) {
    err << "ekchains: " << e.what() << "\n";
    return kExitResource;
  } catch (const ekc::ModelBudgetExceeded& e) {
    err << "ekchains: " << e.what() << "\n";
    return kExitResource;
  } catch (const ekc::GroupFileError& e) {
    err << "ekchains: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ekc::CycleParseError& e) {
    err << "ekchains: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "ekchains: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "ekchains: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "ekchains: internal error: " << e.what() << "\n";
    return kExitFailures;
  }
}

} // namespace ekcli

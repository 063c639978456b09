// hollab: tables and verification campaigns for holomorphs of abelian groups.
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.
#include <algorithm>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "hollab/congruence.hpp"
#include "hollab/dickson.hpp"
#include "hollab/homology_tables.hpp"
#include "hollab/lie.hpp"
#include "hollab/suites.hpp"
#include "hollab/table.hpp"

using namespace hollab;

namespace {

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int cmd_homology(unsigned long p, unsigned r, unsigned qmax, const std::string& mode, OutputFormat fmt) {
  const bool computed = mode != "closed", closed = mode != "computed";
  std::vector<AbelianInvariants> comp;
  try {
    if (closed) closed_form_homology(p, r, 0);  // validates (p, r)
    if (computed) comp = computed_homology(p, r, qmax);
  } catch (const std::domain_error& e) {
    throw usage_error(e.what());
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  Table t;
  t.columns = {"q"};
  if (computed) t.columns.push_back("computed");
  if (closed) t.columns.push_back("closed");
  if (computed && closed) t.columns.push_back("agreement");
  bool all_agree = true;
  for (unsigned q = 0; q <= qmax; ++q) {
    std::vector<std::string> row{std::to_string(q)};
    std::string a, b;
    if (computed) row.push_back(a = comp[q].to_string());
    if (closed) row.push_back(b = closed_form_homology(p, r, q).to_string());
    if (computed && closed) {
      row.push_back(a == b ? "agree" : "DISAGREE");
      all_agree = all_agree && a == b;
    }
    t.rows.push_back(std::move(row));
  }
  std::cout << render(t, fmt);
  return all_agree ? 0 : 1;
}

int cmd_ranks(unsigned long p, unsigned r, unsigned qmax, OutputFormat fmt) {
  std::vector<AbelianInvariants> H;
  try {
    mod_p_cohomology_rank(p, r, 0);
    H = computed_homology(p, r, qmax);
  } catch (const std::domain_error& e) {
    throw usage_error(e.what());
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  Table t{{"q", "formula", "uct", "agreement"}, {}};
  bool ok = true;
  for (unsigned q = 0; q <= qmax; ++q) {
    const std::size_t f = mod_p_cohomology_rank(p, r, q), u = uct_rank(H[q], q ? &H[q - 1] : nullptr, p);
    ok = ok && f == u;
    t.rows.push_back({std::to_string(q), std::to_string(f), std::to_string(u), f == u ? "agree" : "DISAGREE"});
  }
  std::cout << render(t, fmt);
  return ok ? 0 : 1;
}

D2Mode parse_mode(const std::string& s, unsigned p) {
  if (s == "r3") return D2Mode::p2_r3;
  if (s == "r>3" || s == "rgt3" || s == "r-gt-3") return D2Mode::p2_r_gt_3;
  if (s == "odd") return D2Mode::odd;
  if (s.empty()) return p == 2 ? D2Mode::p2_r_gt_3 : D2Mode::odd;
  throw usage_error("unknown mode " + s + " (r3, r>3, odd)");
}

int cmd_dickson(unsigned n, unsigned p, const std::string& mode_name) {
  const D2Mode mode = parse_mode(mode_name, p);
  if ((p == 2) == (mode == D2Mode::odd)) throw usage_error("mode does not fit p");
  GradedElement d = [&] {
    try {
      return dickson_coefficient(n, p);
    } catch (const std::exception& e) {
      throw usage_error(e.what());
    }
  }();
  const bool exhaustive = gl_order(n, p) <= 20000;
  const bool invariant = check_gl_invariance(d, n, p, exhaustive);
  GradedElement img = apply_d2(d, mode);
  std::cout << "dickson coefficient (n=" << n << ", p=" << p << ", degree " << d.degree() << "):\n  " << d.to_string()
            << "\nGL(" << n << ",F_" << p << ")-invariant (" << (exhaustive ? "all elements" : "generators")
            << "): " << (invariant ? "yes" : "NO") << "\nd2 [" << d2_mode_name(mode) << "]:\n  " << img.to_string()
            << "\nnonzero: " << (img.is_zero() ? "NO" : "yes") << "\n";
  return invariant && !img.is_zero() ? 0 : 1;
}

int cmd_congruence(unsigned n, unsigned k, std::int64_t p, std::set<std::string> checks, OutputFormat fmt) {
  const std::set<std::string> known = {"order", "omega1", "p-power", "bracket", "embedding", "roots"};
  if (checks.count("all")) checks = known;
  for (const auto& c : checks)
    if (!known.count(c)) throw usage_error("unknown check " + c);
  if (n == 0 || k == 0 || p < 2 || !is_prime(p)) throw usage_error("need n, k >= 1 and p prime");
  const GammaLevel L{n, k, p};
  Table t{{"check", "status", "detail"}, {}};
  bool ok = true;
  auto add = [&](const std::string& name, auto body) {
    std::string status, detail;
    try {
      auto [pass, text] = body();
      status = pass ? "pass" : "FAIL";
      detail = text;
      ok = ok && pass;
    } catch (const std::length_error& e) {
      status = "skipped";
      detail = e.what();
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = e.what();
      ok = false;
    }
    t.rows.push_back({name, status, detail});
  };
  using R = std::pair<bool, std::string>;
  if (checks.count("order"))
    add("order", [&] {
      auto got = Int(gamma_enumerate(L).size());
      return R{got == gamma_order(L), "enumerated " + got.get_str() + ", formula " + gamma_order(L).get_str()};
    });
  if (checks.count("omega1"))
    add("omega1", [&] {
      auto r = omega1_and_kernel_check(L);
      return R{r.ok(), "|Omega_1| " + std::to_string(r.omega_size) + ", |Ker| " + std::to_string(r.kernel_size) +
                           (r.central ? ", central" : ", not central")};
    });
  if (checks.count("p-power")) {
    if (k >= 2) add("p-power", [&] { return R{p_power_bijective(L), "Omega_1 at level k-1 onto level k"}; });
    else t.rows.push_back({"p-power", "skipped", "needs k >= 2"});
  }
  if (checks.count("bracket"))
    add("bracket", [&] { return R{bracket_matches_commutator(n, p), "all pairs at level 1"}; });
  if (checks.count("embedding"))
    add("embedding", [&] {
      auto r = almost_powerfully_embedded_check(L);
      return R{r.ok(), "|G| " + std::to_string(r.g_size) + ", |N| " + std::to_string(r.n_size)};
    });
  if (checks.count("roots")) {
    if (p == 2) {
      add("roots", [&] {
        return R{mike_lemma_exhaustive(2, k, RootPart::square) && mike_lemma_exhaustive(2, k, RootPart::fourth_power),
                 "square and fourth-power variants"};
      });
    } else {
      add("roots", [&] { return R{mike_lemma_exhaustive(p, k, RootPart::odd_pth_power), "every a mod p^{k+1}"}; });
    }
  }
  std::cout << render(t, fmt);
  return ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::optional<std::uint64_t> seed, OutputFormat fmt, bool timing) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else names = {suite};
  for (const auto& n : names)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw usage_error("unknown suite: " + n);
  bool ok = true;
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  bool header = true;
  for (const auto& n : names) {
    SuiteReport r = run_suite(n, seed);
    ok = ok && r.ok();
    switch (fmt) {
      case OutputFormat::json: all.push_back(report_to_json(r, timing)); break;
      case OutputFormat::csv: {
        std::string text = report_to_csv(r);
        if (!header) text = text.substr(text.find('\n') + 1);
        header = false;
        std::cout << text;
        break;
      }
      case OutputFormat::markdown: std::cout << report_to_markdown(r) << "\n"; break;
    }
    std::cerr << n << ": " << r.checks.size() - r.failures() << "/" << r.checks.size() << " pass ("
              << r.elapsed_ms << " ms)\n";
  }
  if (fmt == OutputFormat::json) std::cout << (names.size() == 1 ? all[0] : all).dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hollab: homology, cohomology and verification for holomorphs of abelian groups"};
  app.require_subcommand(1);

  unsigned long p = 2;
  unsigned r = 3, qmax = 6, n = 2, k = 1;
  std::string mode = "both", format = "markdown", dmode, suite = "all";
  std::vector<std::string> checks{"all"};
  std::uint64_t seed = 0;
  bool no_timing = false;

  auto* hom = app.add_subcommand("homology", "integral homology of Hol(Z_{p^r})");
  hom->add_option("--p", p, "prime")->required();
  hom->add_option("--r", r, "exponent")->required();
  hom->add_option("--qmax", qmax, "top degree");
  hom->add_option("--mode", mode, "computed | closed | both")->check(CLI::IsMember({"computed", "closed", "both"}));
  hom->add_option("--format", format, "markdown | csv | json");

  auto* ranks = app.add_subcommand("cohomology-ranks", "mod-p cohomology ranks, formula against UCT");
  ranks->add_option("--p", p, "prime")->required();
  ranks->add_option("--r", r, "exponent")->required();
  ranks->add_option("--qmax", qmax, "top degree");
  ranks->add_option("--format", format, "markdown | csv | json");

  auto* dick = app.add_subcommand("dickson", "Dickson coefficient and its d2 image");
  dick->add_option("--n", n, "rank")->required();
  dick->add_option("--p", p, "prime")->required();
  dick->add_option("--mode", dmode, "r3 | r>3 | odd");

  auto* cong = app.add_subcommand("congruence", "checks on the congruence subgroup Gamma_{n,k}");
  cong->add_option("--n", n, "rank")->required();
  cong->add_option("--k", k, "level")->required();
  cong->add_option("--p", p, "prime")->required();
  cong->add_option("--check", checks, "order omega1 p-power bracket embedding roots | all");
  cong->add_option("--format", format, "markdown | csv | json");

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", suite, "suite name or all");
  auto* seed_opt = ver->add_option("--seed", seed, "override the suite seed");
  ver->add_option("--format", format, "markdown | csv | json");
  ver->add_flag("--no-timing", no_timing, "write elapsed_ms as 0 (byte-stable reports)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    OutputFormat fmt;
    try {
      fmt = parse_format(format);
    } catch (const std::invalid_argument& e) {
      throw usage_error(e.what());
    }
    if (hom->parsed()) return cmd_homology(p, r, qmax, mode, fmt);
    if (ranks->parsed()) return cmd_ranks(p, r, qmax, fmt);
    if (dick->parsed()) return cmd_dickson(n, static_cast<unsigned>(p), dmode);
    if (cong->parsed())
      return cmd_congruence(n, k, static_cast<std::int64_t>(p), {checks.begin(), checks.end()}, fmt);
    if (ver->parsed())
      return cmd_verify(suite, seed_opt->count() ? std::optional<std::uint64_t>(seed) : std::nullopt, fmt, !no_timing);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "omegacalc/io.hpp"

using namespace omegacalc;

namespace {

int exit_code_for(errc code) {
  switch (code) {
    case errc::budget_exceeded:
    case errc::cap_not_found:
      return 3;
    case errc::not_a_member:
    case errc::zero_element:
    case errc::unit_element:
    case errc::element_out_of_range:
      return 4;
    case errc::series_too_short:
    case errc::window_unstable:
    case errc::below_threshold:
      return 5;
    default:
      return 2;  // bad input: parse, construction and domain errors
  }
}

struct Options {
  std::string format = "table";
  Int budget = kDefaultSearchBudget;
};

void emit_json(nlohmann::json j) {
  j["schema_version"] = kSchemaVersion;
  std::cout << j.dump(2) << '\n';
}

std::string gens_label(const NumericalMonoid& monoid) {
  std::string out = "<";
  const auto& gens = monoid.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(gens[i]);
  }
  return out + ">";
}

// ---------------------------------------------------------------------------
// omega / bullets

void print_omega_table(const NumericalMonoid& monoid, const OmegaResult& result) {
  std::cout << "monoid " << gens_label(monoid) << "  frobenius " << monoid.frobenius() << '\n';
  std::cout << "n = " << result.element << '\n';
  std::cout << "omega = " << result.omega << '\n';
  std::cout << "bounds = (";
  for (std::size_t i = 0; i < result.bullet_set.bounds.size(); ++i)
    std::cout << (i ? "," : "") << result.bullet_set.bounds[i];
  std::cout << ")\n";
  std::cout << "bullets (" << result.bullet_set.bullets.size() << "):\n";
  for (const auto& b : result.bullet_set.bullets) {
    std::cout << "  " << format_vector(b) << "  length " << b.length;
    if (b.length == result.omega) std::cout << "  [maximal]";
    std::cout << '\n';
  }
}

int run_omega(const Options& opt, const std::vector<Int>& gens, std::optional<Int> n,
              std::optional<Int> lo, std::optional<Int> hi, bool bullets_only) {
  const NumericalMonoid monoid = NumericalMonoid::from_generators(gens);
  if (n) {
    const OmegaResult result = omega(monoid, *n, opt.budget);
    if (opt.format == "json") {
      nlohmann::json j = json_of(result);
      j["generators"] = monoid.generators();
      emit_json(j);
    } else if (opt.format == "csv") {
      std::cout << bullets_csv(result);
    } else {
      print_omega_table(monoid, result);
    }
    return 0;
  }
  if (!lo || !hi) fail(errc::invalid_argument, "provide --n or both --lo and --hi");
  std::vector<std::pair<Int, Int>> entries;
  for (Int v = *lo; v <= *hi; ++v) {
    if (v == 0 || !monoid.contains(v)) continue;
    entries.emplace_back(v, omega(monoid, v, opt.budget).omega);
  }
  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [v, w] : entries) rows.push_back({{"n", v}, {"omega", w}});
    emit_json({{"generators", monoid.generators()}, {"entries", rows}});
  } else if (opt.format == "csv") {
    std::cout << range_csv(entries);
  } else {
    std::cout << "monoid " << gens_label(monoid) << '\n';
    for (const auto& [v, w] : entries)
      std::cout << "omega(" << v << ") = " << w << '\n';
  }
  (void)bullets_only;
  return 0;
}

// ---------------------------------------------------------------------------
// quasi

int run_quasi(const Options& opt, const std::vector<Int>& gens, Int horizon, Int window) {
  const NumericalMonoid monoid = NumericalMonoid::from_generators(gens);
  const OmegaSeries series = omega_series(monoid, 1, horizon, opt.budget);
  const QuasilinearModel model = fit_quasilinear(series, window);
  if (opt.format == "json") {
    emit_json(json_of(series, model));
  } else if (opt.format == "csv") {
    std::cout << series_csv(series, model);
  } else {
    std::cout << "monoid " << gens_label(monoid) << "  members " << series.entries.size()
              << " in [1," << horizon << "]\n";
    std::cout << "model omega(n) = floor(n/" << model.n1 << ") + c[n mod " << model.n1 << "]\n";
    std::cout << "intercepts c = [";
    for (std::size_t i = 0; i < model.intercepts.size(); ++i)
      std::cout << (i ? "," : "") << model.intercepts[i];
    std::cout << "]\n";
    std::cout << "minimal period = " << minimal_period(model) << '\n';
    if (model.dissonance)
      std::cout << "dissonance point = " << *model.dissonance << '\n';
    else
      std::cout << "dissonance point = none found <= " << model.certified_through << '\n';
    std::cout << "certified through " << model.certified_through << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// scan-orderings

int run_scan(const Options& opt, Int bound) {
  const OrderingScanResult result = generator_ordering_scan(bound, opt.budget);
  if (opt.format == "json") {
    emit_json(json_of(result));
  } else if (opt.format == "csv") {
    std::cout << scan_csv(result);
  } else {
    std::cout << "minimal triples scanned: " << result.rows.size() << " (bound " << bound
              << ")\n";
    std::cout << "census:\n";
    for (const auto& [pattern, count] : result.census)
      std::cout << "  " << pattern << "  " << count << '\n';
    std::cout << "forbidden-pattern hits: " << result.forbidden_hits.size() << '\n';
    for (const auto& row : result.forbidden_hits)
      std::cout << "  <" << row.n1 << "," << row.n2 << "," << row.n3 << ">  " << row.pattern
                << '\n';
  }
  return result.forbidden_hits.empty() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// interval

int run_interval(const Options& opt, Int n, const std::string& parity) {
  const IntervalParity p = parity == "odd" ? IntervalParity::odd : IntervalParity::even;
  const auto values = interval_generator_omegas(n, p);
  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [g, w] : values) rows.push_back({{"generator", g}, {"omega", w}});
    emit_json({{"n", n}, {"parity", parity}, {"values", rows}});
  } else if (opt.format == "csv") {
    std::cout << kIntervalCsvHeader << '\n';
    for (const auto& [g, w] : values) std::cout << g << ',' << w << '\n';
  } else {
    for (const auto& [g, w] : values) std::cout << "omega(" << g << ") = " << w << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// block

// Grammar: "elem:mult,..." where elem is /-separated coordinates; `g` and
// `-g` are shorthands for 1 and -1 in rank-one groups.
ZeroSumSequence parse_block(const FiniteAbelianGroup& group, const std::string& text) {
  std::map<Int, Int> items;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const auto colon = token.find(':');
    std::string elem = token.substr(0, colon);
    Int mult = 1;
    if (colon != std::string::npos) mult = std::stoll(token.substr(colon + 1));
    if (elem == "g" || elem == "-g") {
      if (group.invariant_factors().size() != 1)
        fail(errc::invalid_argument, "g/-g shorthand requires a rank-one group");
      items[group.id_of({elem == "g" ? 1 : -1})] += mult;
      continue;
    }
    std::vector<Int> tuple;
    std::stringstream es(elem);
    std::string coord;
    while (std::getline(es, coord, '/')) tuple.push_back(std::stoll(coord));
    items[group.id_of(tuple)] += mult;
  }
  return ZeroSumSequence::make(group, items);
}

int run_block(const Options& opt, const std::vector<Int>& factors, const std::string& element,
              bool list_irreducibles) {
  const FiniteAbelianGroup group{factors};
  if (list_irreducibles) {
    const auto irreducibles = minimal_zero_sum_sequences(group, opt.budget);
    if (opt.format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& u : irreducibles) rows.push_back(format_block(group, u));
      emit_json({{"invariant_factors", factors}, {"irreducibles", rows}});
    } else {
      for (const auto& u : irreducibles)
        std::cout << format_block(group, u) << "  length " << u.length << '\n';
    }
    return 0;
  }
  const ZeroSumSequence block = parse_block(group, element);
  const BlockOmegaResult result = block_omega(group, block, opt.budget);
  if (opt.format == "json") {
    emit_json(json_of(group, result));
  } else {
    std::cout << "block " << format_block(group, block) << "  length " << block.length << '\n';
    std::cout << "omega = " << result.omega << '\n';
    std::cout << "maximal bullets:\n";
    for (const auto& b : result.maximal_bullets)
      std::cout << "  " << format_block_bullet(group, b) << "  length " << b.length << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// acm

int run_acm(const Options& opt, Int a, Int b, Int x, bool factorize) {
  const ArithmeticCongruenceMonoid monoid = ArithmeticCongruenceMonoid::create(a, b);
  if (factorize) {
    const auto factorizations = monoid.factorizations(x);
    if (opt.format == "json") {
      emit_json({{"a", a}, {"b", b}, {"x", x}, {"factorizations", factorizations}});
    } else {
      std::cout << x << " has " << factorizations.size() << " factorizations:\n";
      for (const auto& parts : factorizations) {
        std::cout << "  ";
        for (std::size_t i = 0; i < parts.size(); ++i)
          std::cout << (i ? " * " : "") << parts[i];
        std::cout << '\n';
      }
    }
    return 0;
  }
  const AcmOmegaResult result = acm_omega(monoid, x, opt.budget);
  if (opt.format == "json") {
    nlohmann::json j = json_of(result);
    j["a"] = a;
    j["b"] = b;
    emit_json(j);
  } else {
    std::cout << "M_{" << a << "," << b << "}, x = " << x << '\n';
    std::cout << "omega = " << result.omega << '\n';
    std::cout << "maximal bullets:\n";
    for (const auto& bullet : result.maximal_bullets) {
      std::cout << "  ";
      for (std::size_t i = 0; i < bullet.size(); ++i)
        std::cout << (i ? " * " : "") << bullet[i];
      std::cout << '\n';
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// leamer

int run_leamer(const Options& opt, const std::vector<Int>& gens, Int s, Int n_max, Int k_max,
               const std::string& omega_at) {
  const LeamerMonoid monoid =
      LeamerMonoid::create(NumericalMonoid::from_generators(gens), s, {n_max, k_max});
  if (!omega_at.empty()) {
    const auto comma = omega_at.find(',');
    if (comma == std::string::npos)
      fail(errc::invalid_argument, "--omega expects \"n,k\"");
    const Int n = std::stoll(omega_at.substr(0, comma));
    const Int k = std::stoll(omega_at.substr(comma + 1));
    const LeamerOmegaResult result = leamer_omega(monoid, n, k, opt.budget);
    if (opt.format == "json") {
      emit_json(json_of(result));
    } else {
      std::cout << "element (" << n << "," << k << ")  box (" << n_max << "," << k_max << ")\n";
      std::cout << "omega = " << result.omega << " (within box)\n";
      std::cout << "maximal bullets:\n";
      for (const auto& b : result.maximal_bullets) {
        std::cout << "  ";
        for (const auto& part : b.parts) std::cout << format_point(part);
        std::cout << "  length " << b.length << '\n';
      }
    }
    return 0;
  }
  const auto points = leamer_points(monoid);
  const auto irreducibles = leamer_irreducibles(monoid);
  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    std::size_t j = 0;
    for (const auto& p : points) {
      while (j < irreducibles.size() && irreducibles[j] < p) ++j;
      const bool irr = j < irreducibles.size() && irreducibles[j] == p;
      rows.push_back({{"n", p.first}, {"k", p.second}, {"irreducible", irr}});
    }
    emit_json({{"generators", gens}, {"s", s}, {"points", rows}});
  } else {
    std::cout << leamer_csv(points, irreducibles);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// repro: recompute the golden examples and diff

int run_repro() {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
      std::cout << "ok   " << name << '\n';
    } else {
      ++failures;
      std::cout << "FAIL " << name << (detail.empty() ? "" : "  (" + detail + ")") << '\n';
    }
  };
  auto coords = [](std::vector<Int> c) { return c; };

  const NumericalMonoid mcnugget = NumericalMonoid::from_generators({6, 9, 20});
  const OmegaResult w6 = omega(mcnugget, 6);
  check("mcnugget omega(6) = 3", w6.omega == 3);
  check("mcnugget bullets(6) = {6, 9+9, 20+20+20}",
        w6.bullet_set.bullets.size() == 3 && w6.bullet_set.bullets[0].coords == coords({0, 0, 3}) &&
            w6.bullet_set.bullets[1].coords == coords({0, 2, 0}) &&
            w6.bullet_set.bullets[2].coords == coords({1, 0, 0}));
  const OmegaResult w35 = omega(mcnugget, 35);
  check("mcnugget omega(35) = 14", w35.omega == 14);
  check("mcnugget bullet count(35) = 10", w35.bullet_set.bullets.size() == 10);
  check("mcnugget maximal bullet (14,0,0)",
        w35.maximal_bullets.size() == 1 && w35.maximal_bullets[0].coords == coords({14, 0, 0}));

  const NumericalMonoid m37 = NumericalMonoid::from_generators({3, 7});
  const OmegaResult w9 = omega(m37, 9);
  check("<3,7> omega(9) = 3 with bullets (3,0),(0,3)",
        w9.omega == 3 && w9.bullet_set.bullets.size() == 2 &&
            w9.bullet_set.bullets[0].coords == coords({0, 3}) &&
            w9.bullet_set.bullets[1].coords == coords({3, 0}));

  const NumericalMonoid m11 = NumericalMonoid::from_generators({11, 13, 15});
  bool shifts_ok = true;
  for (Int j = 0; j <= 5; ++j) {
    const OmegaResult w = omega(m11, 58 + 11 * j);
    const std::vector<Int> expected{5 + j, 6, 0};
    bool found = false;
    for (const auto& b : w.maximal_bullets) found = found || b.coords == expected;
    shifts_ok = shifts_ok && w.omega == 11 + j && found;
  }
  check("<11,13,15> omega(58+11j) = 11+j with maximal bullet (5+j,6,0)", shifts_ok);

  const ArithmeticCongruenceMonoid hilbert = ArithmeticCongruenceMonoid::create(1, 4);
  check("hilbert omega(1225) = 4", acm_omega(hilbert, 1225).omega == 4);
  check("hilbert 441 has exactly 2 factorizations", hilbert.factorizations(441).size() == 2);

  const FiniteAbelianGroup z3{{3}};
  auto block_of = [&](std::map<Int, Int> items) { return ZeroSumSequence::make(z3, items); };
  check("B(Z3) omega(0) = 1", block_omega(z3, block_of({{0, 1}})).omega == 1);
  check("B(Z3) omega(g^3) = 3", block_omega(z3, block_of({{1, 3}})).omega == 3);
  check("B(Z3) omega(g(-g)) = 2", block_omega(z3, block_of({{1, 1}, {2, 1}})).omega == 2);
  check("B(Z3) omega(g^3(-g)^3) = 3",
        block_omega(z3, block_of({{1, 3}, {2, 3}})).omega == 3);

  const ResidueTable table = build_residue_table(3, 7);
  check("<3,7> residue table = [0,5,3]", table.a_of_r == std::vector<Int>({0, 5, 3}));
  check("<3,7> residue threshold = 7", table.validity_threshold == 7);

  bool interval_ok = true;
  for (Int n = 2; n <= 8; ++n) {
    for (const IntervalParity parity : {IntervalParity::odd, IntervalParity::even}) {
      const auto claimed = interval_generator_omegas(n, parity);
      std::vector<Int> gens;
      for (const auto& [g, w] : claimed) gens.push_back(g);
      const NumericalMonoid monoid = NumericalMonoid::from_generators(gens);
      for (const auto& [g, w] : claimed)
        interval_ok = interval_ok && omega(monoid, g).omega == w;
    }
  }
  check("interval formulas match the search for n = 2..8", interval_ok);

  // Leamer point cloud, recomputed from the run definition directly.
  const LeamerMonoid leamer =
      LeamerMonoid::create(NumericalMonoid::from_generators({13, 17, 22, 40}), 4, {100, 12});
  const auto points = leamer_points(leamer);
  std::vector<LeamerPoint> direct{{0, 0}};
  for (Int pn = 1; pn <= 100; ++pn)
    for (Int pk = 1; pk <= 12; ++pk) {
      bool in = true;
      for (Int i = 0; i <= pk && in; ++i) in = leamer.gamma().contains(pn + 4 * i);
      if (in) direct.emplace_back(pn, pk);
    }
  std::sort(direct.begin(), direct.end());
  check("leamer S^4_<13,17,22,40> point cloud matches the definition", points == direct);

  std::cout << (failures == 0 ? "repro: all checks passed\n"
                              : "repro: " + std::to_string(failures) + " check(s) failed\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"omega-primality calculator for numerical, block, congruence and Leamer monoids"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--budget", opt.budget, "search budget (candidate vectors / nodes)")
      ->envname("OMEGACALC_BUDGET")
      ->capture_default_str();

  std::vector<Int> gens;
  std::optional<Int> n_opt, lo_opt, hi_opt;

  auto* omega_cmd = app.add_subcommand("omega", "omega value and bullets of an element");
  omega_cmd->add_option("--gens", gens, "generators, comma separated")
      ->required()
      ->delimiter(',');
  omega_cmd->add_option("--n", n_opt, "element");
  omega_cmd->add_option("--lo", lo_opt, "range start");
  omega_cmd->add_option("--hi", hi_opt, "range end");

  auto* bullets_cmd = app.add_subcommand("bullets", "bullet set of an element");
  bullets_cmd->add_option("--gens", gens, "generators, comma separated")
      ->required()
      ->delimiter(',');
  bullets_cmd->add_option("--n", n_opt, "element")->required();

  Int horizon = 0, window = 5;
  auto* quasi_cmd = app.add_subcommand("quasi", "fit the eventual quasilinear model");
  quasi_cmd->add_option("--gens", gens, "generators, comma separated")
      ->required()
      ->delimiter(',');
  quasi_cmd->add_option("--horizon", horizon, "compute omega for members up to here")->required();
  quasi_cmd->add_option("--window", window, "stability window, in periods")
      ->capture_default_str();

  Int bound = 0;
  auto* scan_cmd = app.add_subcommand("scan-orderings", "census of generator omega-orderings");
  scan_cmd->add_option("--bound", bound, "largest generator")->required();

  Int interval_n = 0;
  std::string parity = "odd";
  auto* interval_cmd = app.add_subcommand("interval", "generator omegas of interval monoids");
  interval_cmd->add_option("--n", interval_n, "half-width parameter, n >= 2")->required();
  interval_cmd->add_option("--parity", parity, "odd: <2n-1,2n,2n+1>; even: <2n,2n+1,2n+2>")
      ->check(CLI::IsMember({"odd", "even"}))
      ->capture_default_str();

  std::vector<Int> group_factors;
  std::string block_element;
  bool block_irreducibles = false;
  auto* block_cmd = app.add_subcommand("block", "omega in a block monoid B(G)");
  block_cmd->add_option("--group", group_factors, "invariant factors, comma separated")
      ->required()
      ->delimiter(',');
  block_cmd->add_option("--element", block_element, "block, e.g. \"g:3,-g:3\" or \"1:3,2:3\"");
  block_cmd->add_flag("--irreducibles", block_irreducibles, "list the minimal zero-sum sequences");

  Int acm_a = 0, acm_b = 0, acm_x = 0;
  bool acm_factorize = false;
  auto* acm_cmd = app.add_subcommand("acm", "omega in an arithmetical congruence monoid");
  acm_cmd->add_option("--a", acm_a, "residue a")->required();
  acm_cmd->add_option("--b", acm_b, "modulus b")->required();
  acm_cmd->add_option("--x", acm_x, "element")->required();
  acm_cmd->add_flag("--factorizations", acm_factorize, "list factorizations instead of omega");

  Int leamer_s = 0, leamer_nmax = 0, leamer_kmax = 0;
  std::string leamer_omega_at;
  auto* leamer_cmd = app.add_subcommand("leamer", "Leamer monoid point cloud and omega");
  leamer_cmd->add_option("--gens", gens, "generators of the underlying monoid")
      ->required()
      ->delimiter(',');
  leamer_cmd->add_option("--s", leamer_s, "step size, must lie outside the monoid")->required();
  leamer_cmd->add_option("--nmax", leamer_nmax, "box width")->required();
  leamer_cmd->add_option("--kmax", leamer_kmax, "box height")->required();
  leamer_cmd->add_option("--omega", leamer_omega_at, "compute omega of \"n,k\" within the box");

  auto* repro_cmd = app.add_subcommand("repro", "recompute the golden examples and diff");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (omega_cmd->parsed()) return run_omega(opt, gens, n_opt, lo_opt, hi_opt, false);
    if (bullets_cmd->parsed()) return run_omega(opt, gens, n_opt, {}, {}, true);
    if (quasi_cmd->parsed()) return run_quasi(opt, gens, horizon, window);
    if (scan_cmd->parsed()) return run_scan(opt, bound);
    if (interval_cmd->parsed()) return run_interval(opt, interval_n, parity);
    if (block_cmd->parsed())
      return run_block(opt, group_factors, block_element, block_irreducibles);
    if (acm_cmd->parsed()) return run_acm(opt, acm_a, acm_b, acm_x, acm_factorize);
    if (leamer_cmd->parsed())
      return run_leamer(opt, gens, leamer_s, leamer_nmax, leamer_kmax, leamer_omega_at);
    if (repro_cmd->parsed()) return run_repro();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

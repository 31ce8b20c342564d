#include "ncp/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncp/nc_lattice.hpp"
#include "ncp/notation.hpp"
#include "ncp/poset_io.hpp"
#include "ncp/reflection_order.hpp"
#include "ncp/shellability.hpp"
#include "ncp/words.hpp"

namespace ncp {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::invalid_argument("error writing: " + path);
}

void check_size_guard(const mpz_class& count, const RunConfig& cfg) {
  if (!cfg.force && count > cfg.size_guard)
    throw std::invalid_argument(
        "poset has " + count.get_str() + " elements, above the size guard of " +
        std::to_string(cfg.size_guard) + "; pass --force to proceed anyway");
}

void require_labeled(const GradedPoset& p) {
  for (const CoverRelation& c : p.covers())
    if (c.label < 0)
      throw std::invalid_argument(
          "poset has unlabeled covers; EL analysis needs every cover labeled");
}

// The poset a verification command works on, plus the lattice context when
// it was built from (d, n) at m = 1 (which makes reflection orderings and
// word machinery applicable).
struct PosetSource {
  GradedPoset poset;
  std::optional<NCLattice> lattice;
};

// Resolve --poset / --d --n --m into a poset.  m >= 2 means the m-divisible
// poset with an adjoined minimum: EL analysis needs a bounded poset.
PosetSource load_source(const RunConfig& cfg) {
  PosetSource src;
  if (!cfg.poset_path.empty()) {
    src.poset = load_poset(cfg.poset_path);
    check_size_guard(src.poset.size(), cfg);
    return src;
  }
  const GroupParams gp{cfg.d, cfg.n};
  gp.validate();
  check_size_guard(fuss_catalan(gp, cfg.m), cfg);
  if (cfg.m == 1) {
    src.lattice = build_nc_lattice(gp);
    src.poset = src.lattice->poset;
  } else {
    src.poset = adjoin_bottom(build_m_divisible(gp, cfg.m).poset, false);
  }
  return src;
}

// The label order requested by --ordering: the builtin order, a reflection
// ordering file (lattice sources), or a label order file (poset files).
LabelOrder resolve_order(const PosetSource& src, const RunConfig& cfg) {
  if (cfg.ordering == "builtin") {
    if (src.lattice)
      return label_order_from_reflections(
          *src.lattice, compatible_ordering(src.lattice->params));
    return LabelOrder(src.poset);  // label-table order
  }
  const std::string text = slurp(cfg.ordering);
  if (src.lattice)
    return label_order_from_reflections(
        *src.lattice, ordering_from_text(src.lattice->params, text));
  return label_order_from_text(src.poset, text);
}

void print_poset_line(const GradedPoset& p, std::ostream& out) {
  out << "poset: " << p.size() << " elements, " << p.covers().size()
      << " covers\n";
}

std::string report_path_or(const RunConfig& cfg, const char* fallback) {
  return cfg.report_path.empty() ? fallback : cfg.report_path;
}

void write_el_report(const GradedPoset& p, const LabelOrder& order,
                     const ELReport& rep, const std::string& path,
                     std::ostream& out) {
  write_file(path, el_report_to_json(p, order, rep).dump(2) + "\n");
  out << "wrote " << path << "\n";
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  const GroupParams gp{cfg.d, cfg.n};
  gp.validate();
  check_size_guard(fuss_catalan(gp, cfg.m), cfg);

  GradedPoset poset;
  std::optional<NCLattice> lattice;
  if (cfg.m == 1) {
    lattice = build_nc_lattice(gp);
    poset = lattice->poset;
  } else {
    poset = build_m_divisible(gp, cfg.m).poset;
  }

  out << poset.size() << " elements\n";
  out << "rank sizes:";
  for (int s : poset.rank_sizes()) out << ' ' << s;
  out << "\n";

  const std::string path = cfg.output.empty() ? "poset.json" : cfg.output;
  save_poset(poset, path);
  out << "wrote " << path << "\n";

  if (!cfg.dot_path.empty()) {
    if (lattice) {
      const LabelOrder order = label_order_from_reflections(
          *lattice, compatible_ordering(gp));
      write_file(cfg.dot_path, poset_to_dot(poset, &order));
    } else {
      write_file(cfg.dot_path, poset_to_dot(poset));
    }
    out << "wrote " << cfg.dot_path << "\n";
  }
  return 0;
}

int cmd_verify_el(const RunConfig& cfg, std::ostream& out) {
  const PosetSource src = load_source(cfg);
  require_labeled(src.poset);
  const LabelOrder order = resolve_order(src, cfg);

  print_poset_line(src.poset, out);
  const ELReport rep = verify_el(src.poset, order, cfg.jobs);
  out << "intervals checked: " << rep.intervals_checked << "\n";
  out << "chains checked: " << rep.chains_checked << "\n";
  out << "verdict: " << (rep.verdict ? "EL" : "not EL") << "\n";
  if (!rep.verdict) {
    const std::vector<IntervalCheck> failures = rep.failures();
    const IntervalCheck& f = failures.front();
    out << "first failing interval: [" << src.poset.display(f.u) << ", "
        << src.poset.display(f.v) << "]: " << f.chains << " chain(s), "
        << f.rising << " rising, lex-least "
        << (f.lex_least_rising ? "rising" : "not rising")
        << (f.lex_least_unique ? "" : ", not unique") << "\n";
  }
  write_el_report(src.poset, order, rep, report_path_or(cfg, "elreport.json"),
                  out);
  return rep.verdict ? 0 : 1;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  const PosetSource src = load_source(cfg);
  require_labeled(src.poset);

  out << "seed: " << cfg.seed << "\n";
  print_poset_line(src.poset, out);
  const SearchResult res =
      el_search(src.poset, cfg.seed, cfg.max_rounds, cfg.restarts);
  out << res.note << "\n";

  const std::string order_path = cfg.output.empty() ? "order.txt" : cfg.output;
  write_file(order_path, label_order_to_text(src.poset, res.order));
  out << "wrote " << order_path << "\n";

  const ELReport rep = verify_el(src.poset, res.order, cfg.jobs);
  write_el_report(src.poset, res.order, rep,
                  report_path_or(cfg, "elreport.json"), out);
  return res.success ? 0 : 1;
}

int cmd_words(const RunConfig& cfg, std::ostream& out) {
  const GroupParams gp{cfg.d, cfg.n};
  gp.validate();
  check_size_guard(fuss_catalan(gp, 1), cfg);

  const NCLattice lat = build_nc_lattice(gp);
  const ReflectionOrdering ord = compatible_ordering(gp);
  const std::vector<ReducedWord> words = all_reduced_words(lat, lat.gamma);
  const ShiftGraph g = build_shift_graph(words);

  out << words.size() << " reduced words for the Coxeter element\n";
  out << "left-shift graph: " << g.nodes.size() << " nodes, " << g.arcs.size()
      << " arcs\n";
  out << "closed under left shifts: " << (g.closed ? "yes" : "no") << "\n";

  int rising = -1;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (descent_inversion_sets(g.nodes[i], ord).descents.empty())
      rising = static_cast<int>(i);
  bool connected = false;
  if (rising >= 0) {
    const ReducedWord& w = g.nodes[static_cast<std::size_t>(rising)];
    out << "rising word: " << word_node_name(w, ord) << "\n";
    connected = reachable(g, rising).size() == g.nodes.size();
  }
  out << "connected from the rising word: " << (connected ? "yes" : "no")
      << "\n";

  if (!cfg.dot_path.empty()) {
    write_file(cfg.dot_path, shift_graph_to_dot(g, ord));
    out << "wrote " << cfg.dot_path << "\n";
  }
  return g.closed && connected ? 0 : 1;
}

int cmd_mobius(const RunConfig& cfg, std::ostream& out) {
  const GroupParams gp{cfg.d, cfg.n};
  gp.validate();
  check_size_guard(fuss_catalan(gp, cfg.m), cfg);

  // Throws invariant_error when the recursion disagrees with the formula.
  const MobiusCorollaryReport rep = verify_mobius_corollary(gp, cfg.m);
  out << "poset: " << rep.poset_size << " elements\n";
  out << "mu(bottom, top) = " << rep.mu.get_str() << "\n";
  out << "closed form: " << rep.formula.get_str() << "\n";
  out << "formula agrees\n";

  const MobiusCorollaryReport euler = euler_characteristic_check(gp, cfg.m);
  out << "order complex: wedge of " << euler.sphere_count.get_str()
      << " sphere(s) of dimension " << euler.sphere_dimension << "\n";
  return 0;
}

int cmd_check_props(const RunConfig& cfg, std::ostream& out) {
  const GroupParams gp{cfg.d, cfg.n};
  gp.validate();
  check_size_guard(fuss_catalan(gp, 1), cfg);

  bool all_ok = true;
  const auto line = [&](const char* name, bool ok, const std::string& detail) {
    out << (ok ? "ok   " : "FAIL ") << name;
    if (!detail.empty()) out << " (" << detail << ")";
    out << "\n";
    all_ok = all_ok && ok;
  };

  const std::vector<int> deg = degrees(gp);
  long long sum = 0;
  mpz_class prod = 1;
  for (int x : deg) {
    sum += x;
    prod *= x;
  }
  const long long want_sum =
      static_cast<long long>(cfg.d) * cfg.n * (cfg.n - 1) / 2 + cfg.n;
  mpz_class want_prod = 1;
  for (int i = 1; i < cfg.n; ++i) want_prod *= cfg.d;
  for (int i = 2; i <= cfg.n; ++i) want_prod *= i;
  line("degree identities", sum == want_sum && prod == want_prod,
       "sum " + std::to_string(sum) + ", product " + prod.get_str());

  const std::vector<Reflection> formula =
      reflections_below_coxeter(gp, TGammaMode::Formula);
  const std::vector<Reflection> brute =
      reflections_below_coxeter(gp, TGammaMode::BruteForce);
  const long long all_reflections =
      static_cast<long long>(cfg.d) * cfg.n * (cfg.n - 1) / 2;
  line("reflections below the Coxeter element", formula == brute,
       std::to_string(formula.size()) + " of " +
           std::to_string(all_reflections) + " reflections");

  const ReflectionOrdering ord = compatible_ordering(gp);
  const GammaCompatibilityReport comp = is_gamma_compatible(ord);
  line("builtin ordering is compatible", comp.compatible,
       std::to_string(comp.intervals_checked) + " rank-2 intervals");

  const NCLattice lat = build_nc_lattice(gp);
  const mpz_class want_size = fuss_catalan(gp, 1);
  line("lattice size matches the closed form",
       mpz_class(lat.poset.size()) == want_size,
       std::to_string(lat.poset.size()) + " elements");

  const LabelOrder order = label_order_from_reflections(lat, ord);
  const ELReport el = verify_el(lat.poset, order, cfg.jobs);
  line("EL property with the builtin ordering", el.verdict,
       std::to_string(el.intervals_checked) + " intervals");

  const ShiftLemmasReport shifts = check_shift_lemmas(gp);
  line("shift lemmas", shifts.ok(),
       std::to_string(shifts.words_checked) + " words, " +
           std::to_string(shifts.shifts_checked) + " shifts");

  const LabelLemmasReport labels = verify_label_lemmas(lat);
  line("label lemmas", labels.ok(), "");

  bool mobius_ok = true;
  std::string mobius_detail;
  try {
    const MobiusCorollaryReport mob = verify_mobius_corollary(gp, 1);
    mobius_detail = "mu = " + mob.mu.get_str();
  } catch (const invariant_error& e) {
    mobius_ok = false;
    mobius_detail = e.what();
  }
  line("Moebius number matches the closed form", mobius_ok, mobius_detail);

  if (cfg.trials > 0) {
    out << "seed: " << cfg.seed << "\n";
    const LexLeastReport lex =
        verify_lex_least_always_rising(lat, cfg.trials, cfg.seed);
    line("lex-least chains rising under random orders", lex.ok(),
         std::to_string(lex.trials) + " trials, " +
             std::to_string(lex.checks) + " checks");
  }

  out << (all_ok ? "all checks pass\n" : "some checks FAILED\n");
  return all_ok ? 0 : 1;
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::Build:
      return cmd_build(cfg, out);
    case Command::VerifyEl:
      return cmd_verify_el(cfg, out);
    case Command::Search:
      return cmd_search(cfg, out);
    case Command::Words:
      return cmd_words(cfg, out);
    case Command::Mobius:
      return cmd_mobius(cfg, out);
    case Command::CheckProps:
      return cmd_check_props(cfg, out);
  }
  throw std::invalid_argument("unknown command");
}

int run(const std::vector<std::string>& args, std::ostream& out) {
  RunConfig cfg;
  CLI::App app{
      "noncrossing partition lattices of G(d,d,n) and their EL-shellability"};
  app.require_subcommand(1);

  const auto add_params = [&](CLI::App* sub, bool with_m) {
    sub->add_option("--d", cfg.d, "number of colors (d >= 2)");
    sub->add_option("--n", cfg.n, "rank (n >= 2)");
    if (with_m)
      sub->add_option("--m", cfg.m, "divisibility parameter (default 1)")
          ->check(CLI::PositiveNumber);
    sub->add_flag("--force", cfg.force, "override the size guard");
    sub->add_option("--size-guard", cfg.size_guard,
                    "element-count cap (default 5000)");
  };
  const auto add_poset_input = [&](CLI::App* sub) {
    sub->add_option("--poset", cfg.poset_path,
                    "read this poset JSON instead of building one");
    sub->add_option("--ordering", cfg.ordering,
                    "builtin | ordering text file (reflections for built "
                    "lattices, label displays for --poset input)");
    sub->add_option("--jobs", cfg.jobs, "verification worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_option("--report", cfg.report_path,
                    "EL report JSON path (default elreport.json)");
  };

  CLI::App* build = app.add_subcommand(
      "build", "construct the lattice or its m-divisible poset");
  add_params(build, true);
  build->add_option("-o,--output", cfg.output,
                    "poset JSON path (default poset.json)");
  build->add_option("--dot", cfg.dot_path, "also write a Hasse diagram DOT");

  CLI::App* verify = app.add_subcommand(
      "verify-el", "check a label order for the EL property");
  add_params(verify, true);
  add_poset_input(verify);

  CLI::App* search = app.add_subcommand(
      "search", "seeded repair search for an EL label order");
  add_params(search, true);
  add_poset_input(search);
  search->add_option("--seed", cfg.seed, "random seed (default 0)");
  search->add_option("--max-rounds", cfg.max_rounds,
                     "repair rounds per restart")
      ->check(CLI::PositiveNumber);
  search->add_option("--restarts", cfg.restarts, "restarts before giving up")
      ->check(CLI::PositiveNumber);
  search->add_option("-o,--output", cfg.output,
                     "label order text path (default order.txt)");

  CLI::App* words = app.add_subcommand(
      "words", "reduced words for the Coxeter element and the shift graph");
  add_params(words, false);
  words->add_option("--dot", cfg.dot_path, "write the shift graph as DOT");

  CLI::App* mobius = app.add_subcommand(
      "mobius", "Möbius number of the bounded m-divisible poset");
  add_params(mobius, true);

  CLI::App* props = app.add_subcommand(
      "check-props", "aggregate every lemma-level verification at one (d, n)");
  add_params(props, false);
  props->add_option("--trials", cfg.trials,
                    "random label orders to sample for the lex-least check");
  props->add_option("--seed", cfg.seed, "random seed (default 0)");
  props->add_option("--jobs", cfg.jobs, "verification worker threads")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.push_back("ncshell");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }

  if (build->parsed()) cfg.command = Command::Build;
  if (verify->parsed()) cfg.command = Command::VerifyEl;
  if (search->parsed()) cfg.command = Command::Search;
  if (words->parsed()) cfg.command = Command::Words;
  if (mobius->parsed()) cfg.command = Command::Mobius;
  if (props->parsed()) cfg.command = Command::CheckProps;

  // Commands that build a poset need the group parameters unless a poset
  // file was supplied.
  const bool needs_params =
      cfg.poset_path.empty() || cfg.command == Command::Build ||
      cfg.command == Command::Words || cfg.command == Command::Mobius ||
      cfg.command == Command::CheckProps;
  if (needs_params && (cfg.d == 0 || cfg.n == 0)) {
    out << "error: --d and --n are required (or pass --poset)\n";
    return 2;
  }

  try {
    return execute(cfg, out);
  } catch (const std::invalid_argument& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  } catch (const invariant_error& e) {
    out << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace ncp

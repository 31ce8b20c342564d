// End-to-end tests of the command-line front end through ncp::run.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "ncp/cli.hpp"
#include "ncp/nc_lattice.hpp"
#include "ncp/poset_io.hpp"
#include "ncp/reflection_order.hpp"
#include "ncp/shellability.hpp"
#include "ncp/words.hpp"

using namespace ncp;

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream os;
  const int code = run(args, os);
  return {code, os.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("build reports sizes and writes loadable JSON") {
  const CliResult r =
      run_cli({"build", "--d", "3", "--n", "3", "-o", "cli_nc33.json"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "18 elements"));
  CHECK(contains(r.out, "rank sizes: 1 8 8 1"));
  CHECK(contains(r.out, "wrote cli_nc33.json"));
  const GradedPoset p = load_poset("cli_nc33.json");
  CHECK(p.size() == 18);
  CHECK(p.bounded());

  const CliResult m2 = run_cli(
      {"build", "--d", "3", "--n", "3", "--m", "2", "-o", "cli_md2.json"});
  CHECK(m2.code == 0);
  CHECK(contains(m2.out, "75 elements"));
  const GradedPoset q = load_poset("cli_md2.json");
  CHECK(q.size() == 75);
  CHECK(q.bottom() == -1);  // many minima; bottom only adjoined for analysis

  const CliResult e5 =
      run_cli({"build", "--d", "5", "--n", "2", "-o", "cli_e52.json"});
  CHECK(e5.code == 0);
  CHECK(contains(e5.out, "7 elements"));
  CHECK(contains(e5.out, "rank sizes: 1 5 1"));

  std::remove("cli_md2.json");
  std::remove("cli_e52.json");
}

TEST_CASE("build renders the Hasse diagram with ordering positions") {
  const CliResult r = run_cli({"build", "--d", "3", "--n", "3", "-o",
                               "cli_nc33.json", "--dot", "cli_nc33.dot"});
  CHECK(r.code == 0);
  const std::string dot = slurp("cli_nc33.dot");
  CHECK(contains(dot, "digraph"));
  // Edge labels are 1-based ordering positions, not reflection displays.
  CHECK(contains(dot, "[label=\"1\"]"));
  std::istringstream lines(dot);
  std::string line;
  int labeled_edges = 0;
  while (std::getline(lines, line)) {
    if (!contains(line, "->")) continue;
    const std::size_t at = line.find("[label=\"");
    if (at == std::string::npos) continue;
    ++labeled_edges;
    const std::size_t from = at + 8;
    const std::size_t end = line.find('"', from);
    REQUIRE(end != std::string::npos);
    for (std::size_t i = from; i < end; ++i)
      CHECK(std::isdigit(static_cast<unsigned char>(line[i])));
  }
  CHECK(labeled_edges == 40);  // every cover of NC(3,3)
  std::remove("cli_nc33.dot");
}

TEST_CASE("verify-el accepts the builtin ordering") {
  const CliResult r = run_cli({"verify-el", "--d", "3", "--n", "3",
                               "--ordering", "builtin", "--report",
                               "cli_rep.json"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verdict: EL"));
  CHECK(contains(r.out, "intervals checked: 57"));
  const nlohmann::json rep = nlohmann::json::parse(slurp("cli_rep.json"));
  CHECK(rep["verdict"].get<bool>());
  CHECK(rep["failures"].empty());
  std::remove("cli_rep.json");
}

TEST_CASE("verify-el rejects a reversed ordering with a witness") {
  const ReflectionOrdering ord = compatible_ordering({3, 3});
  std::vector<Reflection> rev(ord.order().rbegin(), ord.order().rend());
  write_file("cli_reversed.txt",
             ordering_to_text(ReflectionOrdering({3, 3}, rev)));

  const CliResult r = run_cli({"verify-el", "--d", "3", "--n", "3",
                               "--ordering", "cli_reversed.txt", "--report",
                               "cli_rep.json"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "verdict: not EL"));
  CHECK(contains(r.out, "first failing interval:"));
  const nlohmann::json rep = nlohmann::json::parse(slurp("cli_rep.json"));
  CHECK_FALSE(rep["verdict"].get<bool>());
  CHECK_FALSE(rep["failures"].empty());
  std::remove("cli_reversed.txt");
  std::remove("cli_rep.json");
}

TEST_CASE("verify-el analyzes poset files against label order files") {
  REQUIRE(run_cli({"build", "--d", "3", "--n", "3", "-o", "cli_nc33.json"})
              .code == 0);
  const NCLattice lat = build_nc_lattice({3, 3});
  const LabelOrder good =
      label_order_from_reflections(lat, compatible_ordering({3, 3}));
  write_file("cli_good_order.txt", label_order_to_text(lat.poset, good));

  const CliResult ok = run_cli({"verify-el", "--poset", "cli_nc33.json",
                                "--ordering", "cli_good_order.txt",
                                "--report", "cli_rep.json"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "verdict: EL"));

  // "builtin" on a poset file means the label-table order, whose verdict is
  // whatever it is; the exit code must match the library's answer.
  const bool table_verdict =
      verify_el(lat.poset, LabelOrder(lat.poset)).verdict;
  const CliResult table = run_cli({"verify-el", "--poset", "cli_nc33.json",
                                   "--ordering", "builtin", "--report",
                                   "cli_rep.json"});
  CHECK(table.code == (table_verdict ? 0 : 1));

  std::remove("cli_good_order.txt");
  std::remove("cli_rep.json");
}

TEST_CASE("words reports the shift graph and draws the paper's figure") {
  const CliResult r = run_cli(
      {"words", "--d", "3", "--n", "3", "--dot", "cli_shift.dot"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "24 reduced words"));
  CHECK(contains(r.out, "left-shift graph: 24 nodes"));
  CHECK(contains(r.out, "closed under left shifts: yes"));
  CHECK(contains(r.out, "rising word: 168"));
  CHECK(contains(r.out, "connected from the rising word: yes"));

  const std::string dot = slurp("cli_shift.dot");
  CHECK(contains(dot, "label=\"168\""));
  CHECK(contains(dot, "label=\"628\""));

  // The arc 168 -> 628 from Fig. 1 is drawn between the matching nodes.
  const NCLattice lat = build_nc_lattice({3, 3});
  const ReflectionOrdering ord = compatible_ordering({3, 3});
  const ShiftGraph g = build_shift_graph(all_reduced_words(lat, lat.gamma));
  int from = -1, to = -1;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const std::string name = word_node_name(g.nodes[i], ord);
    if (name == "168") from = static_cast<int>(i);
    if (name == "628") to = static_cast<int>(i);
  }
  REQUIRE(from >= 0);
  REQUIRE(to >= 0);
  std::ostringstream edge;
  edge << "v" << from << " -> v" << to << ";";
  CHECK(contains(dot, edge.str()));
  std::remove("cli_shift.dot");
}

TEST_CASE("mobius prints the number and the closed-form agreement") {
  const CliResult r =
      run_cli({"mobius", "--d", "3", "--n", "3", "--m", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "mu(bottom, top) = -9"));
  CHECK(contains(r.out, "formula agrees"));
  CHECK(contains(r.out, "wedge of 9 sphere(s) of dimension 1"));

  const CliResult m2 =
      run_cli({"mobius", "--d", "3", "--n", "3", "--m", "2"});
  CHECK(m2.code == 0);
  CHECK(contains(m2.out, "mu(bottom, top) = -41"));
}

TEST_CASE("check-props aggregates the lemma-level verifications") {
  const CliResult r = run_cli({"check-props", "--d", "2", "--n", "4",
                               "--trials", "3", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "degree identities"));
  CHECK(contains(r.out, "reflections below the Coxeter element"));
  CHECK(contains(r.out, "builtin ordering is compatible"));
  CHECK(contains(r.out, "EL property with the builtin ordering"));
  CHECK(contains(r.out, "shift lemmas"));
  CHECK(contains(r.out, "label lemmas"));
  CHECK(contains(r.out, "seed: 7"));
  CHECK(contains(r.out, "all checks pass"));
  CHECK_FALSE(contains(r.out, "FAIL "));
}

TEST_CASE("search finds and certifies an order for a small poset") {
  const CliResult r = run_cli({"search", "--d", "2", "--n", "3", "--m", "2",
                               "--seed", "1", "-o", "cli_order.txt",
                               "--report", "cli_rep.json"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "seed: 1"));
  CHECK(contains(r.out, "EL order found"));
  CHECK(contains(r.out, "wrote cli_order.txt"));

  // The emitted order reproduces the certified verdict when read back.
  const GradedPoset p =
      adjoin_bottom(build_m_divisible({2, 3}, 2).poset, false);
  const LabelOrder order = label_order_from_text(p, slurp("cli_order.txt"));
  CHECK(verify_el(p, order).verdict);
  const nlohmann::json rep = nlohmann::json::parse(slurp("cli_rep.json"));
  CHECK(rep["verdict"].get<bool>());
  std::remove("cli_order.txt");
  std::remove("cli_rep.json");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({"verify-el"}).code == 2);
  CHECK(run_cli({"build", "--d", "3"}).code == 2);
  CHECK(run_cli({"build", "--bogus"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"verify-el", "--d", "3", "--n", "3", "--ordering",
                 "cli_no_such_file.txt"})
            .code == 2);
  CHECK(run_cli({"build", "--d", "1", "--n", "3"}).code == 2);

  const CliResult guard =
      run_cli({"build", "--d", "3", "--n", "3", "--m", "20"});
  CHECK(guard.code == 2);
  CHECK(contains(guard.out, "size guard"));
}

TEST_CASE("help is printed on request") {
  const CliResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Subcommands"));
  CHECK(contains(r.out, "verify-el"));
}

TEST_CASE("equal configurations give byte-identical output") {
  const std::vector<std::string> args = {
      "verify-el", "--d", "2",      "--n",      "4",
      "--ordering", "builtin",      "--report", "cli_rep.json"};
  const CliResult a = run_cli(args);
  const std::string rep_a = slurp("cli_rep.json");
  const CliResult b = run_cli(args);
  const std::string rep_b = slurp("cli_rep.json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(rep_a == rep_b);

  // The jobs knob changes scheduling only, never output.
  std::vector<std::string> jobs4 = args;
  jobs4.push_back("--jobs");
  jobs4.push_back("4");
  const CliResult c = run_cli(jobs4);
  const std::string rep_c = slurp("cli_rep.json");
  CHECK(c.out == a.out);
  CHECK(rep_c == rep_a);
  std::remove("cli_rep.json");
  std::remove("cli_nc33.json");
}

}  // TEST_SUITE

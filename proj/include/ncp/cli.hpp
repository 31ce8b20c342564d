#pragma once

// Command-line front end: argument parsing, file I/O, and reproducible run
// orchestration over the lattice, word, and shellability modules.
//
// Subcommands:
//   build        construct NC(d,n) or its m-divisible poset, write JSON
//   verify-el    check a label order for the EL property, write a report
//   search       seeded repair search for an EL order, write order + report
//   words        reduced words for the Coxeter element and the shift graph
//   mobius       Möbius number of the bounded m-divisible poset vs. formula
//   check-props  aggregate every lemma-level verification at one (d, n)
//
// Exit codes: 0 success / verdict true, 1 verdict false, 2 usage error,
// 3 internal invariant failure.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ncp {

enum class Command { Build, VerifyEl, Search, Words, Mobius, CheckProps };

// One fully parsed invocation.  Given equal configurations, a command
// writes byte-identical terminal output and files (the `jobs` knob changes
// scheduling only, never results).
struct RunConfig {
  Command command = Command::Build;
  int d = 0;
  int n = 0;
  int m = 1;
  // "builtin" or a text file: a reflection ordering when the poset is the
  // lattice built from (d, n), a label order (one display per line) when the
  // poset comes from --poset.
  std::string ordering = "builtin";
  std::uint64_t seed = 0;     // every randomized command prints its seed
  int trials = 0;             // check-props: random orders to sample
  int max_rounds = 2000;      // search: rounds per restart
  int restarts = 10;          // search: restarts before giving up
  int jobs = 1;               // verification worker threads
  bool force = false;         // override the size guard
  int size_guard = 5000;      // refuse posets above this many elements
  std::string poset_path;     // read this poset instead of building one
  std::string output;         // main output file (command-specific default)
  std::string dot_path;       // write a DOT rendering here when nonempty
  std::string report_path;    // EL report JSON (default "elreport.json")
};

// Executes one configuration, writing human-readable progress to `out`.
// Throws std::invalid_argument for input problems and invariant_error for
// internal failures; `run` maps those to exit codes 2 and 3.
int execute(const RunConfig& cfg, std::ostream& out);

// Parses command-line arguments (argv[0] excluded) and executes.  All
// diagnostics go to `out`; never throws.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace ncp

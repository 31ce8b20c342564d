// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Each criterion carries its own time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ncp/nc_lattice.hpp"
#include "ncp/notation.hpp"
#include "ncp/poset.hpp"
#include "ncp/reflection_order.hpp"
#include "ncp/shellability.hpp"
#include "ncp/words.hpp"

using namespace ncp;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void(std::string&)> check;  // throws or appends to `why`
};

void expect(bool ok, const std::string& what, std::string& why) {
  if (!ok) {
    if (!why.empty()) why += "; ";
    why += what;
  }
}

// 1. NC(3,3): 18 elements with rank sizes (1,8,8,1); 8 of the 9 reflections
//    lie below the Coxeter element, the excluded one being ((1^0 2^1)).
void criterion1(std::string& why) {
  const NCLattice lat = build_nc_lattice({3, 3});
  expect(lat.poset.size() == 18,
         "size " + std::to_string(lat.poset.size()) + " != 18", why);
  expect(lat.poset.rank_sizes() == std::vector<int>{1, 8, 8, 1},
         "rank sizes off", why);

  const std::vector<Reflection> formula =
      reflections_below_coxeter({3, 3}, TGammaMode::Formula);
  const std::vector<Reflection> brute =
      reflections_below_coxeter({3, 3}, TGammaMode::BruteForce);
  expect(formula == brute, "formula and brute-force T_gamma differ", why);
  expect(formula.size() == 8,
         "|T_gamma| = " + std::to_string(formula.size()) + " != 8", why);

  std::vector<Reflection> excluded;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      for (int s = 0; s < 3; ++s) {
        const Reflection r{i, j, s};
        if (std::find(formula.begin(), formula.end(), r) == formula.end())
          excluded.push_back(r);
      }
  expect(excluded.size() == 1, "exactly one reflection must be excluded",
         why);
  if (excluded.size() == 1)
    expect(render_reflection(excluded[0]) == "((1^0 2^1))",
           "excluded reflection is " + render_reflection(excluded[0]), why);
}

// 2. NC(e,2) has e+2 elements and e maximal chains for e in 2..12.
void criterion2(std::string& why) {
  for (int e = 2; e <= 12; ++e) {
    const NCLattice lat = build_nc_lattice({e, 2});
    expect(lat.poset.size() == e + 2,
           "e=" + std::to_string(e) + ": size != e+2", why);
    expect(lat.poset.maximal_chains().size() == static_cast<std::size_t>(e),
           "e=" + std::to_string(e) + ": maximal chains != e", why);
  }
}

// 3. Degree identities on d in 2..6, n in 2..5, plus the lattice size
//    against the closed form for every instance of at most 200 elements.
void criterion3(std::string& why) {
  for (int d = 2; d <= 6; ++d)
    for (int n = 2; n <= 5; ++n) {
      const GroupParams gp{d, n};
      const std::vector<int> deg = degrees(gp);
      long long sum = 0;
      mpz_class prod = 1;
      for (int x : deg) {
        sum += x;
        prod *= x;
      }
      const long long want_sum =
          static_cast<long long>(d) * n * (n - 1) / 2 + n;
      mpz_class want_prod = 1;
      for (int i = 1; i < n; ++i) want_prod *= d;
      for (int i = 2; i <= n; ++i) want_prod *= i;
      const std::string tag =
          "(" + std::to_string(d) + "," + std::to_string(n) + ")";
      expect(sum == want_sum, tag + ": degree sum identity", why);
      expect(prod == want_prod, tag + ": degree product identity", why);

      const mpz_class want_size = fuss_catalan(gp, 1);
      if (want_size <= 200) {
        const NCLattice lat = build_nc_lattice(gp);
        expect(mpz_class(lat.poset.size()) == want_size,
               tag + ": lattice size vs closed form", why);
      }
    }
  // The grid must include these three nontrivial instances.
  expect(fuss_catalan(GroupParams{2, 4}, 1) == 50, "(2,4) closed form", why);
  expect(fuss_catalan(GroupParams{3, 4}, 1) == 65, "(3,4) closed form", why);
  expect(fuss_catalan(GroupParams{4, 3}, 1) == 22, "(4,3) closed form", why);
}

// 4. The builtin compatible ordering is an EL-labeling for five lattices.
void criterion4(std::string& why) {
  for (const GroupParams gp :
       {GroupParams{2, 3}, GroupParams{3, 3}, GroupParams{4, 3},
        GroupParams{2, 4}, GroupParams{3, 4}}) {
    const NCLattice lat = build_nc_lattice(gp);
    const LabelOrder order =
        label_order_from_reflections(lat, compatible_ordering(gp));
    const ELReport rep = verify_el(lat.poset, order, 4);
    expect(rep.verdict,
           "(" + std::to_string(gp.d) + "," + std::to_string(gp.n) +
               "): verdict not EL",
           why);
  }
}

// 5. Under 20 seeded random label orders per lattice, the lex-least chain
//    of every interval is rising.
void criterion5(std::string& why) {
  for (const GroupParams gp :
       {GroupParams{2, 3}, GroupParams{3, 3}, GroupParams{2, 4}}) {
    const NCLattice lat = build_nc_lattice(gp);
    const LexLeastReport rep = verify_lex_least_always_rising(lat, 20, 0);
    expect(rep.trials == 20, "trial count", why);
    expect(rep.ok(),
           "(" + std::to_string(gp.d) + "," + std::to_string(gp.n) + "): " +
               std::to_string(rep.counterexamples.size()) +
               " counterexample(s)",
           why);
  }
}

// 6. G(3,3,3) has 24 reduced words for the Coxeter element; the left-shift
//    graph contains the arcs 168 -> 187 and 168 -> 628 and is connected
//    from the rising word (s_1, s_2, s_3).
void criterion6(std::string& why) {
  const NCLattice lat = build_nc_lattice({3, 3});
  const ReflectionOrdering ord = compatible_ordering({3, 3});
  const std::vector<ReducedWord> words = all_reduced_words(lat, lat.gamma);
  expect(words.size() == 24,
         std::to_string(words.size()) + " words != 24", why);

  const ShiftGraph g = build_shift_graph(words);
  expect(g.closed, "shift graph not closed", why);

  std::vector<std::string> names;
  for (const ReducedWord& w : g.nodes) names.push_back(word_node_name(w, ord));
  const auto has_arc = [&](const std::string& a, const std::string& b) {
    for (const auto& [x, y, pos] : g.arcs) {
      (void)pos;
      if (names[static_cast<std::size_t>(x)] == a &&
          names[static_cast<std::size_t>(y)] == b)
        return true;
    }
    return false;
  };
  expect(has_arc("168", "187"), "missing arc 168 -> 187", why);
  expect(has_arc("168", "628"), "missing arc 168 -> 628", why);

  int rising = -1;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (descent_inversion_sets(g.nodes[i], ord).descents.empty())
      rising = static_cast<int>(i);
  // The generator word (s_1, s_2, s_3) sits at ordering positions 1, 6, 8
  // and is the unique rising word.
  expect(rising >= 0, "no rising word", why);
  if (rising >= 0) {
    expect(names[static_cast<std::size_t>(rising)] == "168",
           "rising word is " + names[static_cast<std::size_t>(rising)], why);
    expect(reachable(g, rising).size() == g.nodes.size(),
           "not connected from the rising word", why);
  }
}

// 7. The shift lemmas hold exhaustively for (3,3), (2,4), (3,4).
void criterion7(std::string& why) {
  for (const GroupParams gp :
       {GroupParams{3, 3}, GroupParams{2, 4}, GroupParams{3, 4}}) {
    const ShiftLemmasReport rep = check_shift_lemmas(gp);
    expect(rep.ok(),
           "(" + std::to_string(gp.d) + "," + std::to_string(gp.n) + "): " +
               std::to_string(rep.counterexamples.size()) +
               " counterexample(s)",
           why);
  }
}

// 8. The labeling lemmas (distinct labels along chains, rank-2 exchange,
//    translation invariance) hold for (3,3) and (2,4).
void criterion8(std::string& why) {
  for (const GroupParams gp : {GroupParams{3, 3}, GroupParams{2, 4}}) {
    const LabelLemmasReport rep = verify_label_lemmas(build_nc_lattice(gp));
    expect(rep.ok(),
           "(" + std::to_string(gp.d) + "," + std::to_string(gp.n) +
               "): label lemmas fail",
           why);
  }
}

// 9. The m-divisible posets have the closed-form sizes, and the seeded
//    repair search finds a verifier-certified EL order for the bounded
//    2-divisible poset of (3,3) within its restart budget.
void criterion9(std::string& why) {
  const MDivisible md2 = build_m_divisible({3, 3}, 2);
  expect(md2.poset.size() == 75,
         "|NC^(2)| = " + std::to_string(md2.poset.size()) + " != 75", why);
  const MDivisible md3 = build_m_divisible({3, 3}, 3);
  expect(mpz_class(md3.poset.size()) == fuss_catalan(GroupParams{3, 3}, 3),
         "|NC^(3)| != closed form", why);
  expect(md3.poset.size() == 196, "|NC^(3)| != 196", why);

  const GradedPoset bounded = adjoin_bottom(md2.poset, false);
  const SearchResult res = el_search(bounded, 1, 2000, 10);
  expect(res.success, "search failed: " + res.note, why);
  expect(res.restarts_used <= 10, "restart budget exceeded", why);
  if (res.success) {
    const ELReport rep = verify_el(bounded, res.order, 4);
    expect(rep.verdict, "found order fails verification", why);
  }
}

// 10. The Möbius number of the bounded m-divisible poset matches the
//     closed form for (3,3) with m in {1,2} and (2,3) with m = 1; the
//     (3,3), m = 1 count is 9.
void criterion10(std::string& why) {
  try {
    const MobiusCorollaryReport a = verify_mobius_corollary({3, 3}, 1);
    expect(a.mu == a.formula, "(3,3) m=1: recursion != formula", why);
    expect(a.sphere_count == 9,
           "(3,3) m=1: count " + a.sphere_count.get_str() + " != 9", why);
    expect(a.sphere_dimension == 1, "(3,3) m=1: dimension != 1", why);
    const MobiusCorollaryReport b = verify_mobius_corollary({3, 3}, 2);
    expect(b.mu == b.formula, "(3,3) m=2: recursion != formula", why);
    const MobiusCorollaryReport c = verify_mobius_corollary({2, 3}, 1);
    expect(c.mu == c.formula, "(2,3) m=1: recursion != formula", why);
  } catch (const std::exception& e) {
    expect(false, std::string("mismatch: ") + e.what(), why);
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "NC(3,3) size, rank sizes, and the reflections below gamma", 1.0,
       criterion1},
      {2, "NC(e,2) sizes and maximal-chain counts for e in 2..12", 1.0,
       criterion2},
      {3, "degree identities and closed-form sizes on the (d,n) grid", 30.0,
       criterion3},
      {4, "EL verification with the builtin ordering on five lattices",
       180.0, criterion4},
      {5, "lex-least maximal chains rise under random label orders", 120.0,
       criterion5},
      {6, "reduced-word count and shift-graph arcs of G(3,3,3)", 1.0,
       criterion6},
      {7, "shift lemmas hold exhaustively", 120.0, criterion7},
      {8, "labeling lemmas hold", 60.0, criterion8},
      {9, "m-divisible sizes and the searched EL order", 180.0, criterion9},
      {10, "Moebius numbers match the closed form", 60.0, criterion10},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    std::string why;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.check(why);
    } catch (const std::exception& e) {
      if (!why.empty()) why += "; ";
      why += std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    if (why.empty() && elapsed > c.budget_seconds) {
      std::ostringstream os;
      os << "took " << elapsed << " s, budget " << c.budget_seconds << " s";
      why = os.str();
    }
    const bool ok = why.empty();
    failed += ok ? 0 : 1;
    std::printf("%s  criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL",
                c.number, c.title.c_str(), elapsed, ok ? "" : " -- ",
                why.c_str());
  }

  if (failed == 0) {
    std::printf("all %zu criteria pass\n", criteria.size());
    return 0;
  }
  std::printf("%d of %zu criteria FAILED\n", failed, criteria.size());
  return 1;
}

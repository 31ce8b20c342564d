// Tests for the graded-poset container on small hand-built diagrams.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "ncp/poset.hpp"

using namespace ncp;

namespace {

// 0 < {1,2} < 3 with labeled edges: the "diamond".
GradedPoset make_diamond() {
  GradedPoset p;
  const int bot = p.add_element(0, "bot");
  const int a = p.add_element(1, "a");
  const int b = p.add_element(1, "b");
  const int top = p.add_element(2, "top");
  const int la = p.add_label("A");
  const int lb = p.add_label("B");
  p.add_cover(bot, a, la);
  p.add_cover(bot, b, lb);
  p.add_cover(a, top, lb);
  p.add_cover(b, top, la);
  p.finalize();
  return p;
}

}  // namespace

TEST_SUITE("poset") {

TEST_CASE("diamond basics") {
  GradedPoset p = make_diamond();
  CHECK(p.size() == 4);
  CHECK(p.bottom() == 0);
  CHECK(p.top() == 3);
  CHECK(p.bounded());
  CHECK(p.max_rank() == 2);
  CHECK(p.rank_sizes() == std::vector<int>{1, 2, 1});
  CHECK(p.leq(0, 3));
  CHECK(p.leq(1, 3));
  CHECK_FALSE(p.leq(1, 2));
  CHECK_FALSE(p.leq(3, 0));
  CHECK(p.leq(2, 2));
  CHECK(p.minimal_elements() == std::vector<int>{0});
  CHECK(p.maximal_elements() == std::vector<int>{3});
  CHECK(p.up(0).size() == 2);
  CHECK(p.down(3).size() == 2);
  // Neighbor lists are sorted by (label, element).
  CHECK(p.up(0).front().second <= p.up(0).back().second);
}

TEST_CASE("chains in the diamond") {
  GradedPoset p = make_diamond();
  auto chains = p.maximal_chains();
  REQUIRE(chains.size() == 2);
  for (const auto& c : chains) {
    CHECK(c.elements.size() == 3);
    CHECK(c.labels.size() == 2);
    CHECK(c.elements.front() == 0);
    CHECK(c.elements.back() == 3);
  }
  // Label sequences are (A,B) and (B,A).
  std::set<std::vector<int>> seqs;
  for (const auto& c : chains) seqs.insert(c.labels);
  CHECK(seqs == std::set<std::vector<int>>{{0, 1}, {1, 0}});

  CHECK(p.chains_between(1, 2).empty());
  CHECK(p.chains_between(0, 0).empty());
  auto up_chains = p.chains_between(1, 3);
  REQUIRE(up_chains.size() == 1);
  CHECK(up_chains[0].labels == std::vector<int>{1});
}

TEST_CASE("for_each_chain_from visits every saturated chain once") {
  GradedPoset p = make_diamond();
  int count = 0;
  std::set<std::pair<int, std::vector<int>>> seen;
  p.for_each_chain_from(0, [&](int endpoint, const std::vector<int>& labels) {
    ++count;
    seen.insert({endpoint, labels});
  });
  // Chains from bot: ->a, ->b, ->a->top, ->b->top.
  CHECK(count == 4);
  CHECK(seen.count({1, {0}}) == 1);
  CHECK(seen.count({3, {0, 1}}) == 1);
  CHECK(seen.count({3, {1, 0}}) == 1);
}

TEST_CASE("interval extraction shares labels and reshifts ranks") {
  GradedPoset p = make_diamond();
  std::vector<int> orig;
  GradedPoset q = p.interval(1, 3, &orig);
  CHECK(q.size() == 2);
  CHECK(q.rank(0) == 0);
  CHECK(q.max_rank() == 1);
  CHECK(q.label_count() == p.label_count());
  REQUIRE(orig.size() == 2);
  CHECK(orig[0] == 1);
  CHECK(orig[1] == 3);
  CHECK(q.display(0) == "a");
  // Interval of incomparable elements is empty -> throws.
  CHECK_THROWS_AS((void)p.interval(1, 2), std::invalid_argument);
}

TEST_CASE("finalize rejects malformed diagrams") {
  {
    GradedPoset p;
    const int x = p.add_element(0, "x");
    const int y = p.add_element(2, "y");
    p.add_cover(x, y);
    CHECK_THROWS_AS(p.finalize(), invariant_error);  // rank jump of 2
  }
  {
    GradedPoset p;
    const int x = p.add_element(0, "x");
    const int y = p.add_element(1, "y");
    p.add_cover(x, y);
    p.add_cover(x, y);
    CHECK_THROWS_AS(p.finalize(), invariant_error);  // duplicate cover
  }
  {
    GradedPoset p;
    (void)p.add_element(0, "x");
    CHECK_THROWS_AS(p.add_cover(0, 5), std::out_of_range);  // unknown id
  }
  {
    GradedPoset p;
    const int x = p.add_element(0, "x");
    const int y = p.add_element(1, "y");
    p.add_cover(x, y, 7);
    CHECK_THROWS_AS(p.finalize(), invariant_error);  // label id out of range
  }
}

TEST_CASE("queries before finalize are rejected") {
  GradedPoset p;
  (void)p.add_element(0, "x");
  CHECK_FALSE(p.finalized());
  CHECK_THROWS_AS((void)p.leq(0, 0), invariant_error);
  CHECK_THROWS_AS((void)p.maximal_chains(), invariant_error);
}

TEST_CASE("adjoin_bottom without dropping") {
  GradedPoset p = make_diamond();
  GradedPoset q = adjoin_bottom(p, false);
  CHECK(q.size() == 5);
  CHECK(q.bottom() == 0);
  CHECK(q.rank(q.bottom()) == 0);
  CHECK(q.max_rank() == 3);
  CHECK(q.rank_sizes() == std::vector<int>{1, 1, 2, 1});
  // One new cover from the new bottom to the old minimum, freshly labeled.
  REQUIRE(q.up(q.bottom()).size() == 1);
  const int lab = q.up(q.bottom()).front().second;
  CHECK(q.label_display(lab) == "bot:bot");
}

TEST_CASE("adjoin_bottom with dropping replaces the minima") {
  GradedPoset p = make_diamond();
  GradedPoset q = adjoin_bottom(p, true);
  // Old bottom removed, new one covers a and b.
  CHECK(q.size() == 4);
  CHECK(q.rank_sizes() == std::vector<int>{1, 2, 1});
  REQUIRE(q.up(q.bottom()).size() == 2);
  std::set<std::string> labels;
  for (const auto& e : q.up(q.bottom()))
    labels.insert(q.label_display(e.second));
  CHECK(labels == std::set<std::string>{"bot:a", "bot:b"});
  CHECK(q.maximal_chains().size() == 2);

  // Dropping everything is an error.
  GradedPoset single;
  (void)single.add_element(0, "only");
  single.finalize();
  CHECK_THROWS_AS((void)adjoin_bottom(single, true), std::invalid_argument);
}

TEST_CASE("singleton poset has one empty maximal chain") {
  GradedPoset p;
  (void)p.add_element(0, "only");
  p.finalize();
  CHECK(p.bounded());
  auto chains = p.maximal_chains();
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].elements == std::vector<int>{0});
  CHECK(chains[0].labels.empty());
}

}  // TEST_SUITE

#pragma once

// A finite graded poset presented by its Hasse diagram.  Elements are dense
// integer ids with explicit ranks and display strings; covers may carry a
// label id into a shared label table.  Every cover must raise rank by
// exactly one.  After finalize() the structure is immutable and supports
// order queries, interval extraction and saturated-chain enumeration.

#include <functional>
#include <string>
#include <vector>

#include "ncp/group.hpp"  // for invariant_error

namespace ncp {

struct CoverRelation {
  int lower = -1;
  int upper = -1;
  int label = -1;  // -1 when unlabeled

  bool operator==(const CoverRelation& o) const {
    return lower == o.lower && upper == o.upper && label == o.label;
  }
};

class GradedPoset {
 public:
  // -- construction ---------------------------------------------------------
  int add_element(int rank, std::string display);
  int add_label(std::string display);
  void add_cover(int lower, int upper, int label = -1);

  // Validates ranks/covers, builds adjacency and reachability, and detects
  // the top/bottom elements.  Throws invariant_error on a malformed diagram.
  void finalize();

  // -- queries (finalized poset only) ---------------------------------------
  int size() const { return static_cast<int>(rank_.size()); }
  int rank(int v) const { return rank_[static_cast<std::size_t>(v)]; }
  const std::string& display(int v) const {
    return display_[static_cast<std::size_t>(v)];
  }
  const std::vector<CoverRelation>& covers() const { return covers_; }
  int label_count() const { return static_cast<int>(labels_.size()); }
  const std::string& label_display(int id) const {
    return labels_[static_cast<std::size_t>(id)];
  }
  const std::vector<std::string>& labels() const { return labels_; }

  int top() const { return top_; }        // -1 when there is no maximum
  int bottom() const { return bottom_; }  // -1 when there is no minimum
  bool bounded() const { return top_ >= 0 && bottom_ >= 0; }
  int max_rank() const { return max_rank_; }
  std::vector<int> rank_sizes() const;

  bool leq(int a, int b) const;

  // Neighbors as (element, label) pairs, sorted by (label, element).
  const std::vector<std::pair<int, int>>& up(int v) const {
    return up_[static_cast<std::size_t>(v)];
  }
  const std::vector<std::pair<int, int>>& down(int v) const {
    return down_[static_cast<std::size_t>(v)];
  }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  // -- chains ----------------------------------------------------------------
  struct Chain {
    std::vector<int> elements;  // saturated: u = e_0 < e_1 < ... < e_k = v
    std::vector<int> labels;    // k label ids (-1 entries when unlabeled)
  };

  // All saturated chains from u to v (empty when u = v or incomparable).
  std::vector<Chain> chains_between(int u, int v) const;

  // All bottom-to-top saturated chains; requires a bounded poset.
  std::vector<Chain> maximal_chains() const;

  // Visits every saturated chain of length >= 1 starting at u, for every
  // reachable endpoint; this enumerates the maximal chains of all intervals
  // [u, x] in a single sweep.
  void for_each_chain_from(
      int u, const std::function<void(int endpoint,
                                      const std::vector<int>& labels)>& fn)
      const;

  // The induced subposet on {z : u <= z <= v}, ranks shifted so u has rank
  // 0.  The label table is shared unchanged.  original_ids receives, for
  // each new element id, the id in this poset.
  GradedPoset interval(int u, int v,
                       std::vector<int>* original_ids = nullptr) const;

  bool finalized() const { return finalized_; }

 private:
  void check_finalized() const;

  std::vector<int> rank_;
  std::vector<std::string> display_;
  std::vector<CoverRelation> covers_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<int, int>>> up_, down_;
  std::vector<std::vector<bool>> leq_;
  int top_ = -1, bottom_ = -1, max_rank_ = 0;
  bool finalized_ = false;
};

// A copy of p with a new minimum adjoined.  When drop_minima is set, the
// existing minimal elements are removed first (their covers with them).
// Each new bottom cover gets a fresh label "bot:" + display of the covered
// element.  Ranks are shifted so the new bottom has rank 0 and the old
// elements start at rank 1.
GradedPoset adjoin_bottom(const GradedPoset& p, bool drop_minima);

}  // namespace ncp

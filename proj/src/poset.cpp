#include "ncp/poset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncp {

int GradedPoset::add_element(int rank, std::string display) {
  if (finalized_) throw invariant_error("GradedPoset: already finalized");
  if (rank < 0) throw std::invalid_argument("GradedPoset: negative rank");
  rank_.push_back(rank);
  display_.push_back(std::move(display));
  return static_cast<int>(rank_.size()) - 1;
}

int GradedPoset::add_label(std::string display) {
  if (finalized_) throw invariant_error("GradedPoset: already finalized");
  labels_.push_back(std::move(display));
  return static_cast<int>(labels_.size()) - 1;
}

void GradedPoset::add_cover(int lower, int upper, int label) {
  if (finalized_) throw invariant_error("GradedPoset: already finalized");
  if (lower < 0 || lower >= size() || upper < 0 || upper >= size())
    throw std::out_of_range("GradedPoset::add_cover: unknown element id");
  covers_.push_back({lower, upper, label});
}

void GradedPoset::finalize() {
  if (finalized_) throw invariant_error("GradedPoset: already finalized");
  const int n = size();
  if (n == 0) throw invariant_error("GradedPoset: empty");

  up_.assign(static_cast<std::size_t>(n), {});
  down_.assign(static_cast<std::size_t>(n), {});
  std::vector<std::pair<int, int>> seen;
  for (const CoverRelation& c : covers_) {
    if (c.lower < 0 || c.lower >= n || c.upper < 0 || c.upper >= n)
      throw invariant_error("GradedPoset: cover references unknown element");
    if (c.label < -1 || c.label >= label_count())
      throw invariant_error("GradedPoset: cover references unknown label");
    if (rank(c.upper) != rank(c.lower) + 1)
      throw invariant_error(
          "GradedPoset: cover does not raise rank by one (" +
          display(c.lower) + " -> " + display(c.upper) + ")");
    seen.emplace_back(c.lower, c.upper);
    up_[static_cast<std::size_t>(c.lower)].emplace_back(c.upper, c.label);
    down_[static_cast<std::size_t>(c.upper)].emplace_back(c.lower, c.label);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw invariant_error("GradedPoset: duplicate cover relation");
  auto by_label = [](const std::pair<int, int>& a,
                     const std::pair<int, int>& b) {
    return std::make_pair(a.second, a.first) <
           std::make_pair(b.second, b.first);
  };
  for (auto& v : up_) std::sort(v.begin(), v.end(), by_label);
  for (auto& v : down_) std::sort(v.begin(), v.end(), by_label);

  max_rank_ = *std::max_element(rank_.begin(), rank_.end());

  // Reachability by decreasing rank: leq_[a] collects everything above a.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return rank(a) > rank(b); });
  leq_.assign(static_cast<std::size_t>(n),
              std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int v : order) {
    auto& row = leq_[static_cast<std::size_t>(v)];
    row[static_cast<std::size_t>(v)] = true;
    for (const auto& edge : up_[static_cast<std::size_t>(v)]) {
      const auto& wrow = leq_[static_cast<std::size_t>(edge.first)];
      for (int i = 0; i < n; ++i)
        if (wrow[static_cast<std::size_t>(i)])
          row[static_cast<std::size_t>(i)] = true;
    }
  }

  finalized_ = true;
  auto mins = minimal_elements();
  auto maxs = maximal_elements();
  bottom_ = mins.size() == 1 ? mins.front() : -1;
  top_ = maxs.size() == 1 ? maxs.front() : -1;
}

void GradedPoset::check_finalized() const {
  if (!finalized_) throw invariant_error("GradedPoset: not finalized");
}

std::vector<int> GradedPoset::rank_sizes() const {
  check_finalized();
  std::vector<int> out(static_cast<std::size_t>(max_rank_) + 1, 0);
  for (int r : rank_) ++out[static_cast<std::size_t>(r)];
  return out;
}

bool GradedPoset::leq(int a, int b) const {
  check_finalized();
  return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

std::vector<int> GradedPoset::minimal_elements() const {
  check_finalized();
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (down_[static_cast<std::size_t>(v)].empty()) out.push_back(v);
  return out;
}

std::vector<int> GradedPoset::maximal_elements() const {
  check_finalized();
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (up_[static_cast<std::size_t>(v)].empty()) out.push_back(v);
  return out;
}

std::vector<GradedPoset::Chain> GradedPoset::chains_between(int u,
                                                            int v) const {
  check_finalized();
  std::vector<Chain> out;
  if (u == v || !leq(u, v)) return out;
  Chain cur;
  cur.elements.push_back(u);
  std::function<void(int)> dfs = [&](int x) {
    if (x == v) {
      out.push_back(cur);
      return;
    }
    for (const auto& [w, lab] : up_[static_cast<std::size_t>(x)]) {
      if (!leq(w, v)) continue;
      cur.elements.push_back(w);
      cur.labels.push_back(lab);
      dfs(w);
      cur.elements.pop_back();
      cur.labels.pop_back();
    }
  };
  dfs(u);
  return out;
}

std::vector<GradedPoset::Chain> GradedPoset::maximal_chains() const {
  check_finalized();
  if (!bounded())
    throw std::invalid_argument(
        "maximal_chains: poset has no unique bottom/top");
  if (size() == 1) {
    Chain c;
    c.elements.push_back(bottom_);
    return {c};
  }
  return chains_between(bottom_, top_);
}

void GradedPoset::for_each_chain_from(
    int u, const std::function<void(int, const std::vector<int>&)>& fn)
    const {
  check_finalized();
  std::vector<int> labels;
  std::function<void(int)> dfs = [&](int x) {
    for (const auto& [w, lab] : up_[static_cast<std::size_t>(x)]) {
      labels.push_back(lab);
      fn(w, labels);
      dfs(w);
      labels.pop_back();
    }
  };
  dfs(u);
}

GradedPoset GradedPoset::interval(int u, int v,
                                  std::vector<int>* original_ids) const {
  check_finalized();
  if (!leq(u, v))
    throw std::invalid_argument("interval: endpoints are not comparable");
  GradedPoset out;
  std::vector<int> fwd(static_cast<std::size_t>(size()), -1);
  std::vector<int> orig;
  for (int z = 0; z < size(); ++z) {
    if (!leq(u, z) || !leq(z, v)) continue;
    fwd[static_cast<std::size_t>(z)] =
        out.add_element(rank(z) - rank(u), display(z));
    orig.push_back(z);
  }
  for (const std::string& l : labels_) out.add_label(l);
  for (const CoverRelation& c : covers_) {
    int a = fwd[static_cast<std::size_t>(c.lower)];
    int b = fwd[static_cast<std::size_t>(c.upper)];
    if (a >= 0 && b >= 0) out.add_cover(a, b, c.label);
  }
  out.finalize();
  if (original_ids) *original_ids = std::move(orig);
  return out;
}

GradedPoset adjoin_bottom(const GradedPoset& p, bool drop_minima) {
  if (!p.finalized()) throw invariant_error("adjoin_bottom: not finalized");
  std::vector<bool> dropped(static_cast<std::size_t>(p.size()), false);
  if (drop_minima)
    for (int v : p.minimal_elements())
      dropped[static_cast<std::size_t>(v)] = true;

  int min_rank = -1;
  for (int v = 0; v < p.size(); ++v)
    if (!dropped[static_cast<std::size_t>(v)] &&
        (min_rank < 0 || p.rank(v) < min_rank))
      min_rank = p.rank(v);
  if (min_rank < 0)
    throw std::invalid_argument("adjoin_bottom: nothing left after drop");
  const int shift = 1 - min_rank;

  GradedPoset out;
  int bottom = out.add_element(0, "hat0");
  std::vector<int> fwd(static_cast<std::size_t>(p.size()), -1);
  for (int v = 0; v < p.size(); ++v)
    if (!dropped[static_cast<std::size_t>(v)])
      fwd[static_cast<std::size_t>(v)] =
          out.add_element(p.rank(v) + shift, p.display(v));
  for (int id = 0; id < p.label_count(); ++id)
    out.add_label(p.label_display(id));
  for (const CoverRelation& c : p.covers()) {
    int a = fwd[static_cast<std::size_t>(c.lower)];
    int b = fwd[static_cast<std::size_t>(c.upper)];
    if (a >= 0 && b >= 0) out.add_cover(a, b, c.label);
  }
  // fresh per-minimum labels below the (new) minimal layer
  for (int v = 0; v < p.size(); ++v) {
    if (dropped[static_cast<std::size_t>(v)]) continue;
    bool now_minimal = true;
    for (const auto& edge : p.down(v))
      if (!dropped[static_cast<std::size_t>(edge.first)]) now_minimal = false;
    if (!now_minimal) continue;
    int lab = out.add_label("bot:" + p.display(v));
    out.add_cover(bottom, fwd[static_cast<std::size_t>(v)], lab);
  }
  out.finalize();
  return out;
}

}  // namespace ncp

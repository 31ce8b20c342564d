#include "ncp/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace ncp {

void GroupParams::validate() const {
  if (d < 2) throw std::invalid_argument("GroupParams: d must be >= 2");
  if (n < 2) throw std::invalid_argument("GroupParams: n must be >= 2");
  if (n > kMaxRank)
    throw std::invalid_argument("GroupParams: rank n exceeds supported bound " +
                                std::to_string(kMaxRank));
  if (d > kMaxColors)
    throw std::invalid_argument("GroupParams: d exceeds supported bound " +
                                std::to_string(kMaxColors));
}

ColoredPermutation ColoredPermutation::checked(const GroupParams& p,
                                               std::vector<int> image,
                                               std::vector<int> colors) {
  p.validate();
  const std::size_t n = static_cast<std::size_t>(p.n);
  if (image.size() != n || colors.size() != n)
    throw std::invalid_argument("ColoredPermutation: wrong vector length");
  std::vector<bool> seen(n, false);
  int color_sum = 0;
  std::vector<std::uint8_t> im(n), co(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (image[i] < 1 || image[i] > p.n)
      throw std::invalid_argument("ColoredPermutation: image out of range");
    if (seen[static_cast<std::size_t>(image[i] - 1)])
      throw std::invalid_argument("ColoredPermutation: image not injective");
    seen[static_cast<std::size_t>(image[i] - 1)] = true;
    if (colors[i] < 0 || colors[i] >= p.d)
      throw std::invalid_argument("ColoredPermutation: color out of range");
    color_sum += colors[i];
    im[i] = static_cast<std::uint8_t>(image[i]);
    co[i] = static_cast<std::uint8_t>(colors[i]);
  }
  if (color_sum % p.d != 0)
    throw std::invalid_argument(
        "ColoredPermutation: color sum must be 0 mod d");
  return ColoredPermutation(p, std::move(im), std::move(co));
}

void ColoredPermutation::validate() const {
  std::vector<int> im(image_.begin(), image_.end());
  std::vector<int> co(color_.begin(), color_.end());
  (void)checked(params_, im, co);  // throws on any violation
}

ElemKey ColoredPermutation::key() const {
  std::uint64_t a = 0, b = 0;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    a |= static_cast<std::uint64_t>(image_[i]) << (8 * i);
    b |= static_cast<std::uint64_t>(color_[i]) << (8 * i);
  }
  return {a, b};
}

ColoredPermutation identity(const GroupParams& p) {
  p.validate();
  std::vector<std::uint8_t> im(static_cast<std::size_t>(p.n));
  std::vector<std::uint8_t> co(static_cast<std::size_t>(p.n), 0);
  std::iota(im.begin(), im.end(), std::uint8_t{1});
  return ColoredPermutation(p, std::move(im), std::move(co));
}

ColoredPermutation compose(const ColoredPermutation& u,
                           const ColoredPermutation& v) {
  if (u.params() != v.params())
    throw std::invalid_argument("compose: parameter mismatch");
  const int n = u.rank();
  const int d = u.params().d;
  std::vector<std::uint8_t> im(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> co(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int mid = v.image(i);
    im[static_cast<std::size_t>(i - 1)] =
        static_cast<std::uint8_t>(u.image(mid));
    co[static_cast<std::size_t>(i - 1)] =
        static_cast<std::uint8_t>((v.color(i) + u.color(mid)) % d);
  }
  return ColoredPermutation(u.params(), std::move(im), std::move(co));
}

ColoredPermutation inverse(const ColoredPermutation& w) {
  const int n = w.rank();
  const int d = w.params().d;
  std::vector<std::uint8_t> im(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> co(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int j = w.image(i);
    im[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>(i);
    co[static_cast<std::size_t>(j - 1)] =
        static_cast<std::uint8_t>((d - w.color(i)) % d);
  }
  return ColoredPermutation(w.params(), std::move(im), std::move(co));
}

std::vector<Cycle> cycle_decomposition(const ColoredPermutation& w) {
  const int n = w.rank();
  const int d = w.params().d;
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  std::vector<Cycle> out;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    Cycle c;
    int cur = start;
    int col = 0;
    do {
      visited[static_cast<std::size_t>(cur)] = true;
      c.entries.push_back({cur, ((col % d) + d) % d});
      col += w.color(cur);
      cur = w.image(cur);
    } while (cur != start);
    const int shift = ((col % d) + d) % d;
    c.bracket = shift != 0;
    c.shift = shift;
    out.push_back(std::move(c));
  }
  return out;
}

ColoredPermutation from_cycles(const GroupParams& p,
                               const std::vector<Cycle>& cycles) {
  p.validate();
  const std::size_t n = static_cast<std::size_t>(p.n);
  std::vector<std::uint8_t> im(n), co(n, 0);
  std::iota(im.begin(), im.end(), std::uint8_t{1});
  std::vector<bool> used(n + 1, false);
  int total_shift = 0;
  for (const Cycle& c : cycles) {
    if (c.entries.empty())
      throw std::invalid_argument("from_cycles: empty cycle");
    if (c.bracket ? (c.shift < 1 || c.shift >= p.d) : (c.shift != 0))
      throw std::invalid_argument("from_cycles: bad cycle shift");
    total_shift += c.shift;
    const std::size_t k = c.entries.size();
    for (std::size_t a = 0; a < k; ++a) {
      const ColoredInteger& e = c.entries[a];
      if (e.index < 1 || e.index > p.n)
        throw std::invalid_argument("from_cycles: index out of range");
      if (used[static_cast<std::size_t>(e.index)])
        throw std::invalid_argument("from_cycles: overlapping cycles");
      used[static_cast<std::size_t>(e.index)] = true;
      const ColoredInteger& next = c.entries[(a + 1) % k];
      const int wrap = (a + 1 == k) ? c.shift : 0;
      im[static_cast<std::size_t>(e.index - 1)] =
          static_cast<std::uint8_t>(next.index);
      co[static_cast<std::size_t>(e.index - 1)] = static_cast<std::uint8_t>(
          (((next.color + wrap - e.color) % p.d) + p.d) % p.d);
    }
  }
  if (total_shift % p.d != 0)
    throw std::invalid_argument(
        "from_cycles: cycle shifts must sum to 0 mod d");
  return ColoredPermutation(p, std::move(im), std::move(co));
}

int fixed_space_dim(const ColoredPermutation& w) {
  int dim = 0;
  for (const Cycle& c : cycle_decomposition(w))
    if (!c.bracket) ++dim;
  return dim;
}

ColoredPermutation reflection_element(const GroupParams& p,
                                      const Reflection& r) {
  if (r.i < 1 || r.i >= r.j || r.j > p.n || r.s < 0 || r.s >= p.d)
    throw std::invalid_argument("reflection_element: bad reflection");
  Cycle c;
  c.entries = {{r.i, 0}, {r.j, r.s}};
  return from_cycles(p, {c});
}

std::optional<Reflection> classify_reflection(const ColoredPermutation& w) {
  std::optional<Reflection> found;
  for (const Cycle& c : cycle_decomposition(w)) {
    if (!c.bracket && c.entries.size() == 1) continue;  // fixed point
    if (c.bracket || c.entries.size() != 2 || found) return std::nullopt;
    found = Reflection{c.entries[0].index, c.entries[1].index,
                       c.entries[1].color};
  }
  return found;
}

std::vector<Reflection> all_reflections(const GroupParams& p) {
  p.validate();
  std::vector<Reflection> out;
  out.reserve(static_cast<std::size_t>(p.d * p.n * (p.n - 1) / 2));
  for (int i = 1; i < p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j)
      for (int s = 0; s < p.d; ++s) out.push_back({i, j, s});
  return out;
}

std::vector<Reflection> simple_reflections(const GroupParams& p) {
  p.validate();
  std::vector<Reflection> out;
  for (int k = 1; k < p.n; ++k) out.push_back({k, k + 1, 0});
  out.push_back({p.n - 1, p.n, 1});
  return out;
}

ColoredPermutation coxeter_element(const GroupParams& p) {
  p.validate();
  Cycle big;
  big.bracket = true;
  big.shift = 1;
  for (int i = 1; i < p.n; ++i) big.entries.push_back({i, 0});
  Cycle last;
  last.bracket = true;
  last.shift = p.d - 1;
  last.entries = {{p.n, 0}};
  return from_cycles(p, {big, last});
}

std::vector<std::array<int, 3>> matrix_entries(const ColoredPermutation& w) {
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= w.rank(); ++i)
    out.push_back({w.image(i), i, w.color(i)});
  return out;
}

Group::Group(const GroupParams& p)
    : params_(p),
      reflections_(all_reflections(p)),
      coxeter_(coxeter_element(p)) {
  std::uint64_t order = 1;
  for (int i = 2; i <= p.n; ++i) order *= static_cast<std::uint64_t>(i);
  for (int i = 1; i < p.n; ++i) {
    order *= static_cast<std::uint64_t>(p.d);
    if (order > kMaxGroupOrder)
      throw std::invalid_argument("Group: order exceeds supported bound " +
                                  std::to_string(kMaxGroupOrder));
  }
  if (order > kMaxGroupOrder)
    throw std::invalid_argument("Group: order exceeds supported bound " +
                                std::to_string(kMaxGroupOrder));
  order_ = order;

  std::vector<ColoredPermutation> refl_elems;
  refl_elems.reserve(reflections_.size());
  for (const Reflection& r : reflections_)
    refl_elems.push_back(reflection_element(p, r));

  elements_.reserve(order_);
  elements_.push_back(identity(p));
  length_.emplace(elements_.front().key(), 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    const int len = length_.at(elements_[head].key());
    for (const ColoredPermutation& t : refl_elems) {
      ColoredPermutation next = compose(elements_[head], t);
      if (length_.emplace(next.key(), len + 1).second)
        elements_.push_back(std::move(next));
    }
  }
  if (length_.size() != order_)
    throw invariant_error("Group: reflection closure has wrong order");
}

std::shared_ptr<const Group> Group::get(const GroupParams& p) {
  p.validate();
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Group>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p.d, p.n});
  if (it != cache.end()) return it->second;
  auto g = std::shared_ptr<const Group>(new Group(p));
  cache.emplace(std::make_pair(p.d, p.n), g);
  return g;
}

int Group::length(const ColoredPermutation& w) const {
  if (w.params() != params_)
    throw std::invalid_argument("Group::length: parameter mismatch");
  auto it = length_.find(w.key());
  if (it == length_.end())
    throw invariant_error("Group::length: element not in group");
  return it->second;
}

bool Group::leq(const ColoredPermutation& u,
                const ColoredPermutation& v) const {
  return length(v) == length(u) + length(compose(inverse(u), v));
}

int abs_length(const ColoredPermutation& w) {
  return Group::get(w.params())->length(w);
}

bool abs_leq(const ColoredPermutation& u, const ColoredPermutation& v) {
  if (u.params() != v.params())
    throw std::invalid_argument("abs_leq: parameter mismatch");
  return Group::get(u.params())->leq(u, v);
}

}  // namespace ncp

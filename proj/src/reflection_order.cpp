#include "ncp/reflection_order.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ncp/nc_lattice.hpp"
#include "ncp/notation.hpp"

namespace ncp {

std::vector<Reflection> reflections_below_coxeter(const GroupParams& p,
                                                  TGammaMode mode) {
  p.validate();
  std::vector<Reflection> out;
  if (mode == TGammaMode::Formula) {
    for (const Reflection& r : all_reflections(p))
      if (below_coxeter(p, r)) out.push_back(r);
  } else {
    auto g = Group::get(p);
    for (const Reflection& r : all_reflections(p))
      if (g->leq(reflection_element(p, r), g->coxeter())) out.push_back(r);
  }
  return out;
}

bool below_coxeter(const GroupParams& p, const Reflection& r) {
  return !(r.j < p.n && 1 <= r.s && r.s <= p.d - 2);
}

int ReflectionOrdering::pack(const Reflection& r) const {
  return ((r.i - 1) * params_.n + (r.j - 1)) * params_.d + r.s;
}

ReflectionOrdering::ReflectionOrdering(const GroupParams& p,
                                       std::vector<Reflection> order)
    : params_(p), order_(std::move(order)) {
  p.validate();
  auto expected = reflections_below_coxeter(p, TGammaMode::Formula);
  auto sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != expected)
    throw std::invalid_argument(
        "ReflectionOrdering: not a permutation of the reflections below "
        "gamma");
  pos_.assign(static_cast<std::size_t>(p.n * p.n * p.d), -1);
  for (std::size_t k = 0; k < order_.size(); ++k)
    pos_[static_cast<std::size_t>(pack(order_[k]))] = static_cast<int>(k) + 1;
}

int ReflectionOrdering::position(const Reflection& r) const {
  if (r.i < 1 || r.i >= r.j || r.j > params_.n || r.s < 0 || r.s >= params_.d)
    throw std::invalid_argument("ReflectionOrdering: malformed reflection");
  int p = pos_[static_cast<std::size_t>(pack(r))];
  if (p < 0)
    throw std::invalid_argument("ReflectionOrdering: " +
                                render_reflection(r) +
                                " is not below gamma");
  return p;
}

bool ReflectionOrdering::contains(const Reflection& r) const {
  if (r.i < 1 || r.i >= r.j || r.j > params_.n || r.s < 0 || r.s >= params_.d)
    return false;
  return pos_[static_cast<std::size_t>(pack(r))] > 0;
}

ReflectionOrdering compatible_ordering(const GroupParams& p) {
  p.validate();
  std::vector<Reflection> ord;
  for (int i = 1; i < p.n - 1; ++i)
    for (int j = i + 1; j < p.n; ++j) ord.push_back({i, j, 0});
  for (int i = 1; i < p.n; ++i) {
    ord.push_back({i, p.n, 0});
    for (int s = p.d - 1; s >= 1; --s) ord.push_back({i, p.n, s});
    for (int j = i + 1; j < p.n; ++j) ord.push_back({i, j, p.d - 1});
  }
  return ReflectionOrdering(p, std::move(ord));
}

namespace {

// Tops (as lattice ids) of the rank-2 intervals generated by non-commuting
// pairs of reflections below gamma.
std::vector<int> rank2_tops(const NCLattice& lat) {
  const int N = lat.poset.size();
  std::vector<int> atom_ids;
  for (int v = 0; v < N; ++v)
    if (lat.poset.rank(v) == 1) atom_ids.push_back(v);

  std::set<int> tops;
  for (std::size_t a = 0; a < atom_ids.size(); ++a)
    for (std::size_t b = a + 1; b < atom_ids.size(); ++b) {
      const auto& ea = lat.elements[static_cast<std::size_t>(atom_ids[a])];
      const auto& eb = lat.elements[static_cast<std::size_t>(atom_ids[b])];
      if (compose(ea, eb) == compose(eb, ea)) continue;  // commuting
      // join in the lattice
      std::vector<int> ub;
      for (int z = 0; z < N; ++z)
        if (lat.poset.leq(atom_ids[a], z) && lat.poset.leq(atom_ids[b], z))
          ub.push_back(z);
      if (ub.empty())
        throw invariant_error("rank2_tops: pair with no upper bound");
      int join = ub[0];
      for (int z : ub)
        if (lat.poset.rank(z) < lat.poset.rank(join)) join = z;
      for (int z : ub)
        if (!lat.poset.leq(join, z))
          throw invariant_error("rank2_tops: join is not unique");
      if (lat.poset.rank(join) == 2) tops.insert(join);
    }
  return {tops.begin(), tops.end()};
}

std::vector<int> atoms_below(const NCLattice& lat, int top) {
  std::vector<int> out;
  for (int v = 0; v < lat.poset.size(); ++v)
    if (lat.poset.rank(v) == 1 && lat.poset.leq(v, top)) out.push_back(v);
  return out;
}

}  // namespace

GammaCompatibilityReport is_gamma_compatible(const ReflectionOrdering& ord) {
  NCLattice lat = build_nc_lattice(ord.params());
  GammaCompatibilityReport rep;
  rep.compatible = true;
  rep.readings_agree = true;

  for (int top : rank2_tops(lat)) {
    std::vector<int> atoms = atoms_below(lat, top);
    int inc_below = 0, inc_equal = 0;
    for (int a : atoms)
      for (int b : atoms) {
        if (a == b) continue;
        auto prod = compose(lat.elements[static_cast<std::size_t>(a)],
                            lat.elements[static_cast<std::size_t>(b)]);
        bool below = lat.group->leq(prod, lat.gamma);
        bool equal = prod == lat.elements[static_cast<std::size_t>(top)];
        if (below != equal) rep.readings_agree = false;
        auto ra = classify_reflection(lat.elements[static_cast<std::size_t>(a)]);
        auto rb = classify_reflection(lat.elements[static_cast<std::size_t>(b)]);
        if (!ra || !rb)
          throw invariant_error("is_gamma_compatible: atom not a reflection");
        bool rising = ord.position(*ra) < ord.position(*rb);
        if (below && rising) ++inc_below;
        if (equal && rising) ++inc_equal;
      }
    ++rep.intervals_checked;
    if (inc_below != 1 || inc_equal != 1) {
      rep.compatible = false;
      GammaCompatibilityReport::Violation v;
      v.top = lat.poset.display(top);
      for (int a : atoms)
        v.atoms.push_back(
            *classify_reflection(lat.elements[static_cast<std::size_t>(a)]));
      v.increasing_pairs = inc_below;
      rep.violations.push_back(std::move(v));
    }
  }
  return rep;
}

std::vector<Rank2Family> rank2_interval_families(const GroupParams& p) {
  NCLattice lat = build_nc_lattice(p);
  const int d = p.d, n = p.n;
  std::vector<Rank2Family> out;

  for (int top : rank2_tops(lat)) {
    std::vector<Reflection> atoms;
    for (int a : atoms_below(lat, top)) {
      auto r = classify_reflection(lat.elements[static_cast<std::size_t>(a)]);
      if (!r)
        throw invariant_error("rank2_interval_families: atom not a reflection");
      atoms.push_back(*r);
    }
    std::sort(atoms.begin(), atoms.end());

    auto is_set = [&](std::vector<Reflection> want) {
      std::sort(want.begin(), want.end());
      return atoms == want;
    };

    std::vector<int> matches;
    if (atoms.size() == 3) {
      std::set<int> idx;
      for (const Reflection& r : atoms) {
        idx.insert(r.i);
        idx.insert(r.j);
      }
      if (idx.size() == 3) {
        std::vector<int> v(idx.begin(), idx.end());
        int i = v[0], j = v[1], k = v[2];
        if (k < n) {
          if (is_set({{i, j, 0}, {j, k, 0}, {i, k, 0}})) matches.push_back(1);
          if (is_set({{j, k, 0}, {i, j, d - 1}, {i, k, d - 1}}))
            matches.push_back(2);
          if (is_set({{i, j, 0}, {i, k, d - 1}, {j, k, d - 1}}))
            matches.push_back(3);
        }
        if (k == n && j < n) {
          for (int s = 0; s < d; ++s) {
            if (is_set({{i, j, 0}, {i, n, s}, {j, n, s}})) matches.push_back(4);
            if (is_set({{i, j, d - 1}, {i, n, s}, {j, n, (s + 1) % d}}))
              matches.push_back(5);
          }
        }
      }
    }
    if (static_cast<int>(atoms.size()) == d) {
      int i = atoms[0].i;
      std::vector<Reflection> want;
      for (int s = 0; s < d; ++s) want.push_back({i, n, s});
      if (i < n && is_set(want)) matches.push_back(6);
    }

    if (matches.size() != 1) {
      std::string msg =
          "rank2_interval_families: atom set of [e, " +
          lat.poset.display(top) + "] matches " +
          std::to_string(matches.size()) + " families:";
      for (const Reflection& r : atoms) msg += " " + render_reflection(r);
      throw invariant_error(msg);
    }
    out.push_back({matches[0], atoms, lat.poset.display(top)});
  }
  return out;
}

}  // namespace ncp

#include "ncp/nc_lattice.hpp"

#include <algorithm>
#include <map>

#include "ncp/notation.hpp"

namespace ncp {

int NCLattice::id_of(const ColoredPermutation& w) const {
  auto it = index.find(w.key());
  return it == index.end() ? -1 : it->second;
}

NCLattice build_nc_lattice(const GroupParams& p) {
  p.validate();
  NCLattice lat;
  lat.params = p;
  lat.group = Group::get(p);
  lat.gamma = lat.group->coxeter();
  lat.t_gamma = reflections_below_coxeter(p, TGammaMode::Formula);

  std::map<Reflection, int> label_of;
  for (std::size_t i = 0; i < lat.t_gamma.size(); ++i) {
    lat.poset.add_label(render_reflection(lat.t_gamma[i]));
    label_of.emplace(lat.t_gamma[i], static_cast<int>(i));
  }

  std::vector<ColoredPermutation> refl_elems;
  for (const Reflection& r : lat.group->reflections())
    refl_elems.push_back(reflection_element(p, r));

  const int n = p.n;
  auto in_nc_at = [&](const ColoredPermutation& w, int len) {
    return lat.group->length(w) == len &&
           lat.group->length(compose(inverse(w), lat.gamma)) == n - len;
  };

  lat.elements.push_back(identity(p));
  lat.index.emplace(lat.elements[0].key(), 0);
  lat.poset.add_element(0, render_element(lat.elements[0]));

  for (std::size_t head = 0; head < lat.elements.size(); ++head) {
    const ColoredPermutation u = lat.elements[head];
    const int len = lat.poset.rank(static_cast<int>(head));
    for (std::size_t ri = 0; ri < refl_elems.size(); ++ri) {
      ColoredPermutation v = compose(u, refl_elems[ri]);
      if (!in_nc_at(v, len + 1)) continue;
      auto [it, inserted] =
          lat.index.emplace(v.key(), static_cast<int>(lat.elements.size()));
      if (inserted) {
        lat.elements.push_back(v);
        lat.poset.add_element(len + 1, render_element(v));
      }
      auto lab = label_of.find(lat.group->reflections()[ri]);
      if (lab == label_of.end())
        throw invariant_error(
            "build_nc_lattice: cover labeled by a reflection not below "
            "gamma: " +
            render_reflection(lat.group->reflections()[ri]));
      lat.poset.add_cover(static_cast<int>(head), it->second, lab->second);
    }
  }
  lat.poset.finalize();

  if (lat.poset.bottom() != 0 || lat.poset.top() < 0 ||
      lat.elements[static_cast<std::size_t>(lat.poset.top())] != lat.gamma)
    throw invariant_error("build_nc_lattice: interval is not [e, gamma]");
  return lat;
}

MDivisible build_m_divisible(const GroupParams& p, int m) {
  if (m < 1) throw std::invalid_argument("build_m_divisible: m must be >= 1");
  NCLattice nc = build_nc_lattice(p);
  const int N = nc.poset.size();

  MDivisible md;
  md.params = p;
  md.m = m;
  md.group = nc.group;

  // ascending multichains p_0 <= ... <= p_{m-1}, as lattice ids
  std::vector<int> chain;
  std::vector<std::vector<int>> multichains;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == m) {
      multichains.push_back(chain);
      return;
    }
    for (int v = 0; v < N; ++v) {
      if (!chain.empty() && !nc.poset.leq(chain.back(), v)) continue;
      chain.push_back(v);
      rec(depth + 1);
      chain.pop_back();
    }
  };
  rec(0);

  for (const std::vector<int>& mc : multichains) {
    std::vector<ColoredPermutation> t;
    t.push_back(nc.elements[static_cast<std::size_t>(mc[0])]);
    for (int i = 1; i < m; ++i)
      t.push_back(
          compose(inverse(nc.elements[static_cast<std::size_t>(mc[i - 1])]),
                  nc.elements[static_cast<std::size_t>(mc[i])]));
    t.push_back(compose(
        inverse(nc.elements[static_cast<std::size_t>(mc[m - 1])]), nc.gamma));
    std::string disp = "(" + render_element(t[0]) + ";";
    for (int i = 1; i <= m; ++i)
      disp += (i > 1 ? "," : "") + render_element(t[static_cast<std::size_t>(i)]);
    disp += ")";
    md.poset.add_element(nc.group->length(t[0]), std::move(disp));
    md.tuples.push_back(std::move(t));
  }

  // order relation: u <= v iff u_i >=_T v_i for all i = 1..m
  const int M = static_cast<int>(md.tuples.size());
  std::vector<std::vector<bool>> rel(static_cast<std::size_t>(M),
                                     std::vector<bool>(static_cast<std::size_t>(M), false));
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b) {
      if (a == b) continue;
      bool le = true;
      for (int i = 1; i <= m && le; ++i)
        le = md.group->leq(md.tuples[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)],
                           md.tuples[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]);
      rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = le;
    }

  // covers by transitive reduction, labeled by the changing coordinate
  std::map<std::pair<int, std::string>, int> label_ids;
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b) {
      if (!rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
      bool cover = true;
      for (int z = 0; z < M && cover; ++z)
        if (rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(z)] &&
            rel[static_cast<std::size_t>(z)][static_cast<std::size_t>(b)])
          cover = false;
      if (!cover) continue;

      int changed = -1;
      Reflection r;
      for (int i = 1; i <= m; ++i) {
        const auto& ui = md.tuples[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
        const auto& vi = md.tuples[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
        if (ui == vi) continue;
        auto cr = classify_reflection(compose(inverse(vi), ui));
        if (changed != -1 || !cr)
          throw invariant_error(
              "build_m_divisible: cover does not change exactly one "
              "coordinate by a reflection");
        changed = i;
        r = *cr;
      }
      if (changed == -1)
        throw invariant_error("build_m_divisible: cover with equal tails");
      std::string disp = std::to_string(changed) + ":" + render_reflection(r);
      auto it = label_ids.find({changed, disp});
      int lab;
      if (it == label_ids.end()) {
        lab = md.poset.add_label(disp);
        label_ids.emplace(std::make_pair(changed, disp), lab);
      } else {
        lab = it->second;
      }
      md.poset.add_cover(a, b, lab);
    }

  md.poset.finalize();  // enforces that covers raise rank by exactly one

  if (md.poset.top() < 0)
    throw invariant_error("build_m_divisible: no unique maximum");
  const auto& top = md.tuples[static_cast<std::size_t>(md.poset.top())];
  if (top[0] != nc.gamma)
    throw invariant_error("build_m_divisible: maximum is not (gamma; e..e)");
  return md;
}

std::vector<int> degrees(const GroupParams& p) {
  p.validate();
  std::vector<int> deg;
  deg.push_back(p.n);
  for (int i = 1; i < p.n; ++i) deg.push_back(i * p.d);
  std::sort(deg.begin(), deg.end());

  mpz_class sum = 0, prod = 1;
  for (int x : deg) {
    sum += x;
    prod *= x;
  }
  mpz_class expect_sum = mpz_class(p.d) * p.n * (p.n - 1) / 2 + p.n;
  mpz_class expect_prod = 1;
  for (int i = 1; i < p.n; ++i) expect_prod *= p.d;
  for (int i = 2; i <= p.n; ++i) expect_prod *= i;
  if (sum != expect_sum)
    throw invariant_error("degrees: sum identity failed");
  if (prod != expect_prod)
    throw invariant_error("degrees: product identity failed");
  return deg;
}

mpz_class fuss_catalan(const std::vector<int>& deg, long m) {
  if (deg.empty()) throw std::invalid_argument("fuss_catalan: no degrees");
  const long h = deg.back();
  mpq_class acc = 1;
  for (int di : deg) {
    acc *= mpq_class(m * h + di, di);
  }
  acc.canonicalize();
  if (acc.get_den() != 1)
    throw invariant_error("fuss_catalan: product is not an integer");
  return acc.get_num();
}

mpz_class fuss_catalan(const GroupParams& p, long m) {
  return fuss_catalan(degrees(p), m);
}

LabelLemmasReport verify_label_lemmas(const NCLattice& lat) {
  LabelLemmasReport rep;
  rep.rank2_exchange = true;
  rep.chains_distinct = true;
  rep.translation_invariant = true;
  const GradedPoset& P = lat.poset;
  auto note = [&](const std::string& s) {
    if (rep.counterexamples.size() < 20) rep.counterexamples.push_back(s);
  };

  // (a) rank-2 exchange
  for (int u = 0; u < P.size(); ++u) {
    std::map<int, std::vector<std::pair<int, int>>> seqs;  // top -> pairs
    for (const auto& [x, l1] : P.up(u))
      for (const auto& [v, l2] : P.up(x)) seqs[v].push_back({l1, l2});
    for (const auto& [v, pairs] : seqs) {
      for (const auto& [s, t] : pairs) {
        bool found = false;
        for (const auto& [t2, s2] : pairs)
          if (t2 == t) found = true;
        if (!found) {
          rep.rank2_exchange = false;
          note("exchange fails in [" + P.display(u) + ", " + P.display(v) +
               "] for (" + P.label_display(s) + ", " + P.label_display(t) +
               ")");
        }
      }
    }
  }

  // (b) distinct labels along every chain of every interval
  for (int u = 0; u < P.size(); ++u) {
    P.for_each_chain_from(u, [&](int v, const std::vector<int>& labels) {
      for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = a + 1; b < labels.size(); ++b)
          if (labels[a] == labels[b]) {
            rep.chains_distinct = false;
            note("repeated label " + P.label_display(labels[a]) +
                 " on a chain of [" + P.display(u) + ", " + P.display(v) +
                 "]");
          }
    });
  }

  // (c) translation preserves stored labels
  std::map<std::pair<int, int>, int> cover_label;
  for (const CoverRelation& c : P.covers())
    cover_label[{c.lower, c.upper}] = c.label;
  for (int u = 0; u < P.size(); ++u) {
    const ColoredPermutation& uu = lat.elements[static_cast<std::size_t>(u)];
    int w = lat.id_of(compose(inverse(uu), lat.gamma));
    if (w < 0) throw invariant_error("verify_label_lemmas: missing quotient");
    for (const CoverRelation& c : P.covers()) {
      if (!P.leq(c.upper, w)) continue;  // need the cover inside [e, u^-1 g]
      int a = lat.id_of(compose(uu, lat.elements[static_cast<std::size_t>(c.lower)]));
      int b = lat.id_of(compose(uu, lat.elements[static_cast<std::size_t>(c.upper)]));
      if (a < 0 || b < 0) {
        rep.translation_invariant = false;
        note("translation by " + P.display(u) + " leaves the lattice from " +
             P.display(c.lower));
        continue;
      }
      auto it = cover_label.find({a, b});
      if (it == cover_label.end() || it->second != c.label) {
        rep.translation_invariant = false;
        note("translation by " + P.display(u) + " breaks the label of " +
             P.display(c.lower) + " -> " + P.display(c.upper));
      }
    }
  }
  return rep;
}

}  // namespace ncp

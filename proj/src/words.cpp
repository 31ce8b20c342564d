#include "ncp/words.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "ncp/notation.hpp"

namespace ncp {

namespace {

ColoredPermutation product_of(const GroupParams& p,
                              const std::vector<Reflection>& letters) {
  ColoredPermutation acc = identity(p);
  for (const Reflection& r : letters) acc = compose(acc, reflection_element(p, r));
  return acc;
}

std::vector<int> word_key(const ReducedWord& w) {
  std::vector<int> key;
  key.reserve(w.letters.size());
  for (const Reflection& r : w.letters)
    key.push_back((r.i * 64 + r.j) * 256 + r.s);
  return key;
}

}  // namespace

ReducedWord make_reduced_word(const GroupParams& p,
                              std::vector<Reflection> letters) {
  p.validate();
  for (const Reflection& r : letters) {
    if (r.i < 1 || r.i >= r.j || r.j > p.n || r.s < 0 || r.s >= p.d)
      throw std::invalid_argument("make_reduced_word: malformed letter " +
                                  render_reflection(r));
    if (!below_coxeter(p, r))
      throw std::invalid_argument("make_reduced_word: letter " +
                                  render_reflection(r) +
                                  " is not below gamma");
  }
  ReducedWord w{p, std::move(letters), identity(p)};
  w.product = product_of(p, w.letters);
  auto group = Group::get(p);
  if (group->length(w.product) != static_cast<int>(w.letters.size()))
    throw std::invalid_argument(
        "make_reduced_word: word is not reduced (length " +
        std::to_string(group->length(w.product)) + " != " +
        std::to_string(w.letters.size()) + " letters)");
  return w;
}

ReducedWord shift(const ReducedWord& w, int i, ShiftDirection dir) {
  const int len = w.length();
  auto letters = w.letters;
  if (dir == ShiftDirection::Left) {
    if (i < 2 || i > len)
      throw std::invalid_argument("shift: left position out of range");
    const Reflection a = w.letter(i - 1);
    const Reflection b = w.letter(i);
    const ColoredPermutation rb = reflection_element(w.params, b);
    auto conj = classify_reflection(
        compose(compose(rb, reflection_element(w.params, a)), rb));
    if (!conj)
      throw invariant_error("shift: conjugate is not a reflection");
    letters[static_cast<std::size_t>(i - 2)] = b;
    letters[static_cast<std::size_t>(i - 1)] = *conj;
  } else {
    if (i < 1 || i >= len)
      throw std::invalid_argument("shift: right position out of range");
    const Reflection a = w.letter(i);
    const Reflection b = w.letter(i + 1);
    const ColoredPermutation ra = reflection_element(w.params, a);
    auto conj = classify_reflection(
        compose(compose(ra, reflection_element(w.params, b)), ra));
    if (!conj)
      throw invariant_error("shift: conjugate is not a reflection");
    letters[static_cast<std::size_t>(i - 1)] = *conj;
    letters[static_cast<std::size_t>(i)] = a;
  }
  ReducedWord out = make_reduced_word(w.params, std::move(letters));
  if (!(out.product == w.product))
    throw invariant_error("shift: product changed");
  return out;
}

DescentData descent_inversion_sets(const ReducedWord& w,
                                   const ReflectionOrdering& ord) {
  const int len = w.length();
  std::vector<int> pos(static_cast<std::size_t>(len));
  for (int i = 1; i <= len; ++i)
    pos[static_cast<std::size_t>(i - 1)] = ord.position(w.letter(i));
  DescentData out;
  for (int i = 1; i < len; ++i) {
    if (pos[static_cast<std::size_t>(i - 1)] > pos[static_cast<std::size_t>(i)])
      out.descents.push_back(i);
    for (int j = i + 1; j <= len; ++j) {
      if (pos[static_cast<std::size_t>(i - 1)] >
          pos[static_cast<std::size_t>(j - 1)]) {
        out.inversions.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::vector<ReducedWord> all_reduced_words(const NCLattice& lat,
                                           const ColoredPermutation& w) {
  const int id = lat.id_of(w);
  if (id < 0)
    throw std::invalid_argument(
        "all_reduced_words: element is not below gamma");
  std::vector<ReducedWord> out;
  if (id == lat.poset.bottom()) {
    out.push_back(make_reduced_word(lat.params, {}));  // the empty word
    return out;
  }
  for (const auto& chain : lat.poset.chains_between(lat.poset.bottom(), id)) {
    std::vector<Reflection> letters;
    letters.reserve(chain.labels.size());
    for (int lab : chain.labels)
      letters.push_back(lat.t_gamma[static_cast<std::size_t>(lab)]);
    out.push_back(make_reduced_word(lat.params, std::move(letters)));
  }
  return out;
}

ShiftGraph build_shift_graph(const std::vector<ReducedWord>& words) {
  ShiftGraph g;
  g.nodes = words;
  g.closed = true;
  std::map<std::vector<int>, int> index;
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    index[word_key(g.nodes[k])] = static_cast<int>(k);
  std::map<std::pair<int, int>, int> seen;  // (from, to) -> witness position
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const ReducedWord& w = g.nodes[k];
    for (int i = 2; i <= w.length(); ++i) {
      ReducedWord s = shift(w, i, ShiftDirection::Left);
      auto it = index.find(word_key(s));
      if (it == index.end()) {
        g.closed = false;
        continue;
      }
      auto key = std::make_pair(static_cast<int>(k), it->second);
      if (seen.find(key) == seen.end()) seen[key] = i;
    }
  }
  for (const auto& e : seen)
    g.arcs.emplace_back(e.first.first, e.first.second, e.second);
  return g;
}

std::vector<int> reachable(const ShiftGraph& g, int from) {
  if (from < 0 || from >= static_cast<int>(g.nodes.size()))
    throw std::invalid_argument("reachable: node index out of range");
  std::vector<std::vector<int>> adj(g.nodes.size());
  for (const auto& [a, b, pos] : g.arcs) {
    (void)pos;
    adj[static_cast<std::size_t>(a)].push_back(b);
  }
  std::vector<bool> vis(g.nodes.size(), false);
  std::queue<int> q;
  q.push(from);
  vis[static_cast<std::size_t>(from)] = true;
  std::vector<int> out;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    out.push_back(v);
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!vis[static_cast<std::size_t>(w)]) {
        vis[static_cast<std::size_t>(w)] = true;
        q.push(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string word_node_name(const ReducedWord& w,
                           const ReflectionOrdering& ord) {
  const bool compact = ord.size() <= 9;
  std::string name;
  for (int i = 1; i <= w.length(); ++i) {
    if (!compact && !name.empty()) name += '.';
    name += std::to_string(ord.position(w.letter(i)));
  }
  return name;
}

std::string shift_graph_to_dot(const ShiftGraph& g,
                               const ReflectionOrdering& ord) {
  std::ostringstream out;
  out << "digraph shift_graph {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=ellipse, fontname=\"Helvetica\"];\n";
  std::vector<std::string> names;
  names.reserve(g.nodes.size());
  for (const ReducedWord& w : g.nodes) names.push_back(word_node_name(w, ord));
  for (std::size_t k = 0; k < names.size(); ++k)
    out << "  v" << k << " [label=\"" << names[k] << "\"];\n";
  for (const auto& [a, b, pos] : g.arcs) {
    (void)pos;
    out << "  v" << a << " -> v" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

RemovalFamily removal_family(const GroupParams& p, const Reflection& t_k,
                             const Reflection& t_k1) {
  const int n = p.n;
  const int tail = p.d - 1;
  if (t_k.s == 0 && t_k.j < n && t_k1.s == 0 && t_k1.i == t_k.i &&
      t_k1.j < t_k.j)
    return RemovalFamily::ColorZeroNested;
  if (t_k.s == tail && t_k.j < n && t_k1.s == 0 && t_k1.i == t_k.i &&
      t_k1.j < t_k.j)
    return RemovalFamily::TailNested;
  if (t_k.j == n && t_k1.s == 0 && t_k1.i == t_k.i)
    return RemovalFamily::LastCoordinate;
  if (t_k.s == tail && t_k.j < n && t_k1.s == 0 && t_k1.i == t_k.j &&
      t_k1.j < n)
    return RemovalFamily::TailChained;
  if (t_k.s == tail && t_k.j < n && t_k1.i == t_k.i && t_k1.j == n)
    return RemovalFamily::TailLast;
  const ColoredPermutation a = reflection_element(p, t_k);
  const ColoredPermutation b = reflection_element(p, t_k1);
  if (compose(a, b) == compose(b, a)) return RemovalFamily::Commuting;
  return RemovalFamily::None;
}

const char* removal_family_name(RemovalFamily f) {
  switch (f) {
    case RemovalFamily::ColorZeroNested:
      return "color-zero-nested";
    case RemovalFamily::TailNested:
      return "tail-nested";
    case RemovalFamily::LastCoordinate:
      return "last-coordinate";
    case RemovalFamily::TailChained:
      return "tail-chained";
    case RemovalFamily::TailLast:
      return "tail-last";
    case RemovalFamily::Commuting:
      return "commuting";
    case RemovalFamily::None:
      return "none";
  }
  return "none";
}

namespace {

bool is_classical(RemovalFamily f) {
  return f == RemovalFamily::ColorZeroNested ||
         f == RemovalFamily::TailNested || f == RemovalFamily::LastCoordinate;
}

bool has_descent_at(const DescentData& d, int k) {
  return std::find(d.descents.begin(), d.descents.end(), k) !=
         d.descents.end();
}

bool has_inversion_at(const DescentData& d, int k) {
  return std::find(d.inversions.begin(), d.inversions.end(), k) !=
         d.inversions.end();
}

}  // namespace

ShiftLemmasReport check_shift_lemmas(const GroupParams& p) {
  ShiftLemmasReport rep;
  rep.initial_descent = true;
  rep.k2_descent = true;
  rep.k1_biconditional = true;
  rep.k_inversion = true;
  rep.unique_rising_word = true;
  rep.vanish_only_onto_rising = true;
  rep.descents_never_vanish = true;
  rep.k1_classical_cases_complete = true;
  const auto note = [&rep](const std::string& what) {
    if (rep.counterexamples.size() < 20) rep.counterexamples.push_back(what);
  };
  const auto divergence = [&rep](const std::string& what) {
    if (rep.reported_divergences.size() < 40)
      rep.reported_divergences.push_back(what);
  };

  NCLattice lat = build_nc_lattice(p);
  ReflectionOrdering ord = compatible_ordering(p);

  // The simple-reflection word rises; each left shift dents position k-1.
  {
    std::vector<Reflection> simples = simple_reflections(p);
    ReducedWord s = make_reduced_word(p, simples);
    if (!descent_inversion_sets(s, ord).descents.empty())
      throw invariant_error(
          "check_shift_lemmas: simple-reflection word is not rising");
    for (int k = 2; k <= s.length(); ++k) {
      ReducedWord l = shift(s, k, ShiftDirection::Left);
      ++rep.shifts_checked;
      if (!has_descent_at(descent_inversion_sets(l, ord), k - 1)) {
        rep.initial_descent = false;
        note("initial: left shift at " + std::to_string(k) +
             " lacks a descent at " + std::to_string(k - 1));
      }
    }
  }

  const std::vector<ReducedWord> words = all_reduced_words(lat, lat.gamma);

  // Exactly one reduced word of the Coxeter element is inversion-free.
  std::string rising_name;
  {
    int rising = 0;
    for (const ReducedWord& w : words)
      if (descent_inversion_sets(w, ord).inversions.empty()) {
        ++rising;
        rising_name = word_node_name(w, ord);
      }
    if (rising != 1) {
      rep.unique_rising_word = false;
      note("rising: " + std::to_string(rising) + " inversion-free words");
    }
  }

  std::map<std::string, int> beyond_classical;

  for (const ReducedWord& w : words) {
    ++rep.words_checked;
    const DescentData data = descent_inversion_sets(w, ord);
    for (int k : data.descents) {
      // Left shift at k+2 keeps a descent at k or k+1.
      if (k + 2 <= w.length()) {
        ReducedWord l = shift(w, k + 2, ShiftDirection::Left);
        ++rep.shifts_checked;
        const DescentData ld = descent_inversion_sets(l, ord);
        if (!has_descent_at(ld, k) && !has_descent_at(ld, k + 1)) {
          rep.k2_descent = false;
          note("k+2: " + word_node_name(w, ord) + " at k=" +
               std::to_string(k));
        }
      }
      // Left shift at k+1 removes the descent at k iff the letters match a
      // removal family.
      {
        ReducedWord l = shift(w, k + 1, ShiftDirection::Left);
        ++rep.shifts_checked;
        const bool removed = !has_descent_at(descent_inversion_sets(l, ord), k);
        const RemovalFamily fam =
            removal_family(p, w.letter(k), w.letter(k + 1));
        if (removed != (fam != RemovalFamily::None)) {
          rep.k1_biconditional = false;
          note("k+1: " + word_node_name(w, ord) + " at k=" +
               std::to_string(k) + (removed ? " removed" : " kept") +
               " against family " + removal_family_name(fam));
        }
        if (removed && !is_classical(fam)) {
          rep.k1_classical_cases_complete = false;
          ++beyond_classical[removal_family_name(fam)];
          divergence("k+1 beyond classical: " + word_node_name(w, ord) +
                     " at k=" + std::to_string(k) + " family " +
                     removal_family_name(fam));
        }
      }
      // Left shift at k itself has an inversion at k-1 and a descent at
      // k-1 or k.
      if (k >= 2) {
        ReducedWord l = shift(w, k, ShiftDirection::Left);
        ++rep.shifts_checked;
        const DescentData ld = descent_inversion_sets(l, ord);
        if (!has_inversion_at(ld, k - 1) ||
            (!has_descent_at(ld, k - 1) && !has_descent_at(ld, k))) {
          rep.k_inversion = false;
          note("k: " + word_node_name(w, ord) + " at k=" + std::to_string(k));
        }
      }
    }
    // A left shift of a word with a descent keeps an inversion, except
    // when it lands exactly on the unique rising word.
    if (!data.descents.empty()) {
      for (int i = 2; i <= w.length(); ++i) {
        ReducedWord l = shift(w, i, ShiftDirection::Left);
        ++rep.shifts_checked;
        const DescentData ld = descent_inversion_sets(l, ord);
        if (ld.inversions.empty()) {
          rep.descents_never_vanish = false;
          const std::string target = word_node_name(l, ord);
          divergence("vanish: " + word_node_name(w, ord) + " shift at " +
                     std::to_string(i) + " -> " + target);
          if (target != rising_name) {
            rep.vanish_only_onto_rising = false;
            note("vanish: " + word_node_name(w, ord) + " shift at " +
                 std::to_string(i) + " lands on a second rising word " +
                 target);
          }
        }
      }
    }
  }
  rep.removals_beyond_classical.assign(beyond_classical.begin(),
                                       beyond_classical.end());
  return rep;
}

}  // namespace ncp

#include "ncp/notation.hpp"

#include <cctype>
#include <sstream>

namespace ncp {

namespace {

std::string render_entries(const std::vector<ColoredInteger>& entries) {
  std::ostringstream os;
  for (std::size_t a = 0; a < entries.size(); ++a) {
    if (a) os << ' ';
    os << entries[a].index << '^' << entries[a].color;
  }
  return os.str();
}

// Entries of the displacement-1 Bracket cycle whose inverse is c (which must
// have displacement d-1): reverse the tail and add one to its colors.
std::vector<ColoredInteger> inverse_form_entries(const Cycle& c, int d) {
  std::vector<ColoredInteger> out;
  out.push_back(c.entries[0]);
  for (std::size_t a = c.entries.size(); a >= 2; --a)
    out.push_back(
        {c.entries[a - 1].index, (c.entries[a - 1].color + 1) % d});
  return out;
}

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  bool consume(const std::string& tok) {
    skip_ws();
    if (s.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!consume(tok))
      throw std::invalid_argument("parse error at position " +
                                  std::to_string(pos) + ": expected '" + tok +
                                  "' in '" + s + "'");
  }
  int parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw std::invalid_argument("parse error at position " +
                                  std::to_string(start) +
                                  ": expected integer in '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
};

std::vector<ColoredInteger> parse_entries(Scanner& sc, int d,
                                          const std::string& closer) {
  std::vector<ColoredInteger> entries;
  while (true) {
    if (sc.consume(closer)) break;
    int index = sc.parse_int();
    sc.expect("^");
    int color = sc.parse_int();
    entries.push_back({index, ((color % d) + d) % d});
    if (entries.size() > 64)
      throw std::invalid_argument("parse error: cycle too long");
  }
  if (entries.empty()) throw std::invalid_argument("parse error: empty cycle");
  return entries;
}

}  // namespace

std::string render_cycle(const Cycle& c, int d) {
  if (!c.bracket) return "((" + render_entries(c.entries) + "))";
  if (c.shift == 1) return "[" + render_entries(c.entries) + "]";
  if (c.shift == d - 1 && d > 2)
    return "[" + render_entries(inverse_form_entries(c, d)) + "]^-1";
  return "[" + render_entries(c.entries) + "]_" + std::to_string(c.shift);
}

std::string render_element(const ColoredPermutation& w) {
  std::string out;
  for (const Cycle& c : cycle_decomposition(w)) {
    if (!c.bracket && c.entries.size() == 1) continue;  // omit fixed points
    out += render_cycle(c, w.params().d);
  }
  return out.empty() ? "e" : out;
}

std::string render_reflection(const Reflection& r) {
  return "((" + std::to_string(r.i) + "^0 " + std::to_string(r.j) + "^" +
         std::to_string(r.s) + "))";
}

ColoredPermutation parse_element(const GroupParams& p, const std::string& s) {
  p.validate();
  Scanner sc{s};
  if (sc.consume("e")) {
    if (!sc.done())
      throw std::invalid_argument("parse error: trailing input in '" + s +
                                  "'");
    return identity(p);
  }
  std::vector<Cycle> cycles;
  while (!sc.done()) {
    Cycle c;
    if (sc.consume("((")) {
      c.bracket = false;
      c.shift = 0;
      c.entries = parse_entries(sc, p.d, "))");
    } else if (sc.consume("[")) {
      c.entries = parse_entries(sc, p.d, "]");
      c.bracket = true;
      if (sc.consume("^-1")) {
        // [j_1 ... j_k]^-1: the inverse traverses the entries backwards and
        // lowers the colors of the tail by one.
        std::vector<ColoredInteger> direct;
        direct.push_back(c.entries[0]);
        for (std::size_t a = c.entries.size(); a >= 2; --a)
          direct.push_back({c.entries[a - 1].index,
                            (c.entries[a - 1].color + p.d - 1) % p.d});
        c.entries = std::move(direct);
        c.shift = p.d - 1;
      } else if (sc.consume("_")) {
        c.shift = sc.parse_int();
      } else {
        c.shift = 1;
      }
    } else {
      throw std::invalid_argument("parse error at position " +
                                  std::to_string(sc.pos) +
                                  ": expected cycle in '" + s + "'");
    }
    cycles.push_back(std::move(c));
  }
  if (cycles.empty())
    throw std::invalid_argument("parse error: empty element string");
  return from_cycles(p, cycles);
}

Reflection parse_reflection(const GroupParams& p, const std::string& s) {
  auto r = classify_reflection(parse_element(p, s));
  if (!r)
    throw std::invalid_argument("'" + s + "' is not a reflection");
  return *r;
}

}  // namespace ncp

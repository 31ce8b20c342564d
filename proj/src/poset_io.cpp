#include "ncp/poset_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ncp/notation.hpp"

namespace ncp {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("poset JSON: " + what);
}

int require_int(const nlohmann::json& j, const char* field,
                const std::string& where) {
  const auto it = j.find(field);
  if (it == j.end() || !it->is_number_integer())
    bad(where + " needs an integer \"" + field + "\"");
  return it->get<int>();
}

std::string require_string(const nlohmann::json& j, const char* field,
                           const std::string& where) {
  const auto it = j.find(field);
  if (it == j.end() || !it->is_string())
    bad(where + " needs a string \"" + field + "\"");
  return it->get<std::string>();
}

const nlohmann::json& require_array(const nlohmann::json& j,
                                    const char* field) {
  const auto it = j.find(field);
  if (it == j.end() || !it->is_array())
    bad(std::string("missing array \"") + field + "\"");
  return *it;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

nlohmann::ordered_json poset_to_json(const GradedPoset& p) {
  if (!p.finalized())
    throw std::invalid_argument("poset JSON: poset is not finalized");
  if (p.top() < 0)
    throw std::invalid_argument(
        "poset JSON: the interchange format requires a maximum element");

  nlohmann::ordered_json j;
  j["elements"] = nlohmann::ordered_json::array();
  for (int v = 0; v < p.size(); ++v) {
    nlohmann::ordered_json e;
    e["id"] = v;
    e["rank"] = p.rank(v);
    e["display"] = p.display(v);
    j["elements"].push_back(std::move(e));
  }
  j["covers"] = nlohmann::ordered_json::array();
  for (const CoverRelation& c : p.covers()) {
    nlohmann::ordered_json e;
    e["lower"] = c.lower;
    e["upper"] = c.upper;
    if (c.label >= 0) e["label"] = c.label;
    j["covers"].push_back(std::move(e));
  }
  j["labels"] = nlohmann::ordered_json::array();
  for (int id = 0; id < p.label_count(); ++id) {
    nlohmann::ordered_json e;
    e["id"] = id;
    e["display"] = p.label_display(id);
    j["labels"].push_back(std::move(e));
  }
  j["top"] = p.top();
  if (p.bottom() >= 0) j["bottom"] = p.bottom();
  return j;
}

GradedPoset poset_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("root must be an object");

  const nlohmann::json& elements = require_array(j, "elements");
  const nlohmann::json& covers = require_array(j, "covers");
  const nlohmann::json& labels = require_array(j, "labels");
  if (j.find("top") == j.end()) bad("missing \"top\"");

  const int n = static_cast<int>(elements.size());
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  std::vector<std::string> display(static_cast<std::size_t>(n));
  for (const nlohmann::json& e : elements) {
    if (!e.is_object()) bad("element entries must be objects");
    const int id = require_int(e, "id", "element");
    if (id < 0 || id >= n) bad("element ids must be dense 0..N-1");
    if (rank[static_cast<std::size_t>(id)] >= 0)
      bad("duplicate element id " + std::to_string(id));
    const int r = require_int(e, "rank", "element");
    if (r < 0) bad("element ranks must be nonnegative");
    rank[static_cast<std::size_t>(id)] = r;
    display[static_cast<std::size_t>(id)] = require_string(e, "display",
                                                           "element");
  }

  const int nl = static_cast<int>(labels.size());
  std::vector<std::string> label_display(static_cast<std::size_t>(nl));
  std::vector<char> label_seen(static_cast<std::size_t>(nl), 0);
  for (const nlohmann::json& e : labels) {
    if (!e.is_object()) bad("label entries must be objects");
    const int id = require_int(e, "id", "label");
    if (id < 0 || id >= nl) bad("label ids must be dense 0..L-1");
    if (label_seen[static_cast<std::size_t>(id)])
      bad("duplicate label id " + std::to_string(id));
    label_seen[static_cast<std::size_t>(id)] = 1;
    label_display[static_cast<std::size_t>(id)] =
        require_string(e, "display", "label");
  }

  GradedPoset p;
  for (int v = 0; v < n; ++v)
    p.add_element(rank[static_cast<std::size_t>(v)],
                  display[static_cast<std::size_t>(v)]);
  for (int id = 0; id < nl; ++id)
    p.add_label(label_display[static_cast<std::size_t>(id)]);
  for (const nlohmann::json& e : covers) {
    if (!e.is_object()) bad("cover entries must be objects");
    const int lower = require_int(e, "lower", "cover");
    const int upper = require_int(e, "upper", "cover");
    if (lower < 0 || lower >= n || upper < 0 || upper >= n)
      bad("cover endpoints out of range");
    int label = -1;
    const auto it = e.find("label");
    if (it != e.end()) {
      if (!it->is_number_integer()) bad("cover \"label\" must be an integer");
      label = it->get<int>();
      if (label < -1 || label >= nl) bad("cover label id out of range");
    }
    p.add_cover(lower, upper, label);
  }

  try {
    p.finalize();
  } catch (const invariant_error& e) {
    bad(e.what());
  }

  const int declared_top = require_int(j, "top", "root");
  if (p.top() < 0) bad("diagram has no maximum element");
  if (declared_top != p.top())
    bad("declared top " + std::to_string(declared_top) +
        " but the maximum is " + std::to_string(p.top()));
  const auto bot = j.find("bottom");
  if (bot != j.end()) {
    if (!bot->is_number_integer()) bad("\"bottom\" must be an integer");
    if (bot->get<int>() != p.bottom())
      bad("declared bottom " + std::to_string(bot->get<int>()) +
          (p.bottom() < 0 ? " but the diagram has no minimum"
                          : " but the minimum is " +
                                std::to_string(p.bottom())));
  }
  return p;
}

void save_poset(const GradedPoset& p, const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw std::invalid_argument("cannot open for writing: " + path);
  out << poset_to_json(p).dump(2) << '\n';
  if (!out) throw std::invalid_argument("error writing: " + path);
}

GradedPoset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("cannot parse ") + path + ": " +
                                e.what());
  }
  return poset_from_json(j);
}

std::string poset_to_dot(const GradedPoset& p, const LabelOrder* order) {
  if (!p.finalized())
    throw std::invalid_argument("poset DOT: poset is not finalized");
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=none, fontsize=11];\n";
  for (int v = 0; v < p.size(); ++v)
    os << "  " << v << " [label=\"" << dot_escape(p.display(v)) << "\"];\n";
  for (int r = 0; r <= p.max_rank(); ++r) {
    os << "  { rank=same;";
    for (int v = 0; v < p.size(); ++v)
      if (p.rank(v) == r) os << ' ' << v << ';';
    os << " }\n";
  }
  for (const CoverRelation& c : p.covers()) {
    os << "  " << c.lower << " -> " << c.upper;
    if (c.label >= 0) {
      if (order)
        os << " [label=\"" << order->position(c.label) + 1 << "\"]";
      else
        os << " [label=\"" << dot_escape(p.label_display(c.label)) << "\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string ordering_to_text(const ReflectionOrdering& ord) {
  std::ostringstream os;
  for (int i = 0; i < ord.size(); ++i)
    os << i + 1 << ". "
       << render_reflection(ord.order()[static_cast<std::size_t>(i)]) << '\n';
  return os.str();
}

std::string label_order_to_text(const GradedPoset& p,
                                const LabelOrder& order) {
  if (order.size() != p.label_count())
    throw std::invalid_argument(
        "label order text: order does not match the poset's label table");
  std::ostringstream os;
  for (int i = 0; i < order.size(); ++i)
    os << i + 1 << ". " << p.label_display(order.label_at(i)) << '\n';
  return os.str();
}

std::vector<std::string> parse_ordering_lines(const std::string& text) {
  std::vector<std::string> entries;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string s = line.substr(b, e - b + 1);
    if (s[0] == '#') continue;
    // Strip "12." / "12)" / "12:" numbering.
    std::size_t digits = 0;
    while (digits < s.size() && std::isdigit(static_cast<unsigned char>(
                                    s[digits])))
      ++digits;
    if (digits > 0 && digits < s.size() &&
        (s[digits] == '.' || s[digits] == ')' || s[digits] == ':')) {
      std::size_t rest = s.find_first_not_of(" \t", digits + 1);
      s = rest == std::string::npos ? std::string() : s.substr(rest);
    }
    if (!s.empty()) entries.push_back(std::move(s));
  }
  return entries;
}

ReflectionOrdering ordering_from_text(const GroupParams& p,
                                      const std::string& text) {
  std::vector<Reflection> order;
  for (const std::string& entry : parse_ordering_lines(text))
    order.push_back(parse_reflection(p, entry));
  return ReflectionOrdering(p, std::move(order));
}

LabelOrder label_order_from_text(const GradedPoset& p,
                                 const std::string& text) {
  std::map<std::string, int> by_display;
  for (int id = 0; id < p.label_count(); ++id) {
    const auto [it, inserted] = by_display.emplace(p.label_display(id), id);
    if (!inserted)
      throw std::invalid_argument(
          "label order text: poset label displays are ambiguous (\"" +
          p.label_display(id) + "\" repeats)");
  }
  std::vector<int> by_position;
  for (const std::string& entry : parse_ordering_lines(text)) {
    const auto it = by_display.find(entry);
    if (it == by_display.end())
      throw std::invalid_argument("label order text: unknown label \"" +
                                  entry + "\"");
    by_position.push_back(it->second);
  }
  return LabelOrder(p, std::move(by_position));
}

nlohmann::ordered_json el_report_to_json(const GradedPoset& p,
                                         const LabelOrder& order,
                                         const ELReport& rep) {
  nlohmann::ordered_json j;
  j["verdict"] = rep.verdict;
  j["intervals_checked"] = rep.intervals_checked;
  j["chains_checked"] = rep.chains_checked;
  j["order"] = nlohmann::ordered_json::array();
  for (int i = 0; i < order.size(); ++i)
    j["order"].push_back(p.label_display(order.label_at(i)));
  j["failures"] = nlohmann::ordered_json::array();
  for (const IntervalCheck& ic : rep.failures()) {
    nlohmann::ordered_json f;
    f["lower"] = {{"id", ic.u}, {"display", p.display(ic.u)}};
    f["upper"] = {{"id", ic.v}, {"display", p.display(ic.v)}};
    f["length"] = ic.length;
    f["chains"] = ic.chains;
    f["rising_chains"] = ic.rising;
    nlohmann::ordered_json cert;
    cert["labels"] = ic.lex_least;
    cert["displays"] = nlohmann::ordered_json::array();
    for (int lab : ic.lex_least)
      cert["displays"].push_back(p.label_display(lab));
    f["lex_least"] = std::move(cert);
    f["lex_least_rising"] = ic.lex_least_rising;
    f["lex_least_unique"] = ic.lex_least_unique;
    j["failures"].push_back(std::move(f));
  }
  return j;
}

}  // namespace ncp

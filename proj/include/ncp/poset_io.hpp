#pragma once

// File formats spoken by the command-line tool: JSON interchange for graded
// posets, DOT rendering of Hasse diagrams with ordering-position edge
// labels, numbered-list text serialization of reflection orderings and
// label orders, and JSON emission of EL verification reports.

#include <string>
#include <vector>

#include "json.hpp"
#include "ncp/poset.hpp"
#include "ncp/reflection_order.hpp"
#include "ncp/shellability.hpp"

namespace ncp {

// -- poset interchange (JSON) -------------------------------------------------
//
// {
//   "elements": [{"id": 0, "rank": 0, "display": "e"}, ...],
//   "covers":   [{"lower": 0, "upper": 1, "label": 2}, ...],
//   "labels":   [{"id": 0, "display": "((1^0 2^0))"}, ...],
//   "top": 17,
//   "bottom": 0
// }
//
// Element and label ids are dense and appear in id order; "label" is omitted
// on unlabeled covers; "bottom" is omitted when the poset has no minimum.
// "top" is required: the interchange format only carries posets with a
// maximum.  Emission is deterministic, so saving a loaded file reproduces it
// byte for byte.

nlohmann::ordered_json poset_to_json(const GradedPoset& p);

// Validates field presence and types, dense unique ids, cover endpoints and
// label references, and the declared top/bottom against the reconstructed
// poset.  Throws std::invalid_argument on malformed or inconsistent input
// (including diagrams the poset itself rejects).
GradedPoset poset_from_json(const nlohmann::json& j);

void save_poset(const GradedPoset& p, const std::string& path);
GradedPoset load_poset(const std::string& path);

// -- DOT rendering -------------------------------------------------------------
// Hasse diagram with edges drawn upward, same-rank elements grouped, and
// each labeled cover annotated with the 1-based position of its label in
// `order` (with the label's display string when order is null).
std::string poset_to_dot(const GradedPoset& p,
                         const LabelOrder* order = nullptr);

// -- ordering text files ---------------------------------------------------------
// Numbered list, one entry per line:
//   1. ((1^0 2^0))
//   2. ((1^0 3^0))
// The parser is tolerant: "1.", "1)", "1:" or no numbering at all, blank
// lines and lines starting with '#' are skipped.

std::string ordering_to_text(const ReflectionOrdering& ord);
std::string label_order_to_text(const GradedPoset& p, const LabelOrder& order);

// The cleaned entries in file order (numbering stripped).
std::vector<std::string> parse_ordering_lines(const std::string& text);

// Entries parsed as reflections of G(d,d,n); must form a permutation of the
// reflections below the Coxeter element.  Throws std::invalid_argument.
ReflectionOrdering ordering_from_text(const GroupParams& p,
                                      const std::string& text);

// Entries matched against the poset's label displays; must name each label
// exactly once.  Throws std::invalid_argument on unknown, duplicate or
// missing entries (and on posets whose label displays are ambiguous).
LabelOrder label_order_from_text(const GradedPoset& p,
                                 const std::string& text);

// -- EL report (JSON) -----------------------------------------------------------
// Verdict, counts, the order as label displays by position, and one entry
// per failing interval carrying its lexicographically least chain as the
// certificate.
nlohmann::ordered_json el_report_to_json(const GradedPoset& p,
                                         const LabelOrder& order,
                                         const ELReport& rep);

}  // namespace ncp

#pragma once

// Cycle-notation rendering and parsing for colored permutations.
//
//   ((1^0 2^1))        Paren cycle (zero color displacement)
//   [1^0 2^0]          Bracket cycle, displacement 1
//   [1^0 2^0]_2        Bracket cycle, displacement 2
//   [3^0]^-1           inverse of a displacement-1 Bracket cycle
//                      (used for displacement d-1 when d > 2)
//   e                  the identity
//
// Elements render as the concatenation of their nontrivial cycles; fixed
// points ((i^0)) are omitted.  Every rendered string parses back to the
// same element.

#include <string>
#include <vector>

#include "ncp/group.hpp"

namespace ncp {

std::string render_cycle(const Cycle& c, int d);
std::string render_element(const ColoredPermutation& w);
std::string render_reflection(const Reflection& r);

ColoredPermutation parse_element(const GroupParams& p, const std::string& s);
Reflection parse_reflection(const GroupParams& p, const std::string& s);

}  // namespace ncp

#pragma once

// The noncrossing partition lattice NC(d,d,n) = [identity, gamma] in the
// absolute order on G(d,d,n), with the natural edge labeling u -> v by the
// reflection u^-1 v, and the m-divisible generalization: tuples
// (w_0; w_1..w_m) with w_0 w_1 ... w_m = gamma and additive lengths,
// ordered by (u_0;u) <= (v_0;v) iff u_i >=_T v_i for i = 1..m.

#include <gmpxx.h>

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncp/group.hpp"
#include "ncp/poset.hpp"
#include "ncp/reflection_order.hpp"

namespace ncp {

struct NCLattice {
  GroupParams params;
  std::shared_ptr<const Group> group;
  ColoredPermutation gamma;
  std::vector<Reflection> t_gamma;  // label id -> reflection (lex order)
  std::vector<ColoredPermutation> elements;  // poset id -> group element
  std::unordered_map<ElemKey, int, ElemKeyHash> index;
  GradedPoset poset;

  // Poset id of a group element, -1 when the element is not below gamma.
  int id_of(const ColoredPermutation& w) const;
};

NCLattice build_nc_lattice(const GroupParams& p);

struct MDivisible {
  GroupParams params;
  int m = 1;
  std::shared_ptr<const Group> group;
  // poset id -> (w_0; w_1..w_m)
  std::vector<std::vector<ColoredPermutation>> tuples;
  GradedPoset poset;  // labels "i:((..))": coordinate i dropped by reflection
};

// Enumerates multichains p_0 <= ... <= p_{m-1} <= gamma of the noncrossing
// lattice; requires m >= 1.  Covers are computed from the order relation by
// transitive reduction and labeled by the unique changing coordinate.
MDivisible build_m_divisible(const GroupParams& p, int m);

// Degrees {n, d, 2d, ..., (n-1)d} (ascending), gated by the identities
// sum d_i = #reflections + n and prod d_i = |G(d,d,n)|.
std::vector<int> degrees(const GroupParams& p);

// prod_i (m h + d_i) / d_i with h the largest degree, evaluated as an exact
// rational; throws invariant_error if the result is not an integer.
// Negative m evaluates the same product.
mpz_class fuss_catalan(const std::vector<int>& deg, long m);
mpz_class fuss_catalan(const GroupParams& p, long m);

// Checks of the three label lemmas on a built lattice:
//   (a) rank-2 exchange: (s,t) a label sequence of a rank-2 interval
//       implies some (t,s') is one too;
//   (b) the labels along any maximal chain of any interval are pairwise
//       distinct;
//   (c) translation x -> ux maps [e, u^-1 v] to [u, v] preserving the
//       stored cover labels.
struct LabelLemmasReport {
  bool rank2_exchange = false;
  bool chains_distinct = false;
  bool translation_invariant = false;
  std::vector<std::string> counterexamples;
  bool ok() const {
    return rank2_exchange && chains_distinct && translation_invariant;
  }
};

LabelLemmasReport verify_label_lemmas(const NCLattice& lat);

}  // namespace ncp

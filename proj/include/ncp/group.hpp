#pragma once

// Colored permutations: the complex reflection group G(d,d,n) realized as
// monomial n x n matrices whose nonzero entries are d-th roots of unity with
// trivial entry product.  An element is stored as a permutation pi of
// {1..n} together with a color vector (t_1..t_n), t_i in Z/d, acting by
//
//     w(i^s) = pi(i)^(s + t_i)
//
// where i^s denotes the basis vector e_i scaled by zeta_d^s.  Membership in
// G(d,d,n) (as opposed to the full wreath product G(d,1,n)) is the condition
// sum_i t_i == 0 (mod d).  Products compose like matrices: (uv)(x) = u(v(x)).
//
// Reflections are the elements ((i^0 j^s)): exchange i and j, color s on the
// way up and -s on the way down.  Absolute length and absolute order are
// taken with respect to the full reflection set and are evaluated through a
// per-group breadth-first length table (the codimension-of-fixed-space
// formula is only valid below the Coxeter element, so it is never used as
// the primary definition here).

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ncp {

// Raised when an internal mathematical invariant fails (as opposed to bad
// user input, which raises std::invalid_argument).
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

struct GroupParams {
  int d = 2;  // number of colors; d >= 2
  int n = 2;  // rank; permutations of {1..n}, n >= 2

  void validate() const;
  bool operator==(const GroupParams& o) const { return d == o.d && n == o.n; }
  bool operator!=(const GroupParams& o) const { return !(*this == o); }
};

// Bounds accepted by the element key packing and the length-table builder.
inline constexpr int kMaxRank = 8;
inline constexpr int kMaxColors = 255;
inline constexpr std::uint64_t kMaxGroupOrder = 2'000'000;

// A colored integer i^s: index i in {1..n}, color s in Z/d.
struct ColoredInteger {
  int index = 1;
  int color = 0;

  bool operator==(const ColoredInteger& o) const {
    return index == o.index && color == o.color;
  }
  bool operator!=(const ColoredInteger& o) const { return !(*this == o); }
};

// The reflection ((i^0 j^s)) with 1 <= i < j <= n, 0 <= s < d.
struct Reflection {
  int i = 1;
  int j = 2;
  int s = 0;

  bool operator==(const Reflection& o) const {
    return i == o.i && j == o.j && s == o.s;
  }
  bool operator!=(const Reflection& o) const { return !(*this == o); }
  bool operator<(const Reflection& o) const {  // lexicographic (i, j, s)
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return s < o.s;
  }
};

// One cycle of a colored permutation.  A Paren cycle ((i_1^{c_1} ...)) has
// zero net color displacement around the cycle (shift == 0); a Bracket cycle
// [i_1^{c_1} ...]_shift has displacement shift in {1..d-1}.  Canonical form:
// the smallest index comes first and carries color 0.
struct Cycle {
  bool bracket = false;
  int shift = 0;  // 0 for Paren, 1..d-1 for Bracket
  std::vector<ColoredInteger> entries;
};

using ElemKey = std::pair<std::uint64_t, std::uint64_t>;

struct ElemKeyHash {
  std::size_t operator()(const ElemKey& k) const {
    std::uint64_t x = k.first * 0x9e3779b97f4a7c15ULL ^ k.second;
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};

class ColoredPermutation {
 public:
  ColoredPermutation() : params_{2, 2}, image_{1, 2}, color_{0, 0} {}

  // Validating factory: image must be a permutation of 1..n written as the
  // list (pi(1)..pi(n)), colors in 0..d-1 with zero sum mod d.
  static ColoredPermutation checked(const GroupParams& p,
                                    std::vector<int> image,
                                    std::vector<int> colors);

  const GroupParams& params() const { return params_; }
  int rank() const { return params_.n; }

  // 1-based accessors: image(i) = pi(i), color(i) = t_i.
  int image(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  int color(int i) const { return color_[static_cast<std::size_t>(i - 1)]; }

  ColoredInteger apply(const ColoredInteger& x) const {
    return {image(x.index), (x.color + color(x.index)) % params_.d};
  }

  ElemKey key() const;

  bool operator==(const ColoredPermutation& o) const {
    return params_ == o.params_ && image_ == o.image_ && color_ == o.color_;
  }
  bool operator!=(const ColoredPermutation& o) const { return !(*this == o); }

  // Re-checks every class invariant; used by property tests.
  void validate() const;

 private:
  friend ColoredPermutation identity(const GroupParams&);
  friend ColoredPermutation compose(const ColoredPermutation&,
                                    const ColoredPermutation&);
  friend ColoredPermutation inverse(const ColoredPermutation&);
  friend ColoredPermutation from_cycles(const GroupParams&,
                                        const std::vector<Cycle>&);

  ColoredPermutation(const GroupParams& p, std::vector<std::uint8_t> image,
                     std::vector<std::uint8_t> colors)
      : params_(p), image_(std::move(image)), color_(std::move(colors)) {}

  GroupParams params_;
  std::vector<std::uint8_t> image_;  // image_[i-1] = pi(i), values 1..n
  std::vector<std::uint8_t> color_;  // color_[i-1] = t_i, values 0..d-1
};

ColoredPermutation identity(const GroupParams& p);

// Matrix-order product: apply v first, then u.
ColoredPermutation compose(const ColoredPermutation& u,
                           const ColoredPermutation& v);

ColoredPermutation inverse(const ColoredPermutation& w);

// Disjoint cycle decomposition in canonical form, ordered by smallest index.
// Fixed points appear as singleton Paren cycles; indices i with pi(i) == i
// but t_i != 0 appear as singleton Bracket cycles.
std::vector<Cycle> cycle_decomposition(const ColoredPermutation& w);

// Rebuilds an element from cycles.  Indices absent from every cycle are
// fixed with color 0.  Throws std::invalid_argument on overlapping or
// out-of-range indices, bad shifts, or a total displacement != 0 (mod d).
ColoredPermutation from_cycles(const GroupParams& p,
                               const std::vector<Cycle>& cycles);

// Dimension of the fixed space = number of Paren cycles.
int fixed_space_dim(const ColoredPermutation& w);

// The element ((i^0 j^s)).
ColoredPermutation reflection_element(const GroupParams& p,
                                      const Reflection& r);

// Recognizes reflections; nullopt for anything else.
std::optional<Reflection> classify_reflection(const ColoredPermutation& w);

// All d * n(n-1)/2 reflections, lexicographic by (i, j, s).
std::vector<Reflection> all_reflections(const GroupParams& p);

// s_1..s_n: s_k = ((k^0 (k+1)^0)) for k < n, s_n = (((n-1)^0 n^1)).
std::vector<Reflection> simple_reflections(const GroupParams& p);

// The Coxeter element gamma = [1^0 2^0 ... (n-1)^0]_1 [n^0]_(d-1), which
// equals the product s_1 s_2 ... s_n.
ColoredPermutation coxeter_element(const GroupParams& p);

// Nonzero matrix entries as (row, col, color exponent): column i carries
// zeta_d^{t_i} in row pi(i).  Debug/serialization aid only.
std::vector<std::array<int, 3>> matrix_entries(const ColoredPermutation& w);

// A fully enumerated group with its breadth-first absolute-length table.
// Instances are immutable and shared through a process-wide cache.
class Group {
 public:
  static std::shared_ptr<const Group> get(const GroupParams& p);

  const GroupParams& params() const { return params_; }
  std::uint64_t order() const { return order_; }
  const std::vector<Reflection>& reflections() const { return reflections_; }
  const ColoredPermutation& coxeter() const { return coxeter_; }

  // Every group element, in breadth-first discovery order (deterministic).
  const std::vector<ColoredPermutation>& elements() const { return elements_; }

  // Absolute reflection length: distance from the identity in the Cayley
  // graph on the full reflection set.
  int length(const ColoredPermutation& w) const;

  // Absolute order: u <=_T v iff l(v) == l(u) + l(u^-1 v).
  bool leq(const ColoredPermutation& u, const ColoredPermutation& v) const;

 private:
  explicit Group(const GroupParams& p);

  GroupParams params_;
  std::uint64_t order_ = 0;
  std::vector<Reflection> reflections_;
  ColoredPermutation coxeter_;
  std::vector<ColoredPermutation> elements_;
  std::unordered_map<ElemKey, int, ElemKeyHash> length_;
};

// Convenience wrappers over the cached Group.
int abs_length(const ColoredPermutation& w);
bool abs_leq(const ColoredPermutation& u, const ColoredPermutation& v);

}  // namespace ncp

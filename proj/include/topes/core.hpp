#pragma once

// Vertices of the hypercube graph on {+1,-1}^t ("topes" over the ground set
// {1,...,t}) and their decomposition with respect to a distinguished symmetric
// 2t-cycle.  The cycle is the one generated from the all-positive tope by
// flipping prefixes:
//
//   vertex 0       = (+1, +1, ..., +1)
//   vertex s       = first s entries -1, rest +1     (1 <= s <= t-1)
//   vertex t + k   = - vertex k                      (0 <= k <= t-1)
//
// Vertices 0..t-1 form a basis of R^t, so every tope T has a unique expansion
// T = sum_i x_i * vertex(i-1) with coefficients x_i in {-1, 0, +1}; the number
// of nonzero coefficients is always odd.  This header exposes the tope and
// subset value types, the decomposition and its inverse, and the run
// statistics of negative parts that predict decomposition support sizes.
//
// Conventions: ground elements, tope entries and coefficient indices are
// 1-based; cycle vertex indices are 0-based (range [0, 2t)).  Sets and sign
// vectors are stored as bitmasks, which caps the ground size at 64.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace topes {

inline constexpr int kMinGroundSize = 3;
inline constexpr int kMaxGroundSize = 64;

// Thrown when a requested enumeration exceeds its configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws std::domain_error unless kMinGroundSize <= t <= kMaxGroundSize.
void check_ground_size(int t);

// A subset of the ground set {1,...,t}; bit e-1 represents element e.
struct SubsetMask {
  std::uint64_t bits = 0;

  SubsetMask() = default;
  explicit SubsetMask(std::uint64_t b) : bits(b) {}
  static SubsetMask of(std::initializer_list<int> elems);

  bool contains(int e) const { return (bits >> (e - 1)) & 1u; }
  SubsetMask& add(int e) {
    bits |= std::uint64_t{1} << (e - 1);
    return *this;
  }
  SubsetMask& remove(int e) {
    bits &= ~(std::uint64_t{1} << (e - 1));
    return *this;
  }
  int size() const;
  bool empty() const { return bits == 0; }
  bool disjoint_with(SubsetMask o) const { return (bits & o.bits) == 0; }
  bool subset_of(SubsetMask o) const { return (bits & ~o.bits) == 0; }
  SubsetMask unioned(SubsetMask o) const { return SubsetMask{bits | o.bits}; }
  SubsetMask minus(SubsetMask o) const { return SubsetMask{bits & ~o.bits}; }

  std::vector<int> elements() const;
  std::string str() const;  // "{2,4}", "{}" when empty

  friend bool operator==(SubsetMask, SubsetMask) = default;
};

// A tope: a full sign vector in {+1,-1}^t.  Bit e-1 of `neg` is set exactly
// when entry e equals -1.
struct Tope {
  int t = 0;
  std::uint64_t neg = 0;

  int sign(int e) const { return ((neg >> (e - 1)) & 1u) ? -1 : +1; }
  Tope negated() const;
  std::string str() const;  // one char per entry, '+' or '-'

  friend bool operator==(const Tope&, const Tope&) = default;
};

Tope positive_tope(int t);
Tope negative_tope(int t);

// Tope whose entries are -1 exactly on A.
Tope tope_from_negative_set(int t, SubsetMask a);
SubsetMask negative_part(const Tope& tope);

// Vertex k of the distinguished symmetric cycle, 0 <= k < 2t.
Tope cycle_vertex(int t, int k);

// Coefficient vector of a tope's expansion in cycle vertices 0..t-1.
struct DecompVector {
  std::vector<std::int8_t> coords;  // coords[i-1] = x_i

  int length() const { return static_cast<int>(coords.size()); }
  int coord(int i) const { return coords[i - 1]; }
  int support_size() const;
  int norm_sq() const;       // sum of squared coordinates
  std::string str() const;   // "(1,-1,1,0,0)"

  friend bool operator==(const DecompVector&, const DecompVector&) = default;
};

// Unique coefficients of T over cycle vertices 0..t-1.  O(t): consecutive
// entries determine x_2..x_t via half-differences, the last entry fixes x_1.
DecompVector decompose(const Tope& tope);

// Inverse of decompose.  Validates that x has entries in {-1,0,+1} and odd
// support, and that the recombined vector is a genuine sign vector; throws
// std::domain_error otherwise.
Tope recompose(const DecompVector& x, int t);

// One signed cycle vertex appearing in a tope's expansion.
struct QTerm {
  int coeff = 0;        // +1 or -1
  int cycle_index = 0;  // in [0, t)

  friend bool operator==(QTerm, QTerm) = default;
};

// The expansion terms of a tope: the inclusion-minimal set of signed cycle
// vertices summing to it.  Terms are ordered by cycle index.
struct QSet {
  std::vector<QTerm> terms;

  int size() const { return static_cast<int>(terms.size()); }
  std::string str() const;  // "+R^0-R^1+R^2"

  friend bool operator==(const QSet&, const QSet&) = default;
};

QSet q_set(const Tope& tope);

// support of decompose(tope); always odd.  Allocation-free.
int q_size(const Tope& tope);

// Elements where the two topes disagree.  Throws std::invalid_argument on
// ground size mismatch.
SubsetMask separation_set(const Tope& a, const Tope& b);

// Maximal runs of consecutive elements of a subset, ascending.
struct IntervalRun {
  int lo = 0;
  int hi = 0;

  friend bool operator==(IntervalRun, IntervalRun) = default;
};

std::vector<IntervalRun> interval_runs(SubsetMask a, int t);
int interval_run_count(SubsetMask a, int t);

// Support size of decompose(tope_from_negative_set(t, a)), computed from run
// statistics alone: 2r+1 runs when a avoids both 1 and t, 2r-1 otherwise.
int predicted_q_size(SubsetMask a, int t);

}  // namespace topes

#pragma once

// Counting topes by decomposition support size, and counting pairs of topes
// with disjoint negative parts by the joint statistic
//   (|A|, |B|, q(A), q(B), q(A u B), boundary case)
// where q is the decomposition support size.  Pairs (A, B) of disjoint
// nonempty subsets with proper union fall into nine boundary cases by how
// A and B meet {1, t}.  Each case count is available along three routes that
// the test suite holds equal: a direct closed form, a structural product
// (Smirnov word count times three composition counts), and brute-force
// enumeration of all assignments.

#include <map>

#include "topes/checked_int.hpp"
#include "topes/core.hpp"

namespace topes {

// Number of topes over {1,...,t} whose decomposition has support size ell:
// 2 * binomial(t, ell) for odd ell.  Throws std::domain_error for even ell
// or ell outside [1, t].
CheckedInt count_topes_with_qsize(int t, int ell);

// Number of topes with |negative part| = j and support size ell.  Requires
// 1 <= j <= t-1 and odd ell >= 1; returns 0 for infeasible (j, ell).
CheckedInt count_topes_with_negpart_and_qsize(int t, int j, int ell);

// The nine ways disjoint sets A and B can meet the boundary {1, t}:
//   I:   neither touches the boundary
//   II:  A contains 1 and t
//   III: B contains t only
//   IV:  A contains 1 only
//   V:   A contains 1, B contains t
//   VI:  B contains 1 and t
//   VII: A contains t only
//   VIII:B contains 1 only
//   IX:  A contains t, B contains 1
enum class BoundaryCase { kI, kII, kIII, kIV, kV, kVI, kVII, kVIII, kIX };

inline constexpr BoundaryCase kAllBoundaryCases[] = {
    BoundaryCase::kI,   BoundaryCase::kII,  BoundaryCase::kIII,
    BoundaryCase::kIV,  BoundaryCase::kV,   BoundaryCase::kVI,
    BoundaryCase::kVII, BoundaryCase::kVIII, BoundaryCase::kIX};

const char* boundary_case_name(BoundaryCase c);        // "i" .. "ix"
BoundaryCase parse_boundary_case(const std::string&);  // accepts "i" .. "ix"

// Boundary case of a concrete disjoint pair.  Throws std::domain_error when
// the sets intersect.
BoundaryCase boundary_case_of(SubsetMask a, SubsetMask b, int t);

// One joint-statistic query: sizes of A and B and the three support sizes.
struct PairQuery {
  int t = 0;
  int j_prime = 0;         // |A|
  int j_double_prime = 0;  // |B|
  int ell_prime = 0;       // q(A)
  int ell_double_prime = 0;  // q(B)
  int ell = 0;             // q(A u B)

  // Throws std::domain_error unless 1 <= j', 1 <= j'', j'+j'' < t and the
  // three support sizes are odd and >= 1.
  void validate() const;
};

// Number of pairs matching the query in the given boundary case, by the
// case's closed form.
CheckedInt count_pairs_case(const PairQuery& q, BoundaryCase c);

// The same count as a structural product: (Smirnov words with the case's
// endpoint letters and run multiplicities) x (compositions of the three
// class sizes into those many runs).
CheckedInt count_pairs_case_structural(const PairQuery& q, BoundaryCase c);

// Sum of count_pairs_case over all nine cases.
CheckedInt count_pairs_total(const PairQuery& q);

// ----- brute-force enumeration (ground truth) -----

struct TopeClass {
  int j = 0;    // |negative part|
  int ell = 0;  // support size

  friend auto operator<=>(TopeClass, TopeClass) = default;
};

struct PairClass {
  int j_prime = 0;
  int j_double_prime = 0;
  int ell_prime = 0;
  int ell_double_prime = 0;
  int ell = 0;
  BoundaryCase boundary_case = BoundaryCase::kI;

  friend auto operator<=>(const PairClass&, const PairClass&) = default;
};

inline constexpr int kDefaultPairEnumerationCap = 14;  // 3^t assignments
inline constexpr int kTopeEnumerationCap = 20;         // 2^t topes

// Tallies all 2^t topes by (|negative part|, support size).  Support sizes
// come from the decomposition itself, independent of any closed form.
// Workers partition the index space; the merged tally is identical for every
// worker count.  Throws ResourceLimitError above the cap.
std::map<TopeClass, CheckedInt> brute_force_topes(int t, int threads = 1);

// Tallies all pairs of disjoint nonempty subsets with proper union by
// PairClass, enumerating all 3^t assignments.  Throws ResourceLimitError
// when t exceeds the cap.
std::map<PairClass, CheckedInt> brute_force_pairs(int t, int cap = kDefaultPairEnumerationCap,
                                                  int threads = 1);

}  // namespace topes

#pragma once

// Linear-algebraic identities relating the decompositions of topes whose
// negative parts are built from one another: merging two disjoint negative
// parts, reading coefficients straight off a negative part via boundary-type
// closed forms, and propagating a decomposition to a superset negative part.
// Corrections are sums of a few standard basis vectors, so every routine is a
// single O(t) pass with small constant adjustments at coordinates 1, 2 and t.

#include "topes/core.hpp"

namespace topes {

// How a subset meets the two boundary elements {1, t} of the ground set.
enum class BoundaryType {
  kNone,   // contains neither 1 nor t
  kLeft,   // contains 1 only
  kRight,  // contains t only
  kBoth,   // contains 1 and t
};

BoundaryType boundary_type(SubsetMask a, int t);

// Coefficients of the tope with negative part A u B given the coefficient
// vectors of the topes with negative parts A and B, for disjoint A, B:
// componentwise sum minus a bump at the first coordinate.  Throws
// std::domain_error when the result leaves {-1,0,+1}, which catches
// non-disjoint inputs.
DecompVector combine_disjoint(const DecompVector& xa, const DecompVector& xb);

// Support size of combine_disjoint(xa, xb) computed without forming it:
// |xa|^2 + |xb|^2 + 2<xa,xb> - 2 xa_1 - 2 xb_1 + 1.
int combined_support(const DecompVector& xa, const DecompVector& xb);

// Coefficients of the tope with negative part A, read directly from A by the
// boundary-type case analysis.  Equals decompose(tope_from_negative_set(t,A)).
DecompVector coefficients_from_negative_set(SubsetMask a, int t);

// Coefficients of the tope with negative part C, given those of the tope with
// negative part A, for nested A of C.  The update is the shared difference-set
// sum plus a correction that depends only on how A and C meet {1, t}.  Throws
// std::invalid_argument unless A is a subset of C.
DecompVector propagate_to_superset(const DecompVector& xa, SubsetMask a, SubsetMask c,
                                   int t);

}  // namespace topes

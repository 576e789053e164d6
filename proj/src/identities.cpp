#include "topes/identities.hpp"

#include <string>

namespace topes {

namespace {

// Accumulates coefficient updates in int, then narrows with a range check.
class CoeffAccumulator {
 public:
  explicit CoeffAccumulator(int t) : acc_(static_cast<std::size_t>(t), 0) {}

  void load(const DecompVector& x) {
    for (int i = 1; i <= x.length(); ++i) acc_[static_cast<std::size_t>(i - 1)] += x.coord(i);
  }
  void bump(int position, int delta) { acc_[static_cast<std::size_t>(position - 1)] += delta; }

  // Subtracts the "difference step" sigma(i) - sigma(i+1) for each i in d.
  void subtract_difference_steps(SubsetMask d) {
    for (int i : d.elements()) {
      bump(i, -1);
      bump(i + 1, +1);
    }
  }

  DecompVector narrow(const char* what) const {
    DecompVector x;
    x.coords.reserve(acc_.size());
    for (int v : acc_) {
      if (v < -1 || v > 1)
        throw std::domain_error(std::string(what) + ": combined coefficient " +
                                std::to_string(v) + " outside {-1,0,+1}");
      x.coords.push_back(static_cast<std::int8_t>(v));
    }
    return x;
  }

 private:
  std::vector<int> acc_;
};

}  // namespace

BoundaryType boundary_type(SubsetMask a, int t) {
  check_ground_size(t);
  bool left = a.contains(1);
  bool right = a.contains(t);
  if (left && right) return BoundaryType::kBoth;
  if (left) return BoundaryType::kLeft;
  if (right) return BoundaryType::kRight;
  return BoundaryType::kNone;
}

DecompVector combine_disjoint(const DecompVector& xa, const DecompVector& xb) {
  if (xa.length() != xb.length())
    throw std::invalid_argument("combine_disjoint: coefficient lengths differ");
  if (xa.length() < kMinGroundSize)
    throw std::domain_error("combine_disjoint: ground size too small");
  CoeffAccumulator acc(xa.length());
  acc.load(xa);
  acc.load(xb);
  acc.bump(1, -1);
  return acc.narrow("combine_disjoint");
}

int combined_support(const DecompVector& xa, const DecompVector& xb) {
  if (xa.length() != xb.length())
    throw std::invalid_argument("combined_support: coefficient lengths differ");
  int dot = 0;
  for (int i = 1; i <= xa.length(); ++i) dot += xa.coord(i) * xb.coord(i);
  return xa.norm_sq() + xb.norm_sq() + 2 * dot - 2 * xa.coord(1) - 2 * xb.coord(1) + 1;
}

DecompVector coefficients_from_negative_set(SubsetMask a, int t) {
  check_ground_size(t);
  CoeffAccumulator acc(t);
  switch (boundary_type(a, t)) {
    case BoundaryType::kNone:
      acc.bump(1, +1);
      acc.subtract_difference_steps(a);
      break;
    case BoundaryType::kLeft:
      acc.bump(2, +1);
      acc.subtract_difference_steps(SubsetMask{a.bits}.remove(1));
      break;
    case BoundaryType::kRight:
      acc.bump(t, -1);
      acc.subtract_difference_steps(SubsetMask{a.bits}.remove(t));
      break;
    case BoundaryType::kBoth:
      acc.bump(1, -1);
      acc.bump(2, +1);
      acc.bump(t, -1);
      acc.subtract_difference_steps(SubsetMask{a.bits}.remove(1).remove(t));
      break;
  }
  return acc.narrow("coefficients_from_negative_set");
}

DecompVector propagate_to_superset(const DecompVector& xa, SubsetMask a, SubsetMask c,
                                   int t) {
  check_ground_size(t);
  if (xa.length() != t)
    throw std::invalid_argument("propagate_to_superset: coefficient length mismatch");
  if (!a.subset_of(c))
    throw std::invalid_argument("propagate_to_superset: first set is not contained in second");

  CoeffAccumulator acc(t);
  acc.load(xa);

  // The correction depends only on which boundary elements C gains over A.
  bool a1 = a.contains(1), at = a.contains(t);
  bool c1 = c.contains(1), ct = c.contains(t);
  SubsetMask diff = c.minus(a);
  if (a1 == c1 && at == ct) {
    // no boundary gained: plain difference steps over C - A
  } else if (!at && ct && a1 == c1) {
    // gains t only
    acc.bump(1, -1);
    acc.bump(t, -1);
    diff.remove(t);
  } else if (!a1 && c1 && at == ct) {
    // gains 1 only
    acc.bump(1, -1);
    acc.bump(2, +1);
    diff.remove(1);
  } else {
    // gains both 1 and t
    acc.bump(1, -2);
    acc.bump(2, +1);
    acc.bump(t, -1);
    diff.remove(1).remove(t);
  }
  acc.subtract_difference_steps(diff);
  return acc.narrow("propagate_to_superset");
}

}  // namespace topes

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "topes/core.hpp"

using namespace topes;

namespace {

DecompVector vec(std::vector<int> entries) {
  DecompVector x;
  for (int v : entries) x.coords.push_back(static_cast<std::int8_t>(v));
  return x;
}

DecompVector decompose_of(int t, SubsetMask a) {
  return decompose(tope_from_negative_set(t, a));
}

}  // namespace

TEST_CASE("subset masks") {
  SubsetMask a = SubsetMask::of({2, 4});
  CHECK(a.size() == 2);
  CHECK(a.contains(2));
  CHECK(!a.contains(3));
  CHECK(a.str() == "{2,4}");
  CHECK(SubsetMask{}.str() == "{}");
  CHECK(a.elements() == std::vector<int>{2, 4});
  CHECK(a.disjoint_with(SubsetMask::of({1, 3})));
  CHECK(!a.disjoint_with(SubsetMask::of({4})));
  CHECK(SubsetMask::of({2}).subset_of(a));
  CHECK(!a.subset_of(SubsetMask::of({2})));
  CHECK(a.unioned(SubsetMask::of({1})) == SubsetMask::of({1, 2, 4}));
  CHECK(a.minus(SubsetMask::of({4, 5})) == SubsetMask::of({2}));
  CHECK(SubsetMask::of({64}).contains(64));
  CHECK_THROWS_AS(SubsetMask::of({0}), std::out_of_range);
  CHECK_THROWS_AS(SubsetMask::of({65}), std::out_of_range);
}

TEST_CASE("topes and the distinguished cycle") {
  CHECK(positive_tope(5).str() == "+++++");
  CHECK(negative_tope(5).str() == "-----");
  CHECK(tope_from_negative_set(5, SubsetMask::of({2, 5})).str() == "+-++-");
  CHECK(negative_part(tope_from_negative_set(5, SubsetMask::of({2, 5}))) ==
        SubsetMask::of({2, 5}));

  for (int t = 3; t <= 8; ++t) {
    CAPTURE(t);
    CHECK(cycle_vertex(t, 0) == positive_tope(t));
    CHECK(cycle_vertex(t, t) == negative_tope(t));
    for (int k = 0; k < t; ++k) {
      CHECK(cycle_vertex(t, t + k) == cycle_vertex(t, k).negated());
      // vertex k has exactly the first k entries negative
      CHECK(negative_part(cycle_vertex(t, k)).size() == k);
      for (int e = 1; e <= t; ++e) CHECK(cycle_vertex(t, k).sign(e) == (e <= k ? -1 : +1));
    }
    // consecutive vertices differ in exactly one entry, wraparound included
    for (int k = 0; k < 2 * t; ++k)
      CHECK(separation_set(cycle_vertex(t, k), cycle_vertex(t, (k + 1) % (2 * t))).size() == 1);
  }

  CHECK_THROWS_AS(positive_tope(2), std::domain_error);
  CHECK_THROWS_AS(positive_tope(65), std::domain_error);
  CHECK_THROWS_AS(cycle_vertex(5, -1), std::out_of_range);
  CHECK_THROWS_AS(cycle_vertex(5, 10), std::out_of_range);
  CHECK_THROWS_AS(tope_from_negative_set(5, SubsetMask::of({6})), std::out_of_range);
}

TEST_CASE("hand-checked decompositions for t=5") {
  CHECK(decompose_of(5, SubsetMask::of({2})) == vec({1, -1, 1, 0, 0}));
  CHECK(decompose_of(5, SubsetMask::of({1, 2, 4})) == vec({0, 0, 1, -1, 1}));
  CHECK(decompose_of(5, SubsetMask::of({1})) == vec({0, 1, 0, 0, 0}));
  CHECK(decompose_of(5, SubsetMask::of({1, 5})) == vec({-1, 1, 0, 0, -1}));
  CHECK(decompose_of(5, SubsetMask::of({1, 3, 5})) == vec({-1, 1, -1, 1, -1}));
  CHECK(decompose_of(5, SubsetMask{}) == vec({1, 0, 0, 0, 0}));
  CHECK(decompose_of(5, SubsetMask::of({2})).str() == "(1,-1,1,0,0)");
}

TEST_CASE("cycle vertices decompose to standard basis vectors") {
  for (int t = 3; t <= 8; ++t)
    for (int k = 0; k < t; ++k) {
      DecompVector x = decompose(cycle_vertex(t, k));
      DecompVector y = decompose(cycle_vertex(t, t + k));
      CHECK(x.support_size() == 1);
      CHECK(x.coord(k + 1) == 1);
      CHECK(y.support_size() == 1);
      CHECK(y.coord(k + 1) == -1);
    }
}

TEST_CASE("round trip, odd support and run prediction for all topes, t=3..10") {
  for (int t = 3; t <= 10; ++t) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << t); ++m) {
      Tope tope{t, m};
      DecompVector x = decompose(tope);
      CAPTURE(t);
      CAPTURE(m);
      REQUIRE(recompose(x, t) == tope);
      REQUIRE(x.support_size() % 2 == 1);
      REQUIRE(x.norm_sq() == x.support_size());
      REQUIRE(q_size(tope) == x.support_size());
      REQUIRE(predicted_q_size(SubsetMask{m}, t) == x.support_size());
    }
  }
}

TEST_CASE("t=5 coefficients are the unique sign-or-zero solutions") {
  // Independent oracle: try all 3^5 coefficient vectors against the cycle
  // vertices summed as plain integer vectors.
  const int t = 5;
  int vertex[5][5];
  for (int k = 0; k < t; ++k)
    for (int e = 1; e <= t; ++e) vertex[k][e - 1] = cycle_vertex(t, k).sign(e);

  for (std::uint64_t m = 0; m < (std::uint64_t{1} << t); ++m) {
    Tope tope{t, m};
    DecompVector expected = decompose(tope);
    int solutions = 0;
    int digits[5];
    for (int code = 0; code < 243; ++code) {
      int rest = code;
      for (int i = 0; i < t; ++i) {
        digits[i] = rest % 3 - 1;
        rest /= 3;
      }
      bool match = true;
      for (int e = 1; e <= t && match; ++e) {
        int entry = 0;
        for (int i = 0; i < t; ++i) entry += digits[i] * vertex[i][e - 1];
        match = entry == tope.sign(e);
      }
      if (!match) continue;
      ++solutions;
      for (int i = 0; i < t; ++i) CHECK(expected.coord(i + 1) == digits[i]);
    }
    CHECK(solutions == 1);
  }
}

TEST_CASE("recompose validation") {
  CHECK_THROWS_AS(recompose(vec({1, 0, 0}), 4), std::invalid_argument);
  CHECK_THROWS_AS(recompose(vec({1, 1, 0, 0}), 4), std::domain_error);   // even support
  CHECK_THROWS_AS(recompose(vec({2, 0, 0, -1}), 4), std::domain_error);  // entry outside range
  CHECK_THROWS_AS(recompose(vec({1, 1, 1}), 3), std::domain_error);      // not a sign vector
  CHECK_THROWS_AS(recompose(vec({1, 0, 0}), 2), std::domain_error);
}

TEST_CASE("expansion term sets") {
  QSet q = q_set(tope_from_negative_set(5, SubsetMask::of({2})));
  CHECK(q.size() == 3);
  CHECK(q.str() == "+R^0-R^1+R^2");
  CHECK(q.terms == std::vector<QTerm>{{1, 0}, {-1, 1}, {1, 2}});

  QSet pos = q_set(positive_tope(5));
  CHECK(pos.str() == "+R^0");
}

TEST_CASE("negative tope expands as minus the all-positive vertex") {
  // -(+1,...,+1) = -vertex(0): coefficient -1 at position 1.
  QSet neg = q_set(negative_tope(5));
  CHECK(neg.size() == 1);
  CHECK(neg.terms == std::vector<QTerm>{{-1, 0}});
  CHECK(neg.str() == "-R^0");
}

TEST_CASE("separation sets") {
  Tope a = tope_from_negative_set(5, SubsetMask::of({2}));
  Tope b = tope_from_negative_set(5, SubsetMask::of({2, 3}));
  CHECK(separation_set(a, b) == SubsetMask::of({3}));
  CHECK(separation_set(a, a).empty());
  CHECK(separation_set(a, a.negated()).size() == 5);
  CHECK_THROWS_AS(separation_set(a, positive_tope(4)), std::invalid_argument);
}

TEST_CASE("interval runs") {
  CHECK(interval_runs(SubsetMask::of({1, 2, 4}), 5) ==
        std::vector<IntervalRun>{{1, 2}, {4, 4}});
  CHECK(interval_runs(SubsetMask{}, 5).empty());
  CHECK(interval_runs(SubsetMask::of({1, 2, 3, 4, 5}), 5) ==
        std::vector<IntervalRun>{{1, 5}});
  for (int t = 3; t <= 10; ++t)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << t); ++m)
      CHECK(interval_run_count(SubsetMask{m}, t) ==
            static_cast<int>(interval_runs(SubsetMask{m}, t).size()));
  CHECK(predicted_q_size(SubsetMask::of({1, 5}), 5) == 3);
  CHECK(predicted_q_size(SubsetMask::of({2}), 5) == 3);
  CHECK(predicted_q_size(SubsetMask{}, 5) == 1);
  CHECK_THROWS_AS(interval_runs(SubsetMask::of({6}), 5), std::out_of_range);
}

#include "topes/statistics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "topes/smirnov.hpp"

namespace topes {

namespace {

// Exact halving.  The closed forms only ever halve quantities whose evenness
// is forced by the oddness of the support sizes, so a remainder means a
// programming error, not a data error.
int h2(int v) {
  if (v % 2 != 0) throw std::logic_error("count_pairs_case: non-even half argument");
  return v / 2;
}

CheckedInt pow2(int e) {
  CheckedInt r = 1;
  for (int p = 0; p < e; ++p) r *= 2;
  return r;
}

void check_odd_positive(int v, const char* what) {
  if (v < 1 || v % 2 == 0)
    throw std::domain_error(std::string(what) + " must be odd and positive, got " +
                            std::to_string(v));
}

}  // namespace

CheckedInt count_topes_with_qsize(int t, int ell) {
  check_ground_size(t);
  if (ell < 1 || ell > t || ell % 2 == 0)
    throw std::domain_error("count_topes_with_qsize: support size " + std::to_string(ell) +
                            " not an odd number in [1," + std::to_string(t) + "]");
  return CheckedInt(2) * binomial(t, ell);
}

CheckedInt count_topes_with_negpart_and_qsize(int t, int j, int ell) {
  check_ground_size(t);
  if (j < 1 || j > t - 1)
    throw std::domain_error("count_topes_with_negpart_and_qsize: negative part size " +
                            std::to_string(j) + " outside [1," + std::to_string(t - 1) + "]");
  check_odd_positive(ell, "count_topes_with_negpart_and_qsize: support size");
  const int h = (ell - 1) / 2;
  // Zero convention makes this vanish exactly outside h <= j <= t - h.
  return binomial(j - 1, h) * binomial(t - j, h) + binomial(t - j - 1, h) * binomial(j, h);
}

const char* boundary_case_name(BoundaryCase c) {
  switch (c) {
    case BoundaryCase::kI: return "i";
    case BoundaryCase::kII: return "ii";
    case BoundaryCase::kIII: return "iii";
    case BoundaryCase::kIV: return "iv";
    case BoundaryCase::kV: return "v";
    case BoundaryCase::kVI: return "vi";
    case BoundaryCase::kVII: return "vii";
    case BoundaryCase::kVIII: return "viii";
    case BoundaryCase::kIX: return "ix";
  }
  throw std::logic_error("boundary_case_name: bad case");
}

BoundaryCase parse_boundary_case(const std::string& name) {
  for (BoundaryCase c : kAllBoundaryCases)
    if (name == boundary_case_name(c)) return c;
  throw std::invalid_argument("parse_boundary_case: unknown case '" + name + "'");
}

BoundaryCase boundary_case_of(SubsetMask a, SubsetMask b, int t) {
  check_ground_size(t);
  if (!a.disjoint_with(b)) throw std::domain_error("boundary_case_of: sets intersect");
  const bool a1 = a.contains(1), at = a.contains(t);
  const bool b1 = b.contains(1), bt = b.contains(t);
  if (a1 && at) return BoundaryCase::kII;
  if (b1 && bt) return BoundaryCase::kVI;
  if (a1 && bt) return BoundaryCase::kV;
  if (at && b1) return BoundaryCase::kIX;
  if (a1) return BoundaryCase::kIV;
  if (at) return BoundaryCase::kVII;
  if (b1) return BoundaryCase::kVIII;
  if (bt) return BoundaryCase::kIII;
  return BoundaryCase::kI;
}

void PairQuery::validate() const {
  check_ground_size(t);
  if (j_prime < 1 || j_double_prime < 1 || j_prime + j_double_prime >= t)
    throw std::domain_error("PairQuery: set sizes must be positive with sum below " +
                            std::to_string(t));
  check_odd_positive(ell_prime, "PairQuery: ell_prime");
  check_odd_positive(ell_double_prime, "PairQuery: ell_double_prime");
  check_odd_positive(ell, "PairQuery: ell");
}

namespace {

// Endpoint pin on the run word of a pair class: the word starts/ends with a
// complement run (kFree), an A run (kAlphaRun), or a B run (kBetaRun).
enum class EndPin { kFree, kAlphaRun, kBetaRun };

// Number of run words with m complement runs, p A-runs and q B-runs under
// the given endpoint pins.  Splitting the word at its complement runs
// leaves maximal nonempty stretches in which A- and B-runs alternate; each
// stretch is determined by its surplus side and its leading run except that
// a balanced interior stretch may lead with either side.  Summing over the
// surplus patterns of the m-1 interior stretches (x A-heavy, y B-heavy, z
// balanced) and the pinned end stretches, the leftover A/B run pairs spread
// over the stretches as a composition, balanced stretches taking at least
// one pair.  This is the same derivation as smirnov_count_closed but coded
// independently, without canonicalization, in the pair formulas' variables.
CheckedInt run_word_count(int m, int p, int q, EndPin lead, EndPin trail) {
  if (m == 0) {
    // no complement run: the whole word is one alternating stretch
    if (lead == EndPin::kFree || trail == EndPin::kFree) return 0;
    const bool lead_a = lead == EndPin::kAlphaRun, trail_a = trail == EndPin::kAlphaRun;
    if (lead_a && trail_a) return p == q + 1 ? 1 : 0;
    if (!lead_a && !trail_a) return q == p + 1 ? 1 : 0;
    return p == q && p >= 1 ? 1 : 0;
  }
  if (m == 1 && lead == EndPin::kFree && trail == EndPin::kFree)
    return p == 0 && q == 0 ? 1 : 0;  // the single-complement-run word

  const int g = m - 1, d = p - q;
  const int stretches = g + (lead != EndPin::kFree) + (trail != EndPin::kFree);
  CheckedInt total = 0;
  // end-stretch surplus options: a pinned end is heavy on its own side or
  // balanced (the latter consuming one of the leftover pairs)
  auto options = [](EndPin pin) -> std::vector<std::pair<int, int>> {
    // (surplus toward A, forced pairs)
    if (pin == EndPin::kFree) return {{0, 0}};
    if (pin == EndPin::kAlphaRun) return {{+1, 0}, {0, 1}};
    return {{-1, 0}, {0, 1}};
  };
  for (const auto& [lead_surplus, lead_forced] : options(lead))
    for (const auto& [trail_surplus, trail_forced] : options(trail))
      for (int y = 0; y <= g; ++y) {
        const int x = y + d - lead_surplus - trail_surplus, z = g - x - y;
        if (x < 0 || z < 0) continue;
        const int pairs = q - y - (lead_surplus < 0) - (trail_surplus < 0);
        const int extra = pairs - z - lead_forced - trail_forced;
        total += binomial(g, x) * binomial(g - x, y) * pow2(z) *
                 binomial(extra + stretches - 1, stretches - 1);
      }
  return total;
}

}  // namespace

CheckedInt count_pairs_case(const PairQuery& q, BoundaryCase c) {
  q.validate();
  const int t = q.t;
  const int jp = q.j_prime, jpp = q.j_double_prime;
  const int lp = q.ell_prime, lpp = q.ell_double_prime, l = q.ell;

  auto pre = [&](int x, int y, int z) {
    return binomial(t - (jp + jpp) - 1, x) * binomial(jp - 1, y) * binomial(jpp - 1, z);
  };

  // Each case fixes the endpoint pins of the run word and thereby whether
  // each support size converts to a run count as (ell-1)/2 or (ell+1)/2.
  switch (c) {
    case BoundaryCase::kI:
      return pre(h2(l - 1), h2(lp - 3), h2(lpp - 3)) *
             run_word_count(h2(l + 1), h2(lp - 1), h2(lpp - 1), EndPin::kFree, EndPin::kFree);
    case BoundaryCase::kII:
      return pre(h2(l - 3), h2(lp - 1), h2(lpp - 3)) *
             run_word_count(h2(l - 1), h2(lp + 1), h2(lpp - 1), EndPin::kAlphaRun,
                            EndPin::kAlphaRun);
    case BoundaryCase::kIII:
      return pre(h2(l - 1), h2(lp - 3), h2(lpp - 1)) *
             run_word_count(h2(l + 1), h2(lp - 1), h2(lpp + 1), EndPin::kFree,
                            EndPin::kBetaRun);
    case BoundaryCase::kIV:
      return pre(h2(l - 1), h2(lp - 1), h2(lpp - 3)) *
             run_word_count(h2(l + 1), h2(lp + 1), h2(lpp - 1), EndPin::kAlphaRun,
                            EndPin::kFree);
    case BoundaryCase::kV:
      return pre(h2(l - 3), h2(lp - 1), h2(lpp - 1)) *
             run_word_count(h2(l - 1), h2(lp + 1), h2(lpp + 1), EndPin::kAlphaRun,
                            EndPin::kBetaRun);
    case BoundaryCase::kVI:
      return pre(h2(l - 3), h2(lp - 3), h2(lpp - 1)) *
             run_word_count(h2(l - 1), h2(lp - 1), h2(lpp + 1), EndPin::kBetaRun,
                            EndPin::kBetaRun);
    case BoundaryCase::kVII:
      return pre(h2(l - 1), h2(lp - 1), h2(lpp - 3)) *
             run_word_count(h2(l + 1), h2(lp + 1), h2(lpp - 1), EndPin::kFree,
                            EndPin::kAlphaRun);
    case BoundaryCase::kVIII:
      return pre(h2(l - 1), h2(lp - 3), h2(lpp - 1)) *
             run_word_count(h2(l + 1), h2(lp - 1), h2(lpp + 1), EndPin::kBetaRun,
                            EndPin::kFree);
    case BoundaryCase::kIX:
      return pre(h2(l - 3), h2(lp - 1), h2(lpp - 1)) *
             run_word_count(h2(l - 1), h2(lp + 1), h2(lpp + 1), EndPin::kBetaRun,
                            EndPin::kAlphaRun);
  }
  throw std::logic_error("count_pairs_case: bad case");
}

CheckedInt count_pairs_case_structural(const PairQuery& q, BoundaryCase c) {
  q.validate();
  const int lp = q.ell_prime, lpp = q.ell_double_prime, l = q.ell;

  struct Shape {
    Letter start;
    Letter end;
    int n_theta, n_alpha, n_beta;
  };
  const Shape shape = [&]() -> Shape {
    switch (c) {
      case BoundaryCase::kI:
        return {Letter::kTheta, Letter::kTheta, h2(l + 1), h2(lp - 1), h2(lpp - 1)};
      case BoundaryCase::kII:
        return {Letter::kAlpha, Letter::kAlpha, h2(l - 1), h2(lp + 1), h2(lpp - 1)};
      case BoundaryCase::kIII:
        return {Letter::kTheta, Letter::kBeta, h2(l + 1), h2(lp - 1), h2(lpp + 1)};
      case BoundaryCase::kIV:
        return {Letter::kAlpha, Letter::kTheta, h2(l + 1), h2(lp + 1), h2(lpp - 1)};
      case BoundaryCase::kV:
        return {Letter::kAlpha, Letter::kBeta, h2(l - 1), h2(lp + 1), h2(lpp + 1)};
      case BoundaryCase::kVI:
        return {Letter::kBeta, Letter::kBeta, h2(l - 1), h2(lp - 1), h2(lpp + 1)};
      case BoundaryCase::kVII:
        return {Letter::kTheta, Letter::kAlpha, h2(l + 1), h2(lp + 1), h2(lpp - 1)};
      case BoundaryCase::kVIII:
        return {Letter::kBeta, Letter::kTheta, h2(l + 1), h2(lp - 1), h2(lpp + 1)};
      case BoundaryCase::kIX:
        return {Letter::kBeta, Letter::kAlpha, h2(l - 1), h2(lp + 1), h2(lpp + 1)};
    }
    throw std::logic_error("count_pairs_case_structural: bad case");
  }();

  LetterCounts counts{shape.n_theta, shape.n_alpha, shape.n_beta};
  return smirnov_count_closed(shape.start, shape.end, counts) *
         composition_count(shape.n_theta, q.t - (q.j_prime + q.j_double_prime)) *
         composition_count(shape.n_alpha, q.j_prime) *
         composition_count(shape.n_beta, q.j_double_prime);
}

CheckedInt count_pairs_total(const PairQuery& q) {
  CheckedInt total = 0;
  for (BoundaryCase c : kAllBoundaryCases) total += count_pairs_case(q, c);
  return total;
}

// ----- brute force -----

namespace {

int clamp_threads(int threads, unsigned long long work) {
  if (threads < 1) throw std::domain_error("worker count must be >= 1");
  unsigned long long w = static_cast<unsigned long long>(threads);
  if (w > work) w = work == 0 ? 1 : work;
  return static_cast<int>(w);
}

template <typename Key>
std::map<Key, CheckedInt> merge_tallies(std::vector<std::map<Key, CheckedInt>>& parts) {
  std::map<Key, CheckedInt> merged;
  for (auto& part : parts)
    for (auto& [key, count] : part) merged[key] += count;
  return merged;
}

}  // namespace

std::map<TopeClass, CheckedInt> brute_force_topes(int t, int threads) {
  check_ground_size(t);
  if (t > kTopeEnumerationCap)
    throw ResourceLimitError("brute_force_topes: " + std::to_string(t) + " exceeds cap " +
                             std::to_string(kTopeEnumerationCap));
  const std::uint64_t n = std::uint64_t{1} << t;
  const int workers = clamp_threads(threads, n);

  std::vector<std::map<TopeClass, CheckedInt>> parts(static_cast<std::size_t>(workers));
  auto run = [&](int w) {
    std::uint64_t lo = n / workers * w + std::min<std::uint64_t>(w, n % workers);
    std::uint64_t hi = lo + n / workers + (static_cast<std::uint64_t>(w) < n % workers);
    auto& tally = parts[static_cast<std::size_t>(w)];
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      Tope tope{t, mask};
      tally[TopeClass{std::popcount(mask), q_size(tope)}] += 1;
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  return merge_tallies(parts);
}

std::map<PairClass, CheckedInt> brute_force_pairs(int t, int cap, int threads) {
  check_ground_size(t);
  if (t > cap)
    throw ResourceLimitError("brute_force_pairs: " + std::to_string(t) + " exceeds cap " +
                             std::to_string(cap));
  unsigned __int128 n128 = 1;
  for (int e = 0; e < t; ++e) n128 *= 3;
  if (n128 > ~std::uint64_t{0})
    throw ResourceLimitError("brute_force_pairs: 3^" + std::to_string(t) +
                             " assignments do not fit an index");
  const std::uint64_t n = static_cast<std::uint64_t>(n128);
  const std::uint64_t full = (std::uint64_t{1} << t) - 1;
  const int workers = clamp_threads(threads, n);

  std::vector<std::map<PairClass, CheckedInt>> parts(static_cast<std::size_t>(workers));
  auto run = [&](int w) {
    std::uint64_t lo = n / workers * w + std::min<std::uint64_t>(w, n % workers);
    std::uint64_t hi = lo + n / workers + (static_cast<std::uint64_t>(w) < n % workers);
    auto& tally = parts[static_cast<std::size_t>(w)];

    // odometer over base-3 digits: 0 = outside, 1 = in A, 2 = in B
    std::vector<int> trits(static_cast<std::size_t>(t), 0);
    std::uint64_t seed = lo;
    for (int e = 0; e < t; ++e) {
      trits[static_cast<std::size_t>(e)] = static_cast<int>(seed % 3);
      seed /= 3;
    }
    for (std::uint64_t index = lo; index < hi; ++index) {
      std::uint64_t a = 0, b = 0;
      for (int e = 0; e < t; ++e) {
        if (trits[static_cast<std::size_t>(e)] == 1) a |= std::uint64_t{1} << e;
        if (trits[static_cast<std::size_t>(e)] == 2) b |= std::uint64_t{1} << e;
      }
      if (a != 0 && b != 0 && (a | b) != full) {
        PairClass cls;
        cls.j_prime = std::popcount(a);
        cls.j_double_prime = std::popcount(b);
        cls.ell_prime = q_size(Tope{t, a});
        cls.ell_double_prime = q_size(Tope{t, b});
        cls.ell = q_size(Tope{t, a | b});
        cls.boundary_case = boundary_case_of(SubsetMask{a}, SubsetMask{b}, t);
        tally[cls] += 1;
      }
      // advance the odometer
      for (int e = 0; e < t; ++e) {
        auto& d = trits[static_cast<std::size_t>(e)];
        if (++d < 3) break;
        d = 0;
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  return merge_tallies(parts);
}

}  // namespace topes

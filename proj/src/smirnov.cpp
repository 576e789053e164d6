#include "topes/smirnov.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>

namespace topes {

namespace {

void check_counts(const LetterCounts& counts, const char* what) {
  if (counts.n_theta < 0 || counts.n_alpha < 0 || counts.n_beta < 0)
    throw std::domain_error(std::string(what) + ": negative letter multiplicity");
}

}  // namespace

const char* letter_name(Letter s) {
  switch (s) {
    case Letter::kTheta: return "theta";
    case Letter::kAlpha: return "alpha";
    case Letter::kBeta: return "beta";
  }
  throw std::logic_error("letter_name: bad letter");
}

char letter_char(Letter s) { return letter_name(s)[0]; }

Letter parse_letter(const std::string& name) {
  for (Letter s : kAllLetters)
    if (name == letter_name(s)) return s;
  throw std::invalid_argument("parse_letter: unknown letter '" + name + "'");
}

int LetterCounts::of(Letter s) const {
  switch (s) {
    case Letter::kTheta: return n_theta;
    case Letter::kAlpha: return n_alpha;
    case Letter::kBeta: return n_beta;
  }
  throw std::logic_error("LetterCounts::of: bad letter");
}

int& LetterCounts::of(Letter s) {
  switch (s) {
    case Letter::kTheta: return n_theta;
    case Letter::kAlpha: return n_alpha;
    case Letter::kBeta: return n_beta;
  }
  throw std::logic_error("LetterCounts::of: bad letter");
}

LetterCounts SmirnovWord::counts() const {
  LetterCounts c;
  for (Letter s : letters) ++c.of(s);
  return c;
}

bool SmirnovWord::no_equal_adjacent() const {
  for (std::size_t p = 1; p < letters.size(); ++p)
    if (letters[p] == letters[p - 1]) return false;
  return true;
}

std::string SmirnovWord::str() const {
  std::string out;
  out.reserve(letters.size());
  for (Letter s : letters) out += letter_char(s);
  return out;
}

// ----- compositions -----

CheckedInt composition_count(int m, int n) { return binomial(n - 1, m - 1); }

std::vector<std::vector<int>> enumerate_compositions(int m, int n) {
  std::vector<std::vector<int>> out;
  if (m < 1 || n < m) return out;
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(m));
  auto rec = [&](auto&& self, int remaining_parts, int remaining_sum) -> void {
    if (remaining_parts == 1) {
      parts.push_back(remaining_sum);
      out.push_back(parts);
      parts.pop_back();
      return;
    }
    // leave at least 1 for each later part
    for (int v = 1; v <= remaining_sum - (remaining_parts - 1); ++v) {
      parts.push_back(v);
      self(self, remaining_parts - 1, remaining_sum - v);
      parts.pop_back();
    }
  };
  rec(rec, m, n);
  return out;
}

// ----- dynamic programming -----

CheckedInt smirnov_count_dp(Letter start, Letter end, const LetterCounts& counts) {
  check_counts(counts, "smirnov_count_dp");
  if (counts.total() == 0) return 0;
  if (counts.of(start) == 0) return 0;

  LetterCounts rest = counts;
  --rest.of(start);

  // dp[k][i][j][prev]: words consuming exactly k thetas, i alphas, j betas
  // after a previous letter `prev`, with the final letter equal to `end`.
  const int nk = rest.n_theta, ni = rest.n_alpha, nj = rest.n_beta;
  const std::size_t stride_j = 3;
  const std::size_t stride_i = static_cast<std::size_t>(nj + 1) * stride_j;
  const std::size_t stride_k = static_cast<std::size_t>(ni + 1) * stride_i;
  std::vector<CheckedInt> dp(static_cast<std::size_t>(nk + 1) * stride_k);
  auto at = [&](int k, int i, int j, Letter prev) -> CheckedInt& {
    return dp[static_cast<std::size_t>(k) * stride_k + static_cast<std::size_t>(i) * stride_i +
              static_cast<std::size_t>(j) * stride_j + static_cast<std::size_t>(prev)];
  };

  for (int k = 0; k <= nk; ++k)
    for (int i = 0; i <= ni; ++i)
      for (int j = 0; j <= nj; ++j)
        for (Letter prev : kAllLetters) {
          if (k == 0 && i == 0 && j == 0) {
            at(k, i, j, prev) = prev == end ? 1 : 0;
            continue;
          }
          CheckedInt total = 0;
          if (k > 0 && prev != Letter::kTheta) total += at(k - 1, i, j, Letter::kTheta);
          if (i > 0 && prev != Letter::kAlpha) total += at(k, i - 1, j, Letter::kAlpha);
          if (j > 0 && prev != Letter::kBeta) total += at(k, i, j - 1, Letter::kBeta);
          at(k, i, j, prev) = total;
        }

  return at(nk, ni, nj, start);
}

// ----- closed forms -----

namespace {

// The five directly-implemented endpoint pairs, in the multiplicity order
// (k, i, j) = (#theta, #alpha, #beta).
//
// Splitting a word at its k thetas leaves maximal alternating {alpha,beta}
// segments: k-1 interior ones (always nonempty) plus a lead/trail segment
// when the word does not start/end with theta.  A segment with a alphas and
// b betas exists iff |a-b| <= 1; when a == b either letter may lead (2
// words), otherwise the segment is forced (1 word).  Fix per segment its
// surplus type (alpha-heavy, beta-heavy, balanced) and the count becomes
//   sum over surplus patterns of
//     (#patterns) * 2^(#balanced interior segments) * (#pair distributions),
// where the last factor places the leftover alpha-beta pairs into the
// segments, balanced ones taking at least one pair.  Endpoint constraints
// pin the lead/trail segment types; the zero convention inside binomial()
// silently drops infeasible patterns, making each sum total and exact for
// all multiplicities.
//
// Below: g = #interior segments, d = alpha surplus demanded of the word,
// x/y/z = #alpha-heavy / #beta-heavy / #balanced interior segments.

CheckedInt pow2(int e) {
  CheckedInt r = 1;
  for (int p = 0; p < e; ++p) r *= 2;
  return r;
}

CheckedInt surplus_patterns(int g, int x, int y) {
  return binomial(g, x) * binomial(g - x, y);
}

CheckedInt closed_theta_theta(int k, int i, int j) {
  if (k == 0) return 0;
  if (k == 1) return i == 0 && j == 0 ? 1 : 0;
  const int g = k - 1, d = i - j;
  CheckedInt total = 0;
  for (int y = 0; y <= g; ++y) {
    const int x = y + d, z = g - x - y;
    if (x < 0 || z < 0) continue;
    // j - y leftover pairs over g segments, z of which need one
    total += surplus_patterns(g, x, y) * pow2(z) * binomial(j - y - z + g - 1, g - 1);
  }
  return total;
}

CheckedInt closed_theta_beta(int k, int i, int j) {
  if (k == 0) return 0;
  const int g = k - 1, d = i - j;
  CheckedInt total = 0;
  for (int y = 0; y <= g; ++y) {
    // trail segment beta-heavy (no forced pair) or balanced (one forced pair);
    // either way the pair-distribution binomial collapses to the same shape.
    for (int trail_heavy = 0; trail_heavy <= 1; ++trail_heavy) {
      const int x = y + d + trail_heavy, z = g - x - y;
      if (x < 0 || z < 0) continue;
      total += surplus_patterns(g, x, y) * pow2(z) * binomial(j - y - z - 1 + g, g);
    }
  }
  return total;
}

CheckedInt closed_alpha_theta(int k, int i, int j) {
  if (k == 0) return 0;
  const int g = k - 1, d = i - j;
  CheckedInt total = 0;
  for (int y = 0; y <= g; ++y) {
    for (int lead_heavy = 0; lead_heavy <= 1; ++lead_heavy) {
      const int x = y + d - lead_heavy, z = g - x - y;
      if (x < 0 || z < 0) continue;
      total += surplus_patterns(g, x, y) * pow2(z) *
               binomial(j - y - z - 1 + lead_heavy + g, g);
    }
  }
  return total;
}

CheckedInt closed_alpha_alpha(int k, int i, int j) {
  if (k == 0) return i == j + 1 ? 1 : 0;  // one alternating segment, alpha at both ends
  const int g = k - 1, d = i - j;
  CheckedInt total = 0;
  for (int y = 0; y <= g; ++y)
    for (int lead_heavy = 0; lead_heavy <= 1; ++lead_heavy)
      for (int trail_heavy = 0; trail_heavy <= 1; ++trail_heavy) {
        const int x = y + d - lead_heavy - trail_heavy, z = g - x - y;
        if (x < 0 || z < 0) continue;
        total += surplus_patterns(g, x, y) * pow2(z) *
                 binomial(j - y - z - 2 + lead_heavy + trail_heavy + g + 1, g + 1);
      }
  return total;
}

CheckedInt closed_alpha_beta(int k, int i, int j) {
  if (k == 0) return i == j && i >= 1 ? 1 : 0;  // one alternating segment, alpha to beta
  const int g = k - 1, d = i - j;
  CheckedInt total = 0;
  for (int y = 0; y <= g; ++y)
    for (int lead_heavy = 0; lead_heavy <= 1; ++lead_heavy)
      for (int trail_heavy = 0; trail_heavy <= 1; ++trail_heavy) {
        const int x = y + d - lead_heavy + trail_heavy, z = g - x - y;
        if (x < 0 || z < 0) continue;
        total += surplus_patterns(g, x, y) * pow2(z) *
                 binomial(j - y - z - 2 + lead_heavy + g + 1, g + 1);
      }
  return total;
}

struct CanonicalQuery {
  Letter start;
  Letter end;
  LetterCounts counts;
};

// Reduces any endpoint pair to one of the five directly implemented ones by a
// letter permutation; multiplicities travel with the letters.
CanonicalQuery canonicalize(Letter start, Letter end, const LetterCounts& counts) {
  auto relabel = [&](Letter a, Letter b) {
    // transposition swapping letters a and b
    auto pi = [&](Letter s) { return s == a ? b : s == b ? a : s; };
    CanonicalQuery q{pi(start), pi(end), LetterCounts{}};
    for (Letter s : kAllLetters) q.counts.of(pi(s)) = counts.of(s);
    return q;
  };
  if (start == Letter::kTheta && end == Letter::kAlpha)
    return relabel(Letter::kAlpha, Letter::kBeta);  // -> (theta, beta)
  if (start == Letter::kBeta && end == Letter::kBeta)
    return relabel(Letter::kTheta, Letter::kBeta);  // -> (theta, theta)
  if (start == Letter::kBeta && end == Letter::kTheta)
    return relabel(Letter::kAlpha, Letter::kBeta);  // -> (alpha, theta)
  if (start == Letter::kBeta && end == Letter::kAlpha)
    return relabel(Letter::kAlpha, Letter::kBeta);  // -> (alpha, beta)
  return CanonicalQuery{start, end, counts};
}

}  // namespace

CheckedInt smirnov_count_closed(Letter start, Letter end, const LetterCounts& counts) {
  check_counts(counts, "smirnov_count_closed");
  CanonicalQuery q = canonicalize(start, end, counts);
  const int k = q.counts.n_theta, i = q.counts.n_alpha, j = q.counts.n_beta;

  if (q.start == Letter::kTheta && q.end == Letter::kTheta) return closed_theta_theta(k, i, j);
  if (q.start == Letter::kTheta && q.end == Letter::kBeta) return closed_theta_beta(k, i, j);
  if (q.start == Letter::kAlpha && q.end == Letter::kAlpha) return closed_alpha_alpha(k, i, j);
  if (q.start == Letter::kAlpha && q.end == Letter::kTheta) return closed_alpha_theta(k, i, j);
  if (q.start == Letter::kAlpha && q.end == Letter::kBeta) return closed_alpha_beta(k, i, j);
  throw std::logic_error("smirnov_count_closed: canonicalization missed a pair");
}

// ----- enumeration -----

std::vector<SmirnovWord> smirnov_enumerate(const LetterCounts& counts, int cap) {
  check_counts(counts, "smirnov_enumerate");
  if (counts.total() > cap)
    throw ResourceLimitError("smirnov_enumerate: total " + std::to_string(counts.total()) +
                             " exceeds cap " + std::to_string(cap));
  std::vector<SmirnovWord> out;
  if (counts.total() == 0) return out;

  // Try-order alpha, beta, theta yields lexicographic order of spelled names.
  constexpr Letter kLexOrder[] = {Letter::kAlpha, Letter::kBeta, Letter::kTheta};
  LetterCounts left = counts;
  SmirnovWord word;
  auto rec = [&](auto&& self) -> void {
    if (left.total() == 0) {
      out.push_back(word);
      return;
    }
    for (Letter s : kLexOrder) {
      if (left.of(s) == 0) continue;
      if (!word.letters.empty() && word.letters.back() == s) continue;
      --left.of(s);
      word.letters.push_back(s);
      self(self);
      word.letters.pop_back();
      ++left.of(s);
    }
  };
  rec(rec);
  return out;
}

// ----- generating function series -----

namespace {

// Dense truncated power series in u, v, w up to a total-degree cap.
class TriSeries {
 public:
  explicit TriSeries(int cap) : cap_(cap), dim_(static_cast<std::size_t>(cap) + 1),
                                coeff_(dim_ * dim_ * dim_) {}

  CheckedInt& at(int k, int i, int j) {
    return coeff_[(static_cast<std::size_t>(k) * dim_ + static_cast<std::size_t>(i)) * dim_ +
                  static_cast<std::size_t>(j)];
  }
  const CheckedInt& at(int k, int i, int j) const {
    return coeff_[(static_cast<std::size_t>(k) * dim_ + static_cast<std::size_t>(i)) * dim_ +
                  static_cast<std::size_t>(j)];
  }
  int cap() const { return cap_; }

  bool all_zero() const {
    for (const CheckedInt& c : coeff_)
      if (!c.is_zero()) return false;
    return true;
  }

  // this * (uv + uw + vw + 2uvw), truncated to the cap
  TriSeries times_kernel() const {
    TriSeries out(cap_);
    for (int k = 0; k <= cap_; ++k)
      for (int i = 0; k + i <= cap_; ++i)
        for (int j = 0; k + i + j <= cap_; ++j) {
          const CheckedInt& c = at(k, i, j);
          if (c.is_zero()) continue;
          int n = k + i + j;
          if (n + 2 <= cap_) {
            out.at(k + 1, i + 1, j) += c;
            out.at(k + 1, i, j + 1) += c;
            out.at(k, i + 1, j + 1) += c;
          }
          if (n + 3 <= cap_) out.at(k + 1, i + 1, j + 1) += c * 2;
        }
    return out;
  }

  void add(const TriSeries& o) {
    for (std::size_t p = 0; p < coeff_.size(); ++p) coeff_[p] += o.coeff_[p];
  }

 private:
  int cap_;
  std::size_t dim_;
  std::vector<CheckedInt> coeff_;
};

// Geometric expansion of 1 / (1 - (uv + uw + vw + 2uvw)).
TriSeries denominator_series(int cap) {
  TriSeries acc(cap);
  TriSeries power(cap);
  power.at(0, 0, 0) = 1;
  acc.add(power);
  while (true) {
    power = power.times_kernel();
    if (power.all_zero()) break;
    acc.add(power);
  }
  return acc;
}

}  // namespace

CheckedInt gf_coefficient(Letter end, int k, int i, int j, int cap) {
  if (k < 0 || i < 0 || j < 0) throw std::domain_error("gf_coefficient: negative exponent");
  if (k + i + j > cap)
    throw ResourceLimitError("gf_coefficient: total degree " + std::to_string(k + i + j) +
                             " exceeds series cap " + std::to_string(cap));

  TriSeries geom = denominator_series(cap);

  // numerator terms (du, dv, dw, coefficient) per target function
  struct Term {
    int du, dv, dw, c;
  };
  const std::array<Term, 2> terms = [&]() -> std::array<Term, 2> {
    switch (end) {
      case Letter::kTheta:
        return {Term{1, 0, 0, +1}, Term{1, 1, 1, -1}};  // u(1 - vw)
      case Letter::kAlpha:
        return {Term{1, 1, 0, +1}, Term{1, 1, 1, +1}};  // uv(1 + w)
      case Letter::kBeta:
        return {Term{1, 0, 1, +1}, Term{1, 1, 1, +1}};  // uw(1 + v)
    }
    throw std::logic_error("gf_coefficient: bad letter");
  }();

  CheckedInt result = 0;
  for (const Term& term : terms) {
    int rk = k - term.du, ri = i - term.dv, rj = j - term.dw;
    if (rk < 0 || ri < 0 || rj < 0) continue;
    result += CheckedInt(term.c) * geom.at(rk, ri, rj);
  }
  return result;
}

// ----- pair <-> word bijection -----

const std::vector<int>& CompositionTriple::of(Letter s) const {
  switch (s) {
    case Letter::kTheta: return parts_theta;
    case Letter::kAlpha: return parts_alpha;
    case Letter::kBeta: return parts_beta;
  }
  throw std::logic_error("CompositionTriple::of: bad letter");
}

std::vector<int>& CompositionTriple::of(Letter s) {
  switch (s) {
    case Letter::kTheta: return parts_theta;
    case Letter::kAlpha: return parts_alpha;
    case Letter::kBeta: return parts_beta;
  }
  throw std::logic_error("CompositionTriple::of: bad letter");
}

std::pair<SmirnovWord, CompositionTriple> encode_pair(SubsetMask a, SubsetMask b, int t) {
  check_ground_size(t);
  if (!a.disjoint_with(b)) throw std::domain_error("encode_pair: sets are not disjoint");
  if (a.empty() || b.empty()) throw std::domain_error("encode_pair: sets must be nonempty");
  std::uint64_t full = t >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
  if ((a.bits | b.bits) == full)
    throw std::domain_error("encode_pair: union covers the whole ground set");
  if (((a.bits | b.bits) & ~full) != 0)
    throw std::out_of_range("encode_pair: subset has elements beyond " + std::to_string(t));

  auto class_of = [&](int e) {
    return a.contains(e) ? Letter::kAlpha : b.contains(e) ? Letter::kBeta : Letter::kTheta;
  };

  SmirnovWord word;
  CompositionTriple parts;
  int run_start = 1;
  Letter run_class = class_of(1);
  for (int e = 2; e <= t + 1; ++e) {
    Letter cls = e <= t ? class_of(e) : run_class;  // sentinel flush at e = t+1
    if (e <= t && cls == run_class) continue;
    word.letters.push_back(run_class);
    parts.of(run_class).push_back(e - run_start);
    if (e > t) break;
    run_start = e;
    run_class = cls;
  }
  return {word, parts};
}

std::pair<SubsetMask, SubsetMask> decode_pair(const SmirnovWord& word,
                                              const CompositionTriple& parts, int t) {
  check_ground_size(t);
  if (word.length() == 0) throw std::invalid_argument("decode_pair: empty word");
  if (!word.no_equal_adjacent())
    throw std::invalid_argument("decode_pair: adjacent letters repeat");

  LetterCounts mult = word.counts();
  for (Letter s : kAllLetters)
    if (static_cast<int>(parts.of(s).size()) != mult.of(s))
      throw std::invalid_argument(std::string("decode_pair: ") + letter_name(s) +
                                  " has " + std::to_string(parts.of(s).size()) +
                                  " parts for " + std::to_string(mult.of(s)) + " runs");

  long long total = 0;
  for (Letter s : kAllLetters)
    for (int part : parts.of(s)) {
      if (part < 1) throw std::invalid_argument("decode_pair: nonpositive part");
      total += part;
    }
  if (total != t)
    throw std::invalid_argument("decode_pair: parts sum to " + std::to_string(total) +
                                ", ground size is " + std::to_string(t));

  SubsetMask a, b;
  std::array<std::size_t, 3> next{0, 0, 0};
  int e = 1;
  for (Letter s : word.letters) {
    int run = parts.of(s)[next[static_cast<std::size_t>(s)]++];
    for (int p = 0; p < run; ++p, ++e) {
      if (s == Letter::kAlpha) a.add(e);
      if (s == Letter::kBeta) b.add(e);
    }
  }
  return {a, b};
}

}  // namespace topes

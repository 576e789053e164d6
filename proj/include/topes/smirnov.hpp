#pragma once

// Ternary Smirnov words: words over the alphabet {theta, alpha, beta} in
// which adjacent letters always differ.  This module counts them by endpoint
// pair and per-letter multiplicities along three independent routes (closed
// forms, dynamic programming, explicit enumeration), expands the generating
// functions of theta-started words as exact truncated power series, and
// implements the bijection between such words (with run-length compositions)
// and pairs of disjoint subsets of a ground set.
//
// The counting interplay: a pair (A, B) of disjoint nonempty subsets of
// {1,...,t} with A u B proper determines a word by reading the maximal
// constant-class runs left to right (theta = outside both, alpha = in A,
// beta = in B) plus one composition per letter recording run lengths.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "topes/checked_int.hpp"
#include "topes/core.hpp"

namespace topes {

enum class Letter : std::uint8_t { kTheta = 0, kAlpha = 1, kBeta = 2 };

inline constexpr Letter kAllLetters[] = {Letter::kTheta, Letter::kAlpha, Letter::kBeta};

const char* letter_name(Letter s);   // "theta" / "alpha" / "beta"
char letter_char(Letter s);          // 't' / 'a' / 'b'
Letter parse_letter(const std::string& name);  // accepts the spelled-out names

// Per-letter multiplicities of a word.
struct LetterCounts {
  int n_theta = 0;
  int n_alpha = 0;
  int n_beta = 0;

  int of(Letter s) const;
  int& of(Letter s);
  int total() const { return n_theta + n_alpha + n_beta; }

  friend bool operator==(LetterCounts, LetterCounts) = default;
};

struct SmirnovWord {
  std::vector<Letter> letters;

  int length() const { return static_cast<int>(letters.size()); }
  Letter first() const { return letters.front(); }
  Letter last() const { return letters.back(); }
  LetterCounts counts() const;
  bool no_equal_adjacent() const;
  std::string str() const;  // one char per letter

  friend bool operator==(const SmirnovWord&, const SmirnovWord&) = default;
};

inline constexpr int kDefaultEnumerationCap = 14;
inline constexpr int kDefaultSeriesCap = 16;

// Number of compositions of n into m positive parts: binomial(n-1, m-1) with
// the zero convention (so 0 when m < 1 or n < m).
CheckedInt composition_count(int m, int n);

// All compositions of n into m positive parts, lexicographic.  Ground-truth
// counterpart of composition_count for small n.
std::vector<std::vector<int>> enumerate_compositions(int m, int n);

// Smirnov words with the given endpoints and multiplicities, counted by
// dynamic programming over (remaining multiplicities, previous letter).
// Returns 0 for infeasible inputs, including total 0.
CheckedInt smirnov_count_dp(Letter start, Letter end, const LetterCounts& counts);

// Same quantity in closed form.  Splitting a word at its thetas leaves
// maximal nonempty alternating {alpha,beta} segments, which turns the count
// into a short sum of binomial products over segment surplus patterns.  Five
// endpoint pairs are implemented directly; the other four reduce to them by
// relabeling the alphabet (a letter permutation applied to endpoints and
// multiplicities alike).
CheckedInt smirnov_count_closed(Letter start, Letter end, const LetterCounts& counts);

// All Smirnov words with the given multiplicities, in lexicographic order of
// their spelled-out letters (alpha < beta < theta).  Throws
// ResourceLimitError when the total exceeds the cap.
std::vector<SmirnovWord> smirnov_enumerate(const LetterCounts& counts,
                                           int cap = kDefaultEnumerationCap);

// Coefficient of u^k v^i w^j in the generating function of theta-started
// Smirnov words ending with `end`, where u, v, w mark theta, alpha, beta.
// Computed by exact truncated series expansion of the rational solutions of
// the transfer system
//   f_theta = u + u f_alpha + u f_beta
//   f_alpha = v f_theta + v f_beta
//   f_beta  = w f_theta + w f_alpha
// namely f_theta = u(1-vw)/D, f_alpha = uv(1+w)/D, f_beta = uw(1+v)/D with
// D = 1 - (uv + uw + vw + 2uvw).  Throws ResourceLimitError when k+i+j
// exceeds the series cap.
CheckedInt gf_coefficient(Letter end, int k, int i, int j, int cap = kDefaultSeriesCap);

// Run lengths of a word's occurrences of each letter, in run order.
struct CompositionTriple {
  std::vector<int> parts_theta;
  std::vector<int> parts_alpha;
  std::vector<int> parts_beta;

  const std::vector<int>& of(Letter s) const;
  std::vector<int>& of(Letter s);

  friend bool operator==(const CompositionTriple&, const CompositionTriple&) = default;
};

// Reads the run structure of (A, B) over {1,...,t}.  Requires A, B disjoint
// and nonempty with A u B proper; throws std::domain_error otherwise.
std::pair<SmirnovWord, CompositionTriple> encode_pair(SubsetMask a, SubsetMask b, int t);

// Inverse of encode_pair.  Requires per-letter part counts matching the
// word's multiplicities and parts summing to t; throws std::invalid_argument
// on arity or sum mismatch.
std::pair<SubsetMask, SubsetMask> decode_pair(const SmirnovWord& word,
                                              const CompositionTriple& parts, int t);

}  // namespace topes

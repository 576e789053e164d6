#pragma once

// Exhaustive invariant suites behind the command-line `verify` command.
// Each suite sweeps every object of its kind up to a requested ground size
// (or word total) and cross-checks independent computation routes against
// each other.  Suites collect failure counts plus the first few
// counterexamples verbatim; they throw ResourceLimitError instead of
// starting an enumeration beyond the configured caps.

#include <string>
#include <vector>

#include "topes/core.hpp"

namespace topes {

inline constexpr int kMaxStoredCounterexamples = 10;

struct VerifyReport {
  std::string suite;
  long long checks = 0;
  long long failure_count = 0;
  std::vector<std::string> counterexamples;  // first kMaxStoredCounterexamples only
  std::vector<std::string> notes;

  bool passed() const { return failure_count == 0; }

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++checks;
    if (ok) return;
    ++failure_count;
    if (counterexamples.size() < kMaxStoredCounterexamples)
      counterexamples.push_back(describe());
  }
};

struct VerifyOptions {
  int t_max = 8;
  int threads = 1;
  int cap_pow2 = 16;  // limit for suites enumerating 2^t objects
  int cap_pow3 = 14;  // limit for suites enumerating 3^t objects
};

enum class Suite { kDecomp, kIdentities, kSmirnov, kPairs };

const char* suite_name(Suite s);
// "all" expands to every suite; otherwise the named one.
std::vector<Suite> parse_suites(const std::string& name);

// decomp: every tope round-trips through decompose/recompose with odd support
// and matching support statistics; cycle vertices are pairwise adjacent in
// sequence and antipodal across half a period.
VerifyReport verify_decomposition(const VerifyOptions& opt);

// identities: merging disjoint negative parts, reading coefficients from a
// negative part, and propagating to a superset all agree with decompose.
VerifyReport verify_identities(const VerifyOptions& opt);

// smirnov: closed forms = DP = enumeration on all endpoint pairs; series
// coefficients = DP; endpoint reversal symmetry; composition counts match
// the explicit enumerator.  Word totals sweep up to t_max.
VerifyReport verify_smirnov(const VerifyOptions& opt);

// pairs: brute-force pair tallies = closed forms = structural products, no
// nonzero closed-form value outside the observed classes, marginal totals,
// and the word/composition encoding round-trip with per-class counts.
VerifyReport verify_pairs(const VerifyOptions& opt);

VerifyReport run_suite(Suite s, const VerifyOptions& opt);

}  // namespace topes

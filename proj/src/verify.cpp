#include "topes/verify.hpp"

#include <bit>
#include <map>
#include <sstream>
#include <tuple>

#include "topes/identities.hpp"
#include "topes/smirnov.hpp"
#include "topes/statistics.hpp"

namespace topes {

namespace {

void require_cap(int t_max, int cap, const char* suite) {
  if (t_max > cap)
    throw ResourceLimitError(std::string(suite) + ": t_max " + std::to_string(t_max) +
                             " exceeds enumeration cap " + std::to_string(cap) +
                             " (raise it explicitly to proceed)");
  if (t_max < kMinGroundSize)
    throw std::domain_error(std::string(suite) + ": t_max below " +
                            std::to_string(kMinGroundSize));
}

std::string describe_tope(const Tope& tope) {
  return "t=" + std::to_string(tope.t) + " tope=" + tope.str();
}

}  // namespace

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::kDecomp: return "decomp";
    case Suite::kIdentities: return "identities";
    case Suite::kSmirnov: return "smirnov";
    case Suite::kPairs: return "pairs";
  }
  throw std::logic_error("suite_name: bad suite");
}

std::vector<Suite> parse_suites(const std::string& name) {
  if (name == "all")
    return {Suite::kDecomp, Suite::kIdentities, Suite::kSmirnov, Suite::kPairs};
  for (Suite s : {Suite::kDecomp, Suite::kIdentities, Suite::kSmirnov, Suite::kPairs})
    if (name == suite_name(s)) return {s};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

VerifyReport run_suite(Suite s, const VerifyOptions& opt) {
  switch (s) {
    case Suite::kDecomp: return verify_decomposition(opt);
    case Suite::kIdentities: return verify_identities(opt);
    case Suite::kSmirnov: return verify_smirnov(opt);
    case Suite::kPairs: return verify_pairs(opt);
  }
  throw std::logic_error("run_suite: bad suite");
}

// ----- decomp -----

VerifyReport verify_decomposition(const VerifyOptions& opt) {
  VerifyReport report;
  report.suite = "decomp";
  require_cap(opt.t_max, opt.cap_pow2, "decomp");

  for (int t = kMinGroundSize; t <= opt.t_max; ++t) {
    // cycle structure: consecutive vertices differ in one element, opposite
    // vertices are negations
    for (int k = 0; k < 2 * t; ++k) {
      Tope here = cycle_vertex(t, k);
      Tope next = cycle_vertex(t, (k + 1) % (2 * t));
      report.expect(separation_set(here, next).size() == 1, [&] {
        return "cycle edge " + std::to_string(k) + " at t=" + std::to_string(t) +
               " is not an edge";
      });
      if (k < t)
        report.expect(cycle_vertex(t, k + t) == here.negated(), [&] {
          return "cycle vertex " + std::to_string(k + t) + " at t=" + std::to_string(t) +
                 " is not the negation of vertex " + std::to_string(k);
        });
    }

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
      Tope tope{t, mask};
      DecompVector x = decompose(tope);
      report.expect(recompose(x, t) == tope,
                    [&] { return describe_tope(tope) + ": recompose(decompose) differs"; });
      report.expect(x.support_size() % 2 == 1,
                    [&] { return describe_tope(tope) + ": even support " + x.str(); });
      report.expect(x.norm_sq() == x.support_size(),
                    [&] { return describe_tope(tope) + ": norm/support mismatch"; });
      report.expect(q_size(tope) == x.support_size(),
                    [&] { return describe_tope(tope) + ": q_size disagrees with decompose"; });
      report.expect(predicted_q_size(negative_part(tope), t) == x.support_size(), [&] {
        return describe_tope(tope) + ": run statistics predict " +
               std::to_string(predicted_q_size(negative_part(tope), t)) + ", decompose has " +
               std::to_string(x.support_size());
      });
    }
  }
  return report;
}

// ----- identities -----

VerifyReport verify_identities(const VerifyOptions& opt) {
  VerifyReport report;
  report.suite = "identities";
  require_cap(opt.t_max, opt.cap_pow3, "identities");

  for (int t = kMinGroundSize; t <= opt.t_max; ++t) {
    // closed coefficient forms, all negative parts
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
      SubsetMask a{mask};
      report.expect(coefficients_from_negative_set(a, t) == decompose(Tope{t, mask}), [&] {
        return "t=" + std::to_string(t) + " A=" + a.str() +
               ": boundary-type closed form differs from decompose";
      });
    }

    unsigned long long n = 1;
    for (int e = 0; e < t; ++e) n *= 3;

    // disjoint union identity and its support-size version
    for (unsigned long long index = 0; index < n; ++index) {
      std::uint64_t a = 0, b = 0;
      unsigned long long rem = index;
      for (int e = 0; e < t; ++e, rem /= 3) {
        if (rem % 3 == 1) a |= std::uint64_t{1} << e;
        if (rem % 3 == 2) b |= std::uint64_t{1} << e;
      }
      DecompVector xa = decompose(Tope{t, a});
      DecompVector xb = decompose(Tope{t, b});
      Tope joint{t, a | b};
      report.expect(combine_disjoint(xa, xb) == decompose(joint), [&] {
        return "t=" + std::to_string(t) + " A=" + SubsetMask{a}.str() + " B=" +
               SubsetMask{b}.str() + ": disjoint-union coefficients differ";
      });
      report.expect(combined_support(xa, xb) == q_size(joint), [&] {
        return "t=" + std::to_string(t) + " A=" + SubsetMask{a}.str() + " B=" +
               SubsetMask{b}.str() + ": support identity differs";
      });
    }

    // superset propagation over all nested pairs (digit 2: in A; 1: in C only)
    for (unsigned long long index = 0; index < n; ++index) {
      std::uint64_t a = 0, c = 0;
      unsigned long long rem = index;
      for (int e = 0; e < t; ++e, rem /= 3) {
        if (rem % 3 != 0) c |= std::uint64_t{1} << e;
        if (rem % 3 == 2) a |= std::uint64_t{1} << e;
      }
      DecompVector xa = decompose(Tope{t, a});
      report.expect(
          propagate_to_superset(xa, SubsetMask{a}, SubsetMask{c}, t) == decompose(Tope{t, c}),
          [&] {
            return "t=" + std::to_string(t) + " A=" + SubsetMask{a}.str() + " C=" +
                   SubsetMask{c}.str() + ": superset propagation differs";
          });
    }
  }
  return report;
}

// ----- smirnov -----

VerifyReport verify_smirnov(const VerifyOptions& opt) {
  VerifyReport report;
  report.suite = "smirnov";
  const int total_max = opt.t_max;
  require_cap(total_max, opt.cap_pow3, "smirnov");

  for (int total = 1; total <= total_max; ++total) {
    for (int k = 0; k <= total; ++k)
      for (int i = 0; i + k <= total; ++i) {
        int j = total - k - i;
        LetterCounts counts{k, i, j};

        // ground truth: enumerate once, bucket by endpoints
        std::map<std::pair<Letter, Letter>, CheckedInt> buckets;
        for (const SmirnovWord& word : smirnov_enumerate(counts, total_max)) {
          report.expect(word.no_equal_adjacent() && word.counts() == counts, [&] {
            return "enumerated word " + word.str() + " malformed for (" + std::to_string(k) +
                   "," + std::to_string(i) + "," + std::to_string(j) + ")";
          });
          buckets[{word.first(), word.last()}] += 1;
        }

        for (Letter s : kAllLetters)
          for (Letter e : kAllLetters) {
            CheckedInt enumerated = 0;
            if (auto it = buckets.find({s, e}); it != buckets.end()) enumerated = it->second;
            CheckedInt dp = smirnov_count_dp(s, e, counts);
            CheckedInt closed = smirnov_count_closed(s, e, counts);
            auto describe = [&](const char* kind) {
              return [&, kind] {
                return std::string(kind) + " mismatch at (" + letter_name(s) + "," +
                       letter_name(e) + ";" + std::to_string(k) + "," + std::to_string(i) +
                       "," + std::to_string(j) + ")";
              };
            };
            report.expect(dp == enumerated, describe("dp/enumeration"));
            report.expect(closed == enumerated, describe("closed/enumeration"));
            report.expect(smirnov_count_dp(e, s, counts) == dp, describe("reversal"));
            if (s == Letter::kTheta) {
              CheckedInt series = gf_coefficient(e, k, i, j, std::max(total_max, 16));
              report.expect(series == dp, describe("series/dp"));
            }
          }
      }
  }

  // composition counts against the explicit enumerator
  for (int n = 0; n <= total_max; ++n)
    for (int m = 0; m <= n + 1; ++m) {
      CheckedInt count = composition_count(m, n);
      auto all = enumerate_compositions(m, n);
      report.expect(count == CheckedInt(static_cast<long long>(all.size())), [&] {
        return "composition_count(" + std::to_string(m) + "," + std::to_string(n) +
               ") disagrees with enumeration";
      });
    }
  return report;
}

// ----- pairs -----

VerifyReport verify_pairs(const VerifyOptions& opt) {
  VerifyReport report;
  report.suite = "pairs";
  require_cap(opt.t_max, opt.cap_pow3, "pairs");

  for (int t = kMinGroundSize; t <= opt.t_max; ++t) {
    auto tally = brute_force_pairs(t, opt.cap_pow3, opt.threads);

    // every enumerated class agrees with both counting routes
    for (const auto& [cls, count] : tally) {
      PairQuery q{t, cls.j_prime, cls.j_double_prime, cls.ell_prime, cls.ell_double_prime,
                  cls.ell};
      auto describe = [&](const char* kind) {
        return [&, kind] {
          std::ostringstream os;
          os << kind << " mismatch at t=" << t << " j'=" << cls.j_prime
             << " j''=" << cls.j_double_prime << " l'=" << cls.ell_prime
             << " l''=" << cls.ell_double_prime << " l=" << cls.ell << " case "
             << boundary_case_name(cls.boundary_case) << ": enumerated " << count.str();
          return os.str();
        };
      };
      report.expect(count_pairs_case(q, cls.boundary_case) == count, describe("closed form"));
      report.expect(count_pairs_case_structural(q, cls.boundary_case) == count,
                    describe("structural product"));
    }

    // full scan: no phantom nonzero closed-form classes, marginal law
    CheckedInt grand_total = 0;
    std::map<BoundaryCase, CheckedInt> per_case;
    for (int jp = 1; jp + 1 < t; ++jp)
      for (int jpp = 1; jp + jpp < t; ++jpp) {
        CheckedInt marginal = 0;
        for (int lp = 1; lp <= 2 * t + 1; lp += 2)
          for (int lpp = 1; lpp <= 2 * t + 1; lpp += 2)
            for (int l = 1; l <= 2 * t + 1; l += 2) {
              PairQuery q{t, jp, jpp, lp, lpp, l};
              for (BoundaryCase c : kAllBoundaryCases) {
                CheckedInt closed = count_pairs_case(q, c);
                CheckedInt structural = count_pairs_case_structural(q, c);
                CheckedInt enumerated = 0;
                auto it = tally.find(PairClass{jp, jpp, lp, lpp, l, c});
                if (it != tally.end()) enumerated = it->second;
                report.expect(closed == enumerated, [&] {
                  std::ostringstream os;
                  os << "closed form t=" << t << " j'=" << jp << " j''=" << jpp
                     << " l'=" << lp << " l''=" << lpp << " l=" << l << " case "
                     << boundary_case_name(c) << " gives " << closed.str()
                     << ", enumeration gives " << enumerated.str();
                  return os.str();
                });
                report.expect(structural == closed, [&] {
                  std::ostringstream os;
                  os << "structural product t=" << t << " j'=" << jp << " j''=" << jpp
                     << " l'=" << lp << " l''=" << lpp << " l=" << l << " case "
                     << boundary_case_name(c) << " gives " << structural.str()
                     << ", closed form gives " << closed.str();
                  return os.str();
                });
                marginal += closed;
                per_case[c] += closed;
                grand_total += closed;
              }
            }
        report.expect(marginal == binomial(t, jp) * binomial(t - jp, jpp), [&] {
          return "marginal law fails at t=" + std::to_string(t) + " j'=" +
                 std::to_string(jp) + " j''=" + std::to_string(jpp);
        });
      }

    // the word/composition encoding round-trips and reproduces per-class
    // counts from word counts (DP route) times composition counts
    std::map<std::tuple<Letter, Letter, int, int, int, int, int>, CheckedInt> class_sizes;
    unsigned long long n = 1;
    for (int e = 0; e < t; ++e) n *= 3;
    for (unsigned long long index = 0; index < n; ++index) {
      std::uint64_t a = 0, b = 0;
      unsigned long long rem = index;
      for (int e = 0; e < t; ++e, rem /= 3) {
        if (rem % 3 == 1) a |= std::uint64_t{1} << e;
        if (rem % 3 == 2) b |= std::uint64_t{1} << e;
      }
      if (a == 0 || b == 0 || (a | b) == (std::uint64_t{1} << t) - 1) continue;
      SubsetMask sa{a}, sb{b};
      auto [word, parts] = encode_pair(sa, sb, t);
      auto [back_a, back_b] = decode_pair(word, parts, t);
      report.expect(back_a == sa && back_b == sb, [&] {
        return "encode/decode round trip fails at t=" + std::to_string(t) + " A=" + sa.str() +
               " B=" + sb.str();
      });
      LetterCounts counts = word.counts();
      class_sizes[{word.first(), word.last(), counts.n_theta, counts.n_alpha, counts.n_beta,
                   sa.size(), sb.size()}] += 1;
    }
    for (const auto& [key, count] : class_sizes) {
      auto [s, e, nt, na, nb, jp, jpp] = key;
      CheckedInt expected = smirnov_count_dp(s, e, LetterCounts{nt, na, nb}) *
                            composition_count(nt, t - jp - jpp) * composition_count(na, jp) *
                            composition_count(nb, jpp);
      report.expect(expected == count, [&] {
        std::ostringstream os;
        os << "word-class product (" << letter_name(s) << "," << letter_name(e) << ";" << nt
           << "," << na << "," << nb << ") j'=" << jp << " j''=" << jpp << " at t=" << t
           << ": product " << expected.str() << ", enumeration " << count.str();
        return os.str();
      });
    }

    std::ostringstream note;
    note << "t=" << t << " pairs per case:";
    CheckedInt sum = 0;
    for (BoundaryCase c : kAllBoundaryCases) {
      note << " " << boundary_case_name(c) << "=" << per_case[c].str();
      sum += per_case[c];
    }
    note << " total=" << sum.str();
    report.notes.push_back(note.str());
  }
  return report;
}

}  // namespace topes

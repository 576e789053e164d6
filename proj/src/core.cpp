#include "topes/core.hpp"

#include <bit>
#include <string>

namespace topes {

namespace {

std::uint64_t low_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_element(int e, int t, const char* what) {
  if (e < 1 || e > t)
    throw std::out_of_range(std::string(what) + ": element " + std::to_string(e) +
                            " outside [1," + std::to_string(t) + "]");
}

void check_subset(SubsetMask a, int t, const char* what) {
  if ((a.bits & ~low_bits(t)) != 0)
    throw std::out_of_range(std::string(what) + ": subset has elements beyond " +
                            std::to_string(t));
}

void check_tope(const Tope& tope, const char* what) {
  check_ground_size(tope.t);
  check_subset(SubsetMask{tope.neg}, tope.t, what);
}

}  // namespace

void check_ground_size(int t) {
  if (t < kMinGroundSize || t > kMaxGroundSize)
    throw std::domain_error("ground size " + std::to_string(t) + " outside [" +
                            std::to_string(kMinGroundSize) + "," +
                            std::to_string(kMaxGroundSize) + "]");
}

// ----- SubsetMask -----

SubsetMask SubsetMask::of(std::initializer_list<int> elems) {
  SubsetMask m;
  for (int e : elems) {
    check_element(e, kMaxGroundSize, "SubsetMask::of");
    m.add(e);
  }
  return m;
}

int SubsetMask::size() const { return std::popcount(bits); }

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  std::uint64_t b = bits;
  while (b != 0) {
    out.push_back(std::countr_zero(b) + 1);
    b &= b - 1;
  }
  return out;
}

std::string SubsetMask::str() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

// ----- Tope -----

Tope Tope::negated() const { return Tope{t, ~neg & low_bits(t)}; }

std::string Tope::str() const {
  std::string out(static_cast<std::size_t>(t), '+');
  for (int e = 1; e <= t; ++e)
    if (sign(e) < 0) out[static_cast<std::size_t>(e - 1)] = '-';
  return out;
}

Tope positive_tope(int t) {
  check_ground_size(t);
  return Tope{t, 0};
}

Tope negative_tope(int t) {
  check_ground_size(t);
  return Tope{t, low_bits(t)};
}

Tope tope_from_negative_set(int t, SubsetMask a) {
  check_ground_size(t);
  check_subset(a, t, "tope_from_negative_set");
  return Tope{t, a.bits};
}

SubsetMask negative_part(const Tope& tope) {
  check_tope(tope, "negative_part");
  return SubsetMask{tope.neg};
}

Tope cycle_vertex(int t, int k) {
  check_ground_size(t);
  if (k < 0 || k >= 2 * t)
    throw std::out_of_range("cycle_vertex: index " + std::to_string(k) + " outside [0," +
                            std::to_string(2 * t) + ")");
  if (k < t) return Tope{t, low_bits(k)};
  return Tope{t, low_bits(k - t)}.negated();
}

// ----- DecompVector -----

int DecompVector::support_size() const {
  int n = 0;
  for (std::int8_t c : coords) n += c != 0;
  return n;
}

int DecompVector::norm_sq() const {
  int n = 0;
  for (std::int8_t c : coords) n += int{c} * int{c};
  return n;
}

std::string DecompVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(int{coords[i]});
  }
  out += ')';
  return out;
}

// ----- decomposition -----

DecompVector decompose(const Tope& tope) {
  check_tope(tope, "decompose");
  const int t = tope.t;
  DecompVector x;
  x.coords.assign(static_cast<std::size_t>(t), 0);
  int tail = 0;  // x_2 + ... + x_t
  for (int e = 2; e <= t; ++e) {
    int d = (tope.sign(e) - tope.sign(e - 1)) / 2;
    x.coords[static_cast<std::size_t>(e - 1)] = static_cast<std::int8_t>(d);
    tail += d;
  }
  x.coords[0] = static_cast<std::int8_t>(tope.sign(t) - tail);
  return x;
}

Tope recompose(const DecompVector& x, int t) {
  check_ground_size(t);
  if (x.length() != t)
    throw std::invalid_argument("recompose: coefficient length " +
                                std::to_string(x.length()) + " != ground size " +
                                std::to_string(t));
  int support = 0;
  int total = 0;
  for (std::int8_t c : x.coords) {
    if (c < -1 || c > 1) throw std::domain_error("recompose: coefficient outside {-1,0,+1}");
    support += c != 0;
    total += c;
  }
  if (support % 2 == 0) throw std::domain_error("recompose: even coefficient support");

  // Entry e of the recombination is prefix_e - (total - prefix_e).
  Tope tope{t, 0};
  int prefix = 0;
  for (int e = 1; e <= t; ++e) {
    prefix += x.coords[static_cast<std::size_t>(e - 1)];
    int entry = 2 * prefix - total;
    if (entry == -1)
      tope.neg |= std::uint64_t{1} << (e - 1);
    else if (entry != 1)
      throw std::domain_error("recompose: recombined entry " + std::to_string(entry) +
                              " at position " + std::to_string(e) + " is not a sign");
  }
  return tope;
}

QSet q_set(const Tope& tope) {
  DecompVector x = decompose(tope);
  QSet q;
  for (int i = 1; i <= x.length(); ++i) {
    int c = x.coord(i);
    if (c != 0) q.terms.push_back(QTerm{c, i - 1});
  }
  return q;
}

std::string QSet::str() const {
  std::string out;
  for (const QTerm& term : terms) {
    out += term.coeff > 0 ? '+' : '-';
    out += "R^";
    out += std::to_string(term.cycle_index);
  }
  return out;
}

int q_size(const Tope& tope) {
  check_tope(tope, "q_size");
  const int t = tope.t;
  int support = 0;
  int tail = 0;
  for (int e = 2; e <= t; ++e) {
    int d = (tope.sign(e) - tope.sign(e - 1)) / 2;
    support += d != 0;
    tail += d;
  }
  support += (tope.sign(t) - tail) != 0;
  return support;
}

SubsetMask separation_set(const Tope& a, const Tope& b) {
  check_tope(a, "separation_set");
  check_tope(b, "separation_set");
  if (a.t != b.t)
    throw std::invalid_argument("separation_set: ground sizes " + std::to_string(a.t) +
                                " and " + std::to_string(b.t) + " differ");
  return SubsetMask{a.neg ^ b.neg};
}

// ----- run statistics -----

std::vector<IntervalRun> interval_runs(SubsetMask a, int t) {
  check_ground_size(t);
  check_subset(a, t, "interval_runs");
  std::vector<IntervalRun> runs;
  int run_lo = 0;
  for (int e = 1; e <= t; ++e) {
    if (a.contains(e)) {
      if (run_lo == 0) run_lo = e;
    } else if (run_lo != 0) {
      runs.push_back(IntervalRun{run_lo, e - 1});
      run_lo = 0;
    }
  }
  if (run_lo != 0) runs.push_back(IntervalRun{run_lo, t});
  return runs;
}

int interval_run_count(SubsetMask a, int t) {
  check_ground_size(t);
  check_subset(a, t, "interval_run_count");
  // Runs start at elements whose predecessor is absent.
  return std::popcount(a.bits & ~(a.bits << 1));
}

int predicted_q_size(SubsetMask a, int t) {
  int r = interval_run_count(a, t);
  bool touches_boundary = a.contains(1) || a.contains(t);
  return touches_boundary ? 2 * r - 1 : 2 * r + 1;
}

}  // namespace topes

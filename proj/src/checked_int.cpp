#include "topes/checked_int.hpp"

#include <algorithm>
#include <ostream>

namespace topes {

std::string CheckedInt::str() const {
  if (v_ == 0) return "0";
  // Collect digits from the magnitude; unsigned width absorbs INT128_MIN.
  unsigned __int128 mag =
      v_ < 0 ? ~static_cast<unsigned __int128>(v_) + 1 : static_cast<unsigned __int128>(v_);
  std::string digits;
  while (mag != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (v_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

CheckedInt CheckedInt::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("CheckedInt: empty string");
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  if (pos == s.size()) throw std::invalid_argument("CheckedInt: no digits");
  CheckedInt r;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c < '0' || c > '9') throw std::invalid_argument("CheckedInt: bad digit");
    r *= 10;
    r += negative ? -(c - '0') : (c - '0');
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const CheckedInt& v) { return os << v.str(); }

CheckedInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  CheckedInt r = 1;
  for (long long d = 1; d <= k; ++d) {
    r *= n - k + d;
    r /= d;  // exact: r is binomial(n-k+d, d) after this step
  }
  return r;
}

}  // namespace topes

#include "orientable/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "orientable/errors.hpp"
#include "orientable/wordkit.hpp"

namespace orientable {
namespace {

Int128 pow2(std::size_t e) { return Int128{1} << e; }

void require_order(std::size_t n, std::size_t min_n) {
  if (n < min_n || n > kMaxBoundOrder) {
    throw UnsupportedSize("order " + std::to_string(n) + " outside [" + std::to_string(min_n) +
                          ", " + std::to_string(kMaxBoundOrder) + "]");
  }
}

// 2 * H(d), where H(d) = 1/2 sum_{i | d} i (2^floor((i+1)/2) + 2^(floor(i/2)+1)).
Int128 twice_H(std::size_t d) {
  Int128 sum = 0;
  for (std::size_t i = 1; i <= d; ++i) {
    if (d % i != 0) continue;
    sum += static_cast<Int128>(i) * (pow2((i + 1) / 2) + pow2(i / 2 + 1));
  }
  return sum;
}

Int128 lower_bound_formula(std::size_t n) {
  // L_n = 2^(n-1) - 1/2 sum_{d | n} mu(n/d) (n/d) H(d); both halves are folded
  // into a single division by 4 that must come out exact.
  Int128 quad = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    quad += mobius(n / d) * static_cast<Int128>(n / d) * twice_H(d);
  }
  if (quad % 4 != 0) throw std::logic_error("lower bound sum is not divisible by 4");
  return pow2(n - 1) - quad / 4;
}

Int128 lower_bound_enumeration(std::size_t n) {
  if (n > kMaxEnumerationOrder) {
    throw UnsupportedSize("A(n) enumeration limited to n <= " +
                          std::to_string(kMaxEnumerationOrder));
  }
  Int128 total = 0;
  for_each_asymmetric_bracelet(n, [&](BitSpan, std::size_t period) { total += period; });
  return total;
}

}  // namespace

std::string to_string(Int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  std::string digits;
  while (value != 0) {
    const int r = static_cast<int>(value % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -r : r)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

int mobius(std::size_t n) {
  if (n == 0) throw std::invalid_argument("mobius(0) is undefined");
  int sign = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

Int128 lower_bound_L(std::size_t n, LowerBoundMethod method) {
  require_order(n, 2);
  return method == LowerBoundMethod::formula ? lower_bound_formula(n)
                                             : lower_bound_enumeration(n);
}

Int128 upper_bound_U(std::size_t n) {
  require_order(n, 5);
  // 18 * U_n, so every branch is an integer expression.
  const Int128 nn = static_cast<Int128>(n);
  Int128 scaled = 18 * pow2(n - 1);
  switch (n % 4) {
    case 0: scaled += -82 * pow2(n / 2 - 1) + 6 * nn + 32; break;
    case 1: scaled += -62 * pow2((n - 1) / 2) + 6 * nn + 38; break;
    case 2: scaled += -82 * pow2(n / 2 - 1) + 3 * nn + 40; break;
    default: scaled += -62 * pow2((n - 1) / 2) + 3 * nn + 43; break;
  }
  if (scaled % 18 != 0) {
    throw std::logic_error("upper bound branch is not integral for n = " + std::to_string(n));
  }
  return scaled / 18;
}

Int128 trivial_upper_bound(std::size_t n) {
  require_order(n, 2);
  return pow2(n - 1) - pow2((n - 1) / 2);
}

Int128 aos_upper_bound(std::size_t n) {
  require_order(n, 2);
  return (pow2(n) - pow2((n + 1) / 2)) / 2 + static_cast<Int128>(n - 1);
}

Int128 count_asymmetric_bracelets(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw UnsupportedSize("A(n) enumeration limited to 1 <= n <= " +
                          std::to_string(kMaxEnumerationOrder));
  }
  Int128 count = 0;
  for_each_asymmetric_bracelet(n, [&](BitSpan, std::size_t) { ++count; });
  return count;
}

BoundsRecord bounds_record(std::size_t n) {
  BoundsRecord r;
  r.n = n;
  r.lower = lower_bound_L(n);
  if (n >= 5) r.upper = upper_bound_U(n);
  r.trivial = trivial_upper_bound(n);
  r.aos_upper = aos_upper_bound(n);
  if (n <= kMaxEnumerationOrder) r.asym_count = count_asymmetric_bracelets(n);
  return r;
}

}  // namespace orientable

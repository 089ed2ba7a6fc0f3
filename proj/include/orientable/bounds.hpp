#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace orientable {

/// Exact integer type for bound arithmetic; 2^(n-1) stays exact for n <= 64.
__extension__ using Int128 = __int128;

std::string to_string(Int128 value);

/// Largest n accepted by the closed forms.
inline constexpr std::size_t kMaxBoundOrder = 64;
/// Largest n for which A(n) is enumerated.
inline constexpr std::size_t kMaxEnumerationOrder = 28;

enum class LowerBoundMethod { formula, enumeration };

int mobius(std::size_t n);

/// L_n: the length of the cycle-joining construction over A(n).
Int128 lower_bound_L(std::size_t n, LowerBoundMethod method = LowerBoundMethod::formula);

/// U_n: the piecewise upper bound on the length of a cyclic orientable sequence (n >= 5).
Int128 upper_bound_U(std::size_t n);

/// 2^(n-1) - 2^floor((n-1)/2): half of the non-palindromic words of length n.
Int128 trivial_upper_bound(std::size_t n);

/// Upper bound on the length of an acyclic orientable sequence.
Int128 aos_upper_bound(std::size_t n);

/// |A(n)| by filtered necklace generation; throws UnsupportedSize above kMaxEnumerationOrder.
Int128 count_asymmetric_bracelets(std::size_t n);

struct BoundsRecord {
  std::size_t n = 0;
  Int128 lower = 0;              // L_n
  std::optional<Int128> upper;   // U_n, defined for n >= 5
  Int128 trivial = 0;
  Int128 aos_upper = 0;
  std::optional<Int128> asym_count;  // absent above the enumeration limit
};

BoundsRecord bounds_record(std::size_t n);

}  // namespace orientable

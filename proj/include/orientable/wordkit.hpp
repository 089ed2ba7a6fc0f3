#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "orientable/word.hpp"

namespace orientable {

/// Counts calls to the asymmetric-bracelet membership test. Passed by pointer
/// to the routines whose cost contracts are stated in membership tests.
struct ProbeStats {
  std::uint64_t membership_tests = 0;
};

struct NecklaceRotation {
  BinaryWord necklace;
  std::size_t offset;  // 1-indexed; w.rotation_from(offset) == necklace
};

// ---------------------------------------------------------------------------
// Span-level primitives. 0-indexed, allocation free, O(n).
// ---------------------------------------------------------------------------

/// 0-indexed start of the lexicographically least rotation of a word of
/// length n whose i-th bit is `at(i)`. The smallest such start is returned
/// for periodic words. Needs O(1) extra space.
template <class BitAt>
std::size_t least_rotation_start(std::size_t n, BitAt&& at) {
  // Lyndon factorisation of the doubled word; positions j are 1-indexed into ww.
  auto ww = [&](std::size_t j) { return at(j <= n ? j - 1 : j - 1 - n); };
  std::size_t j = 1, t = 1, p = 1;
  do {
    t = t + p * ((j - t) / p);
    j = t + 1;
    p = 1;
    while (j <= 2 * n && ww(j - p) <= ww(j)) {
      if (ww(j - p) < ww(j)) p = j - t + 1;
      ++j;
    }
  } while (p * ((j - t) / p) < n);
  return t - 1;
}

std::size_t least_rotation_start(BitSpan w);

/// Period of w if w is a necklace, otherwise nullopt.
std::optional<std::size_t> necklace_period(BitSpan w);

bool is_necklace(BitSpan w);

/// Membership in A(n): w is a necklace and strictly smaller than the necklace
/// of its reversal.
bool is_asymmetric_bracelet(BitSpan w, ProbeStats* stats = nullptr);

/// True iff the necklace of w is an asymmetric bracelet, i.e. w lies in S(n).
bool in_asymmetric_class(BitSpan w, ProbeStats* stats = nullptr);

/// Length of the aperiodic prefix of an arbitrary word.
std::size_t aperiodic_length(BitSpan w);

// ---------------------------------------------------------------------------
// Value-level interface, 1-indexed.
// ---------------------------------------------------------------------------

NecklaceRotation least_rotation(const BinaryWord& w);
std::optional<std::size_t> necklace_period(const BinaryWord& w);
bool is_necklace(const BinaryWord& w);
BinaryWord aperiodic_prefix(const BinaryWord& w);
bool is_palindrome(const BinaryWord& w);
bool is_bracelet(const BinaryWord& w);
bool is_asymmetric_bracelet(const BinaryWord& w);

// ---------------------------------------------------------------------------
// Enumeration.
// ---------------------------------------------------------------------------

/// Visits every binary necklace of length n in lexicographic order together
/// with its period (iterative FKM generation).
void for_each_necklace(std::size_t n, const std::function<void(BitSpan, std::size_t)>& visit);

/// Visits every member of A(n) in lexicographic order together with its period.
void for_each_asymmetric_bracelet(std::size_t n,
                                  const std::function<void(BitSpan, std::size_t)>& visit);

std::vector<BinaryWord> asymmetric_bracelets(std::size_t n);

}  // namespace orientable

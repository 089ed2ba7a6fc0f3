#include "orientable/wordkit.hpp"

#include <algorithm>

namespace orientable {

std::size_t least_rotation_start(BitSpan w) {
  return least_rotation_start(w.size(), [w](std::size_t i) { return w[i]; });
}

std::optional<std::size_t> necklace_period(BitSpan w) {
  const std::size_t n = w.size();
  std::size_t p = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (w[i - p] > w[i]) return std::nullopt;
    if (w[i - p] < w[i]) p = i + 1;
  }
  if (n % p != 0) return std::nullopt;
  return p;
}

bool is_necklace(BitSpan w) { return necklace_period(w).has_value(); }

bool is_asymmetric_bracelet(BitSpan w, ProbeStats* stats) {
  if (stats) ++stats->membership_tests;
  if (!is_necklace(w)) return false;
  const std::size_t n = w.size();
  auto rev = [w, n](std::size_t i) { return w[n - 1 - i]; };
  const std::size_t start = least_rotation_start(n, rev);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = start + k;
    if (r >= n) r -= n;
    const Bit other = rev(r);
    if (w[k] != other) return w[k] < other;
  }
  return false;  // symmetric
}

bool in_asymmetric_class(BitSpan w, ProbeStats* stats) {
  const std::size_t n = w.size();
  const std::size_t s = least_rotation_start(w);
  std::vector<Bit> neck(n);
  for (std::size_t k = 0; k < n; ++k) neck[k] = w[(s + k) % n];
  return is_asymmetric_bracelet(neck, stats);
}

std::size_t aperiodic_length(BitSpan w) {
  // Border array; the smallest period q divides n exactly when w is a power.
  const std::size_t n = w.size();
  std::vector<std::size_t> border(n + 1, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = border[k];
    if (w[i] == w[k]) ++k;
    border[i + 1] = k;
  }
  const std::size_t q = n - border[n];
  return n % q == 0 ? q : n;
}

NecklaceRotation least_rotation(const BinaryWord& w) {
  const std::size_t s = least_rotation_start(w.bits());
  return {w.rotation_from(s + 1), s + 1};
}

std::optional<std::size_t> necklace_period(const BinaryWord& w) {
  return necklace_period(w.bits());
}

bool is_necklace(const BinaryWord& w) { return is_necklace(w.bits()); }

BinaryWord aperiodic_prefix(const BinaryWord& w) {
  const auto b = w.bits();
  return BinaryWord(std::vector<Bit>(b.begin(), b.begin() + aperiodic_length(b)));
}

bool is_palindrome(const BinaryWord& w) {
  const auto b = w.bits();
  return std::equal(b.begin(), b.begin() + b.size() / 2, b.rbegin());
}

bool is_bracelet(const BinaryWord& w) {
  if (!is_necklace(w)) return false;
  return w <= least_rotation(w.reversed()).necklace;
}

bool is_asymmetric_bracelet(const BinaryWord& w) { return is_asymmetric_bracelet(w.bits()); }

void for_each_necklace(std::size_t n, const std::function<void(BitSpan, std::size_t)>& visit) {
  if (n == 0) return;
  std::vector<Bit> a(n + 1, 0);  // a[0] unused; a[1..n] is the current prenecklace
  const BitSpan word(a.data() + 1, n);
  visit(word, 1);
  for (;;) {
    std::size_t i = n;
    while (i > 0 && a[i] == 1) --i;
    if (i == 0) return;
    a[i] = 1;
    for (std::size_t j = i + 1; j <= n; ++j) a[j] = a[j - i];
    if (n % i == 0) visit(word, i);
  }
}

void for_each_asymmetric_bracelet(std::size_t n,
                                  const std::function<void(BitSpan, std::size_t)>& visit) {
  for_each_necklace(n, [&](BitSpan w, std::size_t p) {
    if (is_asymmetric_bracelet(w)) visit(w, p);
  });
}

std::vector<BinaryWord> asymmetric_bracelets(std::size_t n) {
  std::vector<BinaryWord> out;
  for_each_asymmetric_bracelet(n, [&](BitSpan w, std::size_t) {
    out.emplace_back(std::vector<Bit>(w.begin(), w.end()));
  });
  return out;
}

}  // namespace orientable

#include "orientable/successor.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "orientable/cyclejoin.hpp"
#include "orientable/errors.hpp"

namespace orientable {

SuccessorRule::SuccessorRule(std::size_t n) : n_(n), beta_(n), scratch_(n) {
  if (n < kMinOrder) throw UnsupportedSize("successor rule needs n >= 6");
}

bool SuccessorRule::first_one_in_A(ProbeStats* stats) {
  fast::first_one_into(beta_, scratch_);
  return is_asymmetric_bracelet(scratch_, stats);
}

bool SuccessorRule::last_one_in_A(ProbeStats* stats) {
  fast::last_one_into(beta_, scratch_);
  return is_asymmetric_bracelet(scratch_, stats);
}

Bit SuccessorRule::operator()(BitSpan a, ProbeStats* stats) {
  const std::size_t n = n_;
  const Bit flipped = static_cast<Bit>(a[0] ^ 1);
  auto at = [](std::size_t i) { return static_cast<std::ptrdiff_t>(i); };

  // First 1: b1 = 0^(n-1-i) 1 a[1..i], i the 0-based index of the last 1.
  std::size_t last = n;
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] == 1) {
      last = i;
      break;
    }
  }
  if (last < n) {
    std::fill(beta_.begin(), beta_.begin() + at(n - 1 - last), Bit{0});
    beta_[n - 1 - last] = 1;
    std::copy(a.begin() + 1, a.begin() + at(last + 1), beta_.begin() + at(n - last));
    if (is_asymmetric_bracelet(beta_, stats) && first_one_in_A(stats)) return flipped;
  }

  // Last 1: b2 = a[1..n-1] 1.
  std::copy(a.begin() + 1, a.end(), beta_.begin());
  beta_[n - 1] = 1;
  if (is_asymmetric_bracelet(beta_, stats) && !first_one_in_A(stats) &&
      last_one_in_A(stats)) {
    return flipped;
  }

  // Last 0: b3 = a[j..n-1] 0 1^(j-1), j the 0-based index of the first 0 after a[0].
  const auto zero = std::find(a.begin() + 1, a.end(), Bit{0});
  if (zero != a.end()) {
    const auto j = static_cast<std::size_t>(zero - a.begin());
    std::copy(a.begin() + at(j), a.end(), beta_.begin());
    beta_[n - j] = 0;
    std::fill(beta_.begin() + at(n - j + 1), beta_.end(), Bit{1});
    if (is_asymmetric_bracelet(beta_, stats) && !first_one_in_A(stats) &&
        !last_one_in_A(stats)) {
      fast::last_zero_into(beta_, scratch_);
      if (is_asymmetric_bracelet(scratch_, stats)) return flipped;
    }
  }
  return a[0];
}

Bit successor_g(const BinaryWord& window) {
  if (window.size() < kMinOrder) throw UnsupportedSize("successor rule needs n >= 6");
  if (!in_asymmetric_class(window.bits())) {
    throw DomainError("successor_g: " + window.to_string() + " is not in S(n)");
  }
  SuccessorRule rule(window.size());
  return rule(window.bits());
}

std::uint64_t generate_from_successor(std::size_t n, const std::optional<BinaryWord>& seed,
                                      const BitSink& sink, ProbeStats* stats) {
  SuccessorRule rule(n);
  const BinaryWord start = seed.value_or(root(n));
  if (start.size() != n) throw DomainError("seed length differs from n");
  if (!in_asymmetric_class(start.bits())) {
    throw DomainError("seed " + start.to_string() + " is not in S(n)");
  }

  // The window is kept twice over in a ring of length 2n so that the current
  // window is always contiguous; it is re-based once the ring fills up.
  std::vector<Bit> ring(2 * n);
  std::copy(start.bits().begin(), start.bits().end(), ring.begin());
  std::size_t head = 0;

  const std::uint64_t cap = std::uint64_t{1} << std::min<std::size_t>(n, 62);
  std::array<Bit, 4096> block{};
  std::size_t filled = 0;
  std::uint64_t emitted = 0;
  const BitSpan seed_bits = start.bits();
  for (;;) {
    const BitSpan window(ring.data() + head, n);
    const Bit next = rule(window, stats);
    block[filled++] = window[0];
    ++emitted;
    if (filled == block.size()) {
      sink(BitSpan(block.data(), filled));
      filled = 0;
    }
    if (head + n == ring.size()) {
      std::copy(ring.begin() + static_cast<std::ptrdiff_t>(head + 1), ring.end(), ring.begin());
      head = 0;
    } else {
      ++head;
    }
    ring[head + n - 1] = next;
    if (std::equal(seed_bits.begin(), seed_bits.end(), ring.begin() + static_cast<std::ptrdiff_t>(head))) {
      break;
    }
    if (emitted > cap) throw std::logic_error("successor rule did not return to its seed");
  }
  if (filled > 0) sink(BitSpan(block.data(), filled));
  return emitted;
}

CyclicSequence generate_from_successor(std::size_t n, const std::optional<BinaryWord>& seed) {
  std::vector<Bit> bits;
  generate_from_successor(n, seed, collect_into(bits));
  return CyclicSequence(std::move(bits));
}

}  // namespace orientable

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "orientable/sequence.hpp"
#include "orientable/word.hpp"
#include "orientable/wordkit.hpp"

namespace orientable {

/// The successor rule g for the universal cycle over S(n).
///
/// Given the window a_1 ... a_n, g returns the complement of a_1 exactly when
/// the window belongs to one of the conjugate pairs that join T_n:
///   - b1 = 0^(n-i) 1 a_2 ... a_i (i = last 1) and first_one(b1) are in A(n);
///   - b2 = a_2 ... a_n 1 and last_one(b2) are in A(n), first_one(b2) is not;
///   - b3 = a_j ... a_n 0 1^(j-2) (j = first 0 after position 1) and
///     last_zero(b3) are in A(n), first_one(b3) and last_one(b3) are not.
/// The candidate words live in scratch buffers owned by the rule, so one
/// instance must not be shared between threads.
class SuccessorRule {
 public:
  explicit SuccessorRule(std::size_t n);

  std::size_t order() const noexcept { return n_; }

  /// Next bit after `window`; no check that the window lies in S(n).
  Bit operator()(BitSpan window, ProbeStats* stats = nullptr);

 private:
  bool first_one_in_A(ProbeStats* stats);
  bool last_one_in_A(ProbeStats* stats);

  std::size_t n_;
  std::vector<Bit> beta_;
  std::vector<Bit> scratch_;
};

/// g applied to a single window; throws DomainError if the window is not in S(n).
Bit successor_g(const BinaryWord& window);

/// Streams the cycle produced by g starting from `seed` (default root(n)).
/// The seed is validated once. Returns the number of bits emitted (L_n).
std::uint64_t generate_from_successor(std::size_t n, const std::optional<BinaryWord>& seed,
                                      const BitSink& sink, ProbeStats* stats = nullptr);

CyclicSequence generate_from_successor(std::size_t n,
                                       const std::optional<BinaryWord>& seed = std::nullopt);

}  // namespace orientable

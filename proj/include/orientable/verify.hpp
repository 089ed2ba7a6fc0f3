#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orientable/sequence.hpp"
#include "orientable/word.hpp"

namespace orientable {

enum class Violation {
  none,
  duplicate,         // the same window read forward twice
  palindrome,        // a window equal to its own reversal
  reverse_collision  // a window equal to the reversal of another window
};

std::string_view to_string(Violation v);

/// Outcome of the orientability check. For a failure, `first` and `second`
/// are the 0-based start offsets of the colliding windows (equal for a palindrome).
struct OrientabilityReport {
  Violation violation = Violation::none;
  std::size_t first = 0;
  std::size_t second = 0;
  std::optional<BinaryWord> window;

  bool ok() const noexcept { return violation == Violation::none; }
  std::string describe() const;
};

/// Number of length-n windows: m in cyclic mode, m - n + 1 in acyclic mode.
std::size_t window_count(const CyclicSequence& seq, std::size_t n);

/// Every forward window distinct, and no window the reversal of any window.
/// Throws std::invalid_argument when n < 2 or the sequence is shorter than n.
OrientabilityReport check_orientable(const CyclicSequence& seq, std::size_t n);
bool is_orientable(const CyclicSequence& seq, std::size_t n);

struct WindowSet {
  std::vector<BinaryWord> windows;  // distinct windows in first-occurrence order
  bool has_duplicates = false;
  std::optional<std::pair<std::size_t, std::size_t>> first_duplicate;  // offsets
};

WindowSet window_multiset(const CyclicSequence& seq, std::size_t n);

enum class Coverage { covered, length_mismatch, not_covered };

std::string_view to_string(Coverage c);

/// Whether the cyclic windows of seq are exactly S(n), each once.
Coverage check_covers_S(const CyclicSequence& seq, std::size_t n);
bool covers_S(const CyclicSequence& seq, std::size_t n);

/// True iff b is a rotation of a.
bool cyclic_equal(const CyclicSequence& a, const CyclicSequence& b);

}  // namespace orientable

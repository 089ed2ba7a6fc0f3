#pragma once

#include <cstddef>
#include <cstdint>

#include "orientable/sequence.hpp"

namespace orientable {

/// Extension schedules for cyclic sequences:
///   a - maximal extension at one cut, then move on to the next cut;
///   b - maximal extension over all cuts, apply the best, repeat;
///   c - first extension found at one cut, then move on to the next cut.
/// Every schedule stops once a full pass over the cuts finds nothing.
enum class Heuristic { a, b, c };

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
/// Largest order the window bookkeeping accepts.
inline constexpr std::size_t kMaxSearchOrder = 32;
/// Largest order for exhaustive_max.
inline constexpr std::size_t kMaxExhaustiveOrder = 7;

struct SearchOptions {
  Heuristic heuristic = Heuristic::b;
  std::uint64_t budget = kDefaultBudget;  // node expansions over the whole call
  std::uint64_t dfs_budget = 0;           // cap per single DFS; 0 means only `budget` applies
  /// Accept only results with an odd number of 1s and at most one cyclic
  /// occurrence of 0^(n-4).
  bool odd_weight_filter = false;
};

struct SearchResult {
  CyclicSequence sequence;
  std::uint64_t expansions = 0;
  std::size_t extensions = 0;  // number of insertions applied
  bool budget_exhausted = false;
};

/// Lengthens a cyclic orientable sequence by inserting bit strings at cuts
/// found by backtracking. Throws std::invalid_argument when the input is not
/// orientable or the budget is zero.
SearchResult extend_cyclic(const CyclicSequence& os, std::size_t n, const SearchOptions& options = {});

/// A longest cyclic orientable sequence of order 2..7, by exhaustive search
/// over sequences written from their smallest window (up to reversal and
/// complement). Empty when none of length >= n exists.
CyclicSequence exhaustive_max(std::size_t n);

/// The acyclic sequence o_1 ... o_m o_1 ... o_(n-1).
CyclicSequence make_aos(const CyclicSequence& os, std::size_t n);

/// Lengthens an acyclic orientable sequence at both ends, alternating ends
/// with a maximal backtracking extension at each step.
SearchResult extend_aos(const CyclicSequence& aos, std::size_t n, const SearchOptions& options = {});

/// Reads every rotation of a cyclic sequence as an acyclic one, extends it at
/// both ends, and keeps the longest (lowest rotation on ties; never shorter
/// than make_aos). `options.budget` is shared.
SearchResult search_aos(const CyclicSequence& os, std::size_t n, const SearchOptions& options = {});

}  // namespace orientable

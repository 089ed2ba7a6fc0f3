#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orientable/word.hpp"
#include "orientable/wordkit.hpp"

namespace orientable {

/// Which of the three flips of the parent rule produced a tree edge.
enum class ParentCase { first_one, last_one, last_zero };

std::string_view to_string(ParentCase c);

/// Smallest order with a non-empty A(n).
inline constexpr std::size_t kMinOrder = 6;
/// Largest order for which build_tree materialises T_n.
inline constexpr std::size_t kMaxTreeOrder = 20;

// Flip primitives. Each takes a necklace and returns a necklace.

/// Flips the first 1. Requires at least one 0 and one 1.
BinaryWord first_one(const BinaryWord& a);
/// Necklace of a with its last 1 flipped. Requires a to end in 1 with >= 2 ones.
BinaryWord last_one(const BinaryWord& a);
/// Necklace of a with its first bit set to 1. Requires a to begin with 0.
BinaryWord first_zero(const BinaryWord& a);
/// Flips the last 0. Requires at least one 0 and one 1.
BinaryWord last_zero(const BinaryWord& a);

/// 0^(n-4) 1011, the smallest member of A(n).
BinaryWord root(std::size_t n);

struct ParentStep {
  BinaryWord parent;
  ParentCase rule;
  std::size_t flip_index;  // 1-indexed, in the child's coordinates
};

/// The parent rule over A(n): first_one if it stays in A(n), else last_one if
/// it does, else last_zero. Throws DomainError for the root or inputs outside A(n).
ParentStep parent_step(const BinaryWord& a);
BinaryWord parent(const BinaryWord& a);

/// Flags over positions 1..n of a tree node; position k is set iff flipping
/// bit k and rotating to necklace form yields a child.
class ChildMask {
 public:
  explicit ChildMask(std::vector<Bit> flags) : flags_(std::move(flags)) {}

  std::size_t size() const noexcept { return flags_.size(); }
  bool test(std::size_t k) const { return flags_.at(k - 1) != 0; }
  std::size_t count() const noexcept;
  std::span<const Bit> flags() const noexcept { return flags_; }
  std::string to_string() const;

  friend bool operator==(const ChildMask&, const ChildMask&) = default;

 private:
  std::vector<Bit> flags_;
};

/// Children of beta in T_n by scanning the first 0-run and the last two
/// positions only. Throws DomainError when beta is not in A(n).
ChildMask find_children(const BinaryWord& beta, ProbeStats* stats = nullptr);

struct TreeNode {
  BinaryWord label;
  std::optional<BinaryWord> parent_label;
  std::optional<std::size_t> flip_index;
  std::optional<ParentCase> rule;
  std::size_t depth = 0;
  std::vector<std::size_t> children;  // indices into CycleJoinTree::nodes(), by flip index
};

/// T_n materialised from the parent rule. Nodes are stored in lexicographic
/// order of their labels, so the root is node 0.
class CycleJoinTree {
 public:
  CycleJoinTree(std::size_t n, std::vector<TreeNode> nodes);

  std::size_t order() const noexcept { return n_; }
  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  const TreeNode& root_node() const { return nodes_.front(); }
  std::optional<std::size_t> index_of(const BinaryWord& label) const;
  std::size_t height() const noexcept;

  /// Graphviz digraph; edges run parent -> child and are coloured by rule
  /// (first1 black, last1 blue, last0 red).
  std::string to_dot() const;

 private:
  std::size_t n_;
  std::vector<TreeNode> nodes_;
};

CycleJoinTree build_tree(std::size_t n);

namespace fast {

// Allocation-free forms used by the generators. Words are 0-indexed spans of
// length n; `out` must have the same length and must not alias the input.

std::size_t first_one_into(BitSpan a, std::span<Bit> out);
void last_one_into(BitSpan a, std::span<Bit> out);
std::size_t last_zero_into(BitSpan a, std::span<Bit> out);

/// Writes parent(a) into out. `a` must be a non-root member of A(n).
ParentCase parent_into(BitSpan a, std::span<Bit> out, ProbeStats* stats);

/// Reusable scratch for find_children on a fixed order.
class ChildFinder {
 public:
  explicit ChildFinder(std::size_t n) : candidate_(n), parent_(n) {}

  /// mask[k-1] = 1 iff flipping position k of beta yields a child. beta must be in A(n).
  void operator()(BitSpan beta, std::span<Bit> mask, ProbeStats* stats);

 private:
  bool child_with_parent(BitSpan beta, ProbeStats* stats);

  std::vector<Bit> candidate_;
  std::vector<Bit> parent_;
};

}  // namespace fast

}  // namespace orientable

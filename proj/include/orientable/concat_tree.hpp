#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orientable/sequence.hpp"
#include "orientable/word.hpp"
#include "orientable/wordkit.hpp"

namespace orientable {

/// Node of the concatenation tree. The label is a rotation of a member of
/// A(n); it differs from the parent's label only at `change_index`.
struct ConcatNode {
  BinaryWord label;
  std::size_t change_index;         // 1-indexed; n for the root
  std::vector<std::size_t> left;    // change index < ours, ascending
  std::vector<std::size_t> right;   // change index > ours, ascending
};

/// Concatenation tree built from the explicit cycle-joining tree. Used as the
/// reference for the on-the-fly traversal; limited to the orders build_tree accepts.
class ConcatTree {
 public:
  explicit ConcatTree(std::vector<ConcatNode> nodes) : nodes_(std::move(nodes)) {}

  const std::vector<ConcatNode>& nodes() const noexcept { return nodes_; }
  const ConcatNode& root_node() const { return nodes_.front(); }

  /// Node indices in right-current-left order: right-children (higher change
  /// indices) first, then the node, then left-children.
  std::vector<std::size_t> rcl_order() const;

 private:
  std::vector<ConcatNode> nodes_;
};

ConcatTree build_concat_tree(std::size_t n);

/// Concatenation of ap(label) over the explicit tree in RCL order.
CyclicSequence rcl_sequence(std::size_t n);

struct RclStats {
  ProbeStats probes;
  std::uint64_t bits = 0;
  std::size_t nodes = 0;
  std::size_t max_depth = 0;  // recursion frames; the root call is depth 1
};

/// Emits RCL order without materialising the tree: each aperiodic node finds
/// its children by running find_children on its necklace and rotating the
/// mask back into label coordinates. O(1) amortised work per bit.
RclStats fast_rcl(std::size_t n, const BitSink& sink);

CyclicSequence fast_rcl_sequence(std::size_t n);

}  // namespace orientable

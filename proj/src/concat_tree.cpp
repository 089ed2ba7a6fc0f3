#include "orientable/concat_tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "orientable/cyclejoin.hpp"
#include "orientable/errors.hpp"

namespace orientable {
namespace {

// Smallest r with rotate_left(word, r) == target, or nullopt.
std::optional<std::size_t> rotation_distance(BitSpan word, BitSpan target) {
  const std::size_t n = word.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool same = true;
    for (std::size_t x = 0; x < n && same; ++x) same = word[(x + r) % n] == target[x];
    if (same) return r;
  }
  return std::nullopt;
}

class RclWalker {
 public:
  RclWalker(std::size_t n, const BitSink& sink)
      : n_(n),
        sink_(sink),
        finder_(n),
        labels_(2 * n, std::vector<Bit>(n)),
        masks_(2 * n, std::vector<Bit>(n)),
        necklace_(n),
        cmask_(n) {}

  RclStats run() {
    const BinaryWord r = root(n_);
    std::copy(r.bits().begin(), r.bits().end(), labels_[0].begin());
    visit(0, n_);
    return stats_;
  }

 private:
  void visit(std::size_t depth, std::size_t change) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth + 1);
    if (depth + 1 >= labels_.size()) throw std::logic_error("concatenation tree too deep");

    const std::vector<Bit>& label = labels_[depth];
    const std::size_t s = least_rotation_start(label);
    for (std::size_t k = 0; k < n_; ++k) necklace_[k] = label[(s + k) % n_];
    const std::size_t period = *necklace_period(necklace_);
    if (period < n_) {
      emit(BitSpan(label.data(), period));  // periodic nodes are leaves
      return;
    }

    fast::ChildFinder& finder = finder_;
    finder(necklace_, cmask_, &stats_.probes);
    // Necklace position k corresponds to label position (s + k) mod n.
    std::vector<Bit>& d = masks_[depth];
    for (std::size_t k = 0; k < n_; ++k) d[(s + k) % n_] = cmask_[k];

    for (std::size_t i = change + 1; i <= n_; ++i) {
      if (d[i - 1]) descend(depth, i);
    }
    emit(label);
    for (std::size_t i = 1; i < change; ++i) {
      if (d[i - 1]) descend(depth, i);
    }
  }

  void descend(std::size_t depth, std::size_t i) {
    std::vector<Bit>& child = labels_[depth + 1];
    std::copy(labels_[depth].begin(), labels_[depth].end(), child.begin());
    child[i - 1] ^= 1;
    visit(depth + 1, i);
  }

  void emit(BitSpan block) {
    stats_.bits += block.size();
    sink_(block);
  }

  std::size_t n_;
  const BitSink& sink_;
  fast::ChildFinder finder_;
  std::vector<std::vector<Bit>> labels_;
  std::vector<std::vector<Bit>> masks_;
  std::vector<Bit> necklace_;
  std::vector<Bit> cmask_;
  RclStats stats_;
};

}  // namespace

std::vector<std::size_t> ConcatTree::rcl_order() const {
  std::vector<std::size_t> order;
  order.reserve(nodes_.size());
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    for (std::size_t c : nodes_[v].right) walk(c);
    order.push_back(v);
    for (std::size_t c : nodes_[v].left) walk(c);
  };
  if (!nodes_.empty()) walk(0);
  return order;
}

ConcatTree build_concat_tree(std::size_t n) {
  const CycleJoinTree tree = build_tree(n);
  const auto& tnodes = tree.nodes();
  std::vector<ConcatNode> nodes(tnodes.size(), ConcatNode{BinaryWord::zeros(n), 0, {}, {}});
  nodes[0].label = tnodes[0].label;
  nodes[0].change_index = n;

  // Parents precede children in a breadth-first sweep from the root.
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    const BinaryWord& alpha = nodes[u].label;
    std::vector<std::pair<std::size_t, std::size_t>> kids;  // (change index, node)
    for (std::size_t v : tnodes[u].children) {
      // The tree edge flips position q of the child necklace; that flipped
      // word is a rotation of alpha, which fixes the change index.
      const std::size_t q = *tnodes[v].flip_index;
      const BinaryWord joined = tnodes[v].label.flipped(q);
      const auto r = rotation_distance(joined.bits(), alpha.bits());
      if (!r) throw std::logic_error("tree edge does not join rotation classes");
      const std::size_t k = (q - 1 + n - *r) % n + 1;
      nodes[v].label = alpha.flipped(k);
      nodes[v].change_index = k;
      kids.emplace_back(k, v);
      queue.push_back(v);
    }
    std::sort(kids.begin(), kids.end());
    for (auto [k, v] : kids) {
      if (k == nodes[u].change_index) throw std::logic_error("child repeats its parent's change index");
      (k < nodes[u].change_index ? nodes[u].left : nodes[u].right).push_back(v);
    }
  }
  return ConcatTree(std::move(nodes));
}

CyclicSequence rcl_sequence(std::size_t n) {
  const ConcatTree tree = build_concat_tree(n);
  std::vector<Bit> bits;
  for (std::size_t v : tree.rcl_order()) {
    const BitSpan label = tree.nodes()[v].label.bits();
    bits.insert(bits.end(), label.begin(), label.begin() + static_cast<std::ptrdiff_t>(aperiodic_length(label)));
  }
  return CyclicSequence(std::move(bits));
}

RclStats fast_rcl(std::size_t n, const BitSink& sink) {
  if (n < kMinOrder) throw UnsupportedSize("fast_rcl needs n >= 6");
  if (n > 62) throw UnsupportedSize("fast_rcl output would exceed 2^61 bits");
  return RclWalker(n, sink).run();
}

CyclicSequence fast_rcl_sequence(std::size_t n) {
  std::vector<Bit> bits;
  fast_rcl(n, collect_into(bits));
  return CyclicSequence(std::move(bits));
}

}  // namespace orientable

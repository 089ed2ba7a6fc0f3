#include "orientable/cyclejoin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "orientable/errors.hpp"

namespace orientable {
namespace {

std::vector<Bit> to_vector(BitSpan s) { return {s.begin(), s.end()}; }

bool has_zero_and_one(BitSpan a) {
  const auto ones = std::count(a.begin(), a.end(), Bit{1});
  return ones > 0 && static_cast<std::size_t>(ones) < a.size();
}

void require_member(const BinaryWord& a, const char* what) {
  if (!is_asymmetric_bracelet(a)) {
    throw DomainError(std::string(what) + ": " + a.to_string() + " is not an asymmetric bracelet");
  }
}

}  // namespace

std::string_view to_string(ParentCase c) {
  switch (c) {
    case ParentCase::first_one: return "first1";
    case ParentCase::last_one: return "last1";
    case ParentCase::last_zero: return "last0";
  }
  return "?";
}

namespace fast {

std::size_t first_one_into(BitSpan a, std::span<Bit> out) {
  std::copy(a.begin(), a.end(), out.begin());
  const auto i = static_cast<std::size_t>(std::find(a.begin(), a.end(), Bit{1}) - a.begin());
  out[i] = 0;
  return i + 1;
}

void last_one_into(BitSpan a, std::span<Bit> out) {
  // a = x 1 0^t 1  ->  0^(t+1) x 1
  const std::size_t n = a.size();
  std::size_t q = n - 1;
  while (a[--q] != 1) {
  }
  const std::size_t t = n - 2 - q;
  std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(t + 1), Bit{0});
  std::copy(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(q),
            out.begin() + static_cast<std::ptrdiff_t>(t + 1));
  out[n - 1] = 1;
}

std::size_t last_zero_into(BitSpan a, std::span<Bit> out) {
  std::copy(a.begin(), a.end(), out.begin());
  std::size_t j = a.size();
  while (a[j - 1] != 0) --j;
  out[j - 1] = 1;
  return j;
}

ParentCase parent_into(BitSpan a, std::span<Bit> out, ProbeStats* stats) {
  first_one_into(a, out);
  if (is_asymmetric_bracelet(out, stats)) return ParentCase::first_one;
  last_one_into(a, out);
  if (is_asymmetric_bracelet(out, stats)) return ParentCase::last_one;
  last_zero_into(a, out);
  return ParentCase::last_zero;
}

bool ChildFinder::child_with_parent(BitSpan beta, ProbeStats* stats) {
  if (!is_asymmetric_bracelet(candidate_, stats)) return false;
  parent_into(candidate_, parent_, stats);
  return std::equal(parent_.begin(), parent_.end(), beta.begin());
}

void ChildFinder::operator()(BitSpan beta, std::span<Bit> mask, ProbeStats* stats) {
  const std::size_t n = beta.size();
  std::fill(mask.begin(), mask.end(), Bit{0});

  // beta = 0^s 1 ...; longest = longest run of 0s after that prefix.
  std::size_t s = 0;
  while (beta[s] == 0) ++s;
  std::size_t longest = 0;
  for (std::size_t i = s, run = 0; i < n; ++i) {
    run = beta[i] == 0 ? run + 1 : 0;
    longest = std::max(longest, run);
  }
  const std::size_t start = std::max(s / 2, longest) + 1;

  // First 1: 0^(k-1) 1 b_(k+1) ... b_n is a child whenever it is in A(n).
  for (std::size_t k = start; k <= s; ++k) {
    std::copy(beta.begin(), beta.end(), candidate_.begin());
    candidate_[k - 1] = 1;
    if (is_asymmetric_bracelet(candidate_, stats)) {
      mask[k - 1] = 1;
    } else if (k > start) {
      break;
    }
  }

  // Last 1: b_(k+1) ... b_n 0^(k-1) 1.
  for (std::size_t k = 1; k <= (s + 1) / 2; ++k) {
    std::copy(beta.begin() + static_cast<std::ptrdiff_t>(k), beta.end(), candidate_.begin());
    std::fill(candidate_.begin() + static_cast<std::ptrdiff_t>(n - k), candidate_.end() - 1,
              Bit{0});
    candidate_[n - 1] = 1;
    if (!is_asymmetric_bracelet(candidate_, stats)) break;
    parent_into(candidate_, parent_, stats);
    if (std::equal(parent_.begin(), parent_.end(), beta.begin())) mask[k - 1] = 1;
  }

  // Last 0: only positions n-1 and n-2 can hold the flipped bit.
  if (beta[n - 2] == 1) {
    std::copy(beta.begin(), beta.end(), candidate_.begin());
    candidate_[n - 2] = 0;
    if (child_with_parent(beta, stats)) mask[n - 2] = 1;
    if (beta[n - 3] == 1) {
      std::copy(beta.begin(), beta.end(), candidate_.begin());
      candidate_[n - 3] = 0;
      if (child_with_parent(beta, stats)) mask[n - 3] = 1;
    }
  }
}

}  // namespace fast

BinaryWord first_one(const BinaryWord& a) {
  if (!has_zero_and_one(a.bits())) throw DomainError("first_one: word needs a 0 and a 1");
  std::vector<Bit> out(a.size());
  fast::first_one_into(a.bits(), out);
  return BinaryWord(std::move(out));
}

BinaryWord last_one(const BinaryWord& a) {
  if (a.bits().back() != 1 || a.weight() < 2) {
    throw DomainError("last_one: word must end in 1 and contain at least two 1s");
  }
  std::vector<Bit> out(a.size());
  fast::last_one_into(a.bits(), out);
  return BinaryWord(std::move(out));
}

BinaryWord first_zero(const BinaryWord& a) {
  if (a.bit(1) != 0) throw DomainError("first_zero: word must begin with 0");
  std::vector<Bit> flipped = to_vector(a.bits());
  flipped[0] = 1;
  return least_rotation(BinaryWord(std::move(flipped))).necklace;
}

BinaryWord last_zero(const BinaryWord& a) {
  if (!has_zero_and_one(a.bits())) throw DomainError("last_zero: word needs a 0 and a 1");
  std::vector<Bit> out(a.size());
  fast::last_zero_into(a.bits(), out);
  return BinaryWord(std::move(out));
}

BinaryWord root(std::size_t n) {
  if (n < kMinOrder) throw UnsupportedSize("orientable constructions need n >= 6");
  std::vector<Bit> bits(n, 0);
  bits[n - 4] = 1;
  bits[n - 2] = 1;
  bits[n - 1] = 1;
  return BinaryWord(std::move(bits));
}

ParentStep parent_step(const BinaryWord& a) {
  const std::size_t n = a.size();
  if (n < kMinOrder) throw UnsupportedSize("parent rule needs n >= 6");
  require_member(a, "parent");
  if (a == root(n)) throw DomainError("parent: the root has no parent");

  const auto bits = a.bits();
  std::vector<Bit> out(n);
  const ParentCase rule = fast::parent_into(bits, out, nullptr);
  std::size_t flip = n;
  if (rule == ParentCase::first_one) {
    flip = static_cast<std::size_t>(std::find(bits.begin(), bits.end(), Bit{1}) - bits.begin()) + 1;
  } else if (rule == ParentCase::last_zero) {
    flip = static_cast<std::size_t>(std::find(bits.rbegin(), bits.rend(), Bit{0}).base() -
                                    bits.begin());
  }
  BinaryWord p(std::move(out));
  if (!is_asymmetric_bracelet(p)) {
    throw std::logic_error("parent rule left A(n) at " + a.to_string());
  }
  return {std::move(p), rule, flip};
}

BinaryWord parent(const BinaryWord& a) { return parent_step(a).parent; }

std::size_t ChildMask::count() const noexcept {
  return static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), Bit{1}));
}

std::string ChildMask::to_string() const { return BinaryWord(flags_).to_string(); }

ChildMask find_children(const BinaryWord& beta, ProbeStats* stats) {
  require_member(beta, "find_children");
  std::vector<Bit> mask(beta.size());
  fast::ChildFinder finder(beta.size());
  finder(beta.bits(), mask, stats);
  return ChildMask(std::move(mask));
}

CycleJoinTree::CycleJoinTree(std::size_t n, std::vector<TreeNode> nodes)
    : n_(n), nodes_(std::move(nodes)) {}

std::optional<std::size_t> CycleJoinTree::index_of(const BinaryWord& label) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), label,
                                   [](const TreeNode& node, const BinaryWord& w) {
                                     return node.label < w;
                                   });
  if (it == nodes_.end() || it->label != label) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t CycleJoinTree::height() const noexcept {
  std::size_t h = 0;
  for (const auto& node : nodes_) h = std::max(h, node.depth);
  return h;
}

std::string CycleJoinTree::to_dot() const {
  std::ostringstream out;
  out << "digraph T" << n_ << " {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& node : nodes_) out << "  \"" << node.label.to_string() << "\";\n";
  for (const auto& node : nodes_) {
    for (std::size_t c : node.children) {
      const TreeNode& child = nodes_[c];
      const ParentCase rule = *child.rule;
      const char* color = rule == ParentCase::first_one  ? "black"
                          : rule == ParentCase::last_one ? "blue"
                                                         : "red";
      out << "  \"" << node.label.to_string() << "\" -> \"" << child.label.to_string()
          << "\" [label=\"" << to_string(rule) << "\", color=" << color
          << ", flip=" << *child.flip_index << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

CycleJoinTree build_tree(std::size_t n) {
  if (n < kMinOrder || n > kMaxTreeOrder) {
    throw UnsupportedSize("build_tree supports 6 <= n <= " + std::to_string(kMaxTreeOrder));
  }
  std::vector<TreeNode> nodes;
  for (auto& label : asymmetric_bracelets(n)) nodes.push_back(TreeNode{std::move(label), {}, {}, {}, 0, {}});

  if (nodes.empty() || nodes.front().label != root(n)) {
    throw std::logic_error("root is not the smallest asymmetric bracelet");
  }
  auto index_of = [&nodes](const BinaryWord& w) -> std::size_t {
    const auto it = std::lower_bound(
        nodes.begin(), nodes.end(), w,
        [](const TreeNode& node, const BinaryWord& x) { return node.label < x; });
    if (it == nodes.end() || it->label != w) {
      throw std::logic_error("parent " + w.to_string() + " is not a node");
    }
    return static_cast<std::size_t>(it - nodes.begin());
  };

  std::vector<std::size_t> parent_of(nodes.size(), 0);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    ParentStep step = parent_step(nodes[i].label);
    parent_of[i] = index_of(step.parent);
    nodes[i].parent_label = std::move(step.parent);
    nodes[i].flip_index = step.flip_index;
    nodes[i].rule = step.rule;
    nodes[parent_of[i]].children.push_back(i);
  }
  for (auto& node : nodes) {
    std::sort(node.children.begin(), node.children.end(), [&nodes](std::size_t x, std::size_t y) {
      return *nodes[x].flip_index < *nodes[y].flip_index ||
             (*nodes[x].flip_index == *nodes[y].flip_index && x < y);
    });
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    std::size_t depth = 0;
    for (std::size_t v = i; v != 0; v = parent_of[v]) {
      if (++depth > nodes.size()) throw std::logic_error("parent rule produced a cycle");
    }
    nodes[i].depth = depth;
  }
  return CycleJoinTree(n, std::move(nodes));
}

}  // namespace orientable

#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "orientable/cyclejoin.hpp"
#include "orientable/errors.hpp"

using namespace orientable;

namespace {

BinaryWord W(const std::string& s) { return BinaryWord::from_string(s); }

ParentCase to_case(oracle::Rule r) {
  switch (r) {
    case oracle::Rule::first_one: return ParentCase::first_one;
    case oracle::Rule::last_one: return ParentCase::last_one;
    case oracle::Rule::last_zero: break;
  }
  return ParentCase::last_zero;
}

std::vector<Bit> mask_of(const std::vector<int>& m) { return std::vector<Bit>(m.begin(), m.end()); }

}  // namespace

TEST_CASE("flip primitives") {
  CHECK(first_one(W("010110111")).to_string() == "000110111");
  CHECK(first_one(W("000101111")).to_string() == "000001111");
  CHECK(first_one(W("001011")).to_string() == "000011");
  CHECK(last_one(W("000101111")).to_string() == "000010111");
  CHECK(last_one(W("001011")).to_string() == "000101");
  CHECK(last_one(W("0001011")).to_string() == "0000101");
  CHECK(first_zero(W("001011")).to_string() == oracle::necklace("101011"));
  CHECK(first_zero(W("000000001")).to_string() == "000000011");
  CHECK(first_zero(W("010101011")).to_string() == oracle::necklace("110101011"));
  CHECK(last_zero(W("001011011")).to_string() == "001011111");
  CHECK(last_zero(W("000101111")).to_string() == "000111111");
  CHECK(last_zero(W("01")).to_string() == "11");
}

TEST_CASE("flip primitive domain errors") {
  CHECK_THROWS_AS(first_one(W("0000")), DomainError);
  CHECK_THROWS_AS(last_zero(W("1111")), DomainError);
  CHECK_THROWS_AS(last_one(W("0010")), DomainError);
  CHECK_THROWS_AS(last_one(W("0001")), DomainError);
  CHECK_THROWS_AS(first_zero(W("1011")), DomainError);
}

TEST_CASE("closed-form last_one agrees with flip-then-rotate on every necklace, n <= 14") {
  for (std::size_t n = 2; n <= 14; ++n) {
    for_each_necklace(n, [&](BitSpan bits, std::size_t) {
      const BinaryWord a{std::vector<Bit>(bits.begin(), bits.end())};
      if (a.bit(n) != 1 || a.weight() < 2) return;
      REQUIRE(last_one(a).to_string() == oracle::necklace(oracle::flip_last(a.to_string(), '1')));
    });
  }
}

TEST_CASE("root") {
  CHECK(root(9).to_string() == "000001011");
  CHECK(root(6).to_string() == "001011");
  CHECK(root(20).to_string() == std::string(16, '0') + "1011");
  CHECK_THROWS_AS(root(5), UnsupportedSize);
}

TEST_CASE("parent examples") {
  auto step = parent_step(W("000101111"));
  CHECK(step.parent.to_string() == "000010111");
  CHECK(step.rule == ParentCase::last_one);
  step = parent_step(W("010110111"));
  CHECK(step.parent.to_string() == "000110111");
  CHECK(step.rule == ParentCase::first_one);
  CHECK(step.flip_index == 2);
  step = parent_step(W("001011011"));
  CHECK(step.parent.to_string() == "001011111");
  CHECK(step.rule == ParentCase::last_zero);
  CHECK(step.flip_index == 7);
  CHECK_THROWS_AS(parent(root(9)), DomainError);
  CHECK_THROWS_AS(parent(W("000001101")), DomainError);
  CHECK(to_string(ParentCase::first_one) == "first1");
  CHECK(to_string(ParentCase::last_one) == "last1");
  CHECK(to_string(ParentCase::last_zero) == "last0");
}

TEST_CASE("parent rule matches the brute-force rule on A(n), n = 6..14") {
  for (std::size_t n = 6; n <= 14; ++n) {
    for (const auto& s : oracle::asymmetric_bracelets(n)) {
      if (s == oracle::root(n)) continue;
      const auto expect = oracle::parent(s);
      const auto got = parent_step(W(s));
      REQUIRE(got.parent.to_string() == expect.word);
      REQUIRE(got.rule == to_case(expect.rule));
      REQUIRE(oracle::necklace(oracle::flip(s, got.flip_index)) == expect.word);
    }
  }
}

TEST_CASE("property: when both 1-flips leave A(n), the last 0 sits at n-1 or n-2, n <= 14") {
  for (std::size_t n = 6; n <= 14; ++n) {
    for (const auto& a : asymmetric_bracelets(n)) {
      if (a == root(n)) continue;
      const auto step = parent_step(a);
      if (step.rule != ParentCase::last_zero) continue;
      const std::string s = a.to_string();
      const std::size_t last0 = s.rfind('0') + 1;
      REQUIRE((last0 == n - 1 || last0 == n - 2));
      const auto lz = last_zero(a);
      REQUIRE(is_asymmetric_bracelet(lz));
      REQUIRE(is_asymmetric_bracelet(last_one(lz)));
    }
  }
}

TEST_CASE("find_children equals parent-map inversion, n = 6..14") {
  CHECK(find_children(root(6)).to_string() == "000000");
  for (std::size_t n = 6; n <= 14; ++n) {
    CAPTURE(n);
    for (const auto& s : oracle::asymmetric_bracelets(n)) {
      REQUIRE(find_children(W(s)) == ChildMask(mask_of(oracle::children_mask(s))));
    }
  }
  CHECK_THROWS_AS(find_children(W("000001101")), DomainError);
}

TEST_CASE("fast child finder matches the value interface") {
  for (std::size_t n = 6; n <= 12; ++n) {
    fast::ChildFinder finder(n);
    std::vector<Bit> mask(n);
    for (const auto& a : asymmetric_bracelets(n)) {
      finder(a.bits(), mask, nullptr);
      REQUIRE(ChildMask(mask) == find_children(a));
    }
  }
}

TEST_CASE("tree for n = 9") {
  const auto tree = build_tree(9);
  REQUIRE(tree.nodes().size() == 14);
  CHECK(tree.root_node().label.to_string() == "000001011");
  CHECK_FALSE(tree.root_node().parent_label.has_value());
  std::size_t edges = 0;
  for (const auto& node : tree.nodes()) edges += node.children.size();
  CHECK(edges == 13);
  const auto idx = tree.index_of(W("001011011"));
  REQUIRE(idx.has_value());
  CHECK(tree.nodes()[*idx].parent_label->to_string() == "001011111");
  CHECK(tree.nodes()[*idx].rule == ParentCase::last_zero);
  CHECK_FALSE(tree.index_of(W("000001101")).has_value());

  const std::string dot = tree.to_dot();
  CHECK(dot.rfind("digraph", 0) == 0);
  std::size_t arrows = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) ++arrows;
  CHECK(arrows == 13);
  CHECK(dot.find("color=black") != std::string::npos);
  CHECK(dot.find("color=blue") != std::string::npos);
  CHECK(dot.find("color=red") != std::string::npos);
}

TEST_CASE("tree sizes and structure") {
  CHECK(build_tree(6).nodes().size() == 1);
  CHECK(build_tree(10).nodes().size() == 30);
  CHECK_THROWS_AS(build_tree(5), UnsupportedSize);
  CHECK_THROWS_AS(build_tree(kMaxTreeOrder + 1), UnsupportedSize);
  for (std::size_t n = 6; n <= 16; ++n) {
    CAPTURE(n);
    const auto tree = build_tree(n);
    CHECK(tree.height() < 2 * (n - 4));
    std::size_t periodic = 0;
    for (std::size_t i = 0; i < tree.nodes().size(); ++i) {
      const auto& node = tree.nodes()[i];
      if (i > 0) {
        // depth equals the number of parent steps back to the root
        std::size_t steps = 0;
        for (auto w = node.label; w != root(n); w = parent(w)) ++steps;
        REQUIRE(steps == node.depth);
        REQUIRE(steps < 2 * (n - 4));
      }
      for (std::size_t c : node.children) REQUIRE(*tree.nodes()[c].parent_label == node.label);
      for (std::size_t k = 1; k < node.children.size(); ++k) {
        REQUIRE(*tree.nodes()[node.children[k - 1]].flip_index <= *tree.nodes()[node.children[k]].flip_index);
      }
      if (*necklace_period(node.label) < n) {
        ++periodic;
        REQUIRE(node.children.empty());
      }
    }
    CHECK(periodic <= tree.nodes().size() - periodic);
  }
}

TEST_CASE("membership work in find_children is linear in |A(n)|, n = 10..18") {
  // About 6 tests per node are observed for every n here; the ceiling is 8.
  for (std::size_t n = 10; n <= 18; ++n) {
    ProbeStats stats;
    std::size_t nodes = 0;
    fast::ChildFinder finder(n);
    std::vector<Bit> mask(n);
    for_each_asymmetric_bracelet(n, [&](BitSpan a, std::size_t) {
      finder(a, mask, &stats);
      ++nodes;
    });
    CAPTURE(n);
    CHECK(static_cast<double>(stats.membership_tests) <= 8.0 * static_cast<double>(nodes));
  }
}

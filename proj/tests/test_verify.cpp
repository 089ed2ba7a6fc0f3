#include <doctest.h>

#include <random>

#include "golden.hpp"
#include "oracles.hpp"
#include "orientable/verify.hpp"

using namespace orientable;

namespace {

CyclicSequence C(const std::string& s, SequenceMode m = SequenceMode::cyclic) {
  return CyclicSequence::from_string(s, m);
}

std::string random_bits(std::mt19937_64& rng, std::size_t len) {
  std::string s(len, '0');
  for (auto& c : s) c = static_cast<char>('0' + (rng() & 1));
  return s;
}

std::vector<std::string> texts(const WindowSet& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws.windows) out.push_back(w.to_string());
  return out;
}

}  // namespace

TEST_CASE("orientability examples") {
  CHECK(is_orientable(C("001011"), 5));
  const auto report = check_orientable(C("001011"), 3);
  CHECK(report.violation == Violation::palindrome);
  CHECK(report.window->to_string() == "010");
  CHECK(report.second == 1);
  CHECK(report.describe().find("010") != std::string::npos);
  CHECK(is_orientable(C(read_golden("os9_successor.txt")), 9));

  const auto dup = check_orientable(C("00101100101", SequenceMode::acyclic), 5);
  CHECK(dup.violation == Violation::duplicate);
  CHECK(dup.first == 0);
  CHECK(dup.second == 6);
  const auto rev = check_orientable(C("00100", SequenceMode::acyclic), 4);
  CHECK(rev.violation == Violation::reverse_collision);
  CHECK(rev.first == 0);
  CHECK(rev.second == 1);
  CHECK(check_orientable(C("001011"), 5).describe() == "orientable");
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(check_orientable(C("0101"), 1), std::invalid_argument);
  CHECK_THROWS_AS(check_orientable(C("0101"), 5), std::invalid_argument);
  CHECK(window_count(C("001011"), 5) == 6);
  CHECK(window_count(C("001011", SequenceMode::acyclic), 5) == 2);
}

TEST_CASE("window multiset") {
  auto ws = window_multiset(C("001011"), 5);
  CHECK(texts(ws) == std::vector<std::string>{"00101", "01011", "10110", "01100", "11001", "10010"});
  CHECK_FALSE(ws.has_duplicates);
  ws = window_multiset(C("0000"), 2);
  CHECK(texts(ws) == std::vector<std::string>{"00"});
  CHECK(ws.has_duplicates);
  REQUIRE(ws.first_duplicate.has_value());
  CHECK(ws.first_duplicate->first == 0);
  CHECK(ws.first_duplicate->second == 1);
  ws = window_multiset(C("001011", SequenceMode::acyclic), 5);
  CHECK(texts(ws) == std::vector<std::string>{"00101", "01011"});
}

TEST_CASE("coverage") {
  CHECK(covers_S(C(read_golden("os9_successor.txt")), 9));
  CHECK(covers_S(C(read_golden("os9_rcl.txt")), 9));
  CHECK_FALSE(covers_S(C("001011"), 5));
  CHECK(check_covers_S(C("001011"), 5) == Coverage::length_mismatch);
  // right length, wrong windows
  CHECK(check_covers_S(C("000111"), 6) == Coverage::not_covered);
  CHECK(check_covers_S(C("001011"), 6) == Coverage::covered);
}

TEST_CASE("cyclic equality") {
  CHECK(cyclic_equal(C("001011"), C("110010")));
  CHECK_FALSE(cyclic_equal(C("001011"), C("001101")));
  CHECK_FALSE(cyclic_equal(C("0010"), C("00100")));
  CHECK(cyclic_equal(C(read_golden("os9_successor.txt")), C(read_golden("os9_rcl.txt"))));
}

TEST_CASE("orientability matches the definition on random inputs") {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const std::size_t len = n + rng() % 40;
    const std::string s = random_bits(rng, len);
    for (auto mode : {SequenceMode::cyclic, SequenceMode::acyclic}) {
      const bool cyclic = mode == SequenceMode::cyclic;
      REQUIRE(is_orientable(C(s, mode), n) == oracle::is_orientable(s, n, cyclic));
    }
  }
}

TEST_CASE("long windows use the unpacked path") {
  std::mt19937_64 rng(7);
  const std::string s = random_bits(rng, 400);
  CHECK(is_orientable(C(s), 70) == oracle::is_orientable(s, 70));
  CHECK(is_orientable(C(s), 63) == oracle::is_orientable(s, 63));
  CHECK_FALSE(is_orientable(C(s + s), 70));
}

TEST_CASE("property: rotation and reversal invariance") {
  std::mt19937_64 rng(99);
  const std::string golden = read_golden("os9_rcl.txt");
  std::vector<std::string> inputs{golden, "001011"};
  for (int i = 0; i < 200; ++i) inputs.push_back(random_bits(rng, 10 + rng() % 30));
  for (const auto& s : inputs) {
    for (std::size_t n : {5, 6, 9}) {
      if (s.size() < n) continue;
      const bool base = is_orientable(C(s), n);
      REQUIRE(is_orientable(C(oracle::reverse(s)), n) == base);
      for (std::size_t k = 1; k < s.size(); k += 7) REQUIRE(is_orientable(C(oracle::rotate(s, k)), n) == base);
    }
  }
}

TEST_CASE("property: accepted sequences contain no palindromic window; coverage implies orientable") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 5 + rng() % 3;
    const std::string s = random_bits(rng, n + rng() % 20);
    const auto seq = C(s);
    if (is_orientable(seq, n)) {
      const std::string ext = s + s.substr(0, n - 1);
      for (std::size_t j = 0; j < s.size(); ++j) REQUIRE_FALSE(oracle::is_palindrome(ext.substr(j, n)));
    }
    if (covers_S(seq, n)) REQUIRE(is_orientable(seq, n));
  }
}

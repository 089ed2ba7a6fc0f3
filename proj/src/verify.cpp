#include "orientable/verify.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "orientable/bounds.hpp"
#include "orientable/wordkit.hpp"

namespace orientable {
namespace {

// Windows up to this order are packed into integers; longer ones are keyed by string.
constexpr std::size_t kPackedLimit = 63;
// Orders small enough for a dense first-occurrence table.
constexpr std::size_t kDenseLimit = 22;

void require_windows(const CyclicSequence& seq, std::size_t n) {
  if (n < 2) throw std::invalid_argument("order must be at least 2");
  if (seq.size() < n) throw std::invalid_argument("sequence is shorter than the window length");
}

Bit bit_at(const CyclicSequence& seq, std::size_t i) {
  const auto b = seq.bits();
  return b[i < b.size() ? i : i - b.size()];
}

std::uint64_t reverse_bits(std::uint64_t w, std::size_t n) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i, w >>= 1) r = (r << 1) | (w & 1);
  return r;
}

BinaryWord window_word(const CyclicSequence& seq, std::size_t start, std::size_t n) {
  std::vector<Bit> bits(n);
  for (std::size_t k = 0; k < n; ++k) bits[k] = bit_at(seq, start + k);
  return BinaryWord(std::move(bits));
}

// Calls visit(offset, key) for every window; Key is a packed integer or a string.
template <class Visit>
void for_each_packed_window(const CyclicSequence& seq, std::size_t n, Visit&& visit) {
  const std::size_t count = window_count(seq, n);
  const std::uint64_t mask = (n == 64) ? ~0ULL : ((std::uint64_t{1} << n) - 1);
  std::uint64_t w = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) w = (w << 1) | bit_at(seq, k);
  for (std::size_t i = 0; i < count; ++i) {
    w = ((w << 1) | bit_at(seq, i + n - 1)) & mask;
    if (!visit(i, w)) return;
  }
}

// First-occurrence table keyed by packed window.
class OffsetTable {
 public:
  explicit OffsetTable(std::size_t n) : dense_(n <= kDenseLimit) {
    if (dense_) table_.assign(std::size_t{1} << n, kAbsent);
  }
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  std::size_t find(std::uint64_t key) const {
    if (dense_) return table_[key];
    const auto it = map_.find(key);
    return it == map_.end() ? kAbsent : it->second;
  }
  void insert(std::uint64_t key, std::size_t offset) {
    if (dense_) {
      table_[key] = offset;
    } else {
      map_.emplace(key, offset);
    }
  }

 private:
  bool dense_;
  std::vector<std::size_t> table_;
  std::unordered_map<std::uint64_t, std::size_t> map_;
};

OrientabilityReport check_packed(const CyclicSequence& seq, std::size_t n) {
  OrientabilityReport report;
  OffsetTable seen(n);
  for_each_packed_window(seq, n, [&](std::size_t i, std::uint64_t w) {
    const std::uint64_t r = reverse_bits(w, n);
    if (r == w) {
      report = {Violation::palindrome, i, i, window_word(seq, i, n)};
      return false;
    }
    if (const std::size_t prev = seen.find(w); prev != OffsetTable::kAbsent) {
      report = {Violation::duplicate, prev, i, window_word(seq, i, n)};
      return false;
    }
    if (const std::size_t prev = seen.find(r); prev != OffsetTable::kAbsent) {
      report = {Violation::reverse_collision, prev, i, window_word(seq, i, n)};
      return false;
    }
    seen.insert(w, i);
    return true;
  });
  return report;
}

OrientabilityReport check_strings(const CyclicSequence& seq, std::size_t n) {
  std::unordered_map<std::string, std::size_t> seen;
  const std::size_t count = window_count(seq, n);
  for (std::size_t i = 0; i < count; ++i) {
    const BinaryWord word = window_word(seq, i, n);
    std::string w = word.to_string();
    std::string r(w.rbegin(), w.rend());
    if (r == w) return {Violation::palindrome, i, i, word};
    if (auto it = seen.find(w); it != seen.end()) return {Violation::duplicate, it->second, i, word};
    if (auto it = seen.find(r); it != seen.end()) {
      return {Violation::reverse_collision, it->second, i, word};
    }
    seen.emplace(std::move(w), i);
  }
  return {};
}

}  // namespace

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::duplicate: return "duplicate window";
    case Violation::palindrome: return "palindromic window";
    case Violation::reverse_collision: return "window equals a reversed window";
  }
  return "?";
}

std::string_view to_string(Coverage c) {
  switch (c) {
    case Coverage::covered: return "covered";
    case Coverage::length_mismatch: return "length mismatch";
    case Coverage::not_covered: return "not covered";
  }
  return "?";
}

std::string OrientabilityReport::describe() const {
  if (ok()) return "orientable";
  std::string s(to_string(violation));
  if (window) s += " " + window->to_string();
  s += " at offset " + std::to_string(second);
  if (violation != Violation::palindrome) s += " (collides with offset " + std::to_string(first) + ")";
  return s;
}

std::size_t window_count(const CyclicSequence& seq, std::size_t n) {
  return seq.cyclic() ? seq.size() : seq.size() - n + 1;
}

OrientabilityReport check_orientable(const CyclicSequence& seq, std::size_t n) {
  require_windows(seq, n);
  return n <= kPackedLimit ? check_packed(seq, n) : check_strings(seq, n);
}

bool is_orientable(const CyclicSequence& seq, std::size_t n) {
  return check_orientable(seq, n).ok();
}

WindowSet window_multiset(const CyclicSequence& seq, std::size_t n) {
  require_windows(seq, n);
  WindowSet out;
  std::unordered_map<std::string, std::size_t> seen;
  const std::size_t count = window_count(seq, n);
  for (std::size_t i = 0; i < count; ++i) {
    BinaryWord word = window_word(seq, i, n);
    auto [it, inserted] = seen.emplace(word.to_string(), i);
    if (inserted) {
      out.windows.push_back(std::move(word));
    } else if (!out.has_duplicates) {
      out.has_duplicates = true;
      out.first_duplicate = std::make_pair(it->second, i);
    }
  }
  return out;
}

Coverage check_covers_S(const CyclicSequence& seq, std::size_t n) {
  if (!seq.cyclic()) throw std::invalid_argument("covers_S needs a cyclic sequence");
  if (n < 2) throw std::invalid_argument("order must be at least 2");
  const Int128 expected = lower_bound_L(n);
  if (static_cast<Int128>(seq.size()) != expected) return Coverage::length_mismatch;
  if (seq.size() < n) return Coverage::not_covered;
  // |S(n)| = L_n, so L_n distinct windows drawn from S(n) are all of S(n).
  std::vector<Bit> window(n);
  std::unordered_map<std::string, bool> seen;
  OffsetTable packed(n <= kPackedLimit ? n : 0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < n; ++k) {
      window[k] = bit_at(seq, i + k);
      key = (key << 1) | window[k];
    }
    if (!in_asymmetric_class(window)) return Coverage::not_covered;
    if (n <= kPackedLimit) {
      if (packed.find(key) != OffsetTable::kAbsent) return Coverage::not_covered;
      packed.insert(key, i);
    } else if (!seen.emplace(std::string(window.begin(), window.end()), true).second) {
      return Coverage::not_covered;
    }
  }
  return Coverage::covered;
}

bool covers_S(const CyclicSequence& seq, std::size_t n) {
  return check_covers_S(seq, n) == Coverage::covered;
}

bool cyclic_equal(const CyclicSequence& a, const CyclicSequence& b) {
  if (a.size() != b.size()) return false;
  if (a.size() == 0) return true;
  const std::size_t sa = least_rotation_start(a.bits());
  const std::size_t sb = least_rotation_start(b.bits());
  const std::size_t m = a.size();
  for (std::size_t k = 0; k < m; ++k) {
    if (a.bits()[(sa + k) % m] != b.bits()[(sb + k) % m]) return false;
  }
  return true;
}

}  // namespace orientable

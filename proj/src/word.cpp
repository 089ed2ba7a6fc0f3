#include "orientable/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace orientable {

BinaryWord::BinaryWord(std::vector<Bit> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("binary word must have length >= 1");
  for (Bit b : bits_) {
    if (b > 1) throw std::invalid_argument("binary word holds a value other than 0 or 1");
  }
}

BinaryWord BinaryWord::from_string(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("not a binary string: '" + std::string(text) + "'");
    }
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::zeros(std::size_t n) { return BinaryWord(std::vector<Bit>(n, 0)); }

BinaryWord BinaryWord::ones(std::size_t n) { return BinaryWord(std::vector<Bit>(n, 1)); }

Bit BinaryWord::bit(std::size_t k) const {
  if (k < 1 || k > bits_.size()) throw std::out_of_range("word index out of range");
  return bits_[k - 1];
}

std::size_t BinaryWord::weight() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), Bit{1}));
}

std::string BinaryWord::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

BinaryWord BinaryWord::flipped(std::size_t k) const {
  if (k < 1 || k > bits_.size()) throw std::out_of_range("word index out of range");
  auto out = bits_;
  out[k - 1] ^= 1;
  return BinaryWord(std::move(out));
}

BinaryWord BinaryWord::reversed() const {
  return BinaryWord(std::vector<Bit>(bits_.rbegin(), bits_.rend()));
}

BinaryWord BinaryWord::rotation_from(std::size_t k) const {
  if (k < 1 || k > bits_.size()) throw std::out_of_range("word index out of range");
  auto out = bits_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k - 1), out.end());
  return BinaryWord(std::move(out));
}

}  // namespace orientable

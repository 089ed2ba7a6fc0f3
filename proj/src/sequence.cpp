#include "orientable/sequence.hpp"

#include <stdexcept>

namespace orientable {

CyclicSequence::CyclicSequence(std::vector<Bit> bits, SequenceMode mode)
    : bits_(std::move(bits)), mode_(mode) {
  for (Bit b : bits_) {
    if (b > 1) throw std::invalid_argument("sequence holds a value other than 0 or 1");
  }
}

CyclicSequence CyclicSequence::from_string(std::string_view text, SequenceMode mode) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("sequence text must contain only 0/1");
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return CyclicSequence(std::move(bits), mode);
}

std::string CyclicSequence::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

BitSink collect_into(std::vector<Bit>& out) {
  return [&out](BitSpan block) { out.insert(out.end(), block.begin(), block.end()); };
}

void BitHasher::operator()(BitSpan block) noexcept {
  for (Bit b : block) {
    hash_ ^= b;
    hash_ *= 0x100000001b3ULL;
  }
  length_ += block.size();
}

}  // namespace orientable

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "orientable/word.hpp"

namespace orientable {

enum class SequenceMode { cyclic, acyclic };

/// A bit sequence read either circularly (windows wrap) or linearly.
class CyclicSequence {
 public:
  explicit CyclicSequence(std::vector<Bit> bits, SequenceMode mode = SequenceMode::cyclic);
  static CyclicSequence from_string(std::string_view text,
                                    SequenceMode mode = SequenceMode::cyclic);

  std::size_t size() const noexcept { return bits_.size(); }
  BitSpan bits() const noexcept { return bits_; }
  SequenceMode mode() const noexcept { return mode_; }
  bool cyclic() const noexcept { return mode_ == SequenceMode::cyclic; }
  std::string to_string() const;

  friend bool operator==(const CyclicSequence&, const CyclicSequence&) = default;

 private:
  std::vector<Bit> bits_;
  SequenceMode mode_;
};

/// Consumer of generated bits. Invoked sequentially, in emission order, with
/// blocks of arbitrary size.
using BitSink = std::function<void(BitSpan)>;

/// Sink that appends to a vector.
BitSink collect_into(std::vector<Bit>& out);

/// Order-sensitive FNV-1a digest of a bit stream, for comparing long outputs
/// without storing them.
class BitHasher {
 public:
  void operator()(BitSpan block) noexcept;
  std::uint64_t digest() const noexcept { return hash_; }
  std::uint64_t length() const noexcept { return length_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
  std::uint64_t length_ = 0;
};

}  // namespace orientable

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orientable {

using Bit = std::uint8_t;
using BitSpan = std::span<const Bit>;

/// A non-empty binary string a_1 a_2 ... a_n.
///
/// Positions in the public interface are 1-indexed; `bits()` exposes the
/// underlying 0-indexed storage for the algorithms that work on spans.
class BinaryWord {
 public:
  /// Throws std::invalid_argument when `bits` is empty or holds a value other than 0/1.
  explicit BinaryWord(std::vector<Bit> bits);

  static BinaryWord from_string(std::string_view text);
  static BinaryWord zeros(std::size_t n);
  static BinaryWord ones(std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  BitSpan bits() const noexcept { return bits_; }

  /// 1-indexed access; throws std::out_of_range outside [1, n].
  Bit bit(std::size_t k) const;

  std::size_t weight() const noexcept;
  std::string to_string() const;

  BinaryWord flipped(std::size_t k) const;
  BinaryWord reversed() const;
  /// Rotation starting at position k, i.e. a_k ... a_n a_1 ... a_{k-1}.
  BinaryWord rotation_from(std::size_t k) const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<Bit> bits_;
};

}  // namespace orientable

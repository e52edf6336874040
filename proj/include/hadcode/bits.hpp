#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hadcode {

using Block = std::uint64_t;
inline constexpr std::size_t kBlockBits = 64;

constexpr std::size_t blocks_for(std::size_t bits) noexcept { return (bits + kBlockBits - 1) / kBlockBits; }

// Mask of the valid bits in the last block of a `bits`-long word.
constexpr Block tail_mask(std::size_t bits) noexcept {
  const std::size_t r = bits % kBlockBits;
  return r == 0 ? ~Block{0} : (Block{1} << r) - 1;
}

// Non-owning view of a packed word; bit j lives in blocks[j / 64], position j % 64.
// Bits past `length` are zero.
struct WordRef {
  std::span<const Block> blocks;
  std::size_t length = 0;

  bool bit(std::size_t j) const noexcept { return (blocks[j / kBlockBits] >> (j % kBlockBits)) & 1U; }
};

inline std::size_t popcount_xor(std::span<const Block> a, std::span<const Block> b) noexcept {
  std::size_t total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) total += static_cast<std::size_t>(std::popcount(a[w] ^ b[w]));
  return total;
}

// Owning packed bit string.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : length_(length), blocks_(blocks_for(length), 0) {}
  BitVector(WordRef w) : length_(w.length), blocks_(w.blocks.begin(), w.blocks.end()) {}

  std::size_t size() const noexcept { return length_; }
  bool get(std::size_t j) const noexcept { return (blocks_[j / kBlockBits] >> (j % kBlockBits)) & 1U; }
  void set(std::size_t j, bool value) noexcept {
    const Block m = Block{1} << (j % kBlockBits);
    if (value) {
      blocks_[j / kBlockBits] |= m;
    } else {
      blocks_[j / kBlockBits] &= ~m;
    }
  }
  void flip(std::size_t j) noexcept { blocks_[j / kBlockBits] ^= Block{1} << (j % kBlockBits); }
  void complement() noexcept {
    for (auto& b : blocks_) b = ~b;
    if (!blocks_.empty()) blocks_.back() &= tail_mask(length_);
  }

  std::span<const Block> blocks() const noexcept { return blocks_; }
  std::span<Block> blocks() noexcept { return blocks_; }
  WordRef view() const noexcept { return {blocks_, length_}; }
  operator WordRef() const noexcept { return view(); }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<Block> blocks_;
};

}  // namespace hadcode

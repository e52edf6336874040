#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hadcode/bits.hpp"

namespace hadcode {

// An n x m matrix with entries +1/-1, one packed row per matrix row.
// A set bit is +1, a clear bit is -1; padding bits are always clear.
class BipolarMatrix {
 public:
  BipolarMatrix() = default;
  BipolarMatrix(std::size_t rows, std::size_t cols, int fill = +1);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::size_t blocks_per_row() const noexcept { return stride_; }

  int at(std::size_t r, std::size_t c) const noexcept {
    return ((data_[r * stride_ + c / kBlockBits] >> (c % kBlockBits)) & 1U) ? 1 : -1;
  }
  void set(std::size_t r, std::size_t c, int sign) noexcept;
  void negate_row(std::size_t r) noexcept;
  void negate_column(std::size_t c) noexcept;

  std::span<const Block> row_blocks(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }
  WordRef row(std::size_t r) const noexcept { return {row_blocks(r), cols_}; }

  // <r_i, r_j> = m - 2 * popcount(r_i xor r_j).
  std::int64_t inner_product(std::size_t i, std::size_t j) const noexcept {
    return static_cast<std::int64_t>(cols_) -
           2 * static_cast<std::int64_t>(popcount_xor(row_blocks(i), row_blocks(j)));
  }

  BipolarMatrix negated() const;

  friend bool operator==(const BipolarMatrix&, const BipolarMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Block> data_;
};

}  // namespace hadcode

#include "hadcode/bipolar_matrix.hpp"

namespace hadcode {

BipolarMatrix::BipolarMatrix(std::size_t rows, std::size_t cols, int fill)
    : rows_(rows), cols_(cols), stride_(blocks_for(cols)), data_(rows * stride_, 0) {
  if (fill > 0) {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t w = 0; w < stride_; ++w) data_[r * stride_ + w] = ~Block{0};
      if (stride_ > 0) data_[r * stride_ + stride_ - 1] &= tail_mask(cols_);
    }
  }
}

void BipolarMatrix::set(std::size_t r, std::size_t c, int sign) noexcept {
  Block& b = data_[r * stride_ + c / kBlockBits];
  const Block m = Block{1} << (c % kBlockBits);
  if (sign > 0) {
    b |= m;
  } else {
    b &= ~m;
  }
}

void BipolarMatrix::negate_row(std::size_t r) noexcept {
  for (std::size_t w = 0; w < stride_; ++w) data_[r * stride_ + w] = ~data_[r * stride_ + w];
  if (stride_ > 0) data_[r * stride_ + stride_ - 1] &= tail_mask(cols_);
}

void BipolarMatrix::negate_column(std::size_t c) noexcept {
  const Block m = Block{1} << (c % kBlockBits);
  for (std::size_t r = 0; r < rows_; ++r) data_[r * stride_ + c / kBlockBits] ^= m;
}

BipolarMatrix BipolarMatrix::negated() const {
  BipolarMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) out.negate_row(r);
  return out;
}

}  // namespace hadcode

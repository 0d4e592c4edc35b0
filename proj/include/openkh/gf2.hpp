#pragma once

#include <cstdint>
#include <vector>

namespace openkh {

// dense GF(2) matrix, rows bit-packed into 64-bit words
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool get(size_t r, size_t c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
  void set(size_t r, size_t c, bool v = true);
  void flip(size_t r, size_t c) { row(r)[c >> 6] ^= uint64_t{1} << (c & 63); }
  uint64_t* row(size_t r) { return data_.data() + r * words_; }
  const uint64_t* row(size_t r) const { return data_.data() + r * words_; }
  size_t words() const { return words_; }

 private:
  size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<uint64_t> data_;
};

size_t f2_rank(BitMatrix m);

// sparse GF(2) rows: each row is the sorted list of its nonzero columns.
// rows are images of source generators, so rank = rank of the map
using SparseRows = std::vector<std::vector<uint32_t>>;

// Markowitz-style elimination: singleton columns and rows first (no fill),
// then cheapest pivot. falls back to dense elimination once the active
// part is small and dense
size_t sparse_rank(SparseRows rows, size_t ncols);

// plain row-echelon elimination, kept as the reference implementation
size_t sparse_rank_reference(const SparseRows& rows, size_t ncols);

// symmetric difference of two sorted lists
void xor_into(std::vector<uint32_t>& acc, const std::vector<uint32_t>& v);

}  // namespace openkh

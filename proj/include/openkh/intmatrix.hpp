#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace openkh {

using BigInt = boost::multiprecision::cpp_int;

struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<int64_t> a;

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
  static IntMatrix identity(size_t n);

  int64_t& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  int64_t operator()(size_t i, size_t j) const { return a[i * cols + j]; }
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

struct SmithForm {
  std::vector<int64_t> diag;  // min(rows, cols) entries, d1 | d2 | ...
  IntMatrix left, right;      // left * M * right = diag
};

// smallest-nonzero pivot; throws std::overflow_error instead of wrapping
SmithForm smith_normal_form(const IntMatrix& m);

// Bareiss, exact
BigInt determinant(const IntMatrix& m);

}  // namespace openkh

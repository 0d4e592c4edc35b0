#include "openkh/intmatrix.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace openkh {

namespace {

int64_t mul(int64_t x, int64_t y) {
  int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in SNF");
  return r;
}
int64_t sub(int64_t x, int64_t y) {
  int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("integer overflow in SNF");
  return r;
}

// row_i -= q * row_j on a, and the same on the row-operation record u
void row_axpy(IntMatrix& a, size_t i, size_t j, int64_t q) {
  for (size_t c = 0; c < a.cols; ++c) a(i, c) = sub(a(i, c), mul(q, a(j, c)));
}
void col_axpy(IntMatrix& a, size_t i, size_t j, int64_t q) {
  for (size_t r = 0; r < a.rows; ++r) a(r, i) = sub(a(r, i), mul(q, a(r, j)));
}
void row_swap(IntMatrix& a, size_t i, size_t j) {
  for (size_t c = 0; c < a.cols; ++c) std::swap(a(i, c), a(j, c));
}
void col_swap(IntMatrix& a, size_t i, size_t j) {
  for (size_t r = 0; r < a.rows; ++r) std::swap(a(r, i), a(r, j));
}

}  // namespace

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix z(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      if (!x(i, k)) continue;
      for (size_t j = 0; j < y.cols; ++j) z(i, j) += x(i, k) * y(k, j);
    }
  return z;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows), v = IntMatrix::identity(m.cols);
  size_t n = std::min(m.rows, m.cols);
  SmithForm out;

  for (size_t t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block goes to (t,t)
      size_t pi = 0, pj = 0;
      int64_t best = 0;
      for (size_t i = t; i < a.rows; ++i)
        for (size_t j = t; j < a.cols; ++j)
          if (a(i, j) && (!best || std::llabs(a(i, j)) < best)) best = std::llabs(a(i, j)), pi = i, pj = j;
      if (!best) break;
      if (pi != t) row_swap(a, pi, t), row_swap(u, pi, t);
      if (pj != t) col_swap(a, pj, t), col_swap(v, pj, t);

      bool clean = true;
      for (size_t i = t + 1; i < a.rows; ++i) {
        if (!a(i, t)) continue;
        int64_t q = a(i, t) / a(t, t);
        row_axpy(a, i, t, q), row_axpy(u, i, t, q);
        if (a(i, t)) clean = false;
      }
      for (size_t j = t + 1; j < a.cols; ++j) {
        if (!a(t, j)) continue;
        int64_t q = a(t, j) / a(t, t);
        col_axpy(a, j, t, q), col_axpy(v, j, t, q);
        if (a(t, j)) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and go again
      size_t bad = a.rows;
      for (size_t i = t + 1; i < a.rows && bad == a.rows; ++i)
        for (size_t j = t + 1; j < a.cols; ++j)
          if (a(i, j) % a(t, t)) {
            bad = i;
            break;
          }
      if (bad == a.rows) break;
      row_axpy(a, t, bad, -1), row_axpy(u, t, bad, -1);
    }
    if (a(t, t) < 0) {
      for (size_t c = 0; c < a.cols; ++c) a(t, c) = -a(t, c);
      for (size_t c = 0; c < u.cols; ++c) u(t, c) = -u(t, c);
    }
    out.diag.push_back(a(t, t));
  }
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  size_t n = m.rows;
  if (n == 0) return 1;
  std::vector<BigInt> a(m.a.begin(), m.a.end());
  auto at = [&](size_t i, size_t j) -> BigInt& { return a[i * n + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

}  // namespace openkh

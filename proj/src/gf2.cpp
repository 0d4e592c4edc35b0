#include "openkh/gf2.hpp"

#include <algorithm>
#include <map>

namespace openkh {

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

void BitMatrix::set(size_t r, size_t c, bool v) {
  uint64_t bit = uint64_t{1} << (c & 63);
  if (v)
    row(r)[c >> 6] |= bit;
  else
    row(r)[c >> 6] &= ~bit;
}

size_t f2_rank(BitMatrix m) {
  size_t rank = 0;
  const size_t W = m.words();
  for (size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    size_t w = c >> 6;
    uint64_t bit = uint64_t{1} << (c & 63);
    size_t p = rank;
    while (p < m.rows() && !(m.row(p)[w] & bit)) ++p;
    if (p == m.rows()) continue;
    if (p != rank) std::swap_ranges(m.row(p) + w, m.row(p) + W, m.row(rank) + w);
    const uint64_t* piv = m.row(rank);
    for (size_t r = rank + 1; r < m.rows(); ++r) {
      uint64_t* row = m.row(r);
      if (!(row[w] & bit)) continue;
      for (size_t k = w; k < W; ++k) row[k] ^= piv[k];
    }
    ++rank;
  }
  return rank;
}

void xor_into(std::vector<uint32_t>& acc, const std::vector<uint32_t>& v) {
  std::vector<uint32_t> out;
  out.reserve(acc.size() + v.size());
  std::set_symmetric_difference(acc.begin(), acc.end(), v.begin(), v.end(), std::back_inserter(out));
  acc.swap(out);
}

size_t sparse_rank_reference(const SparseRows& rows, size_t) {
  // echelon basis keyed by leading column
  std::map<uint32_t, std::vector<uint32_t>> basis;
  for (auto r : rows) {
    while (!r.empty()) {
      auto it = basis.find(r.front());
      if (it == basis.end()) {
        uint32_t lead = r.front();
        basis.emplace(lead, std::move(r));
        break;
      }
      xor_into(r, it->second);
    }
  }
  return basis.size();
}

namespace {

class Eliminator {
 public:
  Eliminator(SparseRows rows, size_t ncols)
      : rows_(std::move(rows)), ccount_(ncols, 0), crows_(ncols), alive_(rows_.size(), 1) {
    for (uint32_t r = 0; r < rows_.size(); ++r) {
      auto& row = rows_[r];
      std::sort(row.begin(), row.end());
      // duplicates cancel mod 2
      std::vector<uint32_t> clean;
      for (size_t i = 0; i < row.size();) {
        size_t j = i;
        while (j < row.size() && row[j] == row[i]) ++j;
        if ((j - i) & 1) clean.push_back(row[i]);
        i = j;
      }
      row.swap(clean);
      if (row.empty()) {
        alive_[r] = 0;
        continue;
      }
      ++live_rows_;
      nnz_ += row.size();
      for (auto c : row) {
        ++ccount_[c];
        crows_[c].push_back(r);
      }
      push_row(r);
    }
    for (uint32_t c = 0; c < ccount_.size(); ++c) {
      if (ccount_[c] == 1) scol_.push_back(c);
      active_cols_ += ccount_[c] > 0;
    }
  }

  size_t run() {
    for (;;) {
      if (!scol_.empty()) {
        uint32_t c = scol_.back();
        scol_.pop_back();
        if (ccount_[c] != 1) continue;
        pivot(owner(c), c);
        continue;
      }
      if (!urow_.empty()) {
        uint32_t r = urow_.back();
        urow_.pop_back();
        if (!alive_[r] || rows_[r].size() != 1) continue;
        pivot(r, rows_[r][0]);
        continue;
      }
      if (live_rows_ == 0) break;
      if (should_go_dense()) return rank_ + dense_finish();
      uint32_t r = min_row();
      uint32_t best = rows_[r][0];
      for (auto c : rows_[r])
        if (ccount_[c] < ccount_[best]) best = c;
      pivot(r, best);
    }
    return rank_;
  }

 private:
  SparseRows rows_;
  std::vector<uint32_t> ccount_;
  std::vector<std::vector<uint32_t>> crows_;  // may hold stale entries
  std::vector<char> alive_;
  std::vector<std::vector<uint32_t>> buckets_;
  size_t min_bucket_ = 0;
  std::vector<uint32_t> scol_, urow_;
  size_t rank_ = 0, live_rows_ = 0, nnz_ = 0, active_cols_ = 0;

  bool has(uint32_t r, uint32_t c) const {
    return alive_[r] && std::binary_search(rows_[r].begin(), rows_[r].end(), c);
  }

  uint32_t owner(uint32_t c) const {
    for (auto r : crows_[c])
      if (has(r, c)) return r;
    return 0;  // unreachable when ccount_[c] == 1
  }

  void push_row(uint32_t r) {
    size_t w = rows_[r].size();
    if (w == 1) urow_.push_back(r);
    if (buckets_.size() <= w) buckets_.resize(w + 1);
    buckets_[w].push_back(r);
    min_bucket_ = std::min(min_bucket_, w);
  }

  uint32_t min_row() {
    for (;; ++min_bucket_) {
      auto& b = buckets_[min_bucket_];
      while (!b.empty()) {
        uint32_t r = b.back();
        if (alive_[r] && rows_[r].size() == min_bucket_) return r;
        b.pop_back();
      }
    }
  }

  void pivot(uint32_t r, uint32_t c) {
    ++rank_;
    std::vector<uint32_t> pr = std::move(rows_[r]);
    rows_[r].clear();
    alive_[r] = 0;
    --live_rows_;
    nnz_ -= pr.size();
    for (auto x : pr) dec(x);
    auto lst = std::move(crows_[c]);
    crows_[c].clear();
    std::vector<uint32_t> merged;
    for (auto s : lst) {
      if (!has(s, c)) continue;
      auto& row = rows_[s];
      merged.clear();
      merged.reserve(row.size() + pr.size());
      size_t i = 0, j = 0;
      while (i < row.size() || j < pr.size()) {
        if (j == pr.size() || (i < row.size() && row[i] < pr[j])) {
          merged.push_back(row[i++]);
        } else if (i == row.size() || pr[j] < row[i]) {
          uint32_t x = pr[j++];
          merged.push_back(x);
          if (++ccount_[x] == 1) {
            scol_.push_back(x);
            ++active_cols_;
          }
          crows_[x].push_back(s);
        } else {
          dec(row[i]);
          ++i, ++j;
        }
      }
      nnz_ += merged.size();
      nnz_ -= row.size();
      row.swap(merged);
      if (row.empty()) {
        alive_[s] = 0;
        --live_rows_;
      } else {
        push_row(s);
      }
    }
  }

  void dec(uint32_t x) {
    uint32_t left = --ccount_[x];
    if (left == 1) scol_.push_back(x);
    if (left == 0) --active_cols_;
  }

  bool should_go_dense() const {
    // dense pays off once rows are fat; keep the bit matrix under ~64MB
    if (live_rows_ < 64) return false;
    size_t avg = nnz_ / live_rows_;
    if (avg < 48) return false;
    return double(live_rows_) * double(active_cols_) < 5.0e8;
  }

  size_t dense_finish() {
    std::vector<uint32_t> cmap(ccount_.size(), UINT32_MAX);
    uint32_t nc = 0;
    for (uint32_t c = 0; c < ccount_.size(); ++c)
      if (ccount_[c] > 0) cmap[c] = nc++;
    BitMatrix m(live_rows_, nc);
    size_t i = 0;
    for (uint32_t r = 0; r < rows_.size(); ++r) {
      if (!alive_[r]) continue;
      for (auto c : rows_[r]) m.set(i, cmap[c]);
      ++i;
    }
    return f2_rank(std::move(m));
  }
};

}  // namespace

size_t sparse_rank(SparseRows rows, size_t ncols) {
  if (rows.empty() || ncols == 0) return 0;
  return Eliminator(std::move(rows), ncols).run();
}

}  // namespace openkh

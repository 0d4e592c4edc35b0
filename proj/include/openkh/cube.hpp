#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "openkh/exec.hpp"
#include "openkh/gf2.hpp"
#include "openkh/openbook.hpp"
#include "openkh/surgery.hpp"

namespace openkh {

// element of the exterior algebra at one vertex: a GF(2) sum of monomials,
// each monomial a subset of the vertex basis (little-endian bitmask)
struct ExteriorClass {
  uint64_t vertex = 0;
  std::vector<uint32_t> monomials;  // sorted, no repeats
  bool operator==(const ExteriorClass&) const = default;
};

struct EdgeMap {
  enum Kind { Wedge, Quotient };
  uint64_t source = 0, target = 0;
  int letter = 0;
  Kind kind = Quotient;
  uint64_t kappa = 0;               // wedge class, target basis
  std::vector<uint64_t> images;     // image of each source basis vector

  // image of one monomial, as a sorted monomial list in the target
  std::vector<uint32_t> apply(uint32_t monomial) const;
  std::vector<uint32_t> apply(const std::vector<uint32_t>& element) const;
};

struct CubeOptions {
  Exec exec = Exec::parallel;
  // only vertices whose grading lies in [lo, hi] are resolved
  int lo = -1000000, hi = 1000000;
  bool certify = true;  // SNF torsion check per vertex
};

class CubeComplex {
 public:
  const TwistWord& word() const { return word_; }
  int n() const { return word_.n(); }
  int m() const { return m_; }
  int n_minus() const { return word_.n_minus(); }
  int grading_of(uint64_t v) const { return std::popcount(v) - n_minus(); }
  int min_grading() const { return -n_minus(); }
  int max_grading() const { return n() - n_minus(); }

  bool resolved(uint64_t v) const { return l_[v] >= 0; }
  int l(uint64_t v) const { return l_[v]; }
  uint64_t dim(uint64_t v) const { return uint64_t{1} << l_[v]; }
  // basis meridian keys and meridian classes, indexed by component key
  uint64_t meridian(uint64_t v, int key) const { return mer_[v * keys_ + key]; }
  const std::vector<int>& basis_keys(uint64_t v) const { return basis_[v]; }

  // vertices of one grading in increasing order, with generator offsets
  const std::vector<uint64_t>& vertices_at(int d) const;
  uint64_t offset(uint64_t v) const { return offset_[v]; }
  uint64_t dim_at(int d) const;

  int64_t lk(int key_a, int key_b) const { return link_[key_a * keys_ + key_b]; }
  bool present(uint64_t v, int letter) const {
    return letter_present(word_.letters[letter].sign, (v >> letter) & 1);
  }

  uint64_t i_o() const;

  friend CubeComplex build_e1(const TwistWord&, const CurveSystem&, const CubeOptions&);

 private:
  TwistWord word_;
  int m_ = 0, keys_ = 0;
  std::vector<int8_t> l_;
  std::vector<uint64_t> mer_;
  std::vector<std::vector<int>> basis_;
  std::vector<uint64_t> offset_;
  std::vector<std::vector<uint64_t>> by_grading_;
  std::vector<int64_t> link_;  // (m+n)^2, full framed link
};

CubeComplex build_e1(const TwistWord& w, const CurveSystem& sys, const CubeOptions& opt = {});
inline CubeComplex build_e1_serial(const TwistWord& w, const CurveSystem& sys) {
  return build_e1(w, sys, {Exec::serial});
}

// i' = i with bit `letter` set
EdgeMap edge_map(const CubeComplex& c, uint64_t i, int letter);

// rows = generators of grading d, columns = generators of grading d+1
SparseRows differential_block(const CubeComplex& c, int d, Exec exec = Exec::serial);

ExteriorClass psi_tilde(const CubeComplex& c);
bool psi_is_cycle(const CubeComplex& c);

// checks both edge paths around every 2-face agree
bool verify_d_squared(const CubeComplex& c, Exec exec = Exec::parallel);

// vertices with dims, edges with kinds; deterministic
std::string dump_cube(const CubeComplex& c);

}  // namespace openkh

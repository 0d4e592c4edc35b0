#include "openkh/cube.hpp"

#include <algorithm>
#include <sstream>

#include "openkh/errors.hpp"

namespace openkh {

namespace {

// v ∧ elem, both over GF(2)
std::vector<uint32_t> wedge(const std::vector<uint32_t>& elem, uint64_t v) {
  std::vector<uint32_t> out;
  for (uint32_t u : elem) {
    uint64_t free = v & ~uint64_t{u};
    while (free) {
      int b = std::countr_zero(free);
      free &= free - 1;
      out.push_back(u | (uint32_t{1} << b));
    }
  }
  std::sort(out.begin(), out.end());
  // pairs cancel
  size_t w = 0;
  for (size_t i = 0; i < out.size();) {
    size_t j = i;
    while (j < out.size() && out[j] == out[i]) ++j;
    if ((j - i) & 1) out[w++] = out[i];
    i = j;
  }
  out.resize(w);
  return out;
}

// images of every source monomial
std::vector<std::vector<uint32_t>> monomial_images(const EdgeMap& e, int l) {
  std::vector<std::vector<uint32_t>> img(size_t{1} << l);
  img[0] = {0};
  for (uint32_t s = 1; s < img.size(); ++s) {
    int t = std::countr_zero(s);
    img[s] = wedge(img[s & (s - 1)], e.images[t]);
  }
  if (e.kind == EdgeMap::Wedge)
    for (auto& x : img) x = wedge(x, e.kappa);
  return img;
}

const std::vector<uint64_t> kNone;

}  // namespace

std::vector<uint32_t> EdgeMap::apply(uint32_t monomial) const {
  std::vector<uint32_t> cur{0};
  for (uint32_t s = monomial; s; s &= s - 1) cur = wedge(cur, images[std::countr_zero(s)]);
  if (kind == Wedge) cur = wedge(cur, kappa);
  return cur;
}

std::vector<uint32_t> EdgeMap::apply(const std::vector<uint32_t>& element) const {
  std::vector<uint32_t> acc;
  for (auto mono : element) xor_into(acc, apply(mono));
  return acc;
}

const std::vector<uint64_t>& CubeComplex::vertices_at(int d) const {
  int p = d + n_minus();
  if (p < 0 || p >= static_cast<int>(by_grading_.size())) return kNone;
  return by_grading_[p];
}

uint64_t CubeComplex::dim_at(int d) const {
  uint64_t s = 0;
  for (auto v : vertices_at(d)) s += dim(v);
  return s;
}

uint64_t CubeComplex::i_o() const {
  uint64_t v = 0;
  for (int j = 0; j < n(); ++j)
    if (word_.letters[j].sign < 0) v |= uint64_t{1} << j;
  return v;
}

CubeComplex build_e1(const TwistWord& w, const CurveSystem& sys, const CubeOptions& opt) {
  if (w.n() > 30) throw LimitExceeded("word too long for a full cube");
  CubeComplex c;
  c.word_ = w;
  c.m_ = sys.m();
  const int m = c.m_, n = w.n();
  c.keys_ = m + n;
  auto full = full_link_matrix(w, sys);
  c.link_ = full.matrix.a;

  const uint64_t N = uint64_t{1} << n;
  c.l_.assign(N, -1);
  c.mer_.assign(N * c.keys_, 0);
  c.basis_.assign(N, {});
  c.offset_.assign(N, 0);
  c.by_grading_.assign(n + 1, {});
  for (uint64_t v = 0; v < N; ++v) c.by_grading_[std::popcount(v)].push_back(v);

  parallel_for(N, opt.exec, [&](size_t vi) {
    uint64_t v = vi;
    int d = c.grading_of(v);
    if (d < opt.lo || d > opt.hi) return;
    FramedLinkMatrix f;
    for (int j = 0; j < m; ++j) f.keys.push_back(j);
    for (int p = 0; p < n; ++p)
      if (c.present(v, p)) f.keys.push_back(m + p);
    const size_t K = f.keys.size();
    f.matrix = IntMatrix(K, K);
    for (size_t a = 0; a < K; ++a)
      for (size_t b = 0; b < K; ++b) f.matrix(a, b) = c.link_[f.keys[a] * c.keys_ + f.keys[b]];
    auto h = h1_f2(f, opt.certify);
    if (h.l > 24) throw LimitExceeded("resolution with more than 24 S1xS2 summands");
    c.l_[v] = static_cast<int8_t>(h.l);
    for (size_t a = 0; a < K; ++a) c.mer_[v * c.keys_ + f.keys[a]] = h.meridian[a];
    for (int b : h.basis) c.basis_[v].push_back(f.keys[b]);
  });

  for (auto& vs : c.by_grading_) {
    uint64_t off = 0;
    for (auto v : vs) {
      c.offset_[v] = off;
      if (c.resolved(v)) off += c.dim(v);
    }
  }
  return c;
}

EdgeMap edge_map(const CubeComplex& c, uint64_t i, int k) {
  const int m = c.m(), n = c.n();
  if ((i >> k) & 1) throw Error("edge_map: target is not an immediate successor");
  const uint64_t j = i | (uint64_t{1} << k);
  if (!c.resolved(i) || !c.resolved(j)) throw Error("edge_map: vertex not resolved");
  EdgeMap e;
  e.source = i, e.target = j, e.letter = k;
  const int K = m + k;
  const auto& bi = c.basis_keys(i);

  auto present_keys = [&](uint64_t v, auto&& f) {
    for (int b = 0; b < m; ++b) f(b);
    for (int p = 0; p < n; ++p)
      if (c.present(v, p)) f(m + p);
  };

  uint64_t cls = 0;
  if (c.present(j, k)) {
    // infinity -> 0: surgery on the pushoff K itself
    present_keys(i, [&](int key) {
      if (c.lk(K, key) & 1) cls ^= c.meridian(i, key);
    });
    for (int key : bi) e.images.push_back(c.meridian(j, key));
    if (!cls) {
      e.kind = EdgeMap::Wedge;
      e.kappa = c.meridian(j, K);
    }
  } else {
    // 0 -> infinity: surgery on a meridian of K, which cancels K
    cls = c.meridian(i, K);
    for (int key : bi) e.images.push_back(key == K ? 0 : c.meridian(j, key));
    if (!cls) {
      e.kind = EdgeMap::Wedge;
      present_keys(i, [&](int key) {
        if (key != K && (c.lk(K, key) & 1)) e.kappa ^= c.meridian(j, key);
      });
    }
  }
  if (e.kind == EdgeMap::Wedge && c.l(j) != c.l(i) + 1)
    throw Error("wedge edge with inconsistent ranks");
  if (e.kind == EdgeMap::Quotient && c.l(j) + 1 != c.l(i))
    throw Error("quotient edge with inconsistent ranks");
  return e;
}

SparseRows differential_block(const CubeComplex& c, int d, Exec exec) {
  const auto& src = c.vertices_at(d);
  SparseRows rows(c.dim_at(d));
  parallel_for(src.size(), exec, [&](size_t vi) {
    uint64_t v = src[vi];
    const uint64_t base = c.offset(v), dim = c.dim(v);
    for (int k = 0; k < c.n(); ++k) {
      if ((v >> k) & 1) continue;
      auto e = edge_map(c, v, k);
      auto img = monomial_images(e, c.l(v));
      const uint32_t off = static_cast<uint32_t>(c.offset(e.target));
      for (uint64_t s = 0; s < dim; ++s)
        for (auto t : img[s]) rows[base + s].push_back(off + t);
    }
    for (uint64_t s = 0; s < dim; ++s) std::sort(rows[base + s].begin(), rows[base + s].end());
  });
  return rows;
}

ExteriorClass psi_tilde(const CubeComplex& c) {
  uint64_t v = c.i_o();
  if (!c.resolved(v)) throw Error("psi_tilde: i_o not resolved");
  return {v, {static_cast<uint32_t>(c.dim(v) - 1)}};
}

bool psi_is_cycle(const CubeComplex& c) {
  auto psi = psi_tilde(c);
  for (int k = 0; k < c.n(); ++k) {
    if ((psi.vertex >> k) & 1) continue;
    if (!c.resolved(psi.vertex | (uint64_t{1} << k))) continue;
    if (!edge_map(c, psi.vertex, k).apply(psi.monomials).empty()) return false;
  }
  return true;
}

bool verify_d_squared(const CubeComplex& c, Exec exec) {
  const uint64_t N = uint64_t{1} << c.n();
  std::vector<char> bad(N, 0);
  parallel_for(N, exec, [&](size_t vi) {
    uint64_t v = vi;
    if (!c.resolved(v)) return;
    for (int a = 0; a < c.n(); ++a)
      for (int b = a + 1; b < c.n(); ++b) {
        if (((v >> a) & 1) || ((v >> b) & 1)) continue;
        uint64_t va = v | (uint64_t{1} << a), vb = v | (uint64_t{1} << b), vab = va | vb;
        if (!c.resolved(va) || !c.resolved(vb) || !c.resolved(vab)) continue;
        auto ea = edge_map(c, v, a), eb = edge_map(c, v, b);
        auto eab = edge_map(c, va, b), eba = edge_map(c, vb, a);
        for (uint32_t s = 0; s < c.dim(v); ++s)
          if (eab.apply(ea.apply(s)) != eba.apply(eb.apply(s))) {
            bad[v] = 1;
            return;
          }
      }
  });
  return std::find(bad.begin(), bad.end(), 1) == bad.end();
}

namespace {
std::string bits(uint64_t v, int n) {
  std::string s = "(";
  for (int j = 0; j < n; ++j) s += (j ? "," : "") + std::to_string((v >> j) & 1);
  return s + ")";
}
std::string cls_str(uint64_t x, const std::vector<int>& basis_keys, int m) {
  std::string s;
  for (size_t t = 0; t < basis_keys.size(); ++t)
    if ((x >> t) & 1) {
      if (!s.empty()) s += "+";
      int key = basis_keys[t];
      s += key < m ? "mu(b" + std::to_string(key + 1) + ")" : "mu(@" + std::to_string(key - m) + ")";
    }
  return s.empty() ? "0" : s;
}
}  // namespace

std::string dump_cube(const CubeComplex& c) {
  std::ostringstream out;
  const uint64_t N = uint64_t{1} << c.n();
  out << "cube " << c.word().to_string() << " n=" << c.n() << " n_minus=" << c.n_minus() << "\n";
  for (uint64_t v = 0; v < N; ++v) {
    if (!c.resolved(v)) continue;
    out << "vertex " << bits(v, c.n()) << " I=" << c.grading_of(v) << " l=" << c.l(v) << " dim=" << c.dim(v)
        << " basis=[";
    for (size_t t = 0; t < c.basis_keys(v).size(); ++t)
      out << (t ? "," : "") << cls_str(uint64_t{1} << t, c.basis_keys(v), c.m());
    out << "]\n";
  }
  for (uint64_t v = 0; v < N; ++v)
    for (int k = 0; k < c.n(); ++k) {
      if (((v >> k) & 1) || !c.resolved(v) || !c.resolved(v | (uint64_t{1} << k))) continue;
      auto e = edge_map(c, v, k);
      out << "edge " << bits(v, c.n()) << " -> " << bits(e.target, c.n()) << " letter " << k << " ";
      if (e.kind == EdgeMap::Wedge)
        out << "wedge kappa=" << cls_str(e.kappa, c.basis_keys(e.target), c.m());
      else
        out << "quotient";
      out << "\n";
    }
  return out.str();
}

}  // namespace openkh

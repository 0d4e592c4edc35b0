#include "openkh/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "openkh/errors.hpp"
#include "openkh/gf2.hpp"

namespace openkh {

// ---- resolutions ----

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

ResolutionState resolve_state(const BraidWord& b, uint64_t vertex) {
  const int s = b.strands, n = b.n();
  const int levels = std::max(n, 1);
  UnionFind uf(levels * s);
  for (int j = 0; j < n; ++j) {
    const int a = b.letters[j].gen - 1, c = a + 1, next = (j + 1) % n;
    for (int p = 0; p < s; ++p)
      if (p != a && p != c) uf.unite(j * s + p, next * s + p);
    bool bit = (vertex >> j) & 1;
    // 0-resolution of a positive crossing is the oriented (vertical) one
    bool horizontal = (b.letters[j].sign > 0) == bit;
    if (horizontal) {
      uf.unite(j * s + a, j * s + c);
      uf.unite(next * s + a, next * s + c);
    } else {
      uf.unite(j * s + a, next * s + a);
      uf.unite(j * s + c, next * s + c);
    }
  }
  ResolutionState st;
  st.vertex = vertex;
  st.circle_of_segment.assign(levels * s, -1);
  std::vector<int> id(levels * s, -1);
  for (int seg = 0; seg < levels * s; ++seg) {
    int r = uf.find(seg);
    if (id[r] < 0) id[r] = st.circles++;
    st.circle_of_segment[seg] = id[r];
  }
  return st;
}

// ---- the reduced cube over GF(2) ----

namespace {

enum class Algebra { Khovanov, Turner };

struct BraidCube {
  const BraidWord& b;
  int n, s, n_plus, n_minus;
  std::vector<ResolutionState> states;
  std::vector<std::vector<int>> rep;        // first segment of each circle
  std::vector<std::vector<uint64_t>> by_deg;  // vertices by popcount
  std::vector<uint64_t> offset;

  BraidCube(const BraidWord& br, Exec exec) : b(br), n(br.n()), s(br.strands) {
    if (n > 26) throw LimitExceeded("braid too long for the oracle");
    n_minus = b.n_minus();
    n_plus = n - n_minus;
    const uint64_t N = uint64_t{1} << n;
    states.resize(N);
    rep.resize(N);
    parallel_for(
        N, exec,
        [&](size_t v) {
          states[v] = resolve_state(b, v);
          auto& r = rep[v];
          r.assign(states[v].circles, -1);
          const auto& cs = states[v].circle_of_segment;
          for (int seg = 0; seg < static_cast<int>(cs.size()); ++seg)
            if (r[cs[seg]] < 0) r[cs[seg]] = seg;
        },
        64);
    by_deg.assign(n + 1, {});
    offset.assign(N, 0);
    for (uint64_t v = 0; v < N; ++v) by_deg[std::popcount(v)].push_back(v);
    for (auto& vs : by_deg) {
      uint64_t off = 0;
      for (auto v : vs) offset[v] = off, off += gens(v);
    }
  }

  uint64_t gens(uint64_t v) const { return uint64_t{1} << (states[v].circles - 1); }
  const std::vector<uint64_t>& at_degree(int i) const {
    static const std::vector<uint64_t> none;
    int p = i + n_minus;
    return (p < 0 || p > n) ? none : by_deg[p];
  }
  uint64_t dim(int i) const {
    uint64_t d = 0;
    for (auto v : at_degree(i)) d += gens(v);
    return d;
  }
  int q(uint64_t v, uint32_t labels) const {
    int plus = std::popcount(labels), minus = states[v].circles - 1 - plus;
    return plus - minus + std::popcount(v) + n_plus - 2 * n_minus;
  }

  // images of every generator at v along the edge that flips crossing k
  void edge(uint64_t v, int k, Algebra alg, std::vector<std::vector<uint32_t>>& out) const {
    const uint64_t w = v | (uint64_t{1} << k);
    const auto& A = states[v];
    const auto& B = states[w];
    const int a = b.letters[k].gen - 1, c = a + 1, next = (k + 1) % n;
    const int ends[4] = {k * s + a, k * s + c, next * s + a, next * s + c};
    // where each old circle goes
    std::vector<int> to(A.circles);
    for (int x = 0; x < A.circles; ++x) to[x] = B.circle_of_segment[rep[v][x]];
    const uint32_t off = static_cast<uint32_t>(offset[w]);
    auto label = [](uint32_t L, int circle) { return circle == 0 ? true : bool((L >> (circle - 1)) & 1); };
    auto put = [](uint32_t& L, int circle, bool plus) {
      if (circle > 0 && plus) L |= uint32_t{1} << (circle - 1);
    };

    if (B.circles + 1 == A.circles) {
      int X = A.circle_of_segment[ends[0]], Y = X;
      for (int e : ends)
        if (A.circle_of_segment[e] != X) Y = A.circle_of_segment[e];
      const int Z = B.circle_of_segment[ends[0]];
      for (uint32_t L = 0; L < gens(v); ++L) {
        uint32_t base = 0;
        for (int x = 0; x < A.circles; ++x)
          if (x != X && x != Y) put(base, to[x], label(L, x));
        bool lx = label(L, X), ly = label(L, Y);
        if (Z == 0) {
          // the marked circle stays v+ only if the other one was v+
          if (lx && ly) out[L].push_back(off + base);
          continue;
        }
        if (lx && ly) {
          uint32_t t = base;
          put(t, Z, true);
          out[L].push_back(off + t);
        } else if (lx != ly || alg == Algebra::Turner) {
          out[L].push_back(off + base);
        }
      }
    } else if (B.circles == A.circles + 1) {
      const int X = A.circle_of_segment[ends[0]];
      int Z1 = B.circle_of_segment[ends[0]], Z2 = Z1;
      for (int e : ends)
        if (B.circle_of_segment[e] != Z1) Z2 = B.circle_of_segment[e];
      for (uint32_t L = 0; L < gens(v); ++L) {
        uint32_t base = 0;
        for (int x = 0; x < A.circles; ++x)
          if (x != X) put(base, to[x], label(L, x));
        if (X == 0) {
          int other = Z1 == 0 ? Z2 : Z1;
          out[L].push_back(off + base);
          if (alg == Algebra::Turner) {
            uint32_t t = base;
            put(t, other, true);
            out[L].push_back(off + t);
          }
          continue;
        }
        if (label(L, X)) {
          uint32_t t1 = base, t2 = base;
          put(t1, Z1, true);
          put(t2, Z2, true);
          out[L].push_back(off + t1);
          out[L].push_back(off + t2);
          if (alg == Algebra::Turner) {
            uint32_t t = base;
            put(t, Z1, true);
            put(t, Z2, true);
            out[L].push_back(off + t);
          }
        } else {
          out[L].push_back(off + base);
        }
      }
    } else {
      throw Error("resolution change neither merges nor splits");
    }
  }

  // rows of d: degree i -> i+1
  SparseRows block(int i, Algebra alg, Exec exec) const {
    const auto& src = at_degree(i);
    SparseRows rows(dim(i));
    parallel_for(src.size(), exec, [&](size_t idx) {
      uint64_t v = src[idx];
      std::vector<std::vector<uint32_t>> out(gens(v));
      for (int k = 0; k < n; ++k)
        if (!((v >> k) & 1)) edge(v, k, alg, out);
      for (uint32_t L = 0; L < out.size(); ++L) {
        auto& r = out[L];
        std::sort(r.begin(), r.end());
        // duplicate terms cancel mod 2
        std::vector<uint32_t> clean;
        for (size_t x = 0; x < r.size();) {
          size_t y = x;
          while (y < r.size() && r[y] == r[x]) ++y;
          if ((y - x) & 1) clean.push_back(r[x]);
          x = y;
        }
        rows[offset[v] + L] = std::move(clean);
      }
    });
    return rows;
  }

  std::vector<int> qs(int i) const {
    std::vector<int> out(dim(i));
    for (auto v : at_degree(i))
      for (uint32_t L = 0; L < gens(v); ++L) out[offset[v] + L] = q(v, L);
    return out;
  }
};

}  // namespace

// ---- bigraded ranks ----

uint64_t BigradedRanks::total() const {
  uint64_t t = 0;
  for (auto& [k, r] : ranks) t += r;
  return t;
}

uint64_t BigradedRanks::at(int i, int q) const {
  auto it = ranks.find({i, q});
  return it == ranks.end() ? 0 : it->second;
}

GradedRanks BigradedRanks::collapse() const {
  GradedRanks g;
  for (auto& [k, r] : ranks)
    if (r) g.ranks[k.first] += r;
  return g;
}

std::string BigradedRanks::polynomial() const {
  std::string s;
  for (auto& [k, r] : ranks) {
    if (!r) continue;
    if (!s.empty()) s += " + ";
    if (r != 1) s += std::to_string(r);
    s += "t^" + std::to_string(k.first) + " q^" + std::to_string(k.second);
  }
  return s.empty() ? "0" : s;
}

BigradedRanks reduced_kh(const BraidWord& b, Exec exec) {
  BraidCube cube(b, exec);
  const int lo = -cube.n_minus, hi = cube.n - cube.n_minus;
  // rank of d out of (i, q), keyed like the result
  std::vector<std::map<int, uint64_t>> out_rank(hi - lo + 1);
  std::vector<std::map<int, uint64_t>> dims(hi - lo + 1);
  for (int i = lo; i <= hi; ++i)
    for (int q : cube.qs(i)) ++dims[i - lo][q];
  parallel_for(
      hi - lo, exec,
      [&](size_t bi) {
        int i = lo + static_cast<int>(bi);
        auto rows = cube.block(i, Algebra::Khovanov, Exec::serial);
        auto q = cube.qs(i);
        // d preserves q, so the block splits by the source q
        std::map<int, SparseRows> parts;
        for (size_t r = 0; r < rows.size(); ++r) parts[q[r]].push_back(std::move(rows[r]));
        for (auto& [qq, part] : parts) out_rank[bi][qq] = sparse_rank(std::move(part), cube.dim(i + 1));
      },
      1);
  BigradedRanks kh;
  for (int i = lo; i <= hi; ++i)
    for (auto& [q, d] : dims[i - lo]) {
      uint64_t out = out_rank[i - lo].count(q) ? out_rank[i - lo].at(q) : 0;
      uint64_t in = (i > lo && out_rank[i - lo - 1].count(q)) ? out_rank[i - lo - 1].at(q) : 0;
      if (d < out + in) throw Error("oracle rank bookkeeping went negative");
      if (d - out - in) kh.ranks[{i, q}] = d - out - in;
    }
  return kh;
}

int self_linking(const BraidWord& b) { return b.writhe() - b.strands; }

PlamenevskayaReport plamenevskaya(const BraidWord& b) {
  BraidCube cube(b, Exec::parallel);
  PlamenevskayaReport r;
  for (int j = 0; j < cube.n; ++j)
    if (b.letters[j].sign < 0) r.vertex |= uint64_t{1} << j;
  r.i = 0;
  r.q = cube.q(r.vertex, 0);
  const uint32_t col = static_cast<uint32_t>(cube.offset[r.vertex]);
  // cycle check, then boundary test
  if (cube.n > 0) {
    auto up = cube.block(0, Algebra::Khovanov, Exec::parallel);
    if (!up[col].empty()) throw Error("Plamenevskaya generator is not a cycle");
  }
  if (cube.at_degree(-1).empty()) {
    r.survives = true;
    return r;
  }
  auto rows = cube.block(-1, Algebra::Khovanov, Exec::parallel);
  // restrict to the q of the class; d preserves q
  auto q = cube.qs(-1);
  SparseRows part;
  for (size_t x = 0; x < rows.size(); ++x)
    if (q[x] == r.q) part.push_back(std::move(rows[x]));
  size_t base = sparse_rank(part, cube.dim(0));
  part.push_back({col});
  r.survives = sparse_rank(std::move(part), cube.dim(0)) > base;
  return r;
}

TurnerReport turner_s(const BraidWord& b, bool want_s, Exec exec) {
  if (want_s && b.components() != 1) throw NotAKnot("s is only defined for knots; closure has " +
                                                    std::to_string(b.components()) + " components");
  BraidCube cube(b, exec);
  const int lo = -cube.n_minus, hi = cube.n - cube.n_minus;
  std::vector<SparseRows> blocks(hi - lo);
  std::vector<uint64_t> rk(hi - lo, 0);
  parallel_for(
      hi - lo, exec,
      [&](size_t bi) {
        blocks[bi] = cube.block(lo + static_cast<int>(bi), Algebra::Turner, Exec::serial);
        rk[bi] = sparse_rank(blocks[bi], cube.dim(lo + static_cast<int>(bi) + 1));
      },
      1);
  TurnerReport t;
  for (int i = lo; i <= hi; ++i) {
    uint64_t out = i < hi ? rk[i - lo] : 0, in = i > lo ? rk[i - lo - 1] : 0;
    t.rank += cube.dim(i) - out - in;
  }
  if (!want_s) return t;

  // s = largest j such that F_j (q >= j) in degree 0 carries the class:
  // dim(Z ∩ F_j) > dim(B ∩ F_j)
  const auto q0 = cube.qs(0);
  const SparseRows empty;
  const SparseRows& d0 = hi > 0 ? blocks[0 - lo] : empty;
  const SparseRows& dm1 = lo < 0 ? blocks[-1 - lo] : empty;
  const uint64_t rank_dm1 = lo < 0 ? rk[-1 - lo] : 0;
  std::set<int> levels(q0.begin(), q0.end());
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    int j = *it;
    SparseRows top;
    uint64_t fj = 0;
    for (size_t x = 0; x < q0.size(); ++x)
      if (q0[x] >= j) {
        ++fj;
        if (!d0.empty()) top.push_back(d0[x]);
      }
    uint64_t z = fj - (top.empty() ? 0 : sparse_rank(std::move(top), cube.dim(1)));
    SparseRows low;
    for (auto& r : dm1) {
      std::vector<uint32_t> keep;
      for (auto c : r)
        if (q0[c] < j) keep.push_back(c);
      low.push_back(std::move(keep));
    }
    uint64_t bj = rank_dm1 - (low.empty() ? 0 : sparse_rank(std::move(low), q0.size()));
    if (z > bj) {
      t.s = j;
      break;
    }
  }
  if (!t.s) throw Error("Turner class not found in degree 0");
  return t;
}

BigInt link_determinant(const BraidWord& b) {
  auto w = braid_to_openbook(b);
  auto h = h1_order(w, humphries(w.surface));
  return h.infinite ? BigInt(0) : h.value;
}

BigInt jones_determinant(const BigradedRanks& kh) {
  // sum (-1)^i sqrt(-1)^q rank, then its modulus
  BigInt re = 0, im = 0;
  for (auto& [k, r] : kh.ranks) {
    BigInt v = k.first % 2 == 0 ? BigInt(r) : -BigInt(r);
    switch (((k.second % 4) + 4) % 4) {
      case 0: re += v; break;
      case 1: im += v; break;
      case 2: re -= v; break;
      case 3: im -= v; break;
    }
  }
  BigInt norm = re * re + im * im;
  BigInt root = boost::multiprecision::sqrt(norm);
  if (root * root != norm) throw Error("Jones determinant is not an integer");
  return root;
}

CrossCheckReport cross_check(const TwistWord& w, const CurveSystem& sys) {
  auto b = openbook_to_braid(w);  // NotBraidLike on a0
  CrossCheckReport r;
  auto c = compute(w, sys);
  r.engine = c.kh;
  r.engine_psi = c.psi.survives;
  r.oracle = reduced_kh(b).collapse();
  r.oracle_psi = plamenevskaya(b).survives;
  return r;
}

}  // namespace openkh

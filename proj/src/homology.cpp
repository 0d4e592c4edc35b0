#include "openkh/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "openkh/errors.hpp"

namespace openkh {

uint64_t GradedRanks::total() const {
  uint64_t t = 0;
  for (auto& [d, r] : ranks) t += r;
  return t;
}

uint64_t GradedRanks::at(int d) const {
  auto it = ranks.find(d);
  return it == ranks.end() ? 0 : it->second;
}

int64_t GradedRanks::euler() const {
  int64_t e = 0;
  for (auto& [d, r] : ranks) e += (d % 2 == 0 ? 1 : -1) * static_cast<int64_t>(r);
  return e;
}

std::string GradedRanks::poincare() const {
  std::string s;
  for (auto& [d, r] : ranks) {
    if (!r) continue;
    if (!s.empty()) s += " + ";
    if (r != 1) s += std::to_string(r);
    s += "t^" + std::to_string(d);
  }
  return s.empty() ? "0" : s;
}

GradedRanks e1_dims(const CubeComplex& c) {
  GradedRanks g;
  for (int d = c.min_grading(); d <= c.max_grading(); ++d)
    if (auto x = c.dim_at(d)) g.ranks[d] = x;
  return g;
}

GradedRanks e2_graded_ranks(const CubeComplex& c, Exec exec) {
  const int lo = c.min_grading(), hi = c.max_grading();
  // rank of D: C_d -> C_{d+1}, index d - lo
  std::vector<uint64_t> rk(hi - lo + 1, 0);
  const size_t blocks = hi - lo;
  parallel_for(
      blocks, exec,
      [&](size_t b) {
        int d = lo + static_cast<int>(b);
        auto rows = differential_block(c, d, Exec::serial);
        rk[b] = sparse_rank(std::move(rows), c.dim_at(d + 1));
      },
      1);
  GradedRanks g;
  for (int d = lo; d <= hi; ++d) {
    uint64_t dim = c.dim_at(d);
    uint64_t out = rk[d - lo];
    uint64_t in = d > lo ? rk[d - lo - 1] : 0;
    if (dim < out + in) throw Error("rank bookkeeping went negative; D^2 != 0?");
    if (uint64_t r = dim - out - in) g.ranks[d] = r;
  }
  return g;
}

PsiReport psi_survives(const CubeComplex& c) {
  PsiReport p;
  p.is_cycle = psi_is_cycle(c);
  auto psi = psi_tilde(c);
  if (c.vertices_at(-1).empty()) {
    p.survives = true;
    return p;
  }
  auto rows = differential_block(c, -1, Exec::parallel);
  const uint64_t cols = c.dim_at(0);
  size_t base = sparse_rank(rows, cols);
  rows.push_back({static_cast<uint32_t>(c.offset(psi.vertex) + psi.monomials[0])});
  p.survives = sparse_rank(std::move(rows), cols) > base;
  return p;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::TightCertified: return "TightCertified";
    case VerdictKind::NotStronglyFillableCertified: return "NotStronglyFillableCertified";
    default: return "Inconclusive";
  }
}

VerdictKind verdict_from_string(const std::string& s) {
  if (s == "TightCertified") return VerdictKind::TightCertified;
  if (s == "NotStronglyFillableCertified") return VerdictKind::NotStronglyFillableCertified;
  if (s == "Inconclusive") return VerdictKind::Inconclusive;
  throw ParseError("unknown verdict '" + s + "'");
}

namespace {
bool tight_holds(const Verdict& v) { return !v.h1.infinite && BigInt(v.total_rank) == v.h1.value && v.psi.survives; }
bool nsf_holds(const Verdict& v) { return v.max_support <= 0 && !v.psi.survives; }
}  // namespace

Verdict decide(const GradedRanks& kh, const H1Order& h1, const PsiReport& psi) {
  Verdict v;
  v.total_rank = kh.total();
  v.h1 = h1;
  v.psi = psi;
  if (!kh.ranks.empty()) {
    v.min_support = kh.ranks.begin()->first;
    v.max_support = kh.ranks.rbegin()->first;
  }
  v.evidence.push_back("total rank " + std::to_string(v.total_rank));
  v.evidence.push_back("|H1| " + h1.str());
  v.evidence.push_back(psi.survives ? "psi survives" : "psi vanishes");
  v.evidence.push_back("support [" + std::to_string(v.min_support) + ", " + std::to_string(v.max_support) + "]");

  if (tight_holds(v)) {
    v.kind = VerdictKind::TightCertified;
    v.evidence.push_back("rank = |H1| so the spectral sequence collapses at E2; psi != 0 gives c != 0");
  } else if (nsf_holds(v)) {
    v.kind = VerdictKind::NotStronglyFillableCertified;
    v.evidence.push_back("psi = 0 with support in gradings <= 0 gives c = 0");
  } else {
    v.kind = VerdictKind::Inconclusive;
    if (h1.infinite)
      v.evidence.push_back("|H1| infinite: collapse test unusable");
    else if (psi.survives)
      v.evidence.push_back("psi != 0 but rank != |H1|");
    else
      v.evidence.push_back("psi = 0 but support reaches positive gradings");
  }
  return v;
}

bool verdict_consistent(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::TightCertified: return tight_holds(v);
    case VerdictKind::NotStronglyFillableCertified: return nsf_holds(v) && !tight_holds(v);
    default: return !tight_holds(v) && !nsf_holds(v);
  }
}

Computation compute(const TwistWord& w, const CurveSystem& sys, Exec exec) {
  Computation out;
  auto c = build_e1(w, sys, {exec});
  out.e1 = e1_dims(c);
  out.kh = e2_graded_ranks(c, exec);
  out.psi = psi_survives(c);
  out.h1 = h1_order(w, sys);
  out.verdict = decide(out.kh, out.h1, out.psi);
  return out;
}

Verdict verdict(const TwistWord& w, const CurveSystem& sys) { return compute(w, sys).verdict; }

// ---- staged cancellation ----

std::vector<Page> staged_cancellation(const FilteredComplex& c, const std::vector<std::vector<uint32_t>>& marked,
                                      int max_stage) {
  const size_t N = c.level.size();
  std::vector<std::set<uint32_t>> succ(N), pred(N);
  for (uint32_t x = 0; x < N; ++x)
    for (auto y : c.d[x]) {
      if (c.level[y] < c.level[x]) throw Error("differential lowers the filtration");
      succ[x].insert(y), pred[y].insert(x);
    }
  std::vector<std::set<uint32_t>> marks;
  for (auto& m : marked) marks.emplace_back(m.begin(), m.end());
  std::vector<char> alive(N, 1);

  auto toggle = [&](uint32_t z, uint32_t t) {
    if (succ[z].erase(t))
      pred[t].erase(z);
    else
      succ[z].insert(t), pred[t].insert(z);
  };

  auto cancel = [&](uint32_t xk, uint32_t xl) {
    const std::vector<uint32_t> dk(succ[xk].begin(), succ[xk].end());
    for (auto& m : marks) {
      bool hit = m.count(xl);
      m.erase(xk), m.erase(xl);
      if (hit)
        for (auto t : dk)
          if (t != xl && !m.erase(t)) m.insert(t);
    }
    const std::vector<uint32_t> zs(pred[xl].begin(), pred[xl].end());
    for (auto z : zs)
      if (z != xk)
        for (auto t : dk) toggle(z, t);
    for (auto x : {xk, xl}) {
      for (auto z : pred[x]) succ[z].erase(x);
      for (auto t : succ[x]) pred[t].erase(x);
      pred[x].clear(), succ[x].clear();
      alive[x] = 0;
    }
  };

  std::vector<Page> pages;
  for (int s = 0; s <= max_stage; ++s) {
    for (bool progress = true; progress;) {
      progress = false;
      for (uint32_t x = 0; x < N && !progress; ++x) {
        if (!alive[x]) continue;
        for (auto y : succ[x])
          if (c.level[y] - c.level[x] == s) {
            cancel(x, y);
            progress = true;
            break;
          }
      }
    }
    Page p;
    p.stage = s;
    for (uint32_t x = 0; x < N; ++x)
      if (alive[x]) ++p.counts[c.level[x]], p.alive.push_back(x);
    for (auto& m : marks) p.marked.emplace_back(m.begin(), m.end());
    pages.push_back(std::move(p));
  }
  return pages;
}

FilteredComplex cube_as_filtered(const CubeComplex& c, std::vector<uint32_t>* psi_index) {
  FilteredComplex f;
  std::map<int, uint32_t> start;
  uint32_t next = 0;
  for (int d = c.min_grading(); d <= c.max_grading(); ++d) {
    start[d] = next;
    next += static_cast<uint32_t>(c.dim_at(d));
  }
  f.level.resize(next);
  f.d.resize(next);
  for (int d = c.min_grading(); d <= c.max_grading(); ++d) {
    for (uint32_t x = 0; x < c.dim_at(d); ++x) f.level[start[d] + x] = d;
    if (d == c.max_grading()) continue;
    auto rows = differential_block(c, d, Exec::serial);
    for (uint32_t x = 0; x < rows.size(); ++x)
      for (auto t : rows[x]) f.d[start[d] + x].push_back(start[d + 1] + t);
  }
  if (psi_index) {
    auto psi = psi_tilde(c);
    *psi_index = {static_cast<uint32_t>(start[0] + c.offset(psi.vertex) + psi.monomials[0])};
  }
  return f;
}

}  // namespace openkh

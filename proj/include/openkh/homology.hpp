#pragma once

#include <map>
#include <string>
#include <vector>

#include "openkh/cube.hpp"
#include "openkh/surgery.hpp"

namespace openkh {

struct GradedRanks {
  std::map<int, uint64_t> ranks;  // zero entries omitted

  uint64_t total() const;
  uint64_t at(int d) const;
  int64_t euler() const;  // sum (-1)^d rank
  std::string poincare() const;  // "t^-6 + 2t^-5 + ..." ascending
  bool operator==(const GradedRanks&) const = default;
};

// dims of E^1 per grading
GradedRanks e1_dims(const CubeComplex& c);

GradedRanks e2_graded_ranks(const CubeComplex& c, Exec exec = Exec::parallel);

struct PsiReport {
  bool is_cycle = true;
  bool survives = false;
  int grading = 0;
};

// one rank computation on the (-1 -> 0) block
PsiReport psi_survives(const CubeComplex& c);

enum class VerdictKind { TightCertified, NotStronglyFillableCertified, Inconclusive };
std::string to_string(VerdictKind k);
VerdictKind verdict_from_string(const std::string& s);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  uint64_t total_rank = 0;
  H1Order h1;
  PsiReport psi;
  int min_support = 0, max_support = 0;
  std::vector<std::string> evidence;
};

Verdict decide(const GradedRanks& kh, const H1Order& h1, const PsiReport& psi);
// re-checks the kind against its evidence fields
bool verdict_consistent(const Verdict& v);

struct Computation {
  GradedRanks e1, kh;
  PsiReport psi;
  H1Order h1;
  Verdict verdict;
};

Computation compute(const TwistWord& w, const CurveSystem& sys, Exec exec = Exec::parallel);
Verdict verdict(const TwistWord& w, const CurveSystem& sys);

// ---- staged cancellation on a filtered complex ----

struct FilteredComplex {
  std::vector<int> level;                  // filtration level per generator
  std::vector<std::vector<uint32_t>> d;    // d[x] = sorted targets
};

struct Page {
  int stage = 0;                           // after cancelling shift-`stage` components
  std::map<int, uint64_t> counts;          // surviving generators per level
  std::vector<std::vector<uint32_t>> marked;  // images of the marked chains
  std::vector<uint32_t> alive;             // surviving generator ids
};

// stage s cancels every differential component that raises the level by
// exactly s; pages[s] is then the E^{s+1} term
std::vector<Page> staged_cancellation(const FilteredComplex& c, const std::vector<std::vector<uint32_t>>& marked,
                                      int max_stage);

// the E^1 cube as a filtered complex (levels = I-grading); small words only
FilteredComplex cube_as_filtered(const CubeComplex& c, std::vector<uint32_t>* psi_index = nullptr);

}  // namespace openkh

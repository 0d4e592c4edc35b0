#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "openkh/exec.hpp"
#include "openkh/homology.hpp"
#include "openkh/openbook.hpp"
#include "openkh/surgery.hpp"

namespace openkh {

// circles of one complete resolution of a braid closure. Segment (p, j) is
// strand position p just below crossing j; id = j * strands + p.
// Circle 0 always holds segment 0, the basepoint on strand 1.
struct ResolutionState {
  uint64_t vertex = 0;
  int circles = 0;
  std::vector<int> circle_of_segment;
};

ResolutionState resolve_state(const BraidWord& b, uint64_t vertex);

struct BigradedRanks {
  std::map<std::pair<int, int>, uint64_t> ranks;  // (i, q) -> rank, zeros omitted

  uint64_t total() const;
  uint64_t at(int i, int q) const;
  GradedRanks collapse() const;  // forget q
  std::string polynomial() const;  // "t^a q^b" terms sorted by (a, b)
  bool operator==(const BigradedRanks&) const = default;
};

BigradedRanks reduced_kh(const BraidWord& b, Exec exec = Exec::parallel);

struct PlamenevskayaReport {
  uint64_t vertex = 0;
  bool survives = false;
  int i = 0, q = 0;
};

PlamenevskayaReport plamenevskaya(const BraidWord& b);

int self_linking(const BraidWord& b);

struct TurnerReport {
  uint64_t rank = 0;
  std::optional<int> s;  // knots only
};

// rank of reduced Turner homology; s via the q-filtration level of the
// surviving class (throws NotAKnot when want_s and the closure is a link)
TurnerReport turner_s(const BraidWord& b, bool want_s = true, Exec exec = Exec::parallel);

// |H1| of the branched double cover, through the surgery module; 0 = infinite
BigInt link_determinant(const BraidWord& b);

// |V(-1)| from the Euler characteristic of reduced Kh; independent of the surgery code
BigInt jones_determinant(const BigradedRanks& kh);

struct CrossCheckReport {
  GradedRanks engine, oracle;
  bool engine_psi = false, oracle_psi = false;
  bool agree() const { return engine == oracle && engine_psi == oracle_psi; }
};

CrossCheckReport cross_check(const TwistWord& w, const CurveSystem& sys);

}  // namespace openkh

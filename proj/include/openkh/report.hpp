#pragma once

#include <optional>
#include <string>
#include <vector>

#include "openkh/homology.hpp"
#include "openkh/oracle.hpp"

namespace openkh {

// what `openkh compute` / `verdict` print; JSON round-trips exactly
struct ResultDocument {
  std::string word;
  Surface surface;
  int n = 0, n_minus = 0;
  GradedRanks ranks;
  bool psi_is_cycle = true, psi_survives = false;
  H1Order h1;
  VerdictKind verdict = VerdictKind::Inconclusive;
  std::vector<std::string> evidence;
  double seconds = 0;

  bool operator==(const ResultDocument& o) const;
};

ResultDocument make_result(const TwistWord& w, const Computation& c, double seconds);
std::string to_json(const ResultDocument& d);
ResultDocument result_from_json(const std::string& text);
std::string to_text(const ResultDocument& d);

struct OracleDocument {
  std::string braid;
  int strands = 2;
  std::optional<BigradedRanks> kh;
  std::optional<PlamenevskayaReport> psi;
  int sl = 0;
  std::optional<int> s;
  std::optional<uint64_t> turner_rank;
  std::optional<BigInt> det;  // 0 = infinite
  std::optional<bool> crosscheck;

  bool operator==(const OracleDocument& o) const;
};

std::string to_json(const OracleDocument& d);
OracleDocument oracle_from_json(const std::string& text);
std::string to_text(const OracleDocument& d);

}  // namespace openkh

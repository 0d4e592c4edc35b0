#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "openkh/intmatrix.hpp"
#include "openkh/openbook.hpp"

namespace openkh {

// Linking data of the base link and of the curves' pushoffs into -M_{S,id}.
// Only homological data enters the E^1 page, so this is all we need.
struct CurveSystem {
  struct Curve {
    std::vector<int64_t> base_linking;  // length m
    int64_t framing = 0;                // page framing of a single pushoff
    bool operator==(const Curve&) const = default;
  };

  Surface surface;
  IntMatrix base;                                 // m x m, 0-framed
  std::map<int, Curve> curves;                    // keyed by curve index (a<idx>)
  std::map<std::pair<int, int>, int64_t> below;   // (c, d): lk(c pushed low, d pushed high)

  int m() const { return static_cast<int>(base.rows); }
  bool has_curve(int idx) const { return curves.count(idx) > 0; }
  int64_t pushoff(int lower, int upper) const;
  bool operator==(const CurveSystem&) const = default;
};

// the shipped system: a 0-framed unlink of m base circles, alpha_j dual to
// base circle j, alpha_0 ~ alpha_1 + alpha_3. `upper` picks which height order
// of two adjacent chain curves carries the +1; both give identical outputs
CurveSystem humphries(Surface s, bool upper = true);

// same construction with an arbitrary alpha_0 class (used by the sign search)
CurveSystem chain_system(Surface s, bool upper, std::optional<std::vector<int64_t>> alpha0);

CurveSystem parse_curve_system(std::string_view text);
std::string serialize_curve_system(const CurveSystem& sys);
CurveSystem load_curve_system(const std::string& path);

// labels: "b<j>" for base circles, "a<idx>@<pos>" for letter pos (0-based)
struct FramedLinkMatrix {
  std::vector<std::string> labels;
  std::vector<int> keys;  // global component keys: base j -> j, letter p -> m + p
  IntMatrix matrix;
};

// every letter's pushoff plus the base, diagonal = page framings
FramedLinkMatrix full_link_matrix(const TwistWord& w, const CurveSystem& sys);

// letter j present iff (eps_j, i_j) in {(+1,1), (-1,0)}
bool letter_present(int sign, bool bit);
std::vector<int> resolution_components(const TwistWord& w, uint64_t vertex);
FramedLinkMatrix build_resolution_matrix(const TwistWord& w, const CurveSystem& sys, uint64_t vertex);

struct ResolutionHomology {
  int l = 0;
  std::vector<int> keys;           // component keys, same order as the matrix
  std::vector<uint64_t> meridian;  // GF(2) class of each component's meridian, bit t = basis t
  std::vector<int> basis;          // positions (into keys) of the basis meridians
  bool torsion_free = true;
};

ResolutionHomology h1_f2(const FramedLinkMatrix& m, bool certify = true);

struct F2Class {
  uint64_t bits = 0;
  bool primitive() const { return bits != 0; }
  bool null() const { return bits == 0; }
};

F2Class meridian_class(const ResolutionHomology& r, int key);
// class of a knot given by its linking numbers with each component (matrix order)
F2Class knot_class(const ResolutionHomology& r, const std::vector<int64_t>& linking);

struct H1Order {
  bool infinite = false;
  BigInt value = 0;
  std::string str() const { return infinite ? "infinite" : value.str(); }
};

H1Order h1_order(const TwistWord& w, const CurveSystem& sys);

}  // namespace openkh

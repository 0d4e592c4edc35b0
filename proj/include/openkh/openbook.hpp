#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace openkh {

struct Surface {
  int genus = 0;
  int boundary = 1;  // 1 or 2

  // number of chain curves, also the number of base components
  int chain_length() const { return 2 * genus + boundary - 1; }
  bool has_alpha0() const { return genus >= 2; }
  bool valid_curve(int idx) const {
    return (idx >= 1 && idx <= chain_length()) || (idx == 0 && has_alpha0());
  }
  bool operator==(const Surface&) const = default;
};

struct TwistLetter {
  int curve = 1;
  int sign = 1;
  bool operator==(const TwistLetter&) const = default;
};

struct TwistWord {
  Surface surface;
  std::vector<TwistLetter> letters;  // leftmost = lowest height = performed first

  int n() const { return static_cast<int>(letters.size()); }
  int n_minus() const;
  bool uses_alpha0() const;
  std::string to_string() const;  // canonical token form, runs compressed
  bool operator==(const TwistWord&) const = default;
};

struct BraidLetter {
  int gen = 1;
  int sign = 1;
  bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
  int strands = 2;
  std::vector<BraidLetter> letters;

  int n() const { return static_cast<int>(letters.size()); }
  int writhe() const;
  int n_minus() const;
  int components() const;  // cycles of the underlying permutation
  std::string to_string() const;
  bool operator==(const BraidWord&) const = default;
};

// "a<idx>[^<int>]" tokens separated by whitespace
TwistWord parse_twist_word(std::string_view text, Surface s);
// "s<idx>[^<int>]" tokens
BraidWord parse_braid_word(std::string_view text, int strands);
Surface parse_surface(std::string_view text);  // "k,r"

TwistWord braid_to_openbook(const BraidWord& b);
BraidWord openbook_to_braid(const TwistWord& w);

TwistWord positive_stabilize(const TwistWord& w);
TwistWord negative_stabilize(const TwistWord& w);

TwistWord concat(const TwistWord& a, const TwistWord& b);

}  // namespace openkh

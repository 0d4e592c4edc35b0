#include "openkh/openbook.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "openkh/errors.hpp"

namespace openkh {

namespace {

struct Token {
  int idx;
  int exp;
};

int to_int(std::string_view s, std::string_view tok) {
  int v = 0;
  if (s.empty()) throw MalformedToken("malformed token '" + std::string(tok) + "'");
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw MalformedToken("malformed token '" + std::string(tok) + "'");
  return v;
}

std::vector<Token> tokenize(std::string_view text, char head) {
  std::vector<Token> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != head)
      throw MalformedToken("malformed token '" + tok + "'");
    std::string_view body(tok);
    body.remove_prefix(1);
    auto caret = body.find('^');
    int idx, exp = 1;
    if (caret == std::string_view::npos) {
      idx = to_int(body, tok);
    } else {
      idx = to_int(body.substr(0, caret), tok);
      auto e = body.substr(caret + 1);
      if (!e.empty() && e[0] == '+') e.remove_prefix(1);
      exp = to_int(e, tok);
    }
    if (idx < 0 || body[0] == '-') throw MalformedToken("malformed token '" + tok + "'");
    out.push_back({idx, exp});
  }
  return out;
}

template <class Letter>
std::string compress(const std::vector<Letter>& ls, char head, int Letter::*field) {
  std::string s;
  for (size_t i = 0; i < ls.size();) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int e = static_cast<int>(j - i) * ls[i].sign;
    if (!s.empty()) s += ' ';
    s += head + std::to_string(ls[i].*field);
    if (e != 1) s += "^" + std::to_string(e);
    i = j;
  }
  return s;
}

}  // namespace

int TwistWord::n_minus() const {
  int c = 0;
  for (auto& l : letters) c += l.sign < 0;
  return c;
}

bool TwistWord::uses_alpha0() const {
  for (auto& l : letters)
    if (l.curve == 0) return true;
  return false;
}

std::string TwistWord::to_string() const { return compress(letters, 'a', &TwistLetter::curve); }

int BraidWord::writhe() const {
  int w = 0;
  for (auto& l : letters) w += l.sign;
  return w;
}

int BraidWord::n_minus() const {
  int c = 0;
  for (auto& l : letters) c += l.sign < 0;
  return c;
}

int BraidWord::components() const {
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (auto& l : letters) std::swap(perm[l.gen - 1], perm[l.gen]);
  std::vector<bool> seen(strands, false);
  int c = 0;
  for (int i = 0; i < strands; ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return c;
}

std::string BraidWord::to_string() const { return compress(letters, 's', &BraidLetter::gen); }

TwistWord parse_twist_word(std::string_view text, Surface s) {
  if (s.genus < 0 || (s.boundary != 1 && s.boundary != 2))
    throw ParseError("surface must have genus >= 0 and 1 or 2 boundary components");
  TwistWord w{s, {}};
  for (auto [idx, exp] : tokenize(text, 'a')) {
    if (!s.valid_curve(idx))
      throw UnknownCurve("curve a" + std::to_string(idx) + " does not exist on S_{" +
                         std::to_string(s.genus) + "," + std::to_string(s.boundary) + "}");
    int sign = exp < 0 ? -1 : 1;
    for (int k = 0; k < std::abs(exp); ++k) w.letters.push_back({idx, sign});
  }
  return w;
}

BraidWord parse_braid_word(std::string_view text, int strands) {
  if (strands < 2) throw ParseError("need at least 2 strands");
  BraidWord b{strands, {}};
  for (auto [idx, exp] : tokenize(text, 's')) {
    if (idx < 1 || idx >= strands)
      throw UnknownCurve("generator s" + std::to_string(idx) + " out of range for " +
                         std::to_string(strands) + " strands");
    int sign = exp < 0 ? -1 : 1;
    for (int k = 0; k < std::abs(exp); ++k) b.letters.push_back({idx, sign});
  }
  return b;
}

Surface parse_surface(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("surface must look like k,r");
  auto trim = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  Surface s{to_int(trim(text.substr(0, comma)), text), to_int(trim(text.substr(comma + 1)), text)};
  if (s.genus < 0 || (s.boundary != 1 && s.boundary != 2))
    throw ParseError("surface must have genus >= 0 and 1 or 2 boundary components");
  return s;
}

TwistWord braid_to_openbook(const BraidWord& b) {
  int m = b.strands - 1;
  Surface s{m / 2, m % 2 == 0 ? 1 : 2};
  TwistWord w{s, {}};
  for (auto& l : b.letters) w.letters.push_back({l.gen, l.sign});
  return w;
}

BraidWord openbook_to_braid(const TwistWord& w) {
  if (w.uses_alpha0()) throw NotBraidLike("word uses a0, which has no braid counterpart");
  BraidWord b{w.surface.chain_length() + 1, {}};
  for (auto& l : w.letters) b.letters.push_back({l.curve, l.sign});
  return b;
}

namespace {
TwistWord stabilize(const TwistWord& w, int sign) {
  TwistWord out = w;
  if (w.surface.boundary == 1)
    out.surface = {w.surface.genus, 2};
  else
    out.surface = {w.surface.genus + 1, 1};
  out.letters.push_back({out.surface.chain_length(), sign});
  return out;
}
}  // namespace

TwistWord positive_stabilize(const TwistWord& w) { return stabilize(w, +1); }
TwistWord negative_stabilize(const TwistWord& w) { return stabilize(w, -1); }

TwistWord concat(const TwistWord& a, const TwistWord& b) {
  if (!(a.surface == b.surface)) throw Error("concat: surfaces differ");
  TwistWord w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

}  // namespace openkh

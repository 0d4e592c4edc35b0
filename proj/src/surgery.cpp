#include "openkh/surgery.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include "openkh/errors.hpp"

namespace openkh {

int64_t CurveSystem::pushoff(int lower, int upper) const {
  auto it = below.find({lower, upper});
  return it == below.end() ? 0 : it->second;
}

CurveSystem chain_system(Surface s, bool upper, std::optional<std::vector<int64_t>> alpha0) {
  const int m = s.chain_length();
  CurveSystem sys;
  sys.surface = s;
  sys.base = IntMatrix(m, m);
  std::map<int, std::vector<int64_t>> cls;
  for (int j = 1; j <= m; ++j) {
    std::vector<int64_t> v(m, 0);
    v[j - 1] = 1;
    cls[j] = v;
  }
  if (alpha0 && s.has_alpha0()) cls[0] = *alpha0;
  // theta(x, y) = sum x_i y_{i+1}: the strictly upper part of the chain's
  // intersection form. Any other choice differing by a symmetric form is
  // absorbed by the base rows.
  auto theta = [&](const std::vector<int64_t>& x, const std::vector<int64_t>& y) {
    int64_t t = 0;
    for (int i = 0; i + 1 < m; ++i) t += upper ? x[i] * y[i + 1] : x[i + 1] * y[i];
    return t;
  };
  for (auto& [c, x] : cls) sys.curves[c] = {x, theta(x, x)};
  for (auto& [c, x] : cls)
    for (auto& [d, y] : cls) {
      if (c == d) continue;
      if (int64_t t = theta(x, y)) sys.below[{c, d}] = t;
    }
  return sys;
}

CurveSystem humphries(Surface s, bool upper) {
  std::vector<int64_t> a0(s.chain_length(), 0);
  if (s.has_alpha0()) a0[0] = a0[2] = 1;
  return chain_system(s, upper, a0);
}

// ---- config text ----

namespace {

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<int64_t> ints(const std::string& s, int line) {
  std::istringstream in(s);
  std::vector<int64_t> v;
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      v.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ConfigError("line " + std::to_string(line) + ": expected integers, got '" + tok + "'");
    }
  }
  return v;
}

int curve_index(const std::string& name, int line) {
  if (name.size() < 2 || name[0] != 'a')
    throw ConfigError("line " + std::to_string(line) + ": curve names look like a<idx>, got '" + name + "'");
  auto v = ints(name.substr(1), line);
  if (v.size() != 1 || v[0] < 0) throw ConfigError("line " + std::to_string(line) + ": bad curve name '" + name + "'");
  return static_cast<int>(v[0]);
}

}  // namespace

CurveSystem parse_curve_system(std::string_view text) {
  CurveSystem sys;
  int genus = -1, boundary = -1;
  std::vector<std::vector<int64_t>> base_rows;
  std::map<std::pair<int, int>, int64_t> links;
  std::string section;
  int current = -1;

  auto set_link = [&](int lo, int hi, int64_t v, int line) {
    auto [it, fresh] = links.emplace(std::make_pair(lo, hi), v);
    if (!fresh && it->second != v)
      throw ConfigError("line " + std::to_string(line) + ": conflicting pushoff linking for a" +
                        std::to_string(lo) + " below a" + std::to_string(hi));
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("line " + std::to_string(line) + ": unterminated section header");
      std::string head = trim(s.substr(1, s.size() - 2));
      if (head == "surface" || head == "base") {
        section = head;
      } else if (head.rfind("curve", 0) == 0) {
        section = "curve";
        current = curve_index(trim(head.substr(5)), line);
        if (sys.curves.count(current)) throw ConfigError("line " + std::to_string(line) + ": duplicate curve");
        sys.curves[current] = {};
      } else {
        throw ConfigError("line " + std::to_string(line) + ": unknown section [" + head + "]");
      }
      continue;
    }
    if (section == "base") {
      base_rows.push_back(ints(s, line));
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line) + ": expected key = value");
    std::string key = trim(s.substr(0, eq)), val = trim(s.substr(eq + 1));
    if (section == "surface") {
      auto v = ints(val, line);
      if (v.size() != 1) throw ConfigError("line " + std::to_string(line) + ": expected one integer");
      if (key == "genus")
        genus = static_cast<int>(v[0]);
      else if (key == "boundary")
        boundary = static_cast<int>(v[0]);
      else
        throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    } else if (section == "curve") {
      auto& c = sys.curves[current];
      if (key == "base_linking") {
        c.base_linking = ints(val, line);
      } else if (key == "framing") {
        auto v = ints(val, line);
        if (v.size() != 1) throw ConfigError("line " + std::to_string(line) + ": expected one integer");
        c.framing = v[0];
      } else if (key.rfind("below:", 0) == 0 || key.rfind("above:", 0) == 0) {
        int other = curve_index(trim(key.substr(6)), line);
        auto v = ints(val, line);
        if (v.size() != 1) throw ConfigError("line " + std::to_string(line) + ": expected one integer");
        if (key[0] == 'b')
          set_link(current, other, v[0], line);
        else
          set_link(other, current, v[0], line);
      } else {
        throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
      }
    } else {
      throw ConfigError("line " + std::to_string(line) + ": entry outside of a section");
    }
  }

  if (genus < 0 || (boundary != 1 && boundary != 2))
    throw ConfigError("[surface] needs genus >= 0 and boundary 1 or 2");
  sys.surface = {genus, boundary};
  const size_t m = sys.surface.chain_length();
  if (base_rows.size() != m) throw ConfigError("[base] must have " + std::to_string(m) + " rows");
  sys.base = IntMatrix(m, m);
  for (size_t i = 0; i < m; ++i) {
    if (base_rows[i].size() != m) throw ConfigError("[base] rows must have " + std::to_string(m) + " entries");
    for (size_t j = 0; j < m; ++j) sys.base(i, j) = base_rows[i][j];
  }
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (sys.base(i, j) != sys.base(j, i)) throw ConfigError("[base] matrix must be symmetric");
  for (auto& [idx, c] : sys.curves)
    if (c.base_linking.size() != m)
      throw ConfigError("curve a" + std::to_string(idx) + ": base_linking needs " + std::to_string(m) + " entries");
  for (auto& [k, v] : links) {
    if (!sys.curves.count(k.first) || !sys.curves.count(k.second))
      throw ConfigError("pushoff linking mentions an undefined curve");
    if (v) sys.below[k] = v;
  }
  return sys;
}

std::string serialize_curve_system(const CurveSystem& sys) {
  std::ostringstream out;
  out << "[surface]\ngenus = " << sys.surface.genus << "\nboundary = " << sys.surface.boundary << "\n\n[base]\n";
  for (size_t i = 0; i < sys.base.rows; ++i) {
    for (size_t j = 0; j < sys.base.cols; ++j) out << (j ? " " : "") << sys.base(i, j);
    out << "\n";
  }
  for (auto& [idx, c] : sys.curves) {
    out << "\n[curve a" << idx << "]\nbase_linking =";
    for (auto v : c.base_linking) out << " " << v;
    out << "\n";
    if (c.framing) out << "framing = " << c.framing << "\n";
    for (auto& [k, v] : sys.below)
      if (k.first == idx && v) out << "below:a" << k.second << " = " << v << "\n";
  }
  return out.str();
}

CurveSystem load_curve_system(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open curve system '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_curve_system(ss.str());
}

// ---- framed links ----

bool letter_present(int sign, bool bit) { return sign > 0 ? bit : !bit; }

std::vector<int> resolution_components(const TwistWord& w, uint64_t vertex) {
  std::vector<int> out;
  for (int j = 0; j < w.n(); ++j)
    if (letter_present(w.letters[j].sign, (vertex >> j) & 1)) out.push_back(j);
  return out;
}

namespace {

void check_system(const TwistWord& w, const CurveSystem& sys) {
  if (sys.m() != w.surface.chain_length())
    throw Error("curve system does not match the surface of the word");
  for (auto& l : w.letters)
    if (!sys.has_curve(l.curve)) throw UnknownCurve("curve a" + std::to_string(l.curve) + " is not in the curve system");
}

FramedLinkMatrix assemble(const TwistWord& w, const CurveSystem& sys, const std::vector<int>& letters) {
  const int m = sys.m();
  FramedLinkMatrix f;
  for (int j = 0; j < m; ++j) {
    f.labels.push_back("b" + std::to_string(j + 1));
    f.keys.push_back(j);
  }
  for (int p : letters) {
    f.labels.push_back("a" + std::to_string(w.letters[p].curve) + "@" + std::to_string(p));
    f.keys.push_back(m + p);
  }
  const size_t N = f.keys.size();
  f.matrix = IntMatrix(N, N);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) f.matrix(i, j) = sys.base(i, j);
  for (size_t a = 0; a < letters.size(); ++a) {
    const auto& ca = sys.curves.at(w.letters[letters[a]].curve);
    for (int j = 0; j < m; ++j) f.matrix(m + a, j) = f.matrix(j, m + a) = ca.base_linking[j];
    f.matrix(m + a, m + a) = ca.framing;
    for (size_t b = a + 1; b < letters.size(); ++b) {
      // letters[a] sits lower than letters[b]
      int64_t v = sys.pushoff(w.letters[letters[a]].curve, w.letters[letters[b]].curve);
      f.matrix(m + a, m + b) = f.matrix(m + b, m + a) = v;
    }
  }
  return f;
}

}  // namespace

FramedLinkMatrix full_link_matrix(const TwistWord& w, const CurveSystem& sys) {
  check_system(w, sys);
  std::vector<int> all(w.n());
  for (int j = 0; j < w.n(); ++j) all[j] = j;
  return assemble(w, sys, all);
}

FramedLinkMatrix build_resolution_matrix(const TwistWord& w, const CurveSystem& sys, uint64_t vertex) {
  check_system(w, sys);
  return assemble(w, sys, resolution_components(w, vertex));
}

ResolutionHomology h1_f2(const FramedLinkMatrix& f, bool certify) {
  const size_t N = f.keys.size();
  if (N > 64) throw Error("more than 64 link components");
  // relations are the rows; reduce to RREF with leftmost pivots
  std::vector<uint64_t> rows;
  for (size_t i = 0; i < N; ++i) {
    uint64_t r = 0;
    for (size_t j = 0; j < N; ++j)
      if (f.matrix(i, j) & 1) r |= uint64_t{1} << j;
    rows.push_back(r);
  }
  std::vector<int> pivot_of_col(N, -1);
  size_t rank = 0;
  for (size_t c = 0; c < N; ++c) {
    uint64_t bit = uint64_t{1} << c;
    size_t p = rank;
    while (p < rows.size() && !(rows[p] & bit)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    pivot_of_col[c] = static_cast<int>(rank++);
  }

  ResolutionHomology h;
  h.keys = f.keys;
  h.meridian.assign(N, 0);
  std::vector<int> basis_pos(N, -1);
  for (size_t c = 0; c < N; ++c)
    if (pivot_of_col[c] < 0) {
      basis_pos[c] = static_cast<int>(h.basis.size());
      h.basis.push_back(static_cast<int>(c));
      h.meridian[c] = uint64_t{1} << basis_pos[c];
    }
  h.l = static_cast<int>(h.basis.size());
  for (size_t c = 0; c < N; ++c) {
    if (pivot_of_col[c] < 0) continue;
    // mu_c = sum of the non-pivot entries of its row
    uint64_t r = rows[pivot_of_col[c]];
    uint64_t cls = 0;
    for (int b : h.basis)
      if (r >> b & 1) cls |= uint64_t{1} << basis_pos[b];
    h.meridian[c] = cls;
  }

  if (certify) {
    auto snf = smith_normal_form(f.matrix);
    for (auto d : snf.diag)
      if (d > 1) h.torsion_free = false;
    if (!h.torsion_free) {
      std::string lbl;
      if (f.labels.empty())
        for (auto k : f.keys) lbl += " #" + std::to_string(k);
      for (auto& s : f.labels) lbl += " " + s;
      throw TorsionEncountered("resolution has torsion in H1 (components:" + lbl + ")");
    }
  }
  return h;
}

F2Class meridian_class(const ResolutionHomology& r, int key) {
  for (size_t i = 0; i < r.keys.size(); ++i)
    if (r.keys[i] == key) return {r.meridian[i]};
  throw Error("component not present in this resolution");
}

F2Class knot_class(const ResolutionHomology& r, const std::vector<int64_t>& linking) {
  F2Class c;
  for (size_t i = 0; i < linking.size() && i < r.meridian.size(); ++i)
    if (linking[i] & 1) c.bits ^= r.meridian[i];
  return c;
}

H1Order h1_order(const TwistWord& w, const CurveSystem& sys) {
  auto f = full_link_matrix(w, sys);
  const int m = sys.m();
  for (int j = 0; j < w.n(); ++j) f.matrix(m + j, m + j) += w.letters[j].sign;
  BigInt d = determinant(f.matrix);
  if (d == 0) return {true, 0};
  return {false, abs(d)};
}

}  // namespace openkh

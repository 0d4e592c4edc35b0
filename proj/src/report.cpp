#include "openkh/report.hpp"

#include <sstream>

#include "json.hpp"
#include "openkh/errors.hpp"

namespace openkh {

using nlohmann::json;

namespace {

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
    return static_cast<int64_t>(v);
  return v.str();  // too wide for a JSON integer
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<int64_t>());
  return BigInt(j.get<std::string>());
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
}

}  // namespace

bool ResultDocument::operator==(const ResultDocument& o) const {
  return word == o.word && surface == o.surface && n == o.n && n_minus == o.n_minus && ranks == o.ranks &&
         psi_is_cycle == o.psi_is_cycle && psi_survives == o.psi_survives && h1.infinite == o.h1.infinite &&
         h1.value == o.h1.value && verdict == o.verdict && evidence == o.evidence && seconds == o.seconds;
}

ResultDocument make_result(const TwistWord& w, const Computation& c, double seconds) {
  ResultDocument d;
  d.word = w.to_string();
  d.surface = w.surface;
  d.n = w.n();
  d.n_minus = w.n_minus();
  d.ranks = c.kh;
  d.psi_is_cycle = c.psi.is_cycle;
  d.psi_survives = c.psi.survives;
  d.h1 = c.h1;
  d.verdict = c.verdict.kind;
  d.evidence = c.verdict.evidence;
  d.seconds = seconds;
  return d;
}

std::string to_json(const ResultDocument& d) {
  json j;
  j["word"] = d.word;
  j["surface"] = {d.surface.genus, d.surface.boundary};
  j["n"] = d.n;
  j["n_minus"] = d.n_minus;
  json r = json::array();
  for (auto& [g, k] : d.ranks.ranks) r.push_back({g, k});
  j["ranks_by_grading"] = r;
  j["total_rank"] = d.ranks.total();
  j["psi_is_cycle"] = d.psi_is_cycle;
  j["psi_survives"] = d.psi_survives;
  j["h1_order"] = d.h1.infinite ? json("infinite") : big_to_json(d.h1.value);
  j["verdict"] = to_string(d.verdict);
  j["evidence"] = d.evidence;
  j["timing"] = {{"seconds", d.seconds}};
  return j.dump(2);
}

ResultDocument result_from_json(const std::string& text) {
  auto j = parse(text);
  try {
    ResultDocument d;
    d.word = j.at("word").get<std::string>();
    d.surface = {j.at("surface").at(0).get<int>(), j.at("surface").at(1).get<int>()};
    d.n = j.at("n").get<int>();
    d.n_minus = j.at("n_minus").get<int>();
    for (auto& e : j.at("ranks_by_grading")) d.ranks.ranks[e.at(0).get<int>()] = e.at(1).get<uint64_t>();
    if (j.at("total_rank").get<uint64_t>() != d.ranks.total()) throw ParseError("total_rank disagrees with ranks");
    d.psi_is_cycle = j.at("psi_is_cycle").get<bool>();
    d.psi_survives = j.at("psi_survives").get<bool>();
    auto& h = j.at("h1_order");
    if (h.is_string() && h.get<std::string>() == "infinite")
      d.h1.infinite = true;
    else
      d.h1.value = big_from_json(h);
    d.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    d.evidence = j.at("evidence").get<std::vector<std::string>>();
    d.seconds = j.at("timing").at("seconds").get<double>();
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad result document: ") + e.what());
  }
}

std::string to_text(const ResultDocument& d) {
  std::ostringstream o;
  o << "word      " << d.word << "\n";
  o << "surface   S_{" << d.surface.genus << "," << d.surface.boundary << "}  n=" << d.n << " n-=" << d.n_minus
    << "\n";
  o << "Kh        " << d.ranks.poincare() << "  (total " << d.ranks.total() << ")\n";
  o << "psi       " << (d.psi_survives ? "survives" : "vanishes") << (d.psi_is_cycle ? "" : " (NOT A CYCLE)") << "\n";
  o << "|H1|      " << d.h1.str() << "\n";
  o << "verdict   " << to_string(d.verdict) << "\n";
  for (auto& e : d.evidence) o << "  - " << e << "\n";
  o << "time      " << d.seconds << " s\n";
  return o.str();
}

bool OracleDocument::operator==(const OracleDocument& o) const {
  auto same_psi = [](const auto& a, const auto& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->survives == b->survives && a->i == b->i && a->q == b->q && a->vertex == b->vertex);
  };
  return braid == o.braid && strands == o.strands && kh == o.kh && same_psi(psi, o.psi) && sl == o.sl &&
         s == o.s && turner_rank == o.turner_rank && det == o.det && crosscheck == o.crosscheck;
}

std::string to_json(const OracleDocument& d) {
  json j;
  j["braid"] = d.braid;
  j["strands"] = d.strands;
  j["sl"] = d.sl;
  if (d.kh) {
    json r = json::array();
    for (auto& [k, v] : d.kh->ranks) r.push_back({k.first, k.second, v});
    j["kh"] = r;
  }
  if (d.psi) j["plamenevskaya"] = {{"survives", d.psi->survives}, {"i", d.psi->i}, {"q", d.psi->q}, {"vertex", d.psi->vertex}};
  if (d.s) j["s"] = *d.s;
  if (d.turner_rank) j["turner_rank"] = *d.turner_rank;
  if (d.det) j["det"] = *d.det == 0 ? json("infinite") : big_to_json(*d.det);
  if (d.crosscheck) j["crosscheck"] = *d.crosscheck;
  return j.dump(2);
}

OracleDocument oracle_from_json(const std::string& text) {
  auto j = parse(text);
  try {
    OracleDocument d;
    d.braid = j.at("braid").get<std::string>();
    d.strands = j.at("strands").get<int>();
    d.sl = j.at("sl").get<int>();
    if (j.contains("kh")) {
      d.kh.emplace();
      for (auto& e : j["kh"]) d.kh->ranks[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<uint64_t>();
    }
    if (j.contains("plamenevskaya")) {
      auto& p = j["plamenevskaya"];
      d.psi = PlamenevskayaReport{p.at("vertex").get<uint64_t>(), p.at("survives").get<bool>(), p.at("i").get<int>(),
                                  p.at("q").get<int>()};
    }
    if (j.contains("s")) d.s = j["s"].get<int>();
    if (j.contains("turner_rank")) d.turner_rank = j["turner_rank"].get<uint64_t>();
    if (j.contains("det")) d.det = j["det"].is_string() && j["det"] == "infinite" ? BigInt(0) : big_from_json(j["det"]);
    if (j.contains("crosscheck")) d.crosscheck = j["crosscheck"].get<bool>();
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad oracle document: ") + e.what());
  }
}

std::string to_text(const OracleDocument& d) {
  std::ostringstream o;
  o << "braid " << d.braid << " on " << d.strands << " strands\n";
  o << "sl " << d.sl << "\n";
  if (d.kh) o << "Kh " << d.kh->polynomial() << "  (total " << d.kh->total() << ")\n";
  if (d.psi)
    o << "plamenevskaya " << (d.psi->survives ? "survives" : "vanishes") << " at (" << d.psi->i << ", " << d.psi->q
      << ")\n";
  if (d.turner_rank) o << "turner rank " << *d.turner_rank << "\n";
  if (d.s) o << "s " << *d.s << "\n";
  if (d.det) o << "det " << (*d.det == 0 ? std::string("infinite") : d.det->str()) << "\n";
  if (d.crosscheck) o << "crosscheck " << (*d.crosscheck ? "agree" : "MISMATCH") << "\n";
  return o.str();
}

}  // namespace openkh

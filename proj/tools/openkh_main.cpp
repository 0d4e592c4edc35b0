#include <chrono>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "openkh/errors.hpp"
#include "openkh/report.hpp"

using namespace openkh;

namespace {

struct EngineFlags {
  std::string surface, word, curves;
  bool json = false, psi_only = false, dump = false;
  int limit = 20;
};

CurveSystem curves_for(const EngineFlags& f, Surface s) {
  std::string path = f.curves;
  if (path.empty())
    if (const char* env = std::getenv("OPENKH_CURVES")) path = env;
  if (path.empty()) return humphries(s);
  auto sys = load_curve_system(path);
  if (!(sys.surface == s)) throw ConfigError("curve system is for a different surface");
  return sys;
}

int run_engine(const EngineFlags& f, bool verdict_only) {
  Surface s = parse_surface(f.surface);
  auto w = parse_twist_word(f.word, s);
  if (w.n() > f.limit)
    throw LimitExceeded("word has " + std::to_string(w.n()) + " letters, over the limit of " +
                        std::to_string(f.limit) + " (raise with --limit-letters)");
  auto sys = curves_for(f, s);

  if (f.dump) std::cout << dump_cube(build_e1(w, sys));

  if (f.psi_only) {
    CubeOptions opt;
    opt.lo = -1, opt.hi = 0;
    auto c = build_e1(w, sys, opt);
    auto p = psi_survives(c);
    if (f.json) {
      nlohmann::json j{{"word", w.to_string()},
                       {"surface", {s.genus, s.boundary}},
                       {"psi_is_cycle", p.is_cycle},
                       {"psi_survives", p.survives}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "psi " << (p.survives ? "survives" : "vanishes") << "\n";
    }
    return 0;
  }

  auto t0 = std::chrono::steady_clock::now();
  auto c = compute(w, sys);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto doc = make_result(w, c, secs);
  if (f.json) {
    std::cout << to_json(doc) << "\n";
  } else if (verdict_only) {
    std::cout << to_string(doc.verdict) << "\n";
    for (auto& e : doc.evidence) std::cout << "  - " << e << "\n";
  } else {
    std::cout << to_text(doc);
  }
  return 0;
}

struct OracleFlags {
  int strands = 2;
  std::string braid;
  bool json = false, kh = false, psi = false, s = false, det = false, crosscheck = false;
};

int run_oracle(const OracleFlags& f) {
  auto b = parse_braid_word(f.braid, f.strands);
  OracleDocument d;
  d.braid = b.to_string();
  d.strands = b.strands;
  d.sl = self_linking(b);
  bool any = f.kh || f.psi || f.s || f.det || f.crosscheck;
  if (f.kh || !any) d.kh = reduced_kh(b);
  if (f.psi) d.psi = plamenevskaya(b);
  if (f.s) {
    auto t = turner_s(b, true);
    d.s = t.s;
    d.turner_rank = t.rank;
  }
  if (f.det) d.det = link_determinant(b);
  int code = 0;
  if (f.crosscheck) {
    auto w = braid_to_openbook(b);
    auto r = cross_check(w, humphries(w.surface));
    d.crosscheck = r.agree();
    if (!r.agree()) {
      std::cerr << "engine " << r.engine.poincare() << " psi " << r.engine_psi << "\n";
      std::cerr << "oracle " << r.oracle.poincare() << " psi " << r.oracle_psi << "\n";
      code = static_cast<int>(ExitCode::crosscheck);
    } else if (!f.json) {
      std::cout << "engine and oracle agree: " << r.engine.poincare() << " (rank " << r.engine.total() << ")\n";
    }
  }
  std::cout << (f.json ? to_json(d) + "\n" : to_text(d));
  if (code) std::cerr << "error: cross-check mismatch\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"openkh: Khovanov homology of open books"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "cap on worker threads");

  EngineFlags ef;
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--surface", ef.surface, "k,r")->required();
    sub->add_option("--word", ef.word, "Dehn twist word, e.g. \"a1 a2^-1\"")->required();
    sub->add_option("--curves", ef.curves, "curve system config (default: built in, or $OPENKH_CURVES)");
    sub->add_flag("--json", ef.json);
    sub->add_flag("--psi-only", ef.psi_only, "only decide whether psi survives");
    sub->add_flag("--dump-cube", ef.dump, "print every vertex and edge map first");
    sub->add_option("--limit-letters", ef.limit, "refuse longer words")->capture_default_str();
  };
  auto* compute_cmd = app.add_subcommand("compute", "Kh, psi, |H1| and verdict");
  auto* verdict_cmd = app.add_subcommand("verdict", "verdict with evidence");
  add_engine(compute_cmd);
  add_engine(verdict_cmd);

  OracleFlags of;
  auto* oracle_cmd = app.add_subcommand("oracle", "braid closure invariants");
  oracle_cmd->add_option("--strands", of.strands)->required();
  oracle_cmd->add_option("--braid", of.braid, "e.g. \"s1^-5 s2 s1^3 s2\"")->required();
  oracle_cmd->add_flag("--json", of.json);
  oracle_cmd->add_flag("--kh", of.kh, "bigraded reduced Khovanov homology");
  oracle_cmd->add_flag("--psi", of.psi, "Plamenevskaya class");
  oracle_cmd->add_flag("--s", of.s, "Rasmussen s (knots)");
  oracle_cmd->add_flag("--det", of.det, "determinant");
  oracle_cmd->add_flag("--crosscheck", of.crosscheck, "compare with the open book engine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::parse);
  }

  try {
    if (threads > 0) set_thread_count(threads);
    if (*compute_cmd) return run_engine(ef, false);
    if (*verdict_cmd) return run_engine(ef, true);
    return run_oracle(of);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::other);
  }
}

// Command-line front end. Every command builds one JSON result; --json prints
// the full report envelope, otherwise a short human summary.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "jaclef/report.hpp"

using namespace jaclef;
using nlohmann::json;

namespace {

struct Globals {
  std::string field = "qq";
  std::uint32_t prime = 0;
  std::string policy = "two-prime";
  int trials = 8;
  std::uint64_t seed = 1;
  int coeff_bound = 20;
  int kmax = -1;
  int sat_cap = -1;
  bool json = false;
  bool no_duality = false;
  bool timings = false;
};

struct Input {
  std::string file;
  std::string poly;
  int vars = 0;
  std::string fermat;
  std::string corpus;
  std::string ell;
};

ComputeOptions options(const Globals& g) {
  ComputeOptions opt;
  if (g.field == "fp") {
    if (!g.prime) throw ParseError("--field fp needs --prime <p>");
    opt.field = FieldSpec::prime_field(g.prime);
  } else {
    opt.field = FieldSpec::parse(g.field);
    if (opt.field.is_rational()) opt.prime = g.prime;
  }
  if (g.prime && opt.field.is_rational() && !is_prime(g.prime)) throw BadPrimeError("--prime is not prime");
  opt.policy = parse_policy(g.policy);
  opt.trials = g.trials;
  opt.seed = g.seed;
  opt.coeff_bound = g.coeff_bound;
  opt.kmax = g.kmax;
  opt.sat_cap = g.sat_cap;
  opt.duality_shortcut = !g.no_duality;
  return opt;
}

struct Loaded {
  HomogeneousPoly f{1, 0};
  std::optional<HomogeneousPoly> ell;
  std::string source;
};

Loaded load(const Input& in, const ComputeOptions& opt) {
  Loaded out;
  int given = !in.file.empty() + !in.poly.empty() + !in.fermat.empty() + !in.corpus.empty();
  if (given != 1) throw ParseError("give exactly one of --f, --poly, --fermat, --corpus");
  if (!in.file.empty()) {
    auto pf = load_poly_file(in.file);
    out.f = pf.poly;
    out.source = in.file;
  } else if (!in.poly.empty()) {
    if (in.vars < 1) throw ParseError("--poly needs --vars <n>");
    out.f = parse_poly(in.poly, in.vars, opt.field);
    out.source = "inline";
  } else if (!in.fermat.empty()) {
    int n = 0, d = 0;
    if (std::sscanf(in.fermat.c_str(), "%d,%d", &n, &d) != 2) throw ParseError("--fermat expects n,d");
    auto e = fermat(n, d);
    out.f = e.poly;
    out.ell = e.ell;
    out.source = e.name;
  } else {
    auto e = corpus_entry(in.corpus);
    out.f = e.poly;
    out.ell = e.ell;
    out.source = e.name;
  }
  out.f = out.f.over(opt.field);
  if (!in.ell.empty()) out.ell = parse_poly(in.ell, out.f.num_vars(), opt.field);
  return out;
}

HomogeneousPoly ell_or_x0(const Loaded& l) {
  return l.ell ? *l.ell : HomogeneousPoly::variable(l.f.num_vars(), 0, l.f.field());
}

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("--f", in.file, "polynomial file (.poly)");
  cmd->add_option("--poly", in.poly, "polynomial text, e.g. \"x0^3+x1^3\"");
  cmd->add_option("--vars", in.vars, "number of variables for --poly");
  cmd->add_option("--fermat", in.fermat, "Fermat polynomial n,d (projective dimension, degree)");
  cmd->add_option("--corpus", in.corpus, "named corpus entry");
  cmd->add_option("--ell", in.ell, "linear form cutting the hyperplane");
}

std::string verdict_line(const json& v) {
  std::ostringstream s;
  s << "  k=" << v["k"];
  if (v["power"] != 1) s << " power=" << v["power"];
  s << "  " << v["dim_from"] << " -> " << v["dim_to"] << "  rank " << v["rank"] << "  "
    << v["direction"].get<std::string>() << (v["maximal"].get<bool>() ? "" : " (not maximal)") << "  ["
    << v["certificate"]["level"].get<std::string>() << (v["deduced"].get<bool>() ? ", deduced" : "") << "]";
  return s.str();
}

// Compact rendering: scalars on one line each, verdict lists as tables.
void print_human(const json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_array() && !v.empty() && v[0].is_object() && v[0].contains("rank")) {
      std::cout << indent << it.key() << ":\n";
      for (const auto& x : v) std::cout << indent << verdict_line(x) << "\n";
    } else if (v.is_object() && it.key() != "certificate" && it.key() != "expected" && it.key() != "actual") {
      std::cout << indent << it.key() << ":\n";
      print_human(v, indent + "  ");
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      std::cout << indent << it.key() << ":\n";
      for (const auto& x : v) std::cout << indent << "  " << x.dump() << "\n";
    } else {
      std::cout << indent << it.key() << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lefschetz properties of Jacobian algebras and modules"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "coefficient field: qq, fp (with --prime) or fp:<p>");
  app.add_option("--prime", g.prime, "prime for --field fp, or the first modular prime over qq");
  app.add_option("--policy", g.policy, "rank policy: fast|two-prime|exact");
  app.add_option("--trials", g.trials, "random linear forms tried per degree");
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--coeff-bound", g.coeff_bound, "coefficient bound for random forms");
  app.add_option("--kmax", g.kmax, "top degree for sweeps and Hilbert functions");
  app.add_option("--sat-cap", g.sat_cap, "largest colon exponent in saturations");
  app.add_flag("--json", g.json, "print the JSON report");
  app.add_flag("--no-duality-shortcut", g.no_duality, "compute upper-half degrees directly");
  app.add_flag("--timings", g.timings, "add elapsed time to the report");

  Input in;
  std::string target = "M";
  int k = -1;
  int imax = -1;
  std::vector<std::string> names;
  bool all = false;

  auto* hilbert = app.add_subcommand("hilbert", "dimensions of M(f) in degrees 0..kmax");
  auto* inv = app.add_subcommand("invariants", "r, s, tau, freeness of a section polynomial");
  auto* wlp = app.add_subcommand("wlp", "weak Lefschetz verdicts (one degree with --k, else a sweep)");
  auto* slp = app.add_subcommand("slp", "strong Lefschetz verdicts (one degree with --k, else a sweep)");
  auto* thm1 = app.add_subcommand("verify-thm1", "injectivity of ell on M(f) up to the section bound");
  auto* corn = app.add_subcommand("verify-corn", "injectivity and surjectivity of ell on N(f)");
  auto* curves = app.add_subcommand("verify-curves", "high-degree behaviour of plane curve algebras");
  auto* hyp = app.add_subcommand("verify-hyp", "surjectivity/bijectivity above the socle range");
  auto* ext = app.add_subcommand("extend-section", "smooth hypersurface with the given hyperplane section");
  auto* probe = app.add_subcommand("conjecture-probe", "full SLP sweep of a smooth hypersurface");
  auto* corpus = app.add_subcommand("corpus", "named examples");
  auto* corpus_list = corpus->add_subcommand("list", "list entries");
  auto* corpus_run = corpus->add_subcommand("run", "verify entries' expectations");
  corpus->require_subcommand(1);
  corpus->fallthrough();
  corpus_run->add_option("names", names, "entries to run");
  corpus_run->add_flag("--all", all, "run every entry");

  for (auto* c : {hilbert, inv, wlp, slp, thm1, corn, curves, hyp, ext, probe}) add_input(c, in);
  wlp->add_option("--target", target, "M (Milnor algebra) or N (Jacobian module)");
  wlp->add_option("--k", k, "single degree");
  slp->add_option("--k", k, "single degree");
  hyp->add_option("--imax", imax, "last degree checked");

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  json result;
  int code = 0;
  try {
    const ComputeOptions opt = options(g);
    auto conclude = [&](Conclusion c) { code = exit_code(c); };
    if (*hilbert) {
      command = "hilbert";
      auto l = load(in, opt);
      int kmax = g.kmax >= 0 ? g.kmax : socle_degree(l.f.num_vars(), l.f.degree()) + 1;
      result = to_json(milnor_dims(l.f, kmax, opt));
      if (!g.json) {
        std::cout << result["dims"].dump() << "\n";
        return 0;
      }
    } else if (*inv) {
      command = "invariants";
      result = to_json(section_invariants(load(in, opt).f, opt));
    } else if (*wlp) {
      command = "wlp";
      if (target != "M" && target != "N") throw ParseError("--target must be M or N");
      Target t = target == "M" ? Target::M : Target::N;
      auto l = load(in, opt);
      if (k >= 0) {
        auto v = wlp_at(l.f, k, t, opt);
        result = to_json(v);
        if (!v.maximal) code = 1;
      } else {
        auto r = wlp_sweep(l.f, t, opt);
        result = to_json(r);
        if (!r.holds) code = 1;
      }
    } else if (*slp) {
      command = "slp";
      auto l = load(in, opt);
      if (k >= 0) {
        auto v = slp_at(l.f, k, opt);
        result = to_json(v);
        if (!v.maximal) code = 1;
      } else {
        auto r = slp_sweep(l.f, opt);
        result = to_json(r);
        if (!r.holds) code = 1;
      }
    } else if (*thm1) {
      command = "verify-thm1";
      auto l = load(in, opt);
      auto r = verify_thm1(l.f, ell_or_x0(l), opt);
      result = to_json(r);
      conclude(r.conclusion);
    } else if (*corn) {
      command = "verify-corn";
      auto l = load(in, opt);
      auto r = verify_corN(l.f, ell_or_x0(l), opt);
      result = to_json(r);
      conclude(r.conclusion);
    } else if (*curves) {
      command = "verify-curves";
      auto r = verify_exCurves(load(in, opt).f, opt);
      result = to_json(r);
      conclude(r.conclusion);
    } else if (*hyp) {
      command = "verify-hyp";
      auto r = verify_exHyp(load(in, opt).f, opt, imax);
      result = to_json(r);
      conclude(r.conclusion);
    } else if (*ext) {
      command = "extend-section";
      auto r = extend_section_to_smooth(load(in, opt).f, opt);
      result = to_json(r);
      if (!r.f) code = 1;
    } else if (*probe) {
      command = "conjecture-probe";
      auto r = conjecture_probe(load(in, opt).f, opt);
      result = to_json(r);
      conclude(r.conclusion);
    } else if (*corpus_list) {
      command = "corpus list";
      result = json::array();
      for (const auto& name : corpus_names()) {
        auto e = corpus_entry(name);
        result.push_back({{"name", name}, {"vars", e.poly.num_vars()}, {"poly", to_string(e.poly)}});
      }
    } else if (*corpus_run) {
      command = "corpus run";
      if (all) names = corpus_names();
      if (names.empty()) throw ParseError("name entries or pass --all");
      result = json::array();
      for (const auto& name : names) {
        auto e = corpus_entry(name);
        json checks = json::array();
        bool ok = true;
        for (const auto& c : verify_entry(e, opt)) {
          checks.push_back(to_json(c));
          ok = ok && c.passed;
        }
        if (!ok) code = 1;
        result.push_back({{"name", name}, {"poly", to_string(e.poly)}, {"notes", e.notes}, {"passed", ok},
                          {"checks", checks}});
      }
    }
    json report = run_report(command, opt, result);
    if (g.timings) {
      report["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
    }
    if (g.json) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << command << "\n";
      if (result.is_array()) {
        for (const auto& x : result) {
          print_human(x, "  ");
          std::cout << "\n";
        }
      } else {
        print_human(result, "  ");
      }
      if (g.timings) std::cout << "elapsed_ms: " << report["elapsed_ms"] << "\n";
    }
    return code;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

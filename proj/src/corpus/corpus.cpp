#include "jaclef/corpus.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "jaclef/invariants.hpp"
#include "jaclef/lefschetz.hpp"

namespace jaclef {

namespace {

HomogeneousPoly x(int n, int i) { return HomogeneousPoly::variable(n, i); }

HomogeneousPoly power_sum(int n, int d) {
  HomogeneousPoly f(n, d);
  for (int i = 0; i < n; ++i) f += x(n, i).pow(d);
  return f;
}

}  // namespace

std::vector<int> fermat_hilbert(int n, int d) {
  // (1 + t + ... + t^(d-2))^(n+1) by repeated convolution
  std::vector<long> c{1};
  for (int i = 0; i <= n; ++i) {
    std::vector<long> next(c.size() + d - 2, 0);
    for (std::size_t a = 0; a < c.size(); ++a)
      for (int b = 0; b <= d - 2; ++b) next[a + b] += c[a];
    c = std::move(next);
  }
  return {c.begin(), c.end()};
}

std::vector<long> chebyshev_coefficients(int d) {
  std::vector<long> prev{1}, cur{0, 1};
  if (d == 0) return prev;
  for (int k = 1; k < d; ++k) {
    std::vector<long> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CorpusEntry fermat(int n, int d) {
  if (n < 1 || d < 2) throw PreconditionError("fermat needs n >= 1 and d >= 2");
  CorpusEntry e;
  e.name = "fermat_" + std::to_string(n) + "_" + std::to_string(d);
  e.poly = power_sum(n + 1, d);
  e.ell = x(n + 1, 0);
  e.expected.push_back({"smooth", true});
  e.expected.push_back({"hilbert", fermat_hilbert(n, d)});
  e.expected.push_back({"slp", true});
  return e;
}

CorpusEntry segre_cubic() {
  const int n = 5;
  CorpusEntry e;
  e.name = "segre_cubic";
  HomogeneousPoly sum(n, 1);
  for (int i = 0; i < n; ++i) sum += x(n, i);
  e.poly = power_sum(n, 3) - sum.pow(3);
  e.notes.push_back(
      "classical Segre cubic: sum of cubes minus the cube of the sum; a variant with a squared "
      "middle term is not homogeneous and cannot define a cubic threefold");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<Scalar> p(n, Scalar(1));
      p[a] = p[b] = -1;
      e.singular_points.push_back(p);
    }
  e.expected.push_back({"tau", 10});
  e.expected.push_back({"node_orbit", true});
  e.expected.push_back({"saturation_dim_1", 0});
  e.expected.push_back({"r", 2});
  return e;
}

CorpusEntry kummer_quartic(const Scalar& mu) {
  const Scalar mu2 = mu * mu;
  if (mu2 == 1 || mu2 == 3 || mu2 * 3 == 1) throw PreconditionError("degenerate Kummer parameter");
  const int n = 4;
  const Scalar lambda = (3 * mu2 - 1) / (3 - mu2);
  auto X = x(n, 0), Y = x(n, 1), Z = x(n, 2), W = x(n, 3);
  HomogeneousPoly quadric = X.pow(2) + Y.pow(2) + Z.pow(2) - mu2 * W.pow(2);
  HomogeneousPoly tetra = ((W - Z).pow(2) - Scalar(2) * X.pow(2)) * ((W + Z).pow(2) - Scalar(2) * Y.pow(2));
  CorpusEntry e;
  e.name = "kummer_quartic";
  e.poly = quadric.pow(2) - lambda * tetra;
  e.notes.push_back("mu = " + mu.get_str() + ", lambda = (3mu^2 - 1)/(3 - mu^2) = " + lambda.get_str());
  e.expected.push_back({"tau", 16});
  e.expected.push_back({"saturation_dim_2", 0});
  e.expected.push_back({"r", 3});
  e.expected.push_back({"s", 3});
  return e;
}

CorpusEntry chebyshev_hypersurface(int n, int d) {
  if (n < 2 || d < 3) throw PreconditionError("chebyshev needs n >= 2 and d >= 3");
  const int nv = n + 1;
  const auto c = chebyshev_coefficients(d);
  CorpusEntry e;
  e.name = "chebyshev_" + std::to_string(n) + "_" + std::to_string(d);
  HomogeneousPoly f(nv, d);
  for (int i = 1; i <= n; ++i) {
    for (int k = 0; k <= d; ++k) {
      if (c[k] == 0) continue;
      Exponent ex(nv, 0);
      ex[0] = d - k;
      ex[i] = k;
      f.add_term(ex, Scalar(c[k]));
    }
  }
  // With n odd every critical value of sum T_d(y_i) is odd, so the constant 1
  // is needed to put critical points on the hypersurface.
  if (n % 2 == 1) {
    Exponent ex(nv, 0);
    ex[0] = d;
    f.add_term(ex, 1);
  }
  e.poly = f;
  e.notes.push_back("homogenized sum of T_d(y_i)" + std::string(n % 2 ? " + 1" : "") + ", x0 homogenizing");
  e.expected.push_back({"isolated", true});
  e.expected.push_back({"s", d - 2});
  e.expected.push_back({"r", d - 1});
  return e;
}

CorpusEntry four_general_lines() {
  const int n = 3;
  CorpusEntry e;
  e.name = "four_general_lines";
  e.poly = x(n, 0) * x(n, 1) * x(n, 2) * (x(n, 0) + x(n, 1) + x(n, 2));
  e.expected.push_back({"tau", 6});
  e.expected.push_back({"freeness", {{"kind", "nearly_free"}, {"d1", 2}, {"d2", 2}}});
  e.expected.push_back({"r", 2});
  return e;
}

CorpusEntry two_conics() {
  const int n = 3;
  auto X = x(n, 0), Y = x(n, 1), Z = x(n, 2);
  CorpusEntry e;
  e.name = "two_conics";
  e.poly = (Y * Z - X.pow(2)) * (X * Y + Y * Z - X.pow(2));
  e.notes.push_back("conics yz = x^2 and xy + yz = x^2, tangent to high order at (0:0:1)");
  e.expected.push_back({"isolated", true});
  e.expected.push_back({"freeness", {{"kind", "nearly_free"}, {"d1", 2}, {"d2", 2}}});
  return e;
}

CorpusEntry one_node_quartic_curve() {
  const int n = 3;
  auto X = x(n, 0), Y = x(n, 1), Z = x(n, 2);
  CorpusEntry e;
  e.name = "one_node_quartic_curve";
  e.poly = X.pow(2) * (Y.pow(2) + Z.pow(2)) + Y.pow(4) + Z.pow(4);
  e.singular_points.push_back({1, 0, 0});
  e.expected.push_back({"tau", 1});
  e.expected.push_back({"node_orbit", true});
  return e;
}

CorpusEntry one_node_quartic_surface() {
  const int n = 4;
  auto X0 = x(n, 0), X1 = x(n, 1), X2 = x(n, 2), X3 = x(n, 3);
  CorpusEntry e;
  e.name = "one_node_quartic_surface";
  e.poly = X0.pow(2) * (X1.pow(2) + X2.pow(2) + X3.pow(2)) +
           X0 * (X1.pow(3) + Scalar(2) * X2.pow(3) + Scalar(3) * X3.pow(3)) + X1 * X2 * X3 * (X1 + X2 + X3);
  e.ell = X0;
  e.singular_points.push_back({1, 0, 0, 0});
  e.notes.push_back("node at (1:0:0:0); the plane x0 = 0 cuts four general lines");
  e.expected.push_back({"tau", 1});
  e.expected.push_back({"node_orbit", true});
  return e;
}

CorpusEntry smooth_cubic_surface() {
  const int n = 4;
  CorpusEntry e;
  e.name = "smooth_cubic_surface";
  e.poly = power_sum(n, 3) + x(n, 0) * x(n, 1) * x(n, 2) + x(n, 1) * x(n, 2) * x(n, 3);
  e.expected.push_back({"smooth", true});
  e.expected.push_back({"wlp", true});
  e.expected.push_back({"slp", true});
  return e;
}

CorpusEntry random_smooth_quartic_curve(std::uint64_t seed) {
  const int n = 3;
  std::mt19937_64 rng(splitmix64(seed ^ 0xc0ffee));
  for (;;) {
    HomogeneousPoly f(n, 4);
    for (const auto& ex : monomial_basis(4, n)) f.add_term(ex, Scalar(static_cast<long>(rng() % 11) - 5));
    if (f.is_zero() || !is_smooth(f)) continue;
    CorpusEntry e;
    e.name = "random_smooth_quartic_curve";
    e.poly = f;
    e.notes.push_back("coefficients in [-5, 5] from seed " + std::to_string(seed));
    e.expected.push_back({"smooth", true});
    e.expected.push_back({"slp", true});
    return e;
  }
}

std::vector<std::string> corpus_names() {
  return {"fermat_2_4",         "fermat_3_3",         "fermat_3_4",      "fermat_4_3",
          "segre_cubic",        "kummer_quartic",     "chebyshev_3_4",   "chebyshev_3_3",
          "four_general_lines", "two_conics",         "one_node_quartic_curve",
          "one_node_quartic_surface", "smooth_cubic_surface", "random_smooth_quartic_curve"};
}

CorpusEntry corpus_entry(const std::string& name) {
  auto two = [&](const std::string& prefix, auto build) -> std::optional<CorpusEntry> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    int a = 0, b = 0;
    char sep = 0;
    std::istringstream in(name.substr(prefix.size()));
    if (!(in >> a >> sep >> b) || sep != '_') throw ParseError("bad corpus name '" + name + "'");
    return build(a, b);
  };
  if (auto e = two("fermat_", fermat)) return *e;
  if (auto e = two("chebyshev_", chebyshev_hypersurface)) return *e;
  if (name == "segre_cubic") return segre_cubic();
  if (name == "kummer_quartic") return kummer_quartic();
  if (name == "four_general_lines") return four_general_lines();
  if (name == "two_conics") return two_conics();
  if (name == "one_node_quartic_curve") return one_node_quartic_curve();
  if (name == "one_node_quartic_surface") return one_node_quartic_surface();
  if (name == "smooth_cubic_surface") return smooth_cubic_surface();
  if (name == "random_smooth_quartic_curve") return random_smooth_quartic_curve();
  throw ParseError("unknown corpus entry '" + name + "'");
}

std::vector<CheckResult> verify_entry(const CorpusEntry& e, const ComputeOptions& opt) {
  std::vector<CheckResult> out;
  const HomogeneousPoly& f = e.poly;
  for (const auto& ex : e.expected) {
    CheckResult c;
    c.key = ex.key;
    c.expected = ex.value;
    Certificate cert;
    cert.level = CertLevel::RationalExact;
    if (ex.key == "smooth") {
      auto r = smoothness(f, opt);
      c.actual = r.value;
      cert = r.cert;
    } else if (ex.key == "tau") {
      auto r = tjurina_total(f, opt);
      c.actual = r.isolated ? nlohmann::json(r.tau) : nlohmann::json("not isolated");
      cert = r.cert;
    } else if (ex.key == "isolated") {
      auto r = tjurina_total(f, opt);
      c.actual = r.isolated;
      cert = r.cert;
    } else if (ex.key == "r") {
      auto r = r_invariant(f, opt);
      c.actual = r.value;
      cert = r.cert;
    } else if (ex.key == "s") {
      auto r = s_invariant(f, opt);
      c.actual = r.value;
      cert = r.cert;
    } else if (ex.key.rfind("saturation_dim_", 0) == 0) {
      int k = std::stoi(ex.key.substr(15));
      auto r = saturation_piece(f, k, opt, false);
      c.actual = r.dim;
      cert = r.cert;
    } else if (ex.key == "hilbert") {
      auto r = milnor_dims(f, static_cast<int>(ex.value.size()) - 1, opt);
      c.actual = r.dims;
      cert = r.cert;
    } else if (ex.key == "freeness") {
      auto r = classify_freeness(f, opt);
      c.actual = {{"kind", to_string(r.kind)}, {"d1", r.d1}, {"d2", r.d2}};
      cert = r.cert;
    } else if (ex.key == "node_orbit") {
      bool all = !e.singular_points.empty();
      for (const auto& p : e.singular_points)
        for (const auto& df : partials(f)) all = all && evaluate(df, p) == 0;
      c.actual = all;
    } else if (ex.key == "wlp") {
      auto r = wlp_sweep(f, Target::M, opt);
      c.actual = r.holds;
      cert = r.cert;
    } else if (ex.key == "slp") {
      auto r = slp_sweep(f, opt);
      c.actual = r.holds;
      cert = r.cert;
    } else {
      throw Error("unknown expectation '" + ex.key + "'");
    }
    c.passed = c.actual == c.expected && is_certified(cert.level);
    c.level = to_string(cert.level);
    out.push_back(std::move(c));
  }
  return out;
}

PolyFile parse_poly_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int vars = -1;
  FieldSpec field = FieldSpec::rationals();
  bool have_field = false;
  std::string body;
  while (std::getline(in, line)) {
    auto trimmed = line.substr(0, line.find('#'));
    if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (vars < 0) {
      if (std::sscanf(trimmed.c_str(), " vars: %d", &vars) != 1 || vars < 1) {
        throw ParseError("expected 'vars: <n>' on the first line");
      }
    } else if (!have_field) {
      auto colon = trimmed.find(':');
      if (colon == std::string::npos || trimmed.substr(0, colon).find("field") == std::string::npos) {
        throw ParseError("expected 'field: qq|fp:<p>' on the second line");
      }
      auto value = trimmed.substr(colon + 1);
      value.erase(0, value.find_first_not_of(" \t"));
      value.erase(value.find_last_not_of(" \t\r") + 1);
      field = FieldSpec::parse(value);
      have_field = true;
    } else {
      body += trimmed + " ";
    }
  }
  if (!have_field) throw ParseError("missing header lines");
  return {parse_poly(body, vars, field), field};
}

PolyFile load_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_poly_file(buf.str());
}

std::string format_poly_file(const HomogeneousPoly& f) {
  return "vars: " + std::to_string(f.num_vars()) + "\nfield: " + f.field().to_string() + "\n" + to_string(f) + "\n";
}

void save_poly_file(const std::string& path, const HomogeneousPoly& f) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << format_poly_file(f);
}

}  // namespace jaclef

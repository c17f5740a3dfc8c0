#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jaclef/engine.hpp"
#include "jaclef/poly.hpp"

namespace jaclef {

/// An expected property of a corpus polynomial. Never trusted: verify_entry
/// recomputes every one of them.
struct Expectation {
  std::string key;  // tau, r, s, saturation_zero_1, hilbert, freeness, smooth, node_orbit, ...
  nlohmann::json value;
};

struct CorpusEntry {
  std::string name;
  HomogeneousPoly poly{1, 0};
  std::optional<HomogeneousPoly> ell;  // hyperplane the entry is meant to be cut with
  std::vector<Expectation> expected;
  std::vector<std::string> notes;
  /// Points expected to be singular (checked by substitution into all partials).
  std::vector<std::vector<Scalar>> singular_points;
};

CorpusEntry fermat(int n, int d);
CorpusEntry segre_cubic();
CorpusEntry kummer_quartic(const Scalar& mu = 2);
CorpusEntry chebyshev_hypersurface(int n, int d);
CorpusEntry four_general_lines();
CorpusEntry two_conics();
CorpusEntry one_node_quartic_curve();
CorpusEntry one_node_quartic_surface();
CorpusEntry smooth_cubic_surface();
CorpusEntry random_smooth_quartic_curve(std::uint64_t seed = 1);

/// Coefficients of ((1 - t^(d-1)) / (1 - t))^(n+1), the Fermat Hilbert function.
std::vector<int> fermat_hilbert(int n, int d);

/// Chebyshev polynomial of the first kind, T_d, as integer coefficients by power.
std::vector<long> chebyshev_coefficients(int d);

/// Named entries available to `corpus run` and `--corpus`.
std::vector<std::string> corpus_names();
CorpusEntry corpus_entry(const std::string& name);

struct CheckResult {
  std::string key;
  nlohmann::json expected;
  nlohmann::json actual;
  bool passed = false;
  std::string level;  // certification level of the computation behind it
};

std::vector<CheckResult> verify_entry(const CorpusEntry& e, const ComputeOptions& opt = {});

/// `.poly` files: "vars: n", "field: qq|fp:<p>", then the polynomial (may span lines).
struct PolyFile {
  HomogeneousPoly poly{1, 0};
  FieldSpec field = FieldSpec::rationals();
};

PolyFile load_poly_file(const std::string& path);
PolyFile parse_poly_file(const std::string& text);
void save_poly_file(const std::string& path, const HomogeneousPoly& f);
std::string format_poly_file(const HomogeneousPoly& f);

}  // namespace jaclef

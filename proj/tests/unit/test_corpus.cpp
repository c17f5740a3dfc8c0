#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "jaclef/corpus.hpp"
#include "jaclef/errors.hpp"
#include "jaclef/report.hpp"
#include "oracle.hpp"

using namespace jaclef;

TEST_CASE("Fermat entries") {
  auto e = fermat(3, 3);
  CHECK(e.poly == P("x0^3 + x1^3 + x2^3 + x3^3", 4));
  CHECK(fermat_hilbert(3, 3) == std::vector<int>{1, 4, 6, 4, 1});
  CHECK(fermat_hilbert(2, 4) == std::vector<int>{1, 3, 6, 7, 6, 3, 1});
  auto h = fermat_hilbert(4, 3);
  CHECK(h == std::vector<int>{1, 5, 10, 10, 5, 1});
  CHECK(std::equal(h.begin(), h.end(), h.rbegin()));
  for (int k = 0; k < static_cast<int>(h.size()); ++k) CHECK(h[k] == oracle::milnor_dim(fermat(4, 3).poly, k));
}

TEST_CASE("Chebyshev polynomials") {
  CHECK(chebyshev_coefficients(3) == std::vector<long>{0, -3, 0, 4});
  CHECK(chebyshev_coefficients(4) == std::vector<long>{1, 0, -8, 0, 8});
  auto e = chebyshev_hypersurface(3, 4);
  CHECK(e.poly.num_vars() == 4);
  CHECK(e.poly.degree() == 4);
}

TEST_CASE("Segre cubic entry") {
  auto e = segre_cubic();
  CHECK(e.poly.num_vars() == 5);
  CHECK(e.singular_points.size() == 10);
  for (const auto& p : e.singular_points)
    for (const auto& g : partials(e.poly)) CHECK(evaluate(g, p) == 0);
  CHECK_FALSE(e.notes.empty());
}

TEST_CASE("every corpus expectation is recomputed and holds") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    auto entry = corpus_entry(name);
    CHECK(entry.name == name);
    auto checks = verify_entry(entry);
    CHECK_FALSE(checks.empty());
    for (const auto& c : checks) {
      CAPTURE(c.key);
      CAPTURE(c.actual.dump());
      CHECK(c.passed);
    }
  }
  CHECK_THROWS(corpus_entry("no_such_entry"));
}

TEST_CASE("polynomial files") {
  auto f = P("x0^3 - 1/2*x1^2*x2 + 4*x2^3", 3);
  auto text = format_poly_file(f);
  auto back = parse_poly_file(text);
  CHECK(back.poly == f);
  CHECK(back.field.is_rational());

  auto path = std::filesystem::temp_directory_path() / "jaclef_unit_roundtrip.poly";
  save_poly_file(path.string(), f);
  CHECK(load_poly_file(path.string()).poly == f);
  std::filesystem::remove(path);

  const std::uint32_t p = next_prime(1u << 30);
  auto modp = parse_poly_file("vars: 2\nfield: fp:" + std::to_string(p) + "\nx0^2 + " + std::to_string(p + 2ul) +
                              "*x1^2\n");
  CHECK_FALSE(modp.field.is_rational());
  CHECK(modp.field.prime() == p);
  CHECK(modp.poly.coefficient({0, 2}) == 2);

  auto multiline = parse_poly_file("vars: 3\nfield: qq\nx0^2\n + x1*x2\n");
  CHECK(multiline.poly == P("x0^2 + x1*x2", 3));

  CHECK_THROWS_AS(parse_poly_file("field: qq\nx0\n"), ParseError);
  CHECK_THROWS(load_poly_file("/nonexistent/dir/f.poly"));
}

TEST_CASE("reports are deterministic and versioned") {
  ComputeOptions opt;
  opt.seed = 7;
  auto run = [&] {
    nlohmann::json results = nlohmann::json::array();
    for (const auto& c : verify_entry(four_general_lines(), opt)) results.push_back(to_json(c));
    return run_report("corpus run", opt, results).dump();
  };
  auto a = run();
  CHECK(a == run());
  auto j = nlohmann::json::parse(a);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["seed"] == 7);
  CHECK(j["command"] == "corpus run");
  CHECK(j["field"] == "qq");
}

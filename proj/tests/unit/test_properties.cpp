#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "jaclef/corpus.hpp"
#include "jaclef/invariants.hpp"

using namespace jaclef;

namespace {

HomogeneousPoly random_poly(std::mt19937_64& rng) {
  const int n = 1 + static_cast<int>(rng() % 5);
  const int d = 1 + static_cast<int>(rng() % 5);
  HomogeneousPoly f(n, d);
  auto basis = monomial_basis(d, n);
  const int terms = 1 + static_cast<int>(rng() % 8);
  for (int t = 0; t < terms; ++t) {
    Scalar c(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 5));
    f.add_term(basis[rng() % basis.size()], c);
  }
  return f;
}

}  // namespace

TEST_CASE("Euler relation d*f = sum x_j f_j") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(rng);
    const int n = f.num_vars();
    auto grads = partials(f);
    HomogeneousPoly sum(n, f.degree());
    for (int j = 0; j < n; ++j) {
      CHECK(grads[j].degree() == f.degree() - 1);
      sum += HomogeneousPoly::variable(n, j) * grads[j];
    }
    CHECK(sum == Scalar(f.degree()) * f);
  }
}

TEST_CASE("Euler relation over a prime field larger than the degree") {
  std::mt19937_64 rng(5);
  auto fp = FieldSpec::prime_field(next_prime(1u << 30));
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_poly(rng).over(fp);
    HomogeneousPoly sum(f.num_vars(), f.degree(), fp);
    auto grads = partials(f);
    for (int j = 0; j < f.num_vars(); ++j) sum += HomogeneousPoly::variable(f.num_vars(), j, fp) * grads[j];
    CHECK(sum == Scalar(f.degree()) * f);
  }
}

TEST_CASE("degrees are preserved by coordinate changes and restrictions") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_poly(rng);
    if (f.num_vars() < 2) continue;
    const int n = f.num_vars();
    auto ell = random_linear_form(n, trial + 1, 5);
    auto s = restrict_to_hyperplane(f, ell);
    CHECK(s.g.num_vars() == n - 1);
    CHECK(s.g.degree() == f.degree());
    CHECK(reassemble(s) == f);
    CHECK(linear_change(f, s.coordinate_change).degree() == f.degree());
  }
}

TEST_CASE("smooth corpus members have the Fermat Hilbert function") {
  for (const char* name : {"fermat_2_4", "fermat_3_3", "fermat_3_4", "fermat_4_3", "smooth_cubic_surface",
                           "random_smooth_quartic_curve"}) {
    CAPTURE(name);
    auto f = corpus_entry(name).poly;
    const int n = f.num_vars() - 1, d = f.degree();
    const int t = socle_degree(f.num_vars(), d);
    auto h = milnor_dims(f, t + 1).dims;
    auto fermat = fermat_hilbert(n, d);
    fermat.push_back(0);
    CHECK(h == fermat);
  }
}

TEST_CASE("J(g) sits inside its saturation and r vanishes exactly for cones") {
  for (const char* name : {"four_general_lines", "two_conics", "one_node_quartic_curve", "chebyshev_3_3"}) {
    CAPTURE(name);
    auto g = corpus_entry(name).poly;
    auto j = milnor_dims(g, 6);
    for (int k = 0; k <= 6; ++k) {
      const int dim_r = static_cast<int>(binomial(k + g.num_vars() - 1, g.num_vars() - 1));
      CHECK(saturation_piece(g, k, {}, false).dim >= dim_r - j.dims[k]);
    }
    CHECK((r_invariant(g).value == 0) == is_cone(g));
    CHECK(s_invariant(g).value >= 1);
  }
}

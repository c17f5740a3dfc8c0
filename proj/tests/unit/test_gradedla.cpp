#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "jaclef/corpus.hpp"
#include "jaclef/debug.hpp"
#include "jaclef/gradedla.hpp"
#include "oracle.hpp"

using namespace jaclef;

namespace {

GradedMatrix dense(const std::vector<std::vector<long>>& rows_by_col, int nrows) {
  GradedMatrix m;
  m.num_vars = 1;
  m.rows.assign(nrows, Exponent{0});
  for (const auto& col : rows_by_col) {
    std::vector<std::pair<int, Scalar>> c;
    for (int r = 0; r < nrows; ++r)
      if (col[r] != 0) c.emplace_back(r, Scalar(col[r]));
    m.cols.push_back({0, Exponent{0}});
    m.columns.push_back(std::move(c));
  }
  return m;
}

}  // namespace

TEST_CASE("ideal pieces") {
  auto fermat_piece = assemble_ideal_piece(partials(fermat(3, 3).poly), 2);
  CHECK(fermat_piece.num_cols() == 4);
  CHECK(fermat_piece.num_rows() == 10);
  CHECK(rank(fermat_piece, RankPolicy::Exact).rank == 4);

  auto lin = assemble_ideal_piece({P("x0", 2), P("x1", 2)}, 1);
  CHECK(lin.num_rows() == 2);
  CHECK(lin.num_cols() == 2);
  CHECK(lin.entry(0, 0) == 1);
  CHECK(lin.entry(1, 0) == 0);
  CHECK(rank(lin, RankPolicy::Fast).rank == 2);

  // frozen from the dense elimination oracle: dim J(g)_3 = 35 - 10
  auto g = segre_cubic().poly;
  auto segre_piece = assemble_ideal_piece(partials(g), 3);
  CHECK(segre_piece.num_rows() == 35);
  CHECK(segre_piece.num_cols() == 25);
  CHECK(bareiss_rank(segre_piece) == 25);
  CHECK(bareiss_rank(segre_piece) == oracle::ideal_rank(oracle::jacobian(g), 5, 3));

  CHECK_THROWS_AS(assemble_ideal_piece({P("x0", 2), P("x0", 3)}, 1), PreconditionError);
}

TEST_CASE("entries are generator times column monomial") {
  auto m = assemble_ideal_piece(partials(P("x0^2*x1 + x1^2*x2", 3)), 3);
  for (int c = 0; c < m.num_cols(); ++c) {
    auto prod = partials(P("x0^2*x1 + x1^2*x2", 3))[m.cols[c].generator] * HomogeneousPoly::monomial(m.cols[c].monomial);
    for (int r = 0; r < m.num_rows(); ++r) CHECK(m.entry(r, c) == prod.coefficient(m.rows[r]));
  }
}

TEST_CASE("multiplication maps on the Fermat cubic surface") {
  auto f = fermat(3, 3).poly;
  // dims of M(f) are 1, 4, 6, 4, 1. x0 is not a Lefschetz element: x0^2 lies in J,
  // so x0 * x0 = 0 and the rank drops to 3 in both directions (oracle values).
  auto x0 = P("x0", 4);
  CHECK(induced_rank(assemble_multiplication_map(f, x0, 1, 2), RankPolicy::Exact).rank == 3);
  CHECK(induced_rank(assemble_multiplication_map(f, x0, 2, 3), RankPolicy::Exact).rank == 3);
  CHECK(oracle::map_rank(f, x0, 1) == 3);
  CHECK(oracle::map_rank(f, x0, 2) == 3);

  auto ell = P("x0 + x1 + x2 + x3", 4);
  CHECK(induced_rank(assemble_multiplication_map(f, ell, 1, 2), RankPolicy::Exact).rank == 4);
  CHECK(induced_rank(assemble_multiplication_map(f, ell, 2, 3), RankPolicy::Exact).rank == 4);
  CHECK(oracle::map_rank(f, ell, 1) == 4);
  CHECK(oracle::map_rank(f, ell, 2) == 4);

  auto zero = HomogeneousPoly(4, 1);
  CHECK(induced_rank(assemble_multiplication_map(f, zero, 1, 2), RankPolicy::TwoPrime).rank == 0);

  CHECK_THROWS_AS(assemble_multiplication_map(f, ell, 1, 3), PreconditionError);
}

TEST_CASE("rank policies and certificates") {
  auto zero = dense({{0, 0, 0}, {0, 0, 0}}, 3);
  for (auto p : {RankPolicy::Fast, RankPolicy::TwoPrime, RankPolicy::Exact}) CHECK(rank(zero, p).rank == 0);

  auto id = assemble_ideal_piece({P("x0", 5), P("x1", 5), P("x2", 5), P("x3", 5), P("x4", 5)}, 1);
  auto fast = rank(id, RankPolicy::Fast);
  CHECK(fast.rank == 5);
  CHECK(fast.level == CertLevel::ModularFullRank);
  CHECK(rank(id, RankPolicy::Exact).level == CertLevel::RationalExact);

  // Jacobian piece of the one-node quartic curve in degree 5: 21 rows, 18 columns
  auto m = assemble_ideal_piece(partials(one_node_quartic_curve().poly), 5);
  CHECK(m.num_rows() == 21);
  CHECK(m.num_cols() == 18);
  CHECK(rank(m, RankPolicy::Fast).rank == rank(m, RankPolicy::Exact).rank);
  CHECK(rank(m, RankPolicy::Exact).rank == 18);

  auto a = rank(m, RankPolicy::TwoPrime, 9);
  auto b = rank(m, RankPolicy::TwoPrime, 9);
  CHECK(a.rank == b.rank);
  CHECK(a.level == b.level);
  CHECK(a.p1 == b.p1);
  CHECK(a.p2 == b.p2);
}

TEST_CASE("over a prime field the rank is exact for that field") {
  const std::uint32_t p = next_prime(1u << 30);
  auto f = parse_poly("x0^2 + " + std::to_string(p) + "*x1^2", 2, FieldSpec::prime_field(p));
  // the second partial vanishes in characteristic p
  auto m = assemble_ideal_piece(partials(f), 1);
  auto r = rank(m, RankPolicy::TwoPrime);
  CHECK(r.rank == 1);
  CHECK(r.level == CertLevel::FieldExact);
  CHECK(r.p1 == p);
  CHECK(rank(assemble_ideal_piece(partials(P("x0^2 + 3*x1^2", 2)), 1), RankPolicy::Exact).rank == 2);
}

TEST_CASE("kernels") {
  auto g1 = P("x0^2 + x1*x2", 3);
  auto g2 = P("x1^3 - x0*x2^2", 3);
  auto m = assemble_ideal_piece({g1, g2}, 5);
  auto kernel = kernel_basis(m);
  REQUIRE(kernel.size() == 1);
  // the Koszul relation g2 * g1 - g1 * g2 = 0
  HomogeneousPoly a(3, 3), b(3, 2);
  for (int c = 0; c < m.num_cols(); ++c) {
    if (kernel[0][c] == 0) continue;
    (m.cols[c].generator == 0 ? a : b).add_term(m.cols[c].monomial, kernel[0][c]);
  }
  Scalar scale = g2.terms().begin()->second / a.coefficient(g2.terms().begin()->first);
  CHECK(scale * a == g2);
  CHECK(scale * b == -g1);

  auto full = assemble_ideal_piece({P("x0", 3), P("x1", 3)}, 1);
  CHECK(kernel_basis(full).empty());

  // no linear syzygies among the Segre partials
  auto segre = assemble_ideal_piece(partials(segre_cubic().poly), 3);
  CHECK(kernel_basis(segre).empty());
  CHECK(oracle::syzygy_dim(segre_cubic().poly, 1) == 0);
}

TEST_CASE("modular rank never exceeds the rational rank") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const int nr = 4 + static_cast<int>(rng() % 5), nc = 4 + static_cast<int>(rng() % 5);
    const int inner = 1 + static_cast<int>(rng() % 4);
    // product of random integer factors, so the rank is usually deficient
    std::vector<std::vector<long>> u(nr, std::vector<long>(inner)), v(inner, std::vector<long>(nc));
    for (auto& row : u)
      for (auto& x : row) x = static_cast<long>(rng() % 2001) - 1000;
    for (auto& row : v)
      for (auto& x : row) x = static_cast<long>(rng() % 2001) - 1000;
    std::vector<std::vector<long>> cols(nc, std::vector<long>(nr, 0));
    for (int c = 0; c < nc; ++c)
      for (int r = 0; r < nr; ++r)
        for (int i = 0; i < inner; ++i) cols[c][r] += u[r][i] * v[i][c];
    auto m = dense(cols, nr);
    const int exact = rank(m, RankPolicy::Exact).rank;
    CHECK(rank(m, RankPolicy::Fast, trial + 1).rank <= exact);
    CHECK(modular_rank(m, 3) <= exact);
    CHECK(modular_rank(m, 7) <= exact);
    oracle::Matrix q(nc, std::vector<mpq_class>(nr));
    for (int c = 0; c < nc; ++c)
      for (int r = 0; r < nr; ++r) q[c][r] = cols[c][r];
    CHECK(exact == oracle::rank(q));
  }
}

TEST_CASE("rank-nullity is checked on kernel computations in debug mode") {
  bool before = debug_checks();
  set_debug_checks(true);
  auto count = debug_check_count();
  auto m = assemble_ideal_piece(partials(segre_cubic().poly), 4);
  auto kernel = kernel_basis(m);
  CHECK(debug_check_count() > count);
  CHECK(static_cast<int>(kernel.size()) + bareiss_rank(m) == m.num_cols());
  set_debug_checks(before);
}

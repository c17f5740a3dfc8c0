#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "jaclef/corpus.hpp"
#include "jaclef/errors.hpp"

using namespace jaclef;

TEST_CASE("parse reads terms, cancels and rejects inhomogeneous input") {
  auto f = P("x0^3 + x1^3", 2);
  CHECK(f.degree() == 3);
  CHECK(f.size() == 2);
  CHECK(f.coefficient({3, 0}) == 1);
  CHECK(f.coefficient({0, 3}) == 1);

  auto z = P("x0*x1 - x1*x0", 2);
  CHECK(z.is_zero());
  CHECK(z.degree() == 2);

  CHECK_THROWS_AS(P("x0^2 + x1", 2), ParseError);
  CHECK(P("3*x0^2*x1 - 1/2*x2^3", 3).coefficient({0, 0, 3}) == Scalar(-1, 2));
}

TEST_CASE("printing round-trips through the parser") {
  for (const char* s : {"3*x0^2*x1 - 1/2*x2^3", "x0^4 - 2*x0^2*x1^2 + x2^4", "-x1*x2 + 7/3*x0^2"}) {
    auto f = P(s, 3);
    CHECK(P(to_string(f), 3) == f);
  }
}

TEST_CASE("partials") {
  auto grads = partials(fermat(3, 3).poly);
  REQUIRE(grads.size() == 4);
  for (int i = 0; i < 4; ++i) {
    Exponent e(4, 0);
    e[i] = 2;
    CHECK(grads[i] == HomogeneousPoly::monomial(e, 3));
  }

  auto cone = partials(P("x1^3", 2));
  CHECK(cone[0].is_zero());
  CHECK(cone[0].degree() == 2);
  CHECK(cone[1] == P("3*x1^2", 2));
}

TEST_CASE("the Segre cubic partials vanish on exactly ten small points") {
  auto dg = partials(segre_cubic().poly);
  CHECK(dg.size() == 5);
  // projective points with coordinates in {-1, 0, 1}, first nonzero entry 1
  std::set<std::vector<int>> zeros;
  std::vector<int> p(5);
  for (int code = 0; code < 243; ++code) {
    int c = code;
    for (int i = 0; i < 5; ++i, c /= 3) p[i] = c % 3 - 1;
    auto first = std::find_if(p.begin(), p.end(), [](int x) { return x != 0; });
    if (first == p.end() || *first != 1) continue;
    std::vector<Scalar> q(p.begin(), p.end());
    bool all = true;
    for (const auto& g : dg) all = all && evaluate(g, q) == 0;
    if (all) zeros.insert(p);
  }
  CHECK(zeros.size() == 10);
  CHECK(zeros.count({1, 1, 1, -1, -1}) == 1);
}

TEST_CASE("restriction to a hyperplane") {
  auto s = restrict_to_hyperplane(fermat(3, 3).poly, P("x0", 4));
  CHECK(s.g == P("x0^3 + x1^3 + x2^3", 3));
  CHECK(s.h.is_zero());
  REQUIRE(s.tail.size() == 2);
  CHECK(s.tail[0].is_zero());
  CHECK(s.tail[1] == HomogeneousPoly::constant(3, 1));

  auto t = restrict_to_hyperplane(P("x0^2*x1 + x1^3", 2), P("x0", 2));
  CHECK(t.g == P("x0^3", 1));
  CHECK(t.h.is_zero());
  CHECK(t.tail[0] == P("x0", 1));

  auto f = fermat(3, 4).poly;
  CHECK(reassemble(restrict_to_hyperplane(f, P("x0 + x1", 4))) == f);
  CHECK(reassemble(restrict_to_hyperplane(f, P("2*x1 - 3*x2 + x3", 4))) == f);

  CHECK_THROWS_AS(restrict_to_hyperplane(f, HomogeneousPoly(4, 1)), PreconditionError);
  CHECK_THROWS_AS(restrict_to_hyperplane(f, P("x0^2", 4)), PreconditionError);
}

TEST_CASE("linear change of coordinates") {
  auto f = P("x0^3 - 2*x0*x1*x2 + x2^3", 3);
  CHECK(linear_change(f, identity_matrix(3)) == f);

  CoordMatrix swap = {{0, 1}, {1, 0}};
  CHECK(linear_change(P("x0^2", 2), swap) == P("x1^2", 2));

  CoordMatrix shear = {{1, 1}, {0, 1}};
  CHECK(linear_change(P("x0*x1", 2), shear) == P("x0*x1 + x1^2", 2));

  CoordMatrix a = {{1, 2, 0}, {0, 1, -1}, {3, 0, 1}};
  CHECK(linear_change(linear_change(f, a), invert(a, FieldSpec::rationals())) == f);

  CoordMatrix singular = {{1, 1}, {2, 2}};
  CHECK_THROWS_AS(linear_change(P("x0^2", 2), singular), PreconditionError);
}

TEST_CASE("monomial bases") {
  auto b = monomial_basis(2, 3);
  REQUIRE(b.size() == 6);
  // grevlex: x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2
  CHECK(b[0] == Exponent{2, 0, 0});
  CHECK(b[1] == Exponent{1, 1, 0});
  CHECK(b[2] == Exponent{0, 2, 0});
  CHECK(b[3] == Exponent{1, 0, 1});
  CHECK(b[5] == Exponent{0, 0, 2});
  CHECK(monomial_basis(0, 7).size() == 1);
  CHECK(monomial_basis(10, 5).size() == 1001);
  const auto& idx = monomial_index(3, 2);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(idx.find(b[i]) == static_cast<int>(i));
}

TEST_CASE("random linear forms") {
  CHECK(random_linear_form(5, 42, 20) == random_linear_form(5, 42, 20));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto l = random_linear_form(4, seed, 1);
    CHECK_FALSE(l.is_zero());
    for (const auto& [e, c] : l.terms()) CHECK((c == 1 || c == -1));
  }
  std::set<std::string> seen;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) seen.insert(to_string(random_linear_form(4, seed, 50)));
  CHECK(seen.size() == 100);
  CHECK_THROWS_AS(random_linear_form(3, 1, 0), PreconditionError);
}

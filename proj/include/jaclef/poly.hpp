#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jaclef/field.hpp"

namespace jaclef {

using Exponent = std::vector<int>;

/// Graded reverse-lexicographic order, largest first: higher total degree
/// wins; on equal degree a > b iff the last nonzero entry of a - b is negative.
struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse homogeneous polynomial in x0..x{num_vars-1} with coefficients in a
/// FieldSpec. Every stored coefficient is nonzero and every exponent vector
/// sums to degree(); the zero polynomial still carries a degree.
class HomogeneousPoly {
 public:
  using Terms = std::map<Exponent, Scalar, GrevlexGreater>;

  HomogeneousPoly(int num_vars, int degree, FieldSpec field = FieldSpec::rationals());

  static HomogeneousPoly variable(int num_vars, int index,
                                  FieldSpec field = FieldSpec::rationals());
  static HomogeneousPoly constant(int num_vars, const Scalar& c,
                                  FieldSpec field = FieldSpec::rationals());
  static HomogeneousPoly monomial(const Exponent& e, const Scalar& c = 1,
                                  FieldSpec field = FieldSpec::rationals());

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const FieldSpec& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Exponent& e) const;

  /// Adds c * x^e, merging with an existing term and dropping zeros.
  void add_term(const Exponent& e, const Scalar& c);

  HomogeneousPoly& operator+=(const HomogeneousPoly& other);
  HomogeneousPoly& operator-=(const HomogeneousPoly& other);
  HomogeneousPoly& operator*=(const Scalar& c);

  friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
  friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }
  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);
  friend HomogeneousPoly operator*(const Scalar& c, HomogeneousPoly a) { return a *= c; }
  HomogeneousPoly operator-() const;

  HomogeneousPoly pow(int e) const;

  /// Same polynomial with coefficients reduced into another field.
  HomogeneousPoly over(const FieldSpec& field) const;

  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b);

 private:
  void check_compatible(const HomogeneousPoly& other) const;

  int num_vars_;
  int degree_;
  FieldSpec field_;
  Terms terms_;
};

/// Exact square matrix of a linear substitution: row i holds the linear form
/// substituted for x_i.
using CoordMatrix = std::vector<std::vector<Scalar>>;

CoordMatrix identity_matrix(int n);
CoordMatrix invert(const CoordMatrix& a, const FieldSpec& field);
CoordMatrix multiply(const CoordMatrix& a, const CoordMatrix& b, const FieldSpec& field);

/// f split along a hyperplane: in coordinates where the hyperplane is x0 = 0,
/// f = g + x0*h + x0^2*p_2 + ... + x0^d*p_d.
struct SectionDecomposition {
  HomogeneousPoly g;
  HomogeneousPoly h;
  std::vector<HomogeneousPoly> tail;  // p_2 .. p_d
  /// Maps old coordinates to new ones; its first row is the hyperplane form.
  CoordMatrix coordinate_change;
};

HomogeneousPoly parse_poly(std::string_view text, int num_vars,
                           const FieldSpec& field = FieldSpec::rationals());
std::string to_string(const HomogeneousPoly& f);

HomogeneousPoly derivative(const HomogeneousPoly& f, int var);
std::vector<HomogeneousPoly> partials(const HomogeneousPoly& f);

Scalar evaluate(const HomogeneousPoly& f, const std::vector<Scalar>& point);

/// f(A x). Throws PreconditionError when A is singular or mis-sized.
HomogeneousPoly linear_change(const HomogeneousPoly& f, const CoordMatrix& a);

SectionDecomposition restrict_to_hyperplane(const HomogeneousPoly& f,
                                            const HomogeneousPoly& ell);
HomogeneousPoly reassemble(const SectionDecomposition& s);

/// Copies g into a ring with num_vars variables, variable i of g becoming
/// variable i + offset.
HomogeneousPoly embed(const HomogeneousPoly& g, int num_vars, int offset);

std::vector<Exponent> monomial_basis(int degree, int num_vars);

HomogeneousPoly random_linear_form(int num_vars, std::uint64_t seed, int coeff_bound,
                                   const FieldSpec& field = FieldSpec::rationals());

std::uint64_t binomial(int n, int k);

/// Grevlex-ordered monomials of one degree with O(1) lookup of a monomial's
/// position. Exponents are packed six bits per variable (at most 10 variables,
/// degree at most 63), so multiplying monomials is adding codes.
class MonomialIndex {
 public:
  MonomialIndex(int num_vars, int degree);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  std::uint64_t code(std::size_t i) const { return codes_[i]; }

  int find(std::uint64_t code) const;
  int find(const Exponent& e) const { return find(pack(e)); }

  static std::uint64_t pack(const Exponent& e);

 private:
  int num_vars_;
  int degree_;
  std::vector<Exponent> monomials_;
  std::vector<std::uint64_t> codes_;
  std::unordered_map<std::uint64_t, int> position_;
};

/// Shared, lazily built index for (num_vars, degree). Thread-safe.
const MonomialIndex& monomial_index(int num_vars, int degree);

}  // namespace jaclef

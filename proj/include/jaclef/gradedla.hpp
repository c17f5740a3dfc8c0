#pragma once

#include <chrono>
#include <vector>

#include "jaclef/engine.hpp"
#include "jaclef/poly.hpp"

namespace jaclef {

/// Column label: generator index times a source monomial. Generator -1 marks
/// the multiplier columns of a multiplication-map block.
struct ColumnLabel {
  int generator;
  Exponent monomial;
};

/// Matrix of a degree-homogeneous linear map in monomial bases. Entry (r, c)
/// is the coefficient of row monomial r in (generator of c) * (monomial of c).
struct GradedMatrix {
  int num_vars = 0;
  int source_degree = 0;
  int target_degree = 0;
  FieldSpec field = FieldSpec::rationals();
  std::vector<Exponent> rows;
  std::vector<ColumnLabel> cols;
  std::vector<std::vector<std::pair<int, Scalar>>> columns;  // sparse, by row index

  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_cols() const { return static_cast<int>(cols.size()); }
  Scalar entry(int r, int c) const;
  /// Columns labelled with a generator (not multiplier columns).
  int ideal_cols() const;
};

struct RankCertificate {
  int rank = 0;
  CertLevel level = CertLevel::ModularLowerBound;
  std::uint32_t p1 = 0;
  std::uint32_t p2 = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Columns span the degree-k piece of the ideal generated by `generators`.
GradedMatrix assemble_ideal_piece(const std::vector<HomogeneousPoly>& generators, int k);

/// Block [ell_power * S_{k_from} | J(f)_{k_to}] in the monomial basis of S_{k_to}.
/// The induced map M(f)_{k_from} -> M(f)_{k_to} has rank
/// rank(block) - rank(J block); see induced_rank().
GradedMatrix assemble_multiplication_map(const HomogeneousPoly& f, const HomogeneousPoly& ell_power,
                                         int k_from, int k_to);

RankCertificate rank(const GradedMatrix& m, RankPolicy policy, std::uint64_t seed = 1);

/// rank(block) - rank(ideal columns) for a multiplication-map block.
RankCertificate induced_rank(const GradedMatrix& block, RankPolicy policy, std::uint64_t seed = 1);

/// Fraction-free (Bareiss) rank over Q.
int bareiss_rank(const GradedMatrix& m);

/// Rank mod p. Throws BadPrimeError if p divides a denominator.
int modular_rank(const GradedMatrix& m, std::uint32_t p);

/// Basis of the right kernel over the matrix's field; each vector is checked
/// exactly against the matrix before it is returned.
std::vector<std::vector<Scalar>> kernel_basis(const GradedMatrix& m);

}  // namespace jaclef

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "jaclef/kernels.hpp"
#include "jaclef/poly.hpp"

namespace jaclef {

template <class F>
using PackedTerms = std::vector<std::pair<std::uint64_t, typename F::Elem>>;

template <class F>
PackedTerms<F> packed_terms(const F& f, const HomogeneousPoly& p) {
  PackedTerms<F> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) out.emplace_back(MonomialIndex::pack(e), f.from(c));
  return out;
}

/// Degree-by-degree view of a homogeneous ideal over one field backend: the
/// echelon form of each graded piece, the standard monomials spanning the
/// quotient, and normal forms into quotient coordinates. Pieces are built
/// lazily and cached; a tower is not safe for concurrent use.
template <class F>
class QuotientTower {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  struct Piece {
    int degree = 0;
    const MonomialIndex* monomials = nullptr;
    Echelon<F> echelon;
    int generator_rows = 0;          // number of products g_i * m spanning the piece
    std::vector<int> quotient_cols;  // standard monomials, ascending
    std::vector<int> quotient_pos;   // column -> position in quotient, or -1
    std::optional<std::vector<Vec>> nf;  // per monomial, its normal form

    int dim() const { return static_cast<int>(monomials->size()); }
    int rank() const { return echelon.rank(); }
    int codim() const { return static_cast<int>(quotient_cols.size()); }
  };

  QuotientTower(const std::vector<HomogeneousPoly>& generators, F field, bool parallel = true)
      : field_(std::move(field)), parallel_(parallel) {
    if (generators.empty()) throw PreconditionError("ideal needs at least one generator");
    num_vars_ = generators.front().num_vars();
    for (const auto& g : generators) {
      if (g.num_vars() != num_vars_) throw PreconditionError("generators in different rings");
      if (g.is_zero()) continue;
      gens_.push_back({g.degree(), packed_terms(field_, g)});
    }
  }

  const F& field() const { return field_; }
  int num_vars() const { return num_vars_; }

  const Piece& piece(int degree) {
    if (degree < 0) throw PreconditionError("negative degree");
    auto it = pieces_.find(degree);
    if (it != pieces_.end()) return *it->second;
    auto piece = std::make_unique<Piece>();
    build(degree, *piece);
    return *pieces_.emplace(degree, std::move(piece)).first->second;
  }

  /// Normal form of monomial `col` of the given degree, in quotient coordinates.
  const Vec& monomial_nf(int degree, int col) {
    const Piece& p = piece(degree);
    if (!p.nf) build_nf(const_cast<Piece&>(p));
    return (*p.nf)[col];
  }

  /// Normal form of a vector over the monomials of `degree`.
  Vec normal_form(int degree, const Vec& v) {
    const Piece& p = piece(degree);
    Vec out(p.codim(), field_.zero());
    for (int c = 0; c < p.dim(); ++c) {
      if (field_.is_zero(v[c])) continue;
      const Vec& nf = monomial_nf(degree, c);
      for (int q = 0; q < p.codim(); ++q) {
        if (!field_.is_zero(nf[q])) out[q] = field_.add(out[q], field_.mul(v[c], nf[q]));
      }
    }
    return out;
  }

  /// Normal form at degree k + deg(mult) of mult * v, v given over degree-k monomials.
  Vec product_nf(int k, const Vec& v, const PackedTerms<F>& mult, int mult_degree) {
    const MonomialIndex& src = monomial_index(num_vars_, k);
    const MonomialIndex& dst = monomial_index(num_vars_, k + mult_degree);
    const Piece& p = piece(k + mult_degree);
    Vec out(p.codim(), field_.zero());
    if (p.codim() == 0) return out;
    for (std::size_t c = 0; c < src.size(); ++c) {
      if (field_.is_zero(v[c])) continue;
      for (const auto& [code, coef] : mult) {
        int col = dst.find(src.code(c) + code);
        const Vec& nf = monomial_nf(k + mult_degree, col);
        auto s = field_.mul(v[c], coef);
        for (int q = 0; q < p.codim(); ++q) {
          if (!field_.is_zero(nf[q])) out[q] = field_.add(out[q], field_.mul(s, nf[q]));
        }
      }
    }
    return out;
  }

  /// Vector over degree-k monomials for the standard monomial at quotient position q.
  Vec standard_vector(int k, int q) {
    const Piece& p = piece(k);
    Vec v(p.dim(), field_.zero());
    v[p.quotient_cols[q]] = field_.one();
    return v;
  }

 private:
  struct Generator {
    int degree;
    PackedTerms<F> terms;
  };

  void build(int degree, Piece& p) {
    p.degree = degree;
    p.monomials = &monomial_index(num_vars_, degree);
    const MonomialIndex& target = *p.monomials;
    std::vector<SparseRow<F>> rows;
    for (const auto& g : gens_) {
      if (g.degree > degree) continue;
      const MonomialIndex& mult = monomial_index(num_vars_, degree - g.degree);
      for (std::size_t m = 0; m < mult.size(); ++m) {
        SparseRow<F> row;
        row.reserve(g.terms.size());
        for (const auto& [code, coef] : g.terms) {
          row.emplace_back(target.find(code + mult.code(m)), coef);
        }
        rows.push_back(std::move(row));
      }
    }
    p.generator_rows = static_cast<int>(rows.size());
    p.echelon = structured_echelon(field_, std::move(rows), p.dim(), parallel_);
    p.quotient_pos.assign(p.dim(), -1);
    for (int c = 0; c < p.dim(); ++c) {
      if (!p.echelon.is_pivot(c)) {
        p.quotient_pos[c] = static_cast<int>(p.quotient_cols.size());
        p.quotient_cols.push_back(c);
      }
    }
  }

  // NF(e_c) for a pivot column c is minus the tail of its pivot row, already in
  // normal form once every later column is; so fill columns right to left.
  void build_nf(Piece& p) {
    const int codim = p.codim();
    std::vector<Vec> nf(p.dim(), Vec(codim, field_.zero()));
    for (int c = p.dim() - 1; c >= 0; --c) {
      if (p.quotient_pos[c] >= 0) {
        nf[c][p.quotient_pos[c]] = field_.one();
        continue;
      }
      const auto& row = p.echelon.rows[p.echelon.row_of_col[c]];
      Vec& out = nf[c];
      for (std::size_t t = 1; t < row.size(); ++t) {
        const auto& [j, x] = row[t];
        const Vec& sub = nf[j];
        for (int q = 0; q < codim; ++q) {
          if (!field_.is_zero(sub[q])) out[q] = field_.submul(out[q], x, sub[q]);
        }
      }
    }
    p.nf = std::move(nf);
  }

  F field_;
  bool parallel_;
  int num_vars_ = 0;
  std::vector<Generator> gens_;
  std::map<int, std::unique_ptr<Piece>> pieces_;
};

}  // namespace jaclef

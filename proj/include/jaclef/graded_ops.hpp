#pragma once

// Backend-generic computations on a QuotientTower. Results that do not depend
// on the backend (dimensions, ranks) are plain integers so the rank policy can
// compare runs over different primes.

#include <optional>
#include <vector>

#include "jaclef/debug.hpp"
#include "jaclef/tower.hpp"

namespace jaclef {

template <class F>
std::vector<int> quotient_dims(QuotientTower<F>& t, int kmax) {
  std::vector<int> dims;
  for (int k = 0; k <= kmax; ++k) dims.push_back(t.piece(k).codim());
  return dims;
}

template <class F>
int rank_of_rows(const F& f, DenseMatrix<F> rows, int ncols) {
  if (rows.empty() || ncols == 0) return 0;
  return static_cast<int>(dense_rref_omp(f, rows, ncols, false).size());
}

struct SaturationParams {
  int margin = 2;     // consecutive equal dimensions required
  int cap = 0;        // largest colon exponent tried
  int tau = 0;        // stabilized quotient dimension of the ideal
  int stable_from = 0;  // quotient dimension equals tau from this degree on
};

/// First degree from which `dims` is constant, provided the last two agree.
inline std::optional<int> stable_from(const std::vector<int>& dims) {
  if (dims.size() < 2 || dims[dims.size() - 1] != dims[dims.size() - 2]) return std::nullopt;
  int k = static_cast<int>(dims.size()) - 1;
  while (k > 0 && dims[k - 1] == dims.back()) --k;
  return k;
}

/// Ideals generated in degree d - 1 (Jacobian ideals of degree-d forms): the
/// quotient must stabilize by num_vars * (d - 2) + 2. sat_cap < 0 means 2d + num_vars.
template <class F>
SaturationParams saturation_params(QuotientTower<F>& t, int d, int margin, int sat_cap) {
  const int n = t.num_vars();
  auto dims = quotient_dims(t, n * (d - 2) + 2);
  auto from = stable_from(dims);
  if (!from) throw PreconditionError("singularities are not isolated");
  SaturationParams sp;
  sp.margin = margin < 1 ? 1 : margin;
  sp.cap = sat_cap >= 0 ? sat_cap : 2 * d + n;
  sp.tau = dims.back();
  sp.stable_from = *from;
  return sp;
}

struct SaturationDims {
  int dim = 0;
  int exponent = 0;
  std::vector<int> chain;  // dim (J : m^e)_k for e = 1, 2, ...
  friend bool operator==(const SaturationDims&, const SaturationDims&) = default;
};

template <class F>
struct SaturationBasis {
  SaturationDims dims;
  std::vector<std::vector<typename F::Elem>> basis;  // over degree-k monomials
};

/// (J : m^e)_k for increasing e until the dimension repeats `margin` times in
/// degrees where the quotient has already reached tau. Dimensions can only
/// grow with e. Throws CertificationError when the cap is reached first.
template <class F>
SaturationBasis<F> saturate(QuotientTower<F>& t, int k, const SaturationParams& sp) {
  const F& f = t.field();
  const int n = t.num_vars();
  SaturationBasis<F> out;
  if (k < 0) return out;
  const MonomialIndex& src = monomial_index(n, k);
  const int ncols = static_cast<int>(src.size());
  int run = 0;
  for (int e = 1; e <= sp.cap; ++e) {
    const int top = k + e;
    const auto& piece = t.piece(top);
    const int codim = piece.codim();
    std::vector<std::vector<typename F::Elem>> basis;
    if (codim == 0) {
      for (int c = 0; c < ncols; ++c) {
        std::vector<typename F::Elem> v(ncols, f.zero());
        v[c] = f.one();
        basis.push_back(std::move(v));
      }
    } else {
      const MonomialIndex& shift = monomial_index(n, e);
      const MonomialIndex& dst = *piece.monomials;
      DenseMatrix<F> constraints(shift.size() * codim, std::vector<typename F::Elem>(ncols, f.zero()));
      for (int c = 0; c < ncols; ++c) {
        for (std::size_t u = 0; u < shift.size(); ++u) {
          const auto& nf = t.monomial_nf(top, dst.find(src.code(c) + shift.code(u)));
          for (int q = 0; q < codim; ++q) constraints[u * codim + q][c] = nf[q];
        }
      }
      basis = nullspace(f, std::move(constraints), ncols);
    }
    const int dim = static_cast<int>(basis.size());
    if (debug_checks() && !out.dims.chain.empty()) {
      note_debug_check();
      if (dim < out.dims.chain.back()) throw Error("colon chain dimension decreased");
    }
    bool settled = codim == sp.tau && top >= sp.stable_from;
    if (!out.dims.chain.empty() && dim == out.dims.chain.back() && settled) {
      ++run;
    } else {
      run = settled ? 1 : 0;
    }
    out.dims.chain.push_back(dim);
    out.basis = std::move(basis);
    if (run >= sp.margin) {
      out.dims.dim = dim;
      out.dims.exponent = e;
      return out;
    }
  }
  throw CertificationError("saturation not certified: colon chain in degree " + std::to_string(k) +
                           " did not stabilize by exponent " + std::to_string(sp.cap));
}

/// Dimension of a span of degree-k vectors modulo the ideal.
template <class F>
int quotient_rank(QuotientTower<F>& t, int k, const std::vector<std::vector<typename F::Elem>>& vecs) {
  const int codim = t.piece(k).codim();
  DenseMatrix<F> rows;
  for (const auto& v : vecs) rows.push_back(t.normal_form(k, v));
  return rank_of_rows(t.field(), std::move(rows), codim);
}

struct MapCounts {
  int dim_from = 0;
  int dim_to = 0;
  int rank = 0;
  friend bool operator==(const MapCounts&, const MapCounts&) = default;
};

/// Rank of multiplication by `mult` (degree p) from S_k/J_k to S_{k+p}/J_{k+p},
/// computed on standard monomials in quotient coordinates.
template <class F>
MapCounts quotient_map_counts(QuotientTower<F>& t, const HomogeneousPoly& mult, int k) {
  MapCounts out;
  if (k < 0) return out;
  const int p = mult.degree();
  const auto terms = packed_terms(t.field(), mult);
  out.dim_from = t.piece(k).codim();
  out.dim_to = t.piece(k + p).codim();
  DenseMatrix<F> images;
  for (int q = 0; q < out.dim_from; ++q) {
    images.push_back(t.product_nf(k, t.standard_vector(k, q), terms, p));
  }
  out.rank = rank_of_rows(t.field(), std::move(images), out.dim_to);
  return out;
}

/// Same map restricted to the saturation, I_k/J_k -> I_{k+p}/J_{k+p}, given
/// bases of I_k and I_{k+p} over monomials.
template <class F>
MapCounts module_map_counts(QuotientTower<F>& t, const HomogeneousPoly& mult, int k,
                            const std::vector<std::vector<typename F::Elem>>& from,
                            const std::vector<std::vector<typename F::Elem>>& to) {
  MapCounts out;
  if (k < 0) return out;
  const int p = mult.degree();
  const auto terms = packed_terms(t.field(), mult);
  out.dim_from = quotient_rank(t, k, from);
  out.dim_to = quotient_rank(t, k + p, to);
  DenseMatrix<F> images;
  for (const auto& b : from) images.push_back(t.product_nf(k, b, terms, p));
  out.rank = rank_of_rows(t.field(), std::move(images), t.piece(k + p).codim());
  return out;
}

}  // namespace jaclef

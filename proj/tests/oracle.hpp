#pragma once

// Brute-force reference computations for the tests. Deliberately naive: own
// monomial enumeration, polynomials as maps, dense Gaussian elimination over Q.
// Shares nothing with the library beyond the HomogeneousPoly input type.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "jaclef/poly.hpp"

namespace oracle {

using Mono = std::vector<int>;
using Poly = std::map<Mono, mpq_class>;
using Matrix = std::vector<std::vector<mpq_class>>;

inline void monomials_rec(int nvars, int deg, int i, Mono& cur, std::vector<Mono>& out) {
  if (i == nvars - 1) {
    cur[i] = deg;
    out.push_back(cur);
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur[i] = e;
    monomials_rec(nvars, deg - e, i + 1, cur, out);
  }
}

inline std::vector<Mono> monomials(int nvars, int deg) {
  std::vector<Mono> out;
  if (deg < 0) return out;
  Mono cur(nvars, 0);
  monomials_rec(nvars, deg, 0, cur, out);
  return out;
}

inline Poly from(const jaclef::HomogeneousPoly& f) {
  Poly p;
  for (const auto& [e, c] : f.terms()) p[e] = c;
  return p;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Mono e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Poly mono(const Mono& m) { return {{m, 1}}; }

inline Poly deriv(const Poly& f, int v) {
  Poly out;
  for (const auto& [e, c] : f) {
    if (e[v] == 0) continue;
    Mono m = e;
    m[v] -= 1;
    out[m] += c * e[v];
  }
  return out;
}

inline int rank(Matrix a) {
  int r = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      mpq_class t = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= t * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Columns: one per (poly, multiplier monomial) as vectors over monomials of deg.
inline std::vector<std::vector<mpq_class>> span_columns(const std::vector<Poly>& gens, int nvars, int deg) {
  auto target = monomials(nvars, deg);
  std::map<Mono, int> pos;
  for (std::size_t i = 0; i < target.size(); ++i) pos[target[i]] = static_cast<int>(i);
  std::vector<std::vector<mpq_class>> cols;
  for (const auto& g : gens) {
    if (g.empty()) continue;
    int gd = 0;
    for (int x : g.begin()->first) gd += x;
    for (const auto& m : monomials(nvars, deg - gd)) {
      std::vector<mpq_class> col(target.size(), 0);
      for (const auto& [e, c] : mul(g, mono(m))) col[pos.at(e)] = c;
      cols.push_back(std::move(col));
    }
  }
  return cols;
}

inline int span_rank(const std::vector<std::vector<mpq_class>>& cols) { return rank(cols); }

inline std::vector<Poly> jacobian(const jaclef::HomogeneousPoly& f) {
  std::vector<Poly> out;
  Poly p = from(f);
  for (int i = 0; i < f.num_vars(); ++i) out.push_back(deriv(p, i));
  return out;
}

inline int ideal_rank(const std::vector<Poly>& gens, int nvars, int deg) {
  return span_rank(span_columns(gens, nvars, deg));
}

/// dim (S/J(f))_k
inline int milnor_dim(const jaclef::HomogeneousPoly& f, int k) {
  int n = f.num_vars();
  return static_cast<int>(monomials(n, k).size()) - ideal_rank(jacobian(f), n, k);
}

/// Rank of multiplication by mult from M(f)_k to M(f)_{k+p}:
/// rank[mult * S_k | J_{k+p}] - rank J_{k+p}.
inline int map_rank(const jaclef::HomogeneousPoly& f, const jaclef::HomogeneousPoly& mult, int k) {
  int n = f.num_vars();
  int top = k + mult.degree();
  auto cols = span_columns(jacobian(f), n, top);
  int rj = span_rank(cols);
  for (auto& c : span_columns({from(mult)}, n, top)) cols.push_back(std::move(c));
  return span_rank(cols) - rj;
}

/// Basis of {phi : phi . c = 0 for every column c}, i.e. the functionals on
/// S_deg vanishing on the span of `cols`.
inline Matrix annihilator(const std::vector<std::vector<mpq_class>>& cols, std::size_t dim) {
  Matrix a = cols;
  std::vector<int> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    mpq_class s = 1 / a[r][c];
    for (auto& x : a[r]) x *= s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class t = a[i][c];
      for (std::size_t j = 0; j < dim; ++j) a[i][j] -= t * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<char> is_pivot(dim, 0);
  for (int c : pivots) is_pivot[c] = 1;
  Matrix out;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(dim, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

/// dim {v in S_k : v * S_e inside (gens)_{k+e}}: v must be killed by every
/// functional that annihilates the ideal piece, after multiplying by each
/// monomial of degree e.
inline int colon_dim(const std::vector<Poly>& gens, int nvars, int k, int e) {
  auto src = monomials(nvars, k);
  auto top = monomials(nvars, k + e);
  std::map<Mono, int> pos;
  for (std::size_t i = 0; i < top.size(); ++i) pos[top[i]] = static_cast<int>(i);
  Matrix phis = annihilator(span_columns(gens, nvars, k + e), top.size());
  Matrix a;
  for (const auto& u : monomials(nvars, e))
    for (const auto& phi : phis) {
      std::vector<mpq_class> row(src.size(), 0);
      for (std::size_t c = 0; c < src.size(); ++c) {
        Mono m(nvars);
        for (int i = 0; i < nvars; ++i) m[i] = src[c][i] + u[i];
        row[c] = phi[pos.at(m)];
      }
      a.push_back(std::move(row));
    }
  return static_cast<int>(src.size()) - rank(std::move(a));
}

/// dim of the degree-k forms vanishing at every point (reduced point ideal).
inline int vanishing_dim(const std::vector<std::vector<mpq_class>>& points, int nvars, int k) {
  auto src = monomials(nvars, k);
  Matrix a;
  for (const auto& p : points) {
    std::vector<mpq_class> row;
    for (const auto& m : src) {
      mpq_class v = 1;
      for (int i = 0; i < nvars; ++i)
        for (int t = 0; t < m[i]; ++t) v *= p[i];
      row.push_back(v);
    }
    a.push_back(std::move(row));
  }
  return static_cast<int>(src.size()) - rank(std::move(a));
}

inline int syzygy_dim(const jaclef::HomogeneousPoly& g, int j) {
  if (j < 0) return 0;
  int n = g.num_vars();
  auto gens = jacobian(g);
  return n * static_cast<int>(monomials(n, j).size()) - ideal_rank(gens, n, j + g.degree() - 1);
}

}  // namespace oracle

#include "jaclef/gradedla.hpp"

#include <functional>

#include "jaclef/kernels.hpp"

namespace jaclef {

Scalar GradedMatrix::entry(int r, int c) const {
  for (const auto& [row, x] : columns[c])
    if (row == r) return x;
  return Scalar(0);
}

int GradedMatrix::ideal_cols() const {
  int n = 0;
  for (const auto& c : cols) n += c.generator >= 0;
  return n;
}

namespace {

void append_product_columns(GradedMatrix& m, const HomogeneousPoly& p, int generator, int k) {
  const MonomialIndex& target = monomial_index(m.num_vars, k);
  if (p.degree() > k) return;
  const MonomialIndex& mult = monomial_index(m.num_vars, k - p.degree());
  for (std::size_t i = 0; i < mult.size(); ++i) {
    std::vector<std::pair<int, Scalar>> col;
    for (const auto& [e, c] : p.terms()) {
      col.emplace_back(target.find(MonomialIndex::pack(e) + mult.code(i)), c);
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    m.cols.push_back({generator, mult[i]});
    m.columns.push_back(std::move(col));
  }
}

}  // namespace

GradedMatrix assemble_ideal_piece(const std::vector<HomogeneousPoly>& generators, int k) {
  if (generators.empty()) throw PreconditionError("no generators");
  GradedMatrix m;
  m.num_vars = generators.front().num_vars();
  m.field = generators.front().field();
  m.source_degree = k;
  m.target_degree = k;
  for (const auto& g : generators) {
    if (g.num_vars() != m.num_vars) throw PreconditionError("generators have mixed num_vars");
  }
  if (k < 0) return m;
  m.rows = monomial_index(m.num_vars, k).monomials();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    append_product_columns(m, generators[i], static_cast<int>(i), k);
  }
  return m;
}

GradedMatrix assemble_multiplication_map(const HomogeneousPoly& f, const HomogeneousPoly& ell_power,
                                         int k_from, int k_to) {
  if (k_from < 0) throw PreconditionError("negative source degree");
  if (ell_power.num_vars() != f.num_vars()) throw PreconditionError("variable count mismatch");
  if (ell_power.degree() != k_to - k_from) {
    throw PreconditionError("multiplier degree does not match the degree shift");
  }
  GradedMatrix m = assemble_ideal_piece(partials(f), k_to);
  m.source_degree = k_from;
  GradedMatrix block;
  block.num_vars = m.num_vars;
  block.field = m.field;
  block.source_degree = k_from;
  block.target_degree = k_to;
  block.rows = m.rows;
  append_product_columns(block, ell_power.over(m.field), -1, k_to);
  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    block.cols.push_back(m.cols[c]);
    block.columns.push_back(m.columns[c]);
  }
  return block;
}

int modular_rank(const GradedMatrix& m, std::uint32_t p) {
  ModP f(p);
  std::vector<SparseRow<ModP>> rows;
  rows.reserve(m.columns.size());
  for (const auto& col : m.columns) {
    SparseRow<ModP> row;
    for (const auto& [r, x] : col) row.emplace_back(r, f.from(x));
    rows.push_back(std::move(row));
  }
  return structured_echelon(f, std::move(rows), m.num_rows()).rank();
}

int bareiss_rank(const GradedMatrix& m) {
  const int nr = m.num_rows();
  const int nc = m.num_cols();
  // rows of the working matrix are the columns of m, scaled to integers
  std::vector<std::vector<mpz_class>> a(nc, std::vector<mpz_class>(nr, 0));
  for (int c = 0; c < nc; ++c) {
    mpz_class lcm = 1;
    for (const auto& [r, x] : m.columns[c]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& [r, x] : m.columns[c]) a[c][r] = x.get_num() * (lcm / x.get_den());
  }
  mpz_class prev = 1;
  int rank = 0;
  for (int col = 0; col < nr && rank < nc; ++col) {
    int piv = rank;
    while (piv < nc && a[piv][col] == 0) ++piv;
    if (piv == nc) continue;
    std::swap(a[piv], a[rank]);
    for (int i = rank + 1; i < nc; ++i) {
      for (int j = col + 1; j < nr; ++j) {
        a[i][j] = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

std::uint32_t good_prime(const GradedMatrix& m, std::uint32_t p, std::uint32_t avoid) {
  for (;;) {
    if (p != avoid) {
      try {
        for (const auto& col : m.columns)
          for (const auto& [r, x] : col) reduce_mod(x, p);
        return p;
      } catch (const BadPrimeError&) {
      }
    }
    p = next_prime(static_cast<std::uint64_t>(p) + 1);
  }
}

GradedMatrix ideal_block(const GradedMatrix& block) {
  GradedMatrix j = block;
  j.cols.clear();
  j.columns.clear();
  for (std::size_t c = 0; c < block.cols.size(); ++c) {
    if (block.cols[c].generator < 0) continue;
    j.cols.push_back(block.cols[c]);
    j.columns.push_back(block.columns[c]);
  }
  return j;
}

}  // namespace

RankCertificate rank(const GradedMatrix& m, RankPolicy policy, std::uint64_t seed) {
  std::function<int()> exact = [&] { return bareiss_rank(m); };
  std::function<int(std::uint32_t)> mod = [&](std::uint32_t p) { return modular_rank(m, p); };
  auto start = std::chrono::steady_clock::now();
  RankCertificate cert;
  int full = std::min(m.num_rows(), m.num_cols());
  if (!m.field.is_rational()) {
    cert.p1 = m.field.prime();
    cert.rank = mod(cert.p1);
    cert.level = CertLevel::FieldExact;
  } else if (policy == RankPolicy::Exact) {
    cert.rank = exact();
    cert.level = CertLevel::RationalExact;
  } else {
    ComputeOptions opt;
    opt.seed = seed;
    cert.p1 = good_prime(m, primary_prime(opt), 0);
    cert.rank = mod(cert.p1);
    cert.level = CertLevel::ModularLowerBound;
    if (policy == RankPolicy::TwoPrime) {
      cert.p2 = good_prime(m, secondary_prime(opt), cert.p1);
      if (mod(cert.p2) == cert.rank) {
        cert.level = CertLevel::TwoPrimeAgreement;
      } else {
        cert.rank = exact();
        cert.level = CertLevel::RationalExact;
      }
    }
    if (cert.level != CertLevel::RationalExact && cert.rank == full) {
      cert.level = CertLevel::ModularFullRank;
    }
  }
  cert.elapsed = std::chrono::steady_clock::now() - start;
  return cert;
}

RankCertificate induced_rank(const GradedMatrix& block, RankPolicy policy, std::uint64_t seed) {
  GradedMatrix j = ideal_block(block);
  RankCertificate whole = rank(block, policy, seed);
  RankCertificate ideal = rank(j, policy, seed);
  RankCertificate out = whole;
  out.rank = whole.rank - ideal.rank;
  // a difference of ranks is only as strong as its weaker part, and a
  // full-rank claim does not survive the subtraction
  auto demote = [](CertLevel l) {
    return l == CertLevel::ModularFullRank ? CertLevel::TwoPrimeAgreement : l;
  };
  CertLevel a = demote(whole.level), b = demote(ideal.level);
  if (policy == RankPolicy::Fast && block.field.is_rational()) {
    out.level = CertLevel::ModularLowerBound;
  } else {
    out.level = static_cast<int>(a) < static_cast<int>(b) ? a : b;
  }
  out.elapsed = whole.elapsed + ideal.elapsed;
  return out;
}

std::vector<std::vector<Scalar>> kernel_basis(const GradedMatrix& m) {
  auto solve = [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    DenseMatrix<F> a(m.num_rows(), std::vector<typename F::Elem>(m.num_cols(), f.zero()));
    for (int c = 0; c < m.num_cols(); ++c)
      for (const auto& [r, x] : m.columns[c]) a[r][c] = f.from(x);
    std::vector<std::vector<Scalar>> out;
    for (const auto& v : nullspace(f, std::move(a), m.num_cols())) {
      std::vector<Scalar> s;
      s.reserve(v.size());
      for (const auto& x : v) s.push_back(f.to_scalar(x));
      out.push_back(std::move(s));
    }
    return out;
  };
  auto basis = m.field.is_rational() ? solve(QQ{}) : solve(ModP(m.field.prime()));

  // exact verification: M v = 0 in the matrix's field
  for (const auto& v : basis) {
    std::vector<Scalar> image(m.num_rows(), Scalar(0));
    for (int c = 0; c < m.num_cols(); ++c) {
      if (v[c] == 0) continue;
      for (const auto& [r, x] : m.columns[c]) image[r] += x * v[c];
    }
    for (const auto& y : image) {
      if (m.field.normalize(y) != 0) throw Error("kernel vector failed exact verification");
    }
  }
  return basis;
}

}  // namespace jaclef

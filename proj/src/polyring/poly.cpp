#include "jaclef/poly.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <random>

#include "jaclef/errors.hpp"

namespace jaclef {

bool GrevlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

HomogeneousPoly::HomogeneousPoly(int num_vars, int degree, FieldSpec field)
    : num_vars_(num_vars), degree_(degree), field_(field) {
  if (num_vars < 1) throw PreconditionError("polynomial needs at least one variable");
  if (degree < 0) throw PreconditionError("negative degree");
}

HomogeneousPoly HomogeneousPoly::variable(int num_vars, int index, FieldSpec field) {
  if (index < 0 || index >= num_vars) throw PreconditionError("variable index out of range");
  HomogeneousPoly p(num_vars, 1, field);
  Exponent e(num_vars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

HomogeneousPoly HomogeneousPoly::constant(int num_vars, const Scalar& c, FieldSpec field) {
  HomogeneousPoly p(num_vars, 0, field);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

HomogeneousPoly HomogeneousPoly::monomial(const Exponent& e, const Scalar& c, FieldSpec field) {
  HomogeneousPoly p(static_cast<int>(e.size()), std::accumulate(e.begin(), e.end(), 0), field);
  p.add_term(e, c);
  return p;
}

Scalar HomogeneousPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void HomogeneousPoly::add_term(const Exponent& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != num_vars_) {
    throw PreconditionError("exponent length does not match the number of variables");
  }
  int deg = 0;
  for (int x : e) {
    if (x < 0) throw PreconditionError("negative exponent");
    deg += x;
  }
  if (deg != degree_) throw PreconditionError("term degree differs from polynomial degree");
  Scalar v = field_.normalize(c);
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted) {
    it->second = field_.normalize(it->second + v);
    if (it->second == 0) terms_.erase(it);
  }
}

void HomogeneousPoly::check_compatible(const HomogeneousPoly& other) const {
  if (num_vars_ != other.num_vars_) throw PreconditionError("variable count mismatch");
  if (!(field_ == other.field_)) throw PreconditionError("field mismatch");
}

HomogeneousPoly& HomogeneousPoly::operator+=(const HomogeneousPoly& other) {
  check_compatible(other);
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  if (degree_ != other.degree_) throw PreconditionError("adding polynomials of different degree");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

HomogeneousPoly& HomogeneousPoly::operator-=(const HomogeneousPoly& other) {
  return *this += -other;
}

HomogeneousPoly& HomogeneousPoly::operator*=(const Scalar& c) {
  Scalar v = field_.normalize(c);
  if (v == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef = field_.normalize(coef * v);
  return *this;
}

HomogeneousPoly HomogeneousPoly::operator-() const {
  HomogeneousPoly r = *this;
  for (auto& [e, coef] : r.terms_) coef = field_.normalize(-coef);
  return r;
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  a.check_compatible(b);
  HomogeneousPoly r(a.num_vars_, a.degree_ + b.degree_, a.field_);
  Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

HomogeneousPoly HomogeneousPoly::pow(int e) const {
  if (e < 0) throw PreconditionError("negative power");
  HomogeneousPoly result = constant(num_vars_, 1, field_);
  HomogeneousPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

HomogeneousPoly HomogeneousPoly::over(const FieldSpec& field) const {
  HomogeneousPoly r(num_vars_, degree_, field);
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (a.num_vars_ != b.num_vars_ || !(a.field_ == b.field_)) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

CoordMatrix identity_matrix(int n) {
  CoordMatrix m(n, std::vector<Scalar>(n, Scalar(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

CoordMatrix invert(const CoordMatrix& a, const FieldSpec& field) {
  int n = static_cast<int>(a.size());
  CoordMatrix m = a;
  CoordMatrix inv = identity_matrix(n);
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) throw PreconditionError("matrix is not square");
  }
  for (auto& row : m)
    for (auto& x : row) x = field.normalize(x);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw PreconditionError("singular coordinate change");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Scalar s = field.inverse(m[col][col]);
    for (int j = 0; j < n; ++j) {
      m[col][j] = field.normalize(m[col][j] * s);
      inv[col][j] = field.normalize(inv[col][j] * s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Scalar factor = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] = field.normalize(m[r][j] - factor * m[col][j]);
        inv[r][j] = field.normalize(inv[r][j] - factor * inv[col][j]);
      }
    }
  }
  return inv;
}

CoordMatrix multiply(const CoordMatrix& a, const CoordMatrix& b, const FieldSpec& field) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
  CoordMatrix c(n, std::vector<Scalar>(m, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  for (auto& row : c)
    for (auto& x : row) x = field.normalize(x);
  return c;
}

HomogeneousPoly derivative(const HomogeneousPoly& f, int var) {
  if (var < 0 || var >= f.num_vars()) throw PreconditionError("variable index out of range");
  if (f.degree() == 0) return HomogeneousPoly(f.num_vars(), 0, f.field());
  HomogeneousPoly r(f.num_vars(), f.degree() - 1, f.field());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    r.add_term(d, c * e[var]);
  }
  return r;
}

std::vector<HomogeneousPoly> partials(const HomogeneousPoly& f) {
  std::vector<HomogeneousPoly> out;
  out.reserve(f.num_vars());
  for (int i = 0; i < f.num_vars(); ++i) out.push_back(derivative(f, i));
  return out;
}

Scalar evaluate(const HomogeneousPoly& f, const std::vector<Scalar>& point) {
  if (static_cast<int>(point.size()) != f.num_vars()) {
    throw PreconditionError("point has wrong number of coordinates");
  }
  Scalar total = 0;
  for (const auto& [e, c] : f.terms()) {
    Scalar t = c;
    for (int i = 0; i < f.num_vars(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return f.field().normalize(total);
}

HomogeneousPoly linear_change(const HomogeneousPoly& f, const CoordMatrix& a) {
  int n = f.num_vars();
  if (static_cast<int>(a.size()) != n) throw PreconditionError("coordinate change has wrong size");
  invert(a, f.field());  // throws on singular input

  std::vector<HomogeneousPoly> forms;
  forms.reserve(n);
  for (int i = 0; i < n; ++i) {
    HomogeneousPoly l(n, 1, f.field());
    for (int j = 0; j < n; ++j) {
      Exponent e(n, 0);
      e[j] = 1;
      l.add_term(e, a[i][j]);
    }
    forms.push_back(std::move(l));
  }
  std::vector<std::vector<HomogeneousPoly>> powers(n);
  for (int i = 0; i < n; ++i) {
    powers[i].push_back(HomogeneousPoly::constant(n, 1, f.field()));
    for (int k = 1; k <= f.degree(); ++k) powers[i].push_back(powers[i].back() * forms[i]);
  }

  HomogeneousPoly result(n, f.degree(), f.field());
  for (const auto& [e, c] : f.terms()) {
    HomogeneousPoly t = HomogeneousPoly::constant(n, c, f.field());
    for (int i = 0; i < n; ++i) {
      if (e[i]) t = t * powers[i][e[i]];
    }
    result += t;
  }
  return result;
}

SectionDecomposition restrict_to_hyperplane(const HomogeneousPoly& f, const HomogeneousPoly& ell) {
  const int n = f.num_vars();
  if (ell.degree() != 1) throw PreconditionError("hyperplane form must be linear");
  if (ell.num_vars() != n) throw PreconditionError("hyperplane form has wrong number of variables");
  if (ell.is_zero()) throw PreconditionError("hyperplane form is zero");
  HomogeneousPoly l = ell.over(f.field());

  std::vector<Scalar> coeffs(n, Scalar(0));
  for (const auto& [e, c] : l.terms()) {
    for (int j = 0; j < n; ++j)
      if (e[j] == 1) coeffs[j] = c;
  }
  int pivot = 0;
  while (coeffs[pivot] == 0) ++pivot;

  // New coordinates z = P x: z0 = ell, then the old variables other than the
  // pivot, in order.
  CoordMatrix to_new(n, std::vector<Scalar>(n, Scalar(0)));
  to_new[0] = coeffs;
  for (int j = 0, row = 1; j < n; ++j) {
    if (j == pivot) continue;
    to_new[row++][j] = 1;
  }
  HomogeneousPoly fz = linear_change(f, invert(to_new, f.field()));

  const int d = f.degree();
  SectionDecomposition out{HomogeneousPoly(n - 1, d, f.field()),
                           HomogeneousPoly(n - 1, d >= 1 ? d - 1 : 0, f.field()),
                           {},
                           to_new};
  for (int j = 2; j <= d; ++j) out.tail.emplace_back(n - 1, d - j, f.field());
  for (const auto& [e, c] : fz.terms()) {
    Exponent rest(e.begin() + 1, e.end());
    int power = e[0];
    if (power == 0) {
      out.g.add_term(rest, c);
    } else if (power == 1) {
      out.h.add_term(rest, c);
    } else {
      out.tail[power - 2].add_term(rest, c);
    }
  }
  return out;
}

HomogeneousPoly reassemble(const SectionDecomposition& s) {
  const int n = s.g.num_vars() + 1;
  const int d = s.g.degree();
  const FieldSpec& field = s.g.field();
  HomogeneousPoly fz(n, d, field);
  auto add_shifted = [&](const HomogeneousPoly& p, int power) {
    for (const auto& [e, c] : p.terms()) {
      Exponent full(n);
      full[0] = power;
      std::copy(e.begin(), e.end(), full.begin() + 1);
      fz.add_term(full, c);
    }
  };
  add_shifted(s.g, 0);
  add_shifted(s.h, 1);
  for (std::size_t j = 0; j < s.tail.size(); ++j) add_shifted(s.tail[j], static_cast<int>(j) + 2);
  return linear_change(fz, s.coordinate_change);
}

HomogeneousPoly embed(const HomogeneousPoly& g, int num_vars, int offset) {
  if (offset < 0 || offset + g.num_vars() > num_vars) throw PreconditionError("embedding out of range");
  HomogeneousPoly r(num_vars, g.degree(), g.field());
  for (const auto& [e, c] : g.terms()) {
    Exponent full(num_vars, 0);
    std::copy(e.begin(), e.end(), full.begin() + offset);
    r.add_term(full, c);
  }
  return r;
}

namespace {

void enumerate(int var, int remaining, Exponent& cur, std::vector<Exponent>& out) {
  if (var + 1 == static_cast<int>(cur.size())) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[var] = k;
    enumerate(var + 1, remaining - k, cur, out);
  }
}

}  // namespace

std::vector<Exponent> monomial_basis(int degree, int num_vars) {
  if (degree < 0) return {};
  if (num_vars < 1) throw PreconditionError("need at least one variable");
  std::vector<Exponent> out;
  Exponent cur(num_vars, 0);
  enumerate(0, degree, cur, out);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

HomogeneousPoly random_linear_form(int num_vars, std::uint64_t seed, int coeff_bound,
                                   const FieldSpec& field) {
  if (coeff_bound < 1) throw PreconditionError("coeff_bound must be at least 1");
  std::mt19937_64 rng(seed);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(coeff_bound) + 1;
  for (;;) {
    HomogeneousPoly l(num_vars, 1, field);
    for (int i = 0; i < num_vars; ++i) {
      long c = static_cast<long>(rng() % span) - coeff_bound;
      Exponent e(num_vars, 0);
      e[i] = 1;
      l.add_term(e, Scalar(c));
    }
    if (!l.is_zero()) return l;
  }
}

MonomialIndex::MonomialIndex(int num_vars, int degree)
    : num_vars_(num_vars), degree_(degree), monomials_(monomial_basis(degree, num_vars)) {
  if (num_vars > 10 || degree > 63) {
    throw PreconditionError("monomial index supports at most 10 variables and degree 63");
  }
  codes_.reserve(monomials_.size());
  position_.reserve(monomials_.size() * 2);
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    codes_.push_back(pack(monomials_[i]));
    position_.emplace(codes_.back(), static_cast<int>(i));
  }
}

std::uint64_t MonomialIndex::pack(const Exponent& e) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < e.size(); ++i) code |= static_cast<std::uint64_t>(e[i]) << (6 * i);
  return code;
}

int MonomialIndex::find(std::uint64_t code) const {
  auto it = position_.find(code);
  return it == position_.end() ? -1 : it->second;
}

const MonomialIndex& monomial_index(int num_vars, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<MonomialIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{num_vars, degree}];
  if (!slot) slot = std::make_unique<MonomialIndex>(num_vars, degree);
  return *slot;
}

}  // namespace jaclef

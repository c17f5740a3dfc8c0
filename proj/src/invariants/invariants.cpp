#include "jaclef/invariants.hpp"

#include <algorithm>

#include "jaclef/gradedla.hpp"
#include "jaclef/graded_ops.hpp"

namespace jaclef {

int socle_degree(int num_vars, int d) { return num_vars * (d - 2); }

Certificate weakest(const Certificate& a, const Certificate& b) {
  Certificate out = static_cast<int>(a.level) <= static_cast<int>(b.level) ? a : b;
  out.escalated = a.escalated || b.escalated;
  return out;
}

namespace {

void require_degree(const HomogeneousPoly& f, int min_degree) {
  if (f.is_zero()) throw PreconditionError("zero polynomial");
  if (f.degree() < min_degree) {
    throw PreconditionError("degree " + std::to_string(f.degree()) + " below the minimum " +
                            std::to_string(min_degree));
  }
}

int tjurina_cap(const HomogeneousPoly& g) { return g.num_vars() * (g.degree() - 2) + 2; }

template <class F>
SaturationParams saturation_params(QuotientTower<F>& t, const HomogeneousPoly& g,
                                   const ComputeOptions& opt) {
  return jaclef::saturation_params(t, g.degree(), opt.sat_margin, opt.sat_cap);
}

template <class F>
HomogeneousPoly vector_to_poly(const F& f, const std::vector<typename F::Elem>& v, int num_vars,
                               int degree) {
  const MonomialIndex& idx = monomial_index(num_vars, degree);
  HomogeneousPoly p(num_vars, degree, f.field());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    if (!f.is_zero(v[c])) p.add_term(idx[c], f.to_scalar(v[c]));
  }
  return p;
}

}  // namespace

HilbertFunction milnor_dims(const HomogeneousPoly& f, int kmax, const ComputeOptions& opt) {
  require_degree(f, 1);
  TowerSet ts(partials(f), opt);
  auto r = ts.run(opt.policy, [&](auto& t) { return quotient_dims(t, kmax); });
  HilbertFunction out;
  out.dims = std::move(r.value);
  out.stable_from = stable_from(out.dims);
  out.cert = r.cert;
  return out;
}

Certified<bool> smoothness(const HomogeneousPoly& f, const ComputeOptions& opt) {
  require_degree(f, 1);
  Certified<bool> out{true, {}};
  if (f.degree() == 1) {
    out.cert.level = CertLevel::RationalExact;
    return out;
  }
  const int top = socle_degree(f.num_vars(), f.degree()) + 1;
  TowerSet ts(partials(f), opt);
  if (ts.over_prime_field()) {
    out.value = ts.modular(0).piece(top).codim() == 0;
    out.cert = {CertLevel::FieldExact, ts.prime(0), 0, false};
    return out;
  }
  // Vanishing mod p is a proof (rank can only drop mod p); nonvanishing is
  // evidence until confirmed per the policy.
  if (opt.policy != RankPolicy::Exact && ts.modular(0).piece(top).codim() == 0) {
    out.cert = {CertLevel::ModularFullRank, ts.prime(0), 0, false};
    return out;
  }
  auto r = ts.run(opt.policy, [&](auto& t) { return t.piece(top).codim() == 0; });
  out.value = r.value;
  out.cert = r.cert;
  if (r.value && out.cert.level != CertLevel::RationalExact) out.cert.level = CertLevel::ModularFullRank;
  return out;
}

bool is_smooth(const HomogeneousPoly& f, const ComputeOptions& opt) { return smoothness(f, opt).value; }

bool is_cone(const HomogeneousPoly& f) {
  require_degree(f, 1);
  auto m = assemble_ideal_piece(partials(f), f.degree() - 1);
  return rank(m, RankPolicy::Exact).rank < f.num_vars();
}

TjurinaResult tjurina_total(const HomogeneousPoly& g, const ComputeOptions& opt, int cap) {
  require_degree(g, 2);
  TjurinaResult out;
  out.cap = cap >= 0 ? cap : tjurina_cap(g);
  if (out.cap < 1) out.cap = 1;
  auto h = milnor_dims(g, out.cap, opt);
  out.dims = h.dims;
  out.cert = h.cert;
  out.isolated = out.dims[out.cap - 1] == out.dims[out.cap];
  out.tau = out.dims[out.cap];
  return out;
}

CoincidenceThreshold coincidence_threshold(const HomogeneousPoly& f, const ComputeOptions& opt) {
  require_degree(f, 2);
  CoincidenceThreshold out;
  const int n = f.num_vars();
  const int d = f.degree();
  out.kmax = opt.kmax >= 0 ? opt.kmax : socle_degree(n, d) + 1;
  HomogeneousPoly fermat(n, d, f.field());
  for (int i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = d;
    fermat.add_term(e, 1);
  }
  // the Fermat algebra is a complete intersection, its dimensions are exact
  auto reference = milnor_dims(fermat, out.kmax, [&] {
    ComputeOptions o = opt;
    o.policy = RankPolicy::Fast;
    return o;
  }());
  auto h = milnor_dims(f, out.kmax, opt);
  out.cert = h.cert;
  out.ct = -1;
  for (int k = 0; k <= out.kmax && h.dims[k] == reference.dims[k]; ++k) out.ct = k;
  out.reached_kmax = out.ct == out.kmax;
  return out;
}

SaturationPiece saturation_piece(const HomogeneousPoly& g, int k, const ComputeOptions& opt,
                                 bool with_basis) {
  require_degree(g, 2);
  SaturationPiece out;
  out.degree = k;
  if (k < 0) return out;
  TowerSet ts(partials(g), opt);
  auto r = ts.run(opt.policy, [&](auto& t) { return saturate(t, k, saturation_params(t, g, opt)).dims; });
  out.dim = r.value.dim;
  out.exponent = r.value.exponent;
  out.chain = r.value.chain;
  out.cert = r.cert;
  if (debug_checks()) {
    note_debug_check();
    int rank_j = ts.modular(0).piece(k).rank();
    if (out.dim < rank_j) throw Error("saturation smaller than the ideal");
  }
  if (with_basis) {
    auto convert = [&](auto& t) {
      auto sat = saturate(t, k, saturation_params(t, g, opt));
      for (const auto& v : sat.basis) out.basis.push_back(vector_to_poly(t.field(), v, g.num_vars(), k));
    };
    if (out.cert.level == CertLevel::RationalExact) {
      convert(ts.exact());
    } else {
      convert(ts.modular(0));
    }
  }
  return out;
}

Certified<int> s_invariant(const HomogeneousPoly& g, const ComputeOptions& opt) {
  require_degree(g, 2);
  TowerSet ts(partials(g), opt);
  return ts.run(opt.policy, [&](auto& t) {
    auto sp = saturation_params(t, g, opt);
    for (int j = 0;; ++j) {
      if (saturate(t, j, sp).dims.dim > 0) return j;
      if (j > sp.stable_from + g.degree()) throw CertificationError("no saturation piece found");
    }
  });
}

SyzygyPiece syzygy_piece(const HomogeneousPoly& g, int j, const ComputeOptions& opt, bool with_basis) {
  require_degree(g, 2);
  SyzygyPiece out;
  out.degree = j;
  if (j < 0) return out;
  const int n = g.num_vars();
  const int top = j + g.degree() - 1;
  const int free_rank = n * static_cast<int>(binomial(j + n - 1, n - 1));
  TowerSet ts(partials(g), opt);
  auto r = ts.run(opt.policy, [&](auto& t) { return free_rank - t.piece(top).rank(); });
  out.dim = r.value;
  out.cert = r.cert;
  if (!with_basis) return out;

  const auto dg = partials(g.over(opt.field));
  auto m = assemble_ideal_piece(dg, top);
  auto kernel = kernel_basis(m);
  if (static_cast<int>(kernel.size()) != out.dim && is_certified(out.cert.level)) {
    throw CertificationError("syzygy basis size disagrees with the certified dimension");
  }
  for (const auto& v : kernel) {
    std::vector<HomogeneousPoly> syz(n, HomogeneousPoly(n, j, opt.field));
    for (int c = 0; c < m.num_cols(); ++c) {
      if (v[c] != 0) syz[m.cols[c].generator].add_term(m.cols[c].monomial, v[c]);
    }
    HomogeneousPoly sum(n, top, opt.field);
    for (int i = 0; i < n; ++i) sum += syz[i] * dg[i];
    if (!sum.is_zero()) throw Error("syzygy failed exact verification");
    out.basis.push_back(std::move(syz));
  }
  return out;
}

Certified<int> r_invariant(const HomogeneousPoly& g, const ComputeOptions& opt) {
  require_degree(g, 2);
  const int n = g.num_vars();
  TowerSet ts(partials(g), opt);
  return ts.run(opt.policy, [&](auto& t) {
    for (int j = 0;; ++j) {
      int free_rank = n * static_cast<int>(binomial(j + n - 1, n - 1));
      if (free_rank - t.piece(j + g.degree() - 1).rank() > 0) return j;
      if (j > g.degree()) throw Error("no syzygy below the Koszul degree");
    }
  });
}

ModuleDims jacobian_module_dims(const HomogeneousPoly& f, int kmax, const ComputeOptions& opt) {
  require_degree(f, 2);
  if (kmax < 0) kmax = socle_degree(f.num_vars(), f.degree()) + 2;
  TowerSet ts(partials(f), opt);
  auto r = ts.run(opt.policy, [&](auto& t) {
    auto sp = saturation_params(t, f, opt);
    std::vector<int> dims{sp.tau};
    for (int k = 0; k <= kmax; ++k) dims.push_back(saturate(t, k, sp).dims.dim - t.piece(k).rank());
    return dims;
  });
  ModuleDims out;
  out.tau = r.value.front();
  out.dims.assign(r.value.begin() + 1, r.value.end());
  out.cert = r.cert;
  return out;
}

DualityCheck check_duality(const HomogeneousPoly& f, int jmax, const ComputeOptions& opt) {
  DualityCheck out;
  out.socle = socle_degree(f.num_vars(), f.degree());
  if (jmax < 0) jmax = out.socle;
  auto n = jacobian_module_dims(f, std::max(jmax, out.socle), opt);
  out.cert = n.cert;
  out.dims.assign(n.dims.begin(), n.dims.begin() + jmax + 1);
  for (int j = 0; j <= jmax; ++j) {
    int mirror = out.socle - j;
    int other = mirror >= 0 ? n.dims[mirror] : 0;
    if (n.dims[j] != other) out.mismatches.push_back(j);
  }
  out.holds = out.mismatches.empty();
  return out;
}

std::string to_string(Freeness f) {
  switch (f) {
    case Freeness::Free: return "free";
    case Freeness::NearlyFree: return "nearly_free";
    case Freeness::Neither: return "neither";
    case Freeness::NotComputed: return "not_computed";
  }
  return "?";
}

FreenessResult classify_freeness(const HomogeneousPoly& g, const ComputeOptions& opt) {
  FreenessResult out;
  if (g.num_vars() != 3) return out;
  require_degree(g, 2);
  const int d = g.degree();
  TowerSet ts(partials(g), opt);
  auto r = ts.run(opt.policy, [&](auto& t) {
    std::vector<int> dims;
    for (int j = 0; j <= 2 * d; ++j) {
      dims.push_back(3 * static_cast<int>(binomial(j + 2, 2)) - t.piece(j + d - 1).rank());
    }
    return dims;
  });
  out.syzygy_dims = r.value;
  out.cert = r.cert;
  out.kind = Freeness::Neither;
  auto first = std::find_if(out.syzygy_dims.begin(), out.syzygy_dims.end(), [](int x) { return x > 0; });
  if (first == out.syzygy_dims.end()) return out;
  const int d1 = static_cast<int>(first - out.syzygy_dims.begin());
  auto c2 = [](int m) { return m >= 2 ? static_cast<int>(binomial(m, 2)) : 0; };
  auto matches = [&](auto&& formula) {
    for (int j = 0; j <= 2 * d; ++j)
      if (out.syzygy_dims[j] != formula(j)) return false;
    return true;
  };
  // Hilbert functions of the syzygy module for the two resolution shapes
  const int free_d2 = d - 1 - d1;
  if (d1 <= free_d2 && matches([&](int j) { return c2(j - d1 + 2) + c2(j - free_d2 + 2); })) {
    out.kind = Freeness::Free;
    out.d1 = d1;
    out.d2 = free_d2;
    return out;
  }
  const int nf_d2 = d - d1;
  if (d1 <= nf_d2 &&
      matches([&](int j) { return c2(j - d1 + 2) + 2 * c2(j - nf_d2 + 2) - c2(j - nf_d2 + 1); })) {
    out.kind = Freeness::NearlyFree;
    out.d1 = d1;
    out.d2 = nf_d2;
  }
  return out;
}

SectionInvariants section_invariants(const HomogeneousPoly& g, const ComputeOptions& opt) {
  require_degree(g, 2);
  SectionInvariants out;
  out.n = g.num_vars() - 1;
  out.d = g.degree();
  auto tj = tjurina_total(g, opt);
  out.tau = tj.tau;
  out.isolated = tj.isolated;
  out.cone = is_cone(g);
  auto r = r_invariant(g, opt);
  out.r = r.value;
  out.cert = weakest(tj.cert, r.cert);
  if (out.isolated) {
    auto s = s_invariant(g, opt);
    out.s = s.value;
    out.cert = weakest(out.cert, s.cert);
    out.k0 = std::min(out.r, out.s) + out.d - 3;
  } else {
    out.s = -1;
    out.k0 = -1;
  }
  if (out.n == 2) {
    auto fr = classify_freeness(g, opt);
    out.freeness = fr.kind;
    out.cert = weakest(out.cert, fr.cert);
  }
  return out;
}

}  // namespace jaclef

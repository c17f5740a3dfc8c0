#include "jaclef/verifier.hpp"

#include <random>

#include "jaclef/graded_ops.hpp"

namespace jaclef {

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Verified: return "verified";
    case Conclusion::PreconditionFailed: return "precondition_failed";
    case Conclusion::CounterexampleCandidate: return "counterexample_candidate";
    case Conclusion::Inconclusive: return "inconclusive";
  }
  return "?";
}

int exit_code(Conclusion c) {
  switch (c) {
    case Conclusion::Verified: return 0;
    case Conclusion::PreconditionFailed: return 2;
    case Conclusion::CounterexampleCandidate: return 3;
    case Conclusion::Inconclusive: return 1;
  }
  return 1;
}

namespace {

bool exact_level(CertLevel l) { return l == CertLevel::RationalExact || l == CertLevel::FieldExact; }

// A map that should be injective (or surjective) but is not under the chosen
// policy is recomputed exactly before anything is concluded from it.
LefschetzVerdict confirm(LefschetzEngine& e, const HomogeneousPoly& ell, int k, int power,
                         bool want_injective) {
  auto v = e.evaluate(ell, k, power);
  bool ok = want_injective ? v.injective() : v.surjective();
  if (!ok && !exact_level(v.cert.level)) {
    v = e.evaluate(ell, k, power, RankPolicy::Exact);
    v.cert.escalated = true;
  }
  return v;
}

// Verified needs every check to pass with a certified rank; an exact failure
// is a counterexample candidate; anything else is inconclusive.
Conclusion judge(const std::vector<const LefschetzVerdict*>& checks,
                 const std::vector<bool>& passed) {
  bool all = true;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (!passed[i] && exact_level(checks[i]->cert.level)) return Conclusion::CounterexampleCandidate;
    all = all && passed[i] && is_certified(checks[i]->cert.level);
  }
  return all ? Conclusion::Verified : Conclusion::Inconclusive;
}

HomogeneousPoly random_form(int num_vars, int degree, std::mt19937_64& rng, int bound, const FieldSpec& field) {
  HomogeneousPoly p(num_vars, degree, field);
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(bound) + 1;
  for (const auto& e : monomial_basis(degree, num_vars)) {
    long c = static_cast<long>(rng() % width) - bound;
    if (c != 0) p.add_term(e, Scalar(c));
  }
  return p;
}

struct SectionGate {
  bool transversal = false;
  SectionCheck section;
  HomogeneousPoly g{1, 0};
  std::string failure;
};

SectionGate gate(const HomogeneousPoly& f, const HomogeneousPoly& ell, const ComputeOptions& opt) {
  SectionGate out;
  auto tr = check_transversality(f, ell, opt);
  out.transversal = tr.transversal;
  if (!tr.transversal) {
    out.failure = "hyperplane meets the singular locus (restricted quotient has dimension " +
                  std::to_string(tr.residual_dim) + " in degree " + std::to_string(tr.degree_checked) + ")";
    return out;
  }
  out.g = restrict_to_hyperplane(f, ell).g;
  out.section = check_section(out.g, opt);
  if (!out.section.isolated) {
    out.failure = "section has non-isolated singularities";
  } else if (!out.section.singular) {
    out.failure = "section is smooth";
  }
  return out;
}

}  // namespace

Transversality check_transversality(const HomogeneousPoly& f, const HomogeneousPoly& ell,
                                    const ComputeOptions& opt) {
  if (f.is_zero()) throw PreconditionError("zero polynomial");
  if (ell.is_zero() || ell.degree() != 1) throw PreconditionError("ell must be a nonzero linear form");
  Transversality out;
  const int n = f.num_vars() - 1;
  if (f.degree() < 2 || n < 1) {
    out.transversal = true;
    out.cert.level = CertLevel::RationalExact;
    return out;
  }
  auto dec = restrict_to_hyperplane(f, ell);
  std::vector<HomogeneousPoly> gens{dec.h};
  for (auto& p : partials(dec.g)) gens.push_back(std::move(p));
  out.degree_checked = n * (f.degree() - 2) + 1;
  TowerSet ts(gens, opt);
  const int top = out.degree_checked;
  if (opt.policy != RankPolicy::Exact && ts.modular(0).piece(top).codim() == 0) {
    out.transversal = true;
    out.cert = {ts.over_prime_field() ? CertLevel::FieldExact : CertLevel::ModularFullRank, ts.prime(0), 0, false};
    return out;
  }
  auto r = ts.run(opt.policy, [&](auto& t) { return t.piece(top).codim(); });
  out.residual_dim = r.value;
  out.transversal = r.value == 0;
  out.cert = r.cert;
  return out;
}

SectionCheck check_section(const HomogeneousPoly& g, const ComputeOptions& opt) {
  SectionCheck out;
  auto tj = tjurina_total(g, opt);
  out.tau = tj.tau;
  out.isolated = tj.isolated;
  out.singular = tj.tau > 0 || !tj.isolated;
  out.cert = tj.cert;
  return out;
}

int thm1_bound(const SectionInvariants& inv) { return std::min(inv.d - 3 + inv.r, inv.d - 3 + inv.s); }

TheoremOneReport verify_thm1(const HomogeneousPoly& f, const HomogeneousPoly& ell, const ComputeOptions& opt) {
  TheoremOneReport out;
  auto gt = gate(f, ell, opt);
  out.transversal = gt.transversal;
  out.section_singular = gt.section.singular;
  out.section_isolated = gt.section.isolated;
  out.section = gt.g;
  if (!gt.failure.empty()) {
    out.conclusion = Conclusion::PreconditionFailed;
    out.note = gt.failure;
    return out;
  }
  out.invariants = section_invariants(gt.g, opt);
  out.k0 = thm1_bound(*out.invariants);
  LefschetzEngine e(f, Target::M, opt);
  std::vector<const LefschetzVerdict*> checks;
  std::vector<bool> passed;
  for (int k = 0; k <= out.k0; ++k) out.verdicts.push_back(confirm(e, ell, k, 1, true));
  for (const auto& v : out.verdicts) {
    checks.push_back(&v);
    passed.push_back(v.injective());
  }
  out.conclusion = judge(checks, passed);
  if (out.conclusion == Conclusion::CounterexampleCandidate) {
    out.note = "exactly certified non-injective map within the bound";
  }
  return out;
}

CorNReport verify_corN(const HomogeneousPoly& f, const HomogeneousPoly& ell, const ComputeOptions& opt) {
  CorNReport out;
  out.socle = socle_degree(f.num_vars(), f.degree());
  if (f.num_vars() < 4 || f.degree() < 3) {
    out.conclusion = Conclusion::PreconditionFailed;
    out.note = "needs n >= 3 and d >= 3";
    return out;
  }
  auto gt = gate(f, ell, opt);
  out.transversal = gt.transversal;
  out.section_singular = gt.section.singular;
  if (!gt.failure.empty()) {
    out.conclusion = Conclusion::PreconditionFailed;
    out.note = gt.failure;
    return out;
  }
  out.invariants = section_invariants(gt.g, opt);
  out.k0 = thm1_bound(*out.invariants);
  LefschetzEngine e(f, Target::N, opt);
  for (int k = 0; k <= out.k0; ++k) out.injective_half.push_back(confirm(e, ell, k, 1, true));
  for (int k = std::max(0, out.socle - out.k0); k <= out.socle; ++k) {
    out.surjective_half.push_back(confirm(e, ell, k, 1, false));
  }
  // the map at k and the map at T-1-k are dual to each other
  for (const auto& a : out.injective_half) {
    for (const auto& b : out.surjective_half) {
      if (b.k != out.socle - 1 - a.k) continue;
      if (a.rank != b.rank || a.dim_from != b.dim_to || a.dim_to != b.dim_from) out.duality_consistent = false;
    }
  }
  std::vector<const LefschetzVerdict*> checks;
  std::vector<bool> passed;
  for (const auto& v : out.injective_half) {
    checks.push_back(&v);
    passed.push_back(v.injective());
  }
  for (const auto& v : out.surjective_half) {
    checks.push_back(&v);
    passed.push_back(v.surjective());
  }
  out.conclusion = judge(checks, passed);
  if (out.conclusion == Conclusion::Verified && !out.duality_consistent) {
    out.conclusion = Conclusion::Inconclusive;
    out.note = "dual degrees disagree";
  }
  return out;
}

ExHypReport verify_exHyp(const HomogeneousPoly& f, const ComputeOptions& opt, int i_max) {
  ExHypReport out;
  out.n = f.num_vars() - 1;
  out.d = f.degree();
  const int t = socle_degree(f.num_vars(), f.degree());
  out.surjective_from = out.n * (out.d - 2) + 1;
  out.bijective_from = t + 1;
  out.i_max = i_max >= 0 ? i_max : t + 2;
  auto tj = tjurina_total(f, opt);
  out.tau = tj.tau;
  if (!tj.isolated) {
    out.conclusion = Conclusion::PreconditionFailed;
    out.note = "singularities are not isolated";
    return out;
  }
  if (tj.tau == 0) out.note = "smooth hypersurface: the checked degrees are zero";
  LefschetzEngine e(f, Target::M, opt);
  std::vector<const LefschetzVerdict*> checks;
  std::vector<bool> passed;
  out.surjectivity_holds = out.bijectivity_holds = true;
  for (int i = out.surjective_from; i <= out.i_max; ++i) out.verdicts.push_back(e.search(i, 1));
  for (const auto& v : out.verdicts) {
    bool ok = v.surjective();
    if (v.k >= out.bijective_from) {
      ok = ok && v.injective();
      out.bijectivity_holds = out.bijectivity_holds && v.injective() && v.surjective();
    }
    out.surjectivity_holds = out.surjectivity_holds && v.surjective();
    checks.push_back(&v);
    passed.push_back(ok);
  }
  out.conclusion = judge(checks, passed);
  return out;
}

ExCurvesReport verify_exCurves(const HomogeneousPoly& f, const ComputeOptions& opt) {
  ExCurvesReport out;
  out.d = f.degree();
  if (f.num_vars() != 3) {
    out.conclusion = Conclusion::PreconditionFailed;
    out.note = "plane curves only";
    return out;
  }
  auto tj = tjurina_total(f, opt);
  out.tau = tj.tau;
  if (!tj.isolated || tj.tau == 0) {
    out.conclusion = Conclusion::PreconditionFailed;
    out.note = tj.isolated ? "smooth curve" : "curve is not reduced";
    return out;
  }
  const int t = 3 * (out.d - 2);
  out.i0 = t / 2;
  ComputeOptions copt = opt;
  copt.kmax = t + 2;
  out.ct = coincidence_threshold(f, copt);
  out.ct_criterion = out.ct.ct >= t - out.i0;
  LefschetzEngine e(f, Target::M, opt);
  for (int i = 0; 2 * i < t; ++i) out.injective_range.push_back(e.search(i, 1));
  for (int i = out.i0; i <= t + 1; ++i) out.surjective_range.push_back(e.search(i, 1));
  std::vector<const LefschetzVerdict*> checks;
  std::vector<bool> passed;
  out.injectivity_holds = out.surjectivity_holds = true;
  bool certified = is_certified(out.ct.cert.level);
  for (const auto& v : out.injective_range) {
    out.injectivity_holds = out.injectivity_holds && v.injective();
    checks.push_back(&v);
    passed.push_back(v.injective());
  }
  for (const auto& v : out.surjective_range) {
    out.surjectivity_holds = out.surjectivity_holds && v.surjective();
    certified = certified && is_certified(v.cert.level);
  }
  out.criterion_agrees = out.surjectivity_holds == out.ct_criterion;
  out.conclusion = judge(checks, passed);
  if (out.conclusion == Conclusion::Verified && !(out.criterion_agrees && certified)) {
    out.conclusion = Conclusion::Inconclusive;
    out.note = "surjectivity and the ct criterion disagree";
  }
  return out;
}

Extension extend_section_to_smooth(const HomogeneousPoly& g, const ComputeOptions& opt) {
  auto tj = tjurina_total(g, opt);
  if (!tj.isolated) throw PreconditionError("section has non-isolated singularities");
  const int n = g.num_vars() + 1;
  const int d = g.degree();
  const int bound = std::max(1, opt.coeff_bound);
  const FieldSpec& field = opt.field;
  Extension out;
  const HomogeneousPoly base = embed(g.over(field), n, 1);
  const HomogeneousPoly x0 = HomogeneousPoly::variable(n, 0, field);
  const int trials = std::max(1, opt.trials);
  for (int trial = 0; trial < trials; ++trial) {
    out.trials_used = trial + 1;
    HomogeneousPoly f = base;
    if (trial == 0 && tj.tau == 0) {
      f += x0.pow(d);
    } else {
      std::mt19937_64 rng(splitmix64(opt.seed ^ (0xe7e2d000ULL + static_cast<std::uint64_t>(trial))));
      f += x0 * embed(random_form(n - 1, d - 1, rng, bound, field), n, 1);
      if (2 * trial >= trials && d >= 3) f += x0.pow(2) * embed(random_form(n - 1, d - 2, rng, bound, field), n, 1);
      long c = 0;
      while (c == 0) c = static_cast<long>(rng() % (2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
      f += Scalar(c) * x0.pow(d);
    }
    auto sm = smoothness(f, opt);
    if (sm.value && is_certified(sm.cert.level)) {
      out.f = f;
      out.cert = sm.cert;
      return out;
    }
  }
  return out;
}

ProbeReport conjecture_probe(const HomogeneousPoly& f, const ComputeOptions& opt) {
  ProbeReport out;
  if (!is_smooth(f, opt)) {
    out.conclusion = Conclusion::PreconditionFailed;
    out.note = "hypersurface is singular";
    return out;
  }
  out.slp = slp_sweep(f, opt);
  std::vector<const LefschetzVerdict*> checks;
  std::vector<bool> passed;
  for (const auto& v : out.slp.verdicts) {
    checks.push_back(&v);
    passed.push_back(v.maximal);
  }
  out.conclusion = judge(checks, passed);
  out.counterexample = out.conclusion == Conclusion::CounterexampleCandidate;
  if (out.counterexample) out.note = "exactly certified SLP failure";
  return out;
}

}  // namespace jaclef

#include "jaclef/lefschetz.hpp"

#include "jaclef/invariants.hpp"

namespace jaclef {

std::string to_string(Target t) { return t == Target::M ? "milnor_algebra" : "jacobian_module"; }

std::string to_string(Direction d) {
  switch (d) {
    case Direction::Injective: return "injective";
    case Direction::Surjective: return "surjective";
    case Direction::Bijective: return "bijective";
    case Direction::Neither: return "neither";
  }
  return "?";
}

Direction direction_of(int dim_from, int dim_to, int rank) {
  bool inj = rank == dim_from;
  bool surj = rank == dim_to;
  if (inj && surj) return Direction::Bijective;
  if (inj) return Direction::Injective;
  if (surj) return Direction::Surjective;
  return Direction::Neither;
}

std::uint64_t witness_seed(std::uint64_t master, int k, int power, int trial) {
  std::uint64_t cell = (static_cast<std::uint64_t>(k) << 40) ^ (static_cast<std::uint64_t>(power) << 20) ^
                       static_cast<std::uint64_t>(trial);
  return splitmix64(master ^ splitmix64(cell + 0x1e5c0ULL));
}

LefschetzEngine::LefschetzEngine(const HomogeneousPoly& f, Target target, const ComputeOptions& opt)
    : f_(f.over(opt.field)), target_(target), opt_(opt), towers_(partials(f), opt) {
  if (f.is_zero() || f.degree() < 2) throw PreconditionError("need a form of degree at least 2");
}

int LefschetzEngine::socle() const { return socle_degree(f_.num_vars(), f_.degree()); }

bool LefschetzEngine::smooth() {
  if (!smooth_) smooth_ = smoothness(f_, opt_).value;
  return *smooth_;
}

template <class F>
SaturationParams LefschetzEngine::params(QuotientTower<F>& t) {
  auto it = params_.find(&t);
  if (it != params_.end()) return it->second;
  auto sp = saturation_params(t, f_.degree(), opt_.sat_margin, opt_.sat_cap);
  params_.emplace(&t, sp);
  return sp;
}

template <class F>
MapCounts LefschetzEngine::counts(QuotientTower<F>& t, const HomogeneousPoly& mult, int k) {
  if (target_ == Target::M) return quotient_map_counts(t, mult, k);
  auto sp = params(t);
  auto from = saturate(t, k, sp);
  auto to = saturate(t, k + mult.degree(), sp);
  return module_map_counts(t, mult, k, from.basis, to.basis);
}

LefschetzVerdict LefschetzEngine::evaluate(const HomogeneousPoly& ell, int k, int power, RankPolicy policy) {
  if (power < 1) throw PreconditionError("power must be at least 1");
  if (ell.degree() != 1 || ell.num_vars() != f_.num_vars()) throw PreconditionError("ell must be a linear form");
  LefschetzVerdict v;
  v.k = k;
  v.power = power;
  v.target = target_;
  v.witness = ell;
  const HomogeneousPoly mult = ell.over(opt_.field).pow(power);
  auto r = towers_.run(policy, [&](auto& t) { return counts(t, mult, k); });
  v.dim_from = r.value.dim_from;
  v.dim_to = r.value.dim_to;
  v.rank = r.value.rank;
  v.cert = r.cert;
  v.maximal = v.rank == std::min(v.dim_from, v.dim_to);
  v.direction = direction_of(v.dim_from, v.dim_to, v.rank);
  v.trials_used = 1;
  return v;
}

LefschetzVerdict LefschetzEngine::search(int k, int power) {
  const int trials = std::max(1, opt_.trials);
  LefschetzVerdict best;
  bool have = false;
  HomogeneousPoly last(f_.num_vars(), 1);
  for (int trial = 0; trial < trials; ++trial) {
    last = random_linear_form(f_.num_vars(), witness_seed(opt_.seed, k, power, trial), opt_.coeff_bound,
                              opt_.field);
    auto v = evaluate(last, k, power);
    v.trials_used = trial + 1;
    if (v.maximal) return v;
    if (!have || v.rank > best.rank) {
      best = v;
      have = true;
    }
  }
  if (!towers_.over_prime_field() && opt_.policy != RankPolicy::Exact) {
    auto v = evaluate(last, k, power, RankPolicy::Exact);
    v.trials_used = trials;
    v.cert.escalated = true;
    if (v.maximal || v.rank > best.rank) return v;
    best.cert = v.cert;
  }
  best.trials_used = trials;
  return best;
}

LefschetzVerdict dual_verdict(const LefschetzVerdict& v, int socle) {
  LefschetzVerdict d = v;
  d.k = socle - v.k - v.power;
  d.dim_from = v.dim_to;
  d.dim_to = v.dim_from;
  d.direction = direction_of(d.dim_from, d.dim_to, d.rank);
  d.deduced = true;
  return d;
}

LefschetzVerdict multiplication_rank(const HomogeneousPoly& f, const HomogeneousPoly& ell, int k, int power,
                                     Target target, const ComputeOptions& opt) {
  LefschetzEngine e(f, target, opt);
  return e.evaluate(ell, k, power);
}

LefschetzVerdict wlp_at(const HomogeneousPoly& f, int k, Target target, const ComputeOptions& opt) {
  if (opt.trials < 1) throw PreconditionError("trials must be at least 1");
  LefschetzEngine e(f, target, opt);
  return e.search(k, 1);
}

LefschetzVerdict slp_at(const HomogeneousPoly& f, int k, const ComputeOptions& opt) {
  LefschetzEngine e(f, Target::M, opt);
  if (!e.smooth()) throw PreconditionError("SLP needs a smooth hypersurface (Artinian Milnor algebra)");
  const int t = e.socle();
  if (2 * k >= t || k < 0) throw PreconditionError("SLP degree must satisfy 0 <= k < T/2");
  return e.search(k, t - 2 * k);
}

namespace {

void summarize(LefschetzReport& r) {
  r.holds = true;
  bool first = true;
  for (const auto& v : r.verdicts) {
    r.holds = r.holds && v.maximal;
    r.cert = first ? v.cert : weakest(r.cert, v.cert);
    first = false;
  }
}

}  // namespace

LefschetzReport wlp_sweep(const HomogeneousPoly& f, Target target, const ComputeOptions& opt) {
  LefschetzEngine e(f, target, opt);
  LefschetzReport r;
  r.target = target;
  r.socle = e.socle();
  r.artinian = e.smooth();
  if (r.artinian) {
    for (int k = 0; k < r.socle; ++k) {
      if (opt.duality_shortcut && 2 * k >= r.socle) {
        r.verdicts.push_back(dual_verdict(r.verdicts[r.socle - 1 - k], r.socle));
      } else {
        r.verdicts.push_back(e.search(k, 1));
      }
    }
  } else {
    const int kmax = opt.kmax >= 0 ? opt.kmax : r.socle + 1;
    for (int k = 0; k <= kmax; ++k) r.verdicts.push_back(e.search(k, 1));
  }
  summarize(r);
  return r;
}

LefschetzReport slp_sweep(const HomogeneousPoly& f, const ComputeOptions& opt) {
  LefschetzEngine e(f, Target::M, opt);
  if (!e.smooth()) throw PreconditionError("SLP needs a smooth hypersurface (Artinian Milnor algebra)");
  LefschetzReport r;
  r.target = Target::M;
  r.strong = true;
  r.artinian = true;
  r.socle = e.socle();
  for (int k = 0; 2 * k < r.socle; ++k) r.verdicts.push_back(e.search(k, r.socle - 2 * k));
  summarize(r);
  return r;
}

}  // namespace jaclef

#include "jaclef/engine.hpp"

namespace jaclef {

std::string to_string(RankPolicy p) {
  switch (p) {
    case RankPolicy::Fast: return "fast";
    case RankPolicy::TwoPrime: return "two-prime";
    case RankPolicy::Exact: return "exact";
  }
  return "?";
}

std::string to_string(CertLevel l) {
  switch (l) {
    case CertLevel::ModularLowerBound: return "modular_lower_bound";
    case CertLevel::ModularFullRank: return "modular_full_rank";
    case CertLevel::TwoPrimeAgreement: return "two_prime_agreement";
    case CertLevel::RationalExact: return "rational_exact";
    case CertLevel::FieldExact: return "field_exact";
  }
  return "?";
}

RankPolicy parse_policy(const std::string& s) {
  if (s == "fast") return RankPolicy::Fast;
  if (s == "two-prime") return RankPolicy::TwoPrime;
  if (s == "exact") return RankPolicy::Exact;
  throw ParseError("unknown rank policy '" + s + "' (expected fast|two-prime|exact)");
}

std::uint32_t primary_prime(const ComputeOptions& opt) {
  if (!opt.field.is_rational()) return opt.field.prime();
  if (opt.prime) return opt.prime;
  return draw_prime(opt.seed ^ 0x5eed0001ULL);
}

std::uint32_t secondary_prime(const ComputeOptions& opt) {
  std::uint32_t p1 = primary_prime(opt);
  std::uint32_t p2 = draw_prime(opt.seed ^ 0x5eed0002ULL);
  return p2 == p1 ? next_prime(static_cast<std::uint64_t>(p1) + 1) : p2;
}

namespace {

bool reducible(const std::vector<HomogeneousPoly>& gens, std::uint32_t p) {
  try {
    for (const auto& g : gens)
      for (const auto& [e, c] : g.terms()) reduce_mod(c, p);
  } catch (const BadPrimeError&) {
    return false;
  }
  return true;
}

// Bad primes are re-drawn: the next prime that keeps every coefficient finite.
std::uint32_t usable_prime(const std::vector<HomogeneousPoly>& gens, std::uint32_t p,
                           std::uint32_t avoid) {
  while (p == avoid || !reducible(gens, p)) {
    p = next_prime(static_cast<std::uint64_t>(p) + 1);
    if (p >= (1U << 31)) p = next_prime((1U << 30) + 1);
  }
  return p;
}

}  // namespace

TowerSet::TowerSet(std::vector<HomogeneousPoly> generators, const ComputeOptions& opt)
    : generators_(std::move(generators)), field_(opt.field) {
  if (generators_.empty()) throw PreconditionError("ideal needs at least one generator");
  if (field_.is_rational()) {
    primes_[0] = usable_prime(generators_, primary_prime(opt), 0);
    primes_[1] = usable_prime(generators_, secondary_prime(opt), primes_[0]);
    for (auto& g : generators_) g = g.over(field_);
  } else {
    for (auto& g : generators_) g = g.over(field_);
    primes_[0] = primes_[1] = field_.prime();
  }
}

std::uint32_t TowerSet::prime(int which) { return primes_[which]; }

QuotientTower<ModP>& TowerSet::modular(int which) {
  if (!modular_[which]) {
    modular_[which] = std::make_unique<QuotientTower<ModP>>(generators_, ModP(primes_[which]));
  }
  return *modular_[which];
}

QuotientTower<QQ>& TowerSet::exact() {
  if (over_prime_field()) throw PreconditionError("no rational tower over a prime field");
  if (!exact_) exact_ = std::make_unique<QuotientTower<QQ>>(generators_, QQ{});
  return *exact_;
}

}  // namespace jaclef

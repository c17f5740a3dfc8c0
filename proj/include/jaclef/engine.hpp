#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "jaclef/tower.hpp"

namespace jaclef {

enum class RankPolicy { Fast, TwoPrime, Exact };

/// What a reported rank (or any rank-derived quantity) guarantees over the
/// input field. Ranks mod p never exceed ranks over Q, so a full-rank result
/// mod p is a proof; anything else from a single prime is a lower bound.
/// FieldExact marks computations done exactly in a user-chosen F_p.
enum class CertLevel { ModularLowerBound, ModularFullRank, TwoPrimeAgreement, RationalExact, FieldExact };

std::string to_string(RankPolicy p);
std::string to_string(CertLevel l);
RankPolicy parse_policy(const std::string& s);

/// True for levels the verifier accepts as a certified verdict.
inline bool is_certified(CertLevel l) { return l != CertLevel::ModularLowerBound; }

struct Certificate {
  CertLevel level = CertLevel::ModularLowerBound;
  std::uint32_t p1 = 0;
  std::uint32_t p2 = 0;
  bool escalated = false;  // an Exact recomputation was needed
};

struct ComputeOptions {
  FieldSpec field = FieldSpec::rationals();
  RankPolicy policy = RankPolicy::TwoPrime;
  std::uint64_t seed = 1;
  int trials = 8;
  int coeff_bound = 20;
  int kmax = -1;       // -1: operation-specific default
  int sat_cap = -1;    // -1: 2d + n
  int sat_margin = 2;
  bool duality_shortcut = true;
  std::uint32_t prime = 0;  // 0: derived from the seed
};

/// Primes used for modular work under these options.
std::uint32_t primary_prime(const ComputeOptions& opt);
std::uint32_t secondary_prime(const ComputeOptions& opt);

template <class R>
struct Certified {
  R value;
  Certificate cert;
};

/// One ideal viewed through every backend the rank policy may need: two
/// modular towers and an exact rational one, each built on first use.
class TowerSet {
 public:
  TowerSet(std::vector<HomogeneousPoly> generators, const ComputeOptions& opt);

  const std::vector<HomogeneousPoly>& generators() const { return generators_; }
  int num_vars() const { return generators_.front().num_vars(); }
  bool over_prime_field() const { return !field_.is_rational(); }

  QuotientTower<ModP>& modular(int which);
  QuotientTower<QQ>& exact();
  std::uint32_t prime(int which);

  /// Runs fn(tower) per the policy. TwoPrime escalates to Exact when the two
  /// primes disagree.
  template <class Fn>
  auto run(RankPolicy policy, Fn&& fn) -> Certified<decltype(fn(std::declval<QuotientTower<ModP>&>()))> {
    using R = decltype(fn(std::declval<QuotientTower<ModP>&>()));
    Certificate cert;
    if (over_prime_field()) {
      cert.level = CertLevel::FieldExact;
      cert.p1 = prime(0);
      return {fn(modular(0)), cert};
    }
    switch (policy) {
      case RankPolicy::Fast: {
        cert.level = CertLevel::ModularLowerBound;
        cert.p1 = prime(0);
        return {fn(modular(0)), cert};
      }
      case RankPolicy::TwoPrime: {
        R a = fn(modular(0));
        R b = fn(modular(1));
        cert.p1 = prime(0);
        cert.p2 = prime(1);
        if (a == b) {
          cert.level = CertLevel::TwoPrimeAgreement;
          return {std::move(a), cert};
        }
        cert.escalated = true;
        cert.level = CertLevel::RationalExact;
        return {fn(exact()), cert};
      }
      case RankPolicy::Exact:
        break;
    }
    cert.level = CertLevel::RationalExact;
    return {fn(exact()), cert};
  }

 private:
  std::vector<HomogeneousPoly> generators_;
  FieldSpec field_;
  std::uint32_t primes_[2] = {0, 0};
  std::unique_ptr<QuotientTower<ModP>> modular_[2];
  std::unique_ptr<QuotientTower<QQ>> exact_;
};

}  // namespace jaclef

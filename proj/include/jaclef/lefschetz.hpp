#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jaclef/engine.hpp"
#include "jaclef/graded_ops.hpp"
#include "jaclef/poly.hpp"

namespace jaclef {

enum class Target { M, N };  // Milnor algebra S/J or Jacobian module I/J
enum class Direction { Injective, Surjective, Bijective, Neither };

std::string to_string(Target t);
std::string to_string(Direction d);

Direction direction_of(int dim_from, int dim_to, int rank);

struct LefschetzVerdict {
  int k = 0;
  int power = 1;
  Target target = Target::M;
  int dim_from = 0;
  int dim_to = 0;
  int rank = 0;
  bool maximal = false;
  Direction direction = Direction::Neither;
  std::optional<HomogeneousPoly> witness;
  Certificate cert;
  int trials_used = 0;
  bool deduced = false;  // read off the dual degree instead of computed

  bool injective() const { return rank == dim_from; }
  bool surjective() const { return rank == dim_to; }
};

struct LefschetzReport {
  Target target = Target::M;
  bool strong = false;
  int socle = 0;
  bool artinian = false;
  std::vector<LefschetzVerdict> verdicts;
  bool holds = false;  // has_WLP_range or has_SLP_range
  Certificate cert;
};

/// Multiplication by powers of linear forms on S/J(f) or I(f)/J(f). Towers
/// and saturation pieces are cached across calls.
class LefschetzEngine {
 public:
  LefschetzEngine(const HomogeneousPoly& f, Target target, const ComputeOptions& opt);

  const HomogeneousPoly& poly() const { return f_; }
  int socle() const;
  bool smooth();

  /// Rank of ell^power from degree k to k + power, under `policy`.
  LefschetzVerdict evaluate(const HomogeneousPoly& ell, int k, int power, RankPolicy policy);
  LefschetzVerdict evaluate(const HomogeneousPoly& ell, int k, int power) {
    return evaluate(ell, k, power, opt_.policy);
  }

  /// Random search for a maximal-rank form; a failed search re-runs the last
  /// trial exactly (over Q) before reporting deficiency.
  LefschetzVerdict search(int k, int power);

 private:
  template <class F>
  MapCounts counts(QuotientTower<F>& t, const HomogeneousPoly& mult, int k);
  template <class F>
  SaturationParams params(QuotientTower<F>& t);

  HomogeneousPoly f_;
  Target target_;
  ComputeOptions opt_;
  TowerSet towers_;
  std::optional<bool> smooth_;
  std::map<const void*, SaturationParams> params_;
};

/// Seed of the witness form drawn for (k, power, trial).
std::uint64_t witness_seed(std::uint64_t master, int k, int power, int trial);

LefschetzVerdict multiplication_rank(const HomogeneousPoly& f, const HomogeneousPoly& ell, int k, int power,
                                     Target target, const ComputeOptions& opt = {});
LefschetzVerdict wlp_at(const HomogeneousPoly& f, int k, Target target, const ComputeOptions& opt = {});
LefschetzVerdict slp_at(const HomogeneousPoly& f, int k, const ComputeOptions& opt = {});

/// Degrees 0..T-1 when the target is Artinian (smooth f), else 0..kmax
/// (default T+1). With the duality shortcut, the upper half of an Artinian
/// sweep is deduced from the lower half.
LefschetzReport wlp_sweep(const HomogeneousPoly& f, Target target, const ComputeOptions& opt = {});
LefschetzReport slp_sweep(const HomogeneousPoly& f, const ComputeOptions& opt = {});

/// The verdict at T-1-k implied by `v` at k through the duality pairing.
LefschetzVerdict dual_verdict(const LefschetzVerdict& v, int socle);

}  // namespace jaclef

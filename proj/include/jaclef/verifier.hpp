#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jaclef/invariants.hpp"
#include "jaclef/lefschetz.hpp"

namespace jaclef {

enum class Conclusion { Verified, PreconditionFailed, CounterexampleCandidate, Inconclusive };
std::string to_string(Conclusion c);

/// 0 verified, 2 precondition failed, 3 counterexample candidate, 1 otherwise.
int exit_code(Conclusion c);

struct Transversality {
  bool transversal = false;
  int degree_checked = 0;
  int residual_dim = 0;  // dim of the restricted quotient in that degree
  Certificate cert;
};

/// The hyperplane misses the singular locus iff the partials restricted to it
/// (h and the partials of g, in hyperplane coordinates) generate an ideal whose
/// quotient vanishes in degree n(d-2)+1, n the number of hyperplane variables.
Transversality check_transversality(const HomogeneousPoly& f, const HomogeneousPoly& ell,
                                    const ComputeOptions& opt = {});

struct SectionCheck {
  bool singular = false;
  bool isolated = false;
  int tau = 0;
  Certificate cert;
};

SectionCheck check_section(const HomogeneousPoly& g, const ComputeOptions& opt = {});

int thm1_bound(const SectionInvariants& inv);

struct TheoremOneReport {
  bool transversal = false;
  bool section_singular = false;
  bool section_isolated = false;
  std::optional<SectionInvariants> invariants;
  HomogeneousPoly section{1, 0};
  int k0 = -1;
  std::vector<LefschetzVerdict> verdicts;  // the given ell, k = 0..k0
  Conclusion conclusion = Conclusion::Inconclusive;
  std::string note;
};

TheoremOneReport verify_thm1(const HomogeneousPoly& f, const HomogeneousPoly& ell, const ComputeOptions& opt = {});

struct CorNReport {
  bool transversal = false;
  bool section_singular = false;
  std::optional<SectionInvariants> invariants;
  int k0 = -1;
  int socle = 0;
  std::vector<LefschetzVerdict> injective_half;   // k = 0..k0
  std::vector<LefschetzVerdict> surjective_half;  // k = T-k0..T
  bool duality_consistent = true;  // dims of N mirror about T/2 on the checked range
  Conclusion conclusion = Conclusion::Inconclusive;
  std::string note;
};

CorNReport verify_corN(const HomogeneousPoly& f, const HomogeneousPoly& ell, const ComputeOptions& opt = {});

struct ExHypReport {
  int n = 0;  // projective dimension
  int d = 0;
  int tau = 0;
  int surjective_from = 0;  // maps are expected surjective for i > n(d-2)
  int bijective_from = 0;   // and bijective for i > (n+1)(d-2)
  int i_max = 0;
  std::vector<LefschetzVerdict> verdicts;  // i = n(d-2)+1 .. i_max
  bool surjectivity_holds = false;
  bool bijectivity_holds = false;
  Conclusion conclusion = Conclusion::Inconclusive;
  std::string note;
};

/// i_max < 0 means (n+1)(d-2)+2.
ExHypReport verify_exHyp(const HomogeneousPoly& f, const ComputeOptions& opt = {}, int i_max = -1);

struct ExCurvesReport {
  int d = 0;
  int tau = 0;
  int i0 = 0;
  CoincidenceThreshold ct;
  bool ct_criterion = false;  // ct >= 3(d-2) - i0
  std::vector<LefschetzVerdict> injective_range;   // i < 3(d-2)/2
  std::vector<LefschetzVerdict> surjective_range;  // i0 <= i <= T+1
  bool injectivity_holds = false;
  bool surjectivity_holds = false;
  bool criterion_agrees = false;  // surjectivity_holds == ct_criterion
  Conclusion conclusion = Conclusion::Inconclusive;
  std::string note;
};

ExCurvesReport verify_exCurves(const HomogeneousPoly& f, const ComputeOptions& opt = {});

struct Extension {
  std::optional<HomogeneousPoly> f;
  int trials_used = 0;
  Certificate cert;  // of the smoothness test
};

/// Searches f = g(x1..xn) + x0*h + c*x0^d with V(f) smooth; later trials also
/// add x0^2 * p_2. The first trial for a smooth g is g + x0^d.
Extension extend_section_to_smooth(const HomogeneousPoly& g, const ComputeOptions& opt = {});

struct ProbeReport {
  LefschetzReport slp;
  bool counterexample = false;
  Conclusion conclusion = Conclusion::Inconclusive;
  std::string note;
};

ProbeReport conjecture_probe(const HomogeneousPoly& f, const ComputeOptions& opt = {});

}  // namespace jaclef

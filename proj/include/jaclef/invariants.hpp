#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jaclef/engine.hpp"
#include "jaclef/poly.hpp"

namespace jaclef {

/// Top degree of S/J for a smooth hypersurface of degree d in num_vars variables.
int socle_degree(int num_vars, int d);

/// Hilbert function of M(f) = S/J(f) for degrees 0..kmax.
struct HilbertFunction {
  std::vector<int> dims;
  /// First degree from which dims stay constant through kmax, if they do
  /// for at least two degrees.
  std::optional<int> stable_from;
  Certificate cert;
};

HilbertFunction milnor_dims(const HomogeneousPoly& f, int kmax, const ComputeOptions& opt = {});

/// Smooth iff M(f) vanishes in degree T+1. A vanishing piece mod p proves it.
Certified<bool> smoothness(const HomogeneousPoly& f, const ComputeOptions& opt = {});
bool is_smooth(const HomogeneousPoly& f, const ComputeOptions& opt = {});

/// True when the partial derivatives are linearly dependent (exact).
bool is_cone(const HomogeneousPoly& f);

struct TjurinaResult {
  int tau = 0;
  bool isolated = false;
  int cap = 0;
  std::vector<int> dims;  // Hilbert function of S/J through cap
  Certificate cert;
};

/// Total Tjurina number read off the stabilized Hilbert function of S/J(g).
/// `cap` < 0 means num_vars * (d - 2) + 2.
TjurinaResult tjurina_total(const HomogeneousPoly& g, const ComputeOptions& opt = {}, int cap = -1);

/// ct(f): largest k with dim M(f)_j equal to the Fermat value for all j <= k.
struct CoincidenceThreshold {
  int ct = 0;
  bool reached_kmax = false;  // agreement held through the whole range
  int kmax = 0;
  Certificate cert;
};

CoincidenceThreshold coincidence_threshold(const HomogeneousPoly& f, const ComputeOptions& opt = {});

/// Degree-k piece of the saturation I = J : m^infinity, via the colon chain.
struct SaturationPiece {
  int degree = 0;
  int dim = 0;
  int exponent = 0;           // colon exponent where the chain settled
  std::vector<int> chain;     // dim (J : m^e)_k for e = 1, 2, ...
  std::vector<HomogeneousPoly> basis;  // over the field the certificate refers to
  Certificate cert;
};

SaturationPiece saturation_piece(const HomogeneousPoly& g, int k, const ComputeOptions& opt = {},
                                 bool with_basis = true);

/// Least degree with a nonzero saturation piece; 0 when g is smooth.
Certified<int> s_invariant(const HomogeneousPoly& g, const ComputeOptions& opt = {});

/// Degree-j syzygies (a_0..a_n) with sum a_i * dg/dx_i = 0.
struct SyzygyPiece {
  int degree = 0;
  int dim = 0;
  std::vector<std::vector<HomogeneousPoly>> basis;  // each verified exactly
  Certificate cert;
};

SyzygyPiece syzygy_piece(const HomogeneousPoly& g, int j, const ComputeOptions& opt = {},
                         bool with_basis = true);

/// Minimal degree of a Jacobian syzygy.
Certified<int> r_invariant(const HomogeneousPoly& g, const ComputeOptions& opt = {});

/// dim N(f)_k = dim I_k - dim J_k for k = 0..kmax (kmax < 0: T + 2).
struct ModuleDims {
  std::vector<int> dims;
  int tau = 0;
  Certificate cert;
};

ModuleDims jacobian_module_dims(const HomogeneousPoly& f, int kmax = -1, const ComputeOptions& opt = {});

struct DualityCheck {
  int socle = 0;
  std::vector<int> dims;  // N_0 .. N_jmax
  std::vector<int> mismatches;  // j with N_j != N_{T-j}
  bool holds = false;
  Certificate cert;
};

/// N_j == N_{T-j} for j in [0, jmax], with N_j = 0 for j < 0. jmax < 0 means T.
DualityCheck check_duality(const HomogeneousPoly& f, int jmax = -1, const ComputeOptions& opt = {});

enum class Freeness { Free, NearlyFree, Neither, NotComputed };
std::string to_string(Freeness f);

struct FreenessResult {
  Freeness kind = Freeness::NotComputed;
  int d1 = 0;
  int d2 = 0;
  std::vector<int> syzygy_dims;  // j = 0..2d
  Certificate cert;
};

/// Plane curves only; other dimensions give NotComputed.
FreenessResult classify_freeness(const HomogeneousPoly& g, const ComputeOptions& opt = {});

struct SectionInvariants {
  int n = 0;  // projective dimension of the section's ambient space
  int d = 0;
  int r = 0;
  int s = 0;
  int tau = 0;
  bool isolated = true;
  bool cone = false;
  int k0 = 0;  // min(r, s) + d - 3
  Freeness freeness = Freeness::NotComputed;
  Certificate cert;
};

SectionInvariants section_invariants(const HomogeneousPoly& g, const ComputeOptions& opt = {});

/// The weakest of two certificates; escalation is sticky.
Certificate weakest(const Certificate& a, const Certificate& b);

}  // namespace jaclef

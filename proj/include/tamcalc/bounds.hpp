#pragma once

#include <map>
#include <string>
#include <vector>

#include "tamcalc/barcode.hpp"
#include "tamcalc/lagrangian.hpp"

namespace tamcalc {

/// Geometry of a compact group or homogeneous preset, under the bi-invariant
/// metric normalized to unit-radius circles (round 3-sphere of radius 1,
/// tori as products of unit circles).
struct GroupGeometry {
  std::string name;
  int n = 1;        // dimension of the group
  int m = 1;        // dimension of the quotient (= n for the group itself)
  Scalar l;         // diameter of the group
  int pi0h = 1;     // component count of the isotropy group
  bool is_quotient = false;

  static GroupGeometry u1();
  static GroupGeometry su2();
  static GroupGeometry torus(int k);
  static GroupGeometry s2();
};

// (n+1) * (2l + l_max)
Scalar group_bound(int n, Scalar l, Scalar l_max);

struct HomogeneousBound {
  Scalar value;               // (m+3)^2 (n+1) (2l + l_max) / 4, rounded up
                              // to the scale when the quarter is not exact
  Scalar recursion_endpoint;  // C (ceil((m-1)/2)+1)^2 with C the group bound
};
HomogeneousBound homogeneous_bound(int m, int n, Scalar l, Scalar l_max);

// l_max + 2 * sum(lengths): computed by running the geodesic-chain induction
// with a positive step overhead delta and extrapolating the overhead away;
// the extrapolated value is checked against the closed form.
Scalar chain_bound(const std::vector<Scalar>& segment_lengths, Scalar l_max);

// Skeleton induction: torsion(S_k) <= torsion(S_{k-1}) + c_k, from the
// per-dimension torsion thresholds c_0..c_n.  Equals (n+1)c for constant c.
Scalar devissage(const std::map<int, Scalar>& per_dim_torsion, int n);

// Double induction over iterated cones: the dynamic program value at (i, j)
// with base constant C.  Checked against the closed form C(i+1)(j+1).
Scalar cone_recursion(int i, int j, Scalar c);

/// Finitely supported graded dimension data.
struct GradedDims {
  std::map<int, std::int64_t> ranks;

  std::int64_t rank(int degree) const;
  int tail_min_degree() const;  // least degree >= 1 with nonzero rank; -1 if none
};

struct LacunaryTraceStep {
  int index;            // i after the step
  int lacunarity;       // 2i, verified
  int tail_min_degree;  // -1 when the tail is empty
};

struct LacunaryResult {
  int steps;
  std::vector<LacunaryTraceStep> trace;
};

// Iterated truncation/tensor degree arithmetic: runs the induction on graded
// dimension bounds until the tail clears the window needed for dimension m,
// verifying the 2i-lacunarity invariant at each step.  Returns
// ceil((m-1)/2) steps (0 when the tail is empty from the start).
LacunaryResult lacunary_steps(const GradedDims& l, int target_dim);

struct ConjectureReport {
  Scalar margin;
  Scalar l_max;
  SpectralData spectral{};   // graph models only
  Scalar depth;              // hom depth of the barcode against itself
  Scalar bound;
  bool has_spectral = false;
  bool gamma_le_depth = true;
  bool depth_le_bound = true;
  bool pass = false;
  std::string detail;        // deterministic human-readable block
};

// Runs the full inequality chain gamma <= depth <= bound for a model on the
// given geometry.  Models outside the unit ball bundle are refused.
ConjectureReport verify_conjecture(const LagrangianModel& model, const GroupGeometry& geometry,
                                   std::int64_t prime = 2);

}  // namespace tamcalc

#pragma once

#include <map>
#include <vector>

#include "tamcalc/grid.hpp"

namespace tamcalc {

/// Brute-force model of the twisted hom and the translation morphisms:
/// sheaves on products of two stratified lines, resolved by injectives (sums
/// of constant sheaves on closed cells) and pushed to the line along
/// (x, y) -> x + y by taking section complexes over diagonal strips.
namespace oracle {

/// Constant sheaf on a product of locally closed cell ranges, with
/// multiplicity, placed in a single complex degree.
struct BoxSheaf {
  int x_lo, x_hi;  // cell range on the x grid
  int y_lo, y_hi;  // cell range on the y grid
  int mult = 1;
  int degree = 0;
};

/// One injective summand: the constant sheaf on the closure of cell
/// (cx, cy), tensored with a multiplicity space.
struct InjSummand {
  int cx, cy;
  int dim;
  int box_id;   // source box (for augmentations); -1 when synthetic
  int level;    // resolution level 0..2 within its box
};

/// Bounded complex of injective sheaves on the product grid.
struct Inj2 {
  Grid1 gx, gy;
  Field f = Field::fp(2);
  int deg_lo = 0;
  std::vector<std::vector<InjSummand>> terms;  // per degree
  std::vector<Mat> diff;                       // deg k -> k+1, total dims

  int deg_hi() const { return deg_lo + static_cast<int>(terms.size()); }
  int total_dim(int deg) const;
  void check() const;  // d*d = 0 and comparability of nonzero blocks
};

// Injective resolution of a direct sum of box sheaves (Kuenneth product of
// the 1-D closed-cover resolutions of the two factors).
Inj2 resolve_boxes(const Grid1& gx, const Grid1& gy, Field f, const std::vector<BoxSheaf>& boxes);

/// Degreewise map of injective complexes.
struct Inj2Map {
  std::vector<Mat> comp;  // per degree of src (aligned ranges)
};

// Lift of a degree-preserving map of box sheaves phi to the resolutions.
// phi[(i, j)] is the block from src box i to dst box j (must share degree).
Inj2Map lift_box_map(const Inj2& src, const std::vector<BoxSheaf>& src_boxes, const Inj2& dst,
                     const std::vector<BoxSheaf>& dst_boxes,
                     const std::map<std::pair<int, int>, Mat>& phi);

// Replace the multiplicity space of every summand generated at cell (cx,cy)
// by (value of `hom_values` at that cell, degree p) ^* tensor the old space,
// over all degrees p of `hom_values`; this computes the sheaf hom from the
// pullback of `hom_values` along the chosen axis into the resolved complex.
Inj2 hom_from_pullback(const Inj2& target, const CellComplex1& hom_values, bool values_on_y);

// Pushforward along (x,y) -> x+y: section complexes over the diagonal strips
// of the stars of the target cells.
CellComplex1 push_sum(const Inj2& k, const Grid1& target);
// The same masking applied to a map of injective complexes.
ChainMap1 push_sum_map(const Inj2& src, const CellComplex1& pushed_src, const Inj2& dst,
                       const CellComplex1& pushed_dst, const Inj2Map& map, const Grid1& target);

// ---- public oracle operations ----

// First-principles twisted hom of two barcodes.  Both barcodes may contain
// any bar shapes with grid-representable finite endpoints.
Barcode hom_star(const Barcode& lhs, const Barcode& rhs, Field f);

// As above, returning the pushed complex for further probing; target grid
// breakpoints are the pairwise endpoint sums plus `extra_breakpoints`.
CellComplex1 hom_star_complex(const Barcode& lhs, const Barcode& rhs, Field f,
                              const std::vector<Scalar>& extra_breakpoints);

/// Verdict on the canonical translation morphism of a single bar, computed
/// from the convolution model: P(F) built from the ray, compared against the
/// translated copy.
struct TauProbe {
  bool zero;         // the canonical morphism vanishes on cohomology
  bool model_ok;     // P(F) -> F is an isomorphism (tau >= 0 sanity)
  std::vector<Mat> h0_map;  // explicit induced map on degree-0 cohomology
};
TauProbe tau_single(const Interval& iv, Scalar c, Field f);

/// Per-bar verdicts for the canonical translation morphism of a barcode.
struct TauReport {
  bool zero = true;
  bool model_ok = true;
  struct BarVerdict {
    Interval interval;
    int degree;
    std::int64_t mult;
    bool zero;
  };
  std::vector<BarVerdict> bars;
};
TauReport tau_morphism(const Barcode& b, Scalar c, Field f);

/// Dimension comparison behind the section/costalk identity: sections of
/// hom_star(F,G) supported at -c against the morphism complex F -> T_c G.
struct CostalkReport {
  std::map<int, int> costalk;
  std::map<int, int> rhom;
  bool pass() const { return costalk == rhom; }
};
CostalkReport section_costalk_check(const Barcode& f_bc, const Barcode& g_bc, Scalar c, Field f);

// Global derived-hom dimensions between two barcodes on the line.
std::map<int, int> rhom_dims(const Barcode& src, const Barcode& dst, Field f);

/// Family of barcodes indexed by Z/k.
struct EquivariantFamily {
  int order = 1;
  std::vector<Barcode> comp;  // size == order
};

// Groupwise twisted hom: component at g is the sum over h of
// hom(F_h, G_{g+h}).  Computed with the closed form or the grid oracle.
EquivariantFamily equivariant_hom_star(const EquivariantFamily& lhs, const EquivariantFamily& rhs,
                                       Field f, bool via_oracle);

Barcode family_sum(const EquivariantFamily& fam);

}  // namespace oracle
}  // namespace tamcalc

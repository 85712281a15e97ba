#pragma once

#include <map>
#include <vector>

#include "tamcalc/barcode.hpp"
#include "tamcalc/field.hpp"

namespace tamcalc {

/// Finite subdivision of the line: N sorted breakpoints giving 2N+1 cells,
/// alternating open intervals (even index, including the unbounded ends) and
/// points (odd index).
class Grid1 {
 public:
  Grid1() = default;
  explicit Grid1(std::vector<Scalar> breakpoints);

  int num_breakpoints() const { return static_cast<int>(bps_.size()); }
  int num_cells() const { return 2 * num_breakpoints() + 1; }
  const std::vector<Scalar>& breakpoints() const { return bps_; }

  static bool is_point(int cell) { return cell % 2 == 1; }
  Scalar point_value(int cell) const;

  // Closed hull bounds of a cell; infinite at the unbounded ends.
  Scalar closure_lo(int cell) const;
  Scalar closure_hi(int cell) const;

  // Cell containing a finite value (point cell when it is a breakpoint).
  int locate(Scalar v) const;

  // Contiguous cell range supporting an interval whose finite endpoints are
  // breakpoints; throws otherwise.
  std::pair<int, int> cell_range(const Interval& iv) const;
  // Inverse of cell_range; throws on a single-point range, which has no
  // interval representation.
  Interval range_to_interval(int lo_cell, int hi_cell) const;

  bool operator==(const Grid1& o) const = default;

 private:
  std::vector<Scalar> bps_;
};

// Union of breakpoints.
Grid1 merge_grids(const Grid1& a, const Grid1& b);
Grid1 grid_from_barcode(const Barcode& b);

/// Representation of the face poset of a Grid1: one space per cell and a
/// structure map from each point into each adjacent interval.
struct GridRep {
  Grid1 grid;
  Field f = Field::fp(2);
  std::vector<int> dims;               // per cell
  std::vector<Mat> to_left, to_right;  // per point number k (cell 2k+1)

  static GridRep zero(const Grid1& g, Field f);
  int dim(int cell) const { return dims[cell]; }
  // Structure map along the arrow point -> adjacent interval.
  const Mat& arrow(int point_cell, bool right) const;
  void check() const;
  std::int64_t total_dim() const;
};

/// Bounded complex of GridReps: per-cell chain complexes plus chainwise
/// structure maps.  Degrees run over [deg_lo, deg_hi).
class CellComplex1 {
 public:
  CellComplex1(Grid1 grid, Field f, int deg_lo, int deg_hi);

  const Grid1& grid() const { return grid_; }
  const Field& field() const { return f_; }
  int deg_lo() const { return deg_lo_; }
  int deg_hi() const { return deg_hi_; }

  int dim(int cell, int deg) const;
  Mat& diff(int cell, int deg);              // deg -> deg+1
  const Mat& diff(int cell, int deg) const;
  Mat& arrow(int point_cell, bool right, int deg);
  const Mat& arrow(int point_cell, bool right, int deg) const;

  // Reshapes the per-cell spaces; zeroes all maps.  Used by builders.
  void set_dims(int cell, int deg, int dim);
  void finalize_shapes();  // allocate zero matrices matching dims

  void check() const;  // d*d = 0 and naturality of arrows

  GridRep cohomology_sheaf(int deg) const;

 private:
  Grid1 grid_;
  Field f_;
  int deg_lo_, deg_hi_;
  std::vector<std::vector<int>> dims_;   // [cell][k]
  std::vector<std::vector<Mat>> diff_;   // [cell][k]: deg k -> k+1
  std::vector<std::vector<Mat>> left_, right_;  // [point#][k]
};

/// Degree-0 chain map between two complexes on the same grid and with the
/// same degree range (use widen() to align ranges first).
struct ChainMap1 {
  const CellComplex1* src = nullptr;
  const CellComplex1* dst = nullptr;
  std::vector<std::vector<Mat>> comp;  // [cell][deg - deg_lo]

  Mat component(int cell, int deg) const;
  void check() const;
  bool is_zero_on_cohomology() const;
};

// Copy of a complex padded with zero spaces to the degree range [dlo, dhi).
CellComplex1 widen(const CellComplex1& cx, int dlo, int dhi);

// Embed a barcode as a complex with zero differential: a bar of degree d
// contributes to complex degree -d on every cell of its support.  Finite bar
// endpoints must be grid breakpoints.
CellComplex1 embed_barcode(const Barcode& b, const Grid1& grid, Field f);

// Basis of the space of degree-0 chain maps src -> dst.
std::vector<ChainMap1> nat_chain_basis(const CellComplex1& src, const CellComplex1& dst);

CellComplex1 mapping_cone(const ChainMap1& u);

// Apply a chain map to cohomology: per-cell induced matrices in one degree.
std::vector<Mat> induced_on_cohomology(const ChainMap1& u, int deg);

/// One indecomposable summand of a grid representation: the constant rank
/// `mult` module on the contiguous cells [cell_lo, cell_hi].
struct RangeSummand {
  int cell_lo;
  int cell_hi;
  std::int64_t mult;
};

// Interval decomposition of a representation, via generalized ranks of all
// cell segments and Moebius inversion.  Multiplicities are checked to be
// nonnegative and to regenerate the per-cell dimensions.
std::vector<RangeSummand> gabriel_ranges(const GridRep& rep);

// Same, mapped to real intervals; bars carry `bar_degree`.  Throws when a
// summand is supported on a single point cell, which no bar can represent.
Barcode gabriel_barcode(const GridRep& rep, int bar_degree);

// Full decomposition of a complex: Gabriel per cohomology degree n, emitted
// as bars of degree -n.
Barcode decompose_complex(const CellComplex1& cx);

// Per-degree dimensions of the section complex over the open cellular set
// spanned by [lo_cell, hi_cell] (both must be interval cells).
std::map<int, int> section_dims(const CellComplex1& cx, int lo_cell, int hi_cell);

// Per-degree dimensions of the sections supported at a point cell, i.e. the
// fiber of sections-over-star into sections-over-punctured-star.
std::map<int, int> costalk_dims(const CellComplex1& cx, int point_cell);

}  // namespace tamcalc

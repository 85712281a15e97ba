#pragma once

#include <vector>

#include "tamcalc/barcode.hpp"
#include "tamcalc/simplicial.hpp"

namespace tamcalc {

/// Lower-star filtration: every simplex enters at the max of its vertex
/// values; ties are ordered by dimension, then lexicographically.
struct FilteredComplex {
  SimplicialComplex complex;
  std::vector<Scalar> vertex_values;
  std::vector<Scalar> simplex_values;  // per simplex, max over vertices
  std::vector<int> order;              // simplex ids in filtration order
};

FilteredComplex lower_star(const SimplicialComplex& k, const std::vector<Scalar>& values);

// Sublevel-set persistent homology by boundary-matrix reduction over F_p.
// A class of homological degree p is emitted as a bar of degree -p; bars are
// half-open [birth, death) with zero-length pairs dropped, and one infinite
// bar per surviving class.
Barcode persistent_homology(const FilteredComplex& fc, std::int64_t prime);

// Number of infinite bars per homological degree.
std::vector<std::int64_t> betti_numbers(const Barcode& b);

struct SpectralResult {
  Barcode barcode;
  SpectralData spectral;
};

SpectralResult spectral_from_function(const SimplicialComplex& k, const std::vector<Scalar>& values,
                                      std::int64_t prime);

}  // namespace tamcalc

#pragma once

#include <vector>

#include "tamcalc/barcode.hpp"

namespace tamcalc {

/// hom_star output with the per-pair audit trail.  The barcode equals the
/// multiset union of all per-pair outputs.
struct HomResult {
  Barcode barcode;
  struct PairOut {
    Bar lhs;
    Bar rhs;
    Barcode out;
  };
  std::vector<PairOut> provenance;
};

// Twisted hom of two single bars.  Both supports must be of the shape [a,b)
// or [a,inf); anything else routes to the grid oracle.  With I of shape
// [a,b) and J of shape [c,d) (b, d possibly infinite) the output is
//
//   [a,b),[c,d)   ->  [c-b, min(c-a,d-b)) deg 1  +  [max(c-a,d-b), d-a) deg 0
//   [a,oo),[c,oo) ->  (-inf, c-a) deg 1
//   [a,b),[c,oo)  ->  [c-b, c-a) deg 1
//   [a,oo),[c,d)  ->  [c-a, d-a) deg 0
//
// shifted by deg(J)-deg(I), empty summands dropped, multiplicities
// multiplied.
Barcode hom_star_pair(const Bar& lhs, const Bar& rhs);

// Bilinear extension of hom_star_pair over two barcodes.
HomResult hom_star(const Barcode& lhs, const Barcode& rhs);

// hom_star followed by tensoring with the ray [0, inf).
Barcode hom_ray(const Barcode& lhs, const Barcode& rhs);

// Boundary depth of hom_ray: the spectral-distance bound.  Streams over the
// pair set without materializing the intermediate barcode, so it is safe on
// large inputs; equals boundary_depth(hom_ray(lhs, rhs)).
Scalar hom_ray_depth(const Barcode& lhs, const Barcode& rhs);

// Dimension of the degree-0 morphism space between two bar supports, for
// half-open and ray shapes: 1 iff a <= c < b <= d in extended reals.
int hom_dim0(const Interval& src, const Interval& dst);

}  // namespace tamcalc

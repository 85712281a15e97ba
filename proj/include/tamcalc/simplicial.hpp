#pragma once

#include <vector>

namespace tamcalc {

/// Finite simplicial complex: simplices as sorted vertex lists, closed under
/// faces, dimension at most 3.
struct SimplicialComplex {
  int n_vertices = 0;
  std::vector<std::vector<int>> simplices;  // includes the vertices themselves

  // Cycle graph on k >= 3 vertices.
  static SimplicialComplex circle(int k);
  // Standard triangulated m x n torus grid (m, n >= 3).
  static SimplicialComplex torus_grid(int m, int n);
  // Join of two cycles (p, q >= 3): a 3-sphere.
  static SimplicialComplex sphere3_join(int p, int q);

  int dimension() const;
  long long euler_characteristic() const;
  void validate() const;  // faces present, sorted vertex lists, no duplicates
};

}  // namespace tamcalc

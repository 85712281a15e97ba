#pragma once

#include <string>
#include <vector>

#include "tamcalc/scalar.hpp"
#include "tamcalc/simplicial.hpp"

namespace tamcalc {

struct CurveSample {
  double s;   // parameter in [0, 1)
  double x;   // position lift (radians; may exceed 2*pi to encode winding)
  double xi;  // fiber coordinate
};

/// Desk-scale exact Lagrangian: either the graph of the differential of a
/// sampled function on a preset base, or a sampled immersed exact loop in
/// the cotangent space of the circle.
struct LagrangianModel {
  enum class Kind { Graph, Curve };
  Kind kind = Kind::Graph;

  // graph kind: "s1" with k vertices, or "t2" with an m x n grid
  std::string preset = "s1";
  int k = 0;
  int m = 0, n = 0;
  std::vector<Scalar> values;

  // curve kind: samples sorted by s, closing up from the last back to the
  // first (x modulo full turns)
  std::vector<CurveSample> samples;
  double primitive_start = 0.0;

  static LagrangianModel graph_circle(int k, std::vector<Scalar> values);
  static LagrangianModel graph_torus(int m, int n, std::vector<Scalar> values);
  static LagrangianModel curve(std::vector<CurveSample> samples, double primitive_start);
};

SimplicialComplex model_complex(const LagrangianModel& model);

// 1 - max fiber norm over samples; the gradient of a graph is estimated by
// forward differences on the preset metric (unit-radius circles).
Scalar unit_ball_margin(const LagrangianModel& model);

// Vertex values of the generating function (graph kind only).
std::vector<Scalar> lagrangian_to_function(const LagrangianModel& model);

struct Chord {
  double s1, s2;  // parameters of the two visits
  double x, xi;   // common cotangent point
  double length;  // primitive gap
};

struct ChordSet {
  std::vector<Chord> chords;
  Scalar l_max;
};

// Self-intersections of the sampled loop with distinct primitive values.
// Detection runs per segment pair with positions compared modulo full turns
// and is refined by bisection on the parameter; distance tolerance `tol`.
ChordSet reeb_chords(const LagrangianModel& model, double tol = 1e-6);

// Primitive along the samples (trapezoid integral of xi dx), one value per
// sample plus the closing value, starting from primitive_start.
std::vector<double> primitive_samples(const LagrangianModel& model);

// Total xi dx around the loop; exactness demands this vanish.
double loop_integral(const LagrangianModel& model);

// Figure-eight: two mirror-image polygon lobes based at x = 0 with enclosed
// area `area` each; one Reeb chord of length `area`.
LagrangianModel make_figure_eight(double area, int samples_per_edge = 64);

// Two lobes based at x = 0 and x = pi with a compensating bump on the way
// back; two Reeb chords of lengths `len1` and `len2` (len1 > len2).
LagrangianModel make_two_chord_curve(double len1, double len2, int samples_per_edge = 64);

}  // namespace tamcalc

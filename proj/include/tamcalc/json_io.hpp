#pragma once

#include <string>

#include "tamcalc/barcode.hpp"
#include "tamcalc/bounds.hpp"
#include "tamcalc/grid.hpp"
#include "tamcalc/lagrangian.hpp"
#include "tamcalc/simplicial.hpp"

namespace tamcalc {

// Canonical barcode JSON:
//   {"scale": 1000000000,
//    "bars": [{"lo": 0, "hi": "inf", "lo_open": false, "hi_open": true,
//              "degree": 0, "mult": 1}, ...]}
// Endpoints are numbers or the strings "inf"/"-inf".  Serialization is
// deterministic (bars in canonical order), so serialize(parse(s)) == s for
// canonical input.
std::string barcode_to_json(const Barcode& b);
Barcode barcode_from_json(const std::string& text);

std::string scalar_to_json_literal(const Scalar& s);

/// Parsed sample-model file.  Graph and custom presets carry a complex plus
/// vertex values; curve models carry the sampled loop.  The Lagrangian view
/// exists for the presets with a metric (s1, t2) and for curves.
struct ParsedModel {
  bool is_curve = false;
  bool has_lagrangian = false;
  LagrangianModel lagrangian = LagrangianModel::graph_circle(3, {Scalar(), Scalar(), Scalar()});
  SimplicialComplex complex;
  std::vector<Scalar> values;
};

// {"preset": "s1"|"t2"|"s3"|"custom", sizes..., "values": [...]} or
// {"kind": "curve", "samples": [{"s","x","xi"}...], "primitive_start": z}
ParsedModel model_from_json(const std::string& text);

// {"name", "n", "m", "l", "pi0h", "quotient"} or a preset name handled by
// the caller.
GroupGeometry geometry_from_json(const std::string& text);

// {"prime", "breakpoints": [...], "dims": [...], "maps": [{"point", "side",
// "matrix"}...]}; omitted maps are zero.
GridRep grid_rep_from_json(const std::string& text);

}  // namespace tamcalc

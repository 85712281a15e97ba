#pragma once

#include <string>

#include "tamcalc/barcode.hpp"

namespace tamcalc {

// Deterministic barcode diagram: one horizontal segment per bar, rows
// grouped by degree, hollow markers at open finite endpoints, filled at
// closed ones, arrowheads toward the margins for infinite ends.
std::string render_svg(const Barcode& b);

}  // namespace tamcalc

#include "tamcalc/svg.hpp"

#include <sstream>

namespace tamcalc {

namespace {

struct Layout {
  double lo = 0, hi = 1;  // finite data window
  double width = 640, row = 18, margin = 40;

  double x(double v) const {
    if (hi == lo) return margin + (width - 2 * margin) / 2;
    return margin + (v - lo) / (hi - lo) * (width - 2 * margin);
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << v;
  return os.str();
}

}  // namespace

std::string render_svg(const Barcode& b) {
  Layout layout;
  bool any_finite = false;
  for (const Bar& bar : b.bars()) {
    for (Scalar s : {bar.interval.lo(), bar.interval.hi()}) {
      if (!s.finite()) continue;
      double v = s.to_double();
      if (!any_finite) {
        layout.lo = layout.hi = v;
        any_finite = true;
      } else {
        layout.lo = std::min(layout.lo, v);
        layout.hi = std::max(layout.hi, v);
      }
    }
  }
  if (layout.hi == layout.lo) layout.hi = layout.lo + 1;

  const double height = layout.row * (b.size() + 2);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << layout.width << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << layout.width << " " << fmt(height) << "\">\n";
  svg << "<!-- barcode diagram: " << b.size() << " bars -->\n";

  int row = 0;
  int last_degree = 0;
  bool first = true;
  for (const Bar& bar : b.bars()) {
    double y = layout.row * (row + 1.5);
    if (first || bar.degree != last_degree) {
      svg << "<text x=\"4\" y=\"" << fmt(y + 4) << "\" font-size=\"10\">deg " << bar.degree
          << "</text>\n";
      last_degree = bar.degree;
      first = false;
    }
    double x0 = bar.interval.lo().finite() ? layout.x(bar.interval.lo().to_double())
                                           : layout.margin / 2.0;
    double x1 = bar.interval.hi().finite() ? layout.x(bar.interval.hi().to_double())
                                           : layout.width - layout.margin / 2.0;
    svg << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x1) << "\" y2=\""
        << fmt(y) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    if (bar.interval.lo().finite()) {
      svg << "<circle cx=\"" << fmt(x0) << "\" cy=\"" << fmt(y) << "\" r=\"3\" fill=\""
          << (bar.interval.lo_open() ? "white" : "black") << "\" stroke=\"black\"/>\n";
    } else {
      svg << "<path d=\"M " << fmt(x0 + 6) << " " << fmt(y - 4) << " L " << fmt(x0) << " "
          << fmt(y) << " L " << fmt(x0 + 6) << " " << fmt(y + 4) << "\" fill=\"none\" "
          << "stroke=\"black\"/>\n";
    }
    if (bar.interval.hi().finite()) {
      svg << "<circle cx=\"" << fmt(x1) << "\" cy=\"" << fmt(y) << "\" r=\"3\" fill=\""
          << (bar.interval.hi_open() ? "white" : "black") << "\" stroke=\"black\"/>\n";
    } else {
      svg << "<path d=\"M " << fmt(x1 - 6) << " " << fmt(y - 4) << " L " << fmt(x1) << " "
          << fmt(y) << " L " << fmt(x1 - 6) << " " << fmt(y + 4) << "\" fill=\"none\" "
          << "stroke=\"black\"/>\n";
    }
    if (bar.mult > 1)
      svg << "<text x=\"" << fmt(x1 + 8) << "\" y=\"" << fmt(y + 4) << "\" font-size=\"10\">x"
          << bar.mult << "</text>\n";
    ++row;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tamcalc

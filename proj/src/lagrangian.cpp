#include "tamcalc/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tamcalc {

namespace {

constexpr double kTurn = 2.0 * 3.14159265358979323846;

double wrap_turn(double dx) {
  double r = std::fmod(dx, kTurn);
  if (r > kTurn / 2) r -= kTurn;
  if (r <= -kTurn / 2) r += kTurn;
  return r;
}

}  // namespace

LagrangianModel LagrangianModel::graph_circle(int k, std::vector<Scalar> values) {
  LagrangianModel m;
  m.kind = Kind::Graph;
  m.preset = "s1";
  m.k = k;
  m.values = std::move(values);
  if (static_cast<int>(m.values.size()) != k) throw std::invalid_argument("one value per vertex");
  return m;
}

LagrangianModel LagrangianModel::graph_torus(int mm, int nn, std::vector<Scalar> values) {
  LagrangianModel m;
  m.kind = Kind::Graph;
  m.preset = "t2";
  m.m = mm;
  m.n = nn;
  m.values = std::move(values);
  if (static_cast<int>(m.values.size()) != mm * nn)
    throw std::invalid_argument("one value per vertex");
  return m;
}

LagrangianModel LagrangianModel::curve(std::vector<CurveSample> samples, double primitive_start) {
  LagrangianModel m;
  m.kind = Kind::Curve;
  m.samples = std::move(samples);
  m.primitive_start = primitive_start;
  if (m.samples.size() < 3) throw std::invalid_argument("curve needs at least 3 samples");
  for (std::size_t i = 0; i + 1 < m.samples.size(); ++i)
    if (!(m.samples[i].s < m.samples[i + 1].s))
      throw std::invalid_argument("curve samples must be strictly increasing in s");
  if (m.samples.front().s < 0 || m.samples.back().s >= 1)
    throw std::invalid_argument("curve parameters must lie in [0,1)");
  double total = loop_integral(m);
  if (std::abs(total) > 1e-6)
    throw std::invalid_argument("curve is not exact: the primitive does not close up");
  return m;
}

SimplicialComplex model_complex(const LagrangianModel& model) {
  if (model.kind != LagrangianModel::Kind::Graph)
    throw std::invalid_argument("only graph models have a base complex");
  if (model.preset == "s1") return SimplicialComplex::circle(model.k);
  if (model.preset == "t2") return SimplicialComplex::torus_grid(model.m, model.n);
  throw std::invalid_argument("unknown preset: " + model.preset);
}

Scalar unit_ball_margin(const LagrangianModel& model) {
  double max_norm = 0;
  if (model.kind == LagrangianModel::Kind::Curve) {
    for (const CurveSample& s : model.samples) max_norm = std::max(max_norm, std::abs(s.xi));
  } else if (model.preset == "s1") {
    const double h = kTurn / model.k;
    for (int i = 0; i < model.k; ++i) {
      double df = (model.values[(i + 1) % model.k] - model.values[i]).to_double();
      max_norm = std::max(max_norm, std::abs(df) / h);
    }
  } else if (model.preset == "t2") {
    const double h1 = kTurn / model.m, h2 = kTurn / model.n;
    auto at = [&](int i, int j) {
      return model.values[((i % model.m + model.m) % model.m) * model.n +
                          ((j % model.n + model.n) % model.n)]
          .to_double();
    };
    for (int i = 0; i < model.m; ++i)
      for (int j = 0; j < model.n; ++j) {
        double gx = (at(i + 1, j) - at(i, j)) / h1;
        double gy = (at(i, j + 1) - at(i, j)) / h2;
        max_norm = std::max(max_norm, std::hypot(gx, gy));
      }
  } else {
    throw std::invalid_argument("unknown preset: " + model.preset);
  }
  return Scalar::from_double(1.0 - max_norm);
}

std::vector<Scalar> lagrangian_to_function(const LagrangianModel& model) {
  if (model.kind != LagrangianModel::Kind::Graph)
    throw std::invalid_argument("generating-function values exist for graph models only");
  return model.values;
}

std::vector<double> primitive_samples(const LagrangianModel& model) {
  if (model.kind != LagrangianModel::Kind::Curve)
    throw std::invalid_argument("primitive samples exist for curve models only");
  const auto& s = model.samples;
  std::vector<double> z{model.primitive_start};
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    z.push_back(z.back() + (s[i + 1].x - s[i].x) * (s[i + 1].xi + s[i].xi) / 2);
  // closing segment back to the first sample, shortest turn representative
  double dx = wrap_turn(s.front().x - s.back().x);
  z.push_back(z.back() + dx * (s.front().xi + s.back().xi) / 2);
  return z;
}

double loop_integral(const LagrangianModel& model) {
  auto z = primitive_samples(model);
  return z.back() - z.front();
}

namespace {

struct Seg {
  double s0, s1;
  double x0, x1;
  double xi0, xi1;
  double z0;  // primitive at the segment start
};

std::vector<Seg> curve_segments(const LagrangianModel& model) {
  const auto& s = model.samples;
  auto z = primitive_samples(model);
  std::vector<Seg> segs;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    segs.push_back(Seg{s[i].s, s[i + 1].s, s[i].x, s[i + 1].x, s[i].xi, s[i + 1].xi, z[i]});
  double dx = wrap_turn(s.front().x - s.back().x);
  segs.push_back(Seg{s.back().s, 1.0, s.back().x, s.back().x + dx, s.back().xi, s.front().xi,
                     z[s.size() - 1]});
  return segs;
}

// Primitive value at fraction t along a straight segment.
double seg_primitive(const Seg& g, double t) {
  double dx = g.x1 - g.x0;
  return g.z0 + dx * (g.xi0 * t + (g.xi1 - g.xi0) * t * t / 2);
}

// Straight segment intersection in the (x, xi) plane after shifting the
// second segment by `shift` in x.  Refines the crossing parameters by
// bisection on the first segment's parameter.
bool segment_cross(const Seg& a, const Seg& b, double shift, double tol, double& t, double& u) {
  double ax = a.x1 - a.x0, ay = a.xi1 - a.xi0;
  double bx = b.x1 - b.x0, by = b.xi1 - b.xi0;
  double rx = (b.x0 + shift) - a.x0, ry = b.xi0 - a.xi0;
  double det = ax * by - ay * bx;
  if (std::abs(det) < 1e-14) return false;
  t = (rx * by - ry * bx) / det;
  u = (rx * ay - ry * ax) / det;
  const double slack = 1e-9;
  if (t < -slack || t > 1 + slack || u < -slack || u > 1 + slack) return false;
  t = std::clamp(t, 0.0, 1.0);
  u = std::clamp(u, 0.0, 1.0);
  // bisection refinement on t: drive the signed distance of a(t) from the
  // supporting line of b to zero within 1e-10 of parameter
  double nx = -by, ny = bx;  // normal of b
  auto side = [&](double tt) {
    double px = a.x0 + ax * tt - (b.x0 + shift), py = a.xi0 + ay * tt - b.xi0;
    return px * nx + py * ny;
  };
  double lo = 0.0, hi = 1.0, flo = side(lo), fhi = side(hi);
  if ((flo <= 0 && fhi >= 0) || (flo >= 0 && fhi <= 0)) {
    for (int it = 0; it < 60 && hi - lo > 1e-10; ++it) {
      double mid = (lo + hi) / 2, fm = side(mid);
      if ((flo <= 0 && fm >= 0) || (flo >= 0 && fm <= 0)) {
        hi = mid;
        fhi = fm;
      } else {
        lo = mid;
        flo = fm;
      }
    }
    t = (lo + hi) / 2;
    double denom = bx * bx + by * by;
    if (denom > 0) {
      double px = a.x0 + ax * t - (b.x0 + shift), py = a.xi0 + ay * t - b.xi0;
      u = std::clamp((px * bx + py * by) / denom, 0.0, 1.0);
    }
  }
  double gx = a.x0 + ax * t - (b.x0 + shift + bx * u);
  double gy = a.xi0 + ay * t - (b.xi0 + by * u);
  return std::hypot(gx, gy) < tol;
}

}  // namespace

ChordSet reeb_chords(const LagrangianModel& model, double tol) {
  ChordSet out;
  out.l_max = Scalar();
  if (model.kind == LagrangianModel::Kind::Graph) return out;  // single-valued graph

  auto segs = curve_segments(model);
  const int n = static_cast<int>(segs.size());
  for (int i = 0; i < n; ++i) {
    double vel = std::hypot(segs[i].x1 - segs[i].x0, segs[i].xi1 - segs[i].xi0);
    if (vel < 1e-12 && segs[i].s1 - segs[i].s0 > 1e-12)
      throw std::runtime_error("not an immersion at s=" + std::to_string(segs[i].s0));
  }
  std::vector<Chord> found;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int k = -1; k <= 1; ++k) {
        double shift = k * kTurn;
        double t, u;
        if (!segment_cross(segs[i], segs[j], shift, tol, t, u)) continue;
        double s1 = segs[i].s0 + (segs[i].s1 - segs[i].s0) * t;
        double s2 = segs[j].s0 + (segs[j].s1 - segs[j].s0) * u;
        if (std::abs(s2 - s1) < 1e-9 || std::abs(s2 - s1) > 1 - 1e-9) continue;  // same point
        double z1 = seg_primitive(segs[i], t);
        double z2 = seg_primitive(segs[j], u);
        double len = std::abs(z2 - z1);
        if (len < tol) continue;  // equal primitive values: not a chord
        found.push_back(Chord{s1, s2, segs[i].x0 + (segs[i].x1 - segs[i].x0) * t,
                              segs[i].xi0 + (segs[i].xi1 - segs[i].xi0) * t, len});
      }
    }
  // merge duplicates, comparing parameters on the circle (s = 0 and s = 1
  // are the same visit)
  auto circ_eq = [](double a, double b) {
    double d = std::abs(a - b);
    return std::min(d, 1.0 - d) < 1e-6;
  };
  std::sort(found.begin(), found.end(), [](const Chord& a, const Chord& b) {
    if (a.s1 != b.s1) return a.s1 < b.s1;
    return a.s2 < b.s2;
  });
  for (const Chord& c : found) {
    bool dup = false;
    for (const Chord& kept : out.chords) {
      bool same = (circ_eq(kept.s1, c.s1) && circ_eq(kept.s2, c.s2)) ||
                  (circ_eq(kept.s1, c.s2) && circ_eq(kept.s2, c.s1));
      if (same && std::abs(kept.length - c.length) < 1e-6) dup = true;
    }
    if (!dup) out.chords.push_back(c);
  }
  double lmax = 0;
  for (const Chord& c : out.chords) lmax = std::max(lmax, c.length);
  out.l_max = Scalar::from_double(lmax);
  return out;
}

namespace {

// Polyline through the listed (x, xi) vertices, subdivided; the closing edge
// returns to the first vertex displaced by close_dx in the position lift.
std::vector<CurveSample> polyline(const std::vector<std::pair<double, double>>& verts,
                                  int samples_per_edge, double close_dx) {
  std::vector<CurveSample> samples;
  const int edges = static_cast<int>(verts.size());
  for (int e = 0; e < edges; ++e) {
    auto [x0, y0] = verts[e];
    auto [x1, y1] = e + 1 < edges ? verts[e + 1]
                                  : std::make_pair(verts[0].first + close_dx, verts[0].second);
    for (int i = 0; i < samples_per_edge; ++i) {
      double t = static_cast<double>(i) / samples_per_edge;
      double s = (e + t) / edges;
      samples.push_back(CurveSample{s, x0 + (x1 - x0) * t, y0 + (y1 - y0) * t});
    }
  }
  return samples;
}

}  // namespace

LagrangianModel make_figure_eight(double area, int samples_per_edge) {
  if (area <= 0) throw std::invalid_argument("lobe area must be positive");
  const double h = 0.4;
  const double w = area / (2 * h);
  std::vector<std::pair<double, double>> verts = {
      {0, 0}, {w, h}, {0, 2 * h}, {-w, h},          // upper lobe
      {0, 0}, {w, -h}, {0, -2 * h}, {-w, -h},       // mirror lobe
  };
  return LagrangianModel::curve(polyline(verts, samples_per_edge, 0.0), 0.0);
}

LagrangianModel make_two_chord_curve(double len1, double len2, int samples_per_edge) {
  if (!(len1 > len2 && len2 > 0)) throw std::invalid_argument("need len1 > len2 > 0");
  const double pi = kTurn / 2;
  // primitive checkpoints: 0 -> -len1 (lobe at 0) -> -len1+len2 (lobe at pi)
  // -> 0 (bump); the visits at 0 differ by len1, the visits at pi by len2
  const double ha = 0.4, wa = len1 / (2 * ha);
  const double hb = 0.4, wb = len2 / (2 * hb);
  const double eta = 2 * (len1 - len2) / pi;  // bump apex over [3*pi/2, 2*pi]
  std::vector<std::pair<double, double>> verts = {
      {0, 0}, {wa, ha}, {0, 2 * ha}, {-wa, ha},                    // upper lobe at 0: -len1
      {0, 0}, {pi / 2, 0},                                         // walk at the zero section
      {pi, 0}, {pi + wb, -hb}, {pi, -2 * hb}, {pi - wb, -hb},      // lower lobe at pi: +area_b
      {pi, 0}, {3 * pi / 2, eta},                                  // bump back: +len2
  };
  return LagrangianModel::curve(polyline(verts, samples_per_edge, kTurn), 0.0);
}

}  // namespace tamcalc

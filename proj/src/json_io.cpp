#include "tamcalc/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace tamcalc {

namespace {

using nlohmann::json;

json scalar_to_json(const Scalar& s) {
  if (s.is_neg_inf()) return "-inf";
  if (s.is_pos_inf()) return "inf";
  return s.to_double();
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return Scalar::pos_inf();
    if (s == "-inf") return Scalar::neg_inf();
    throw std::runtime_error("bad endpoint string: " + s);
  }
  if (!j.is_number()) throw std::runtime_error("endpoint must be a number or inf string");
  return Scalar::from_double(j.get<double>());
}

}  // namespace

std::string scalar_to_json_literal(const Scalar& s) { return scalar_to_json(s).dump(); }

std::string barcode_to_json(const Barcode& b) {
  json bars = json::array();
  for (const Bar& bar : b.bars()) {
    json jb;
    jb["lo"] = scalar_to_json(bar.interval.lo());
    jb["hi"] = scalar_to_json(bar.interval.hi());
    jb["lo_open"] = bar.interval.lo_open();
    jb["hi_open"] = bar.interval.hi_open();
    jb["degree"] = bar.degree;
    jb["mult"] = bar.mult;
    bars.push_back(jb);
  }
  json root;
  root["scale"] = Scalar::scale();
  root["bars"] = bars;
  return root.dump(2) + "\n";
}

Barcode barcode_from_json(const std::string& text) {
  json root = json::parse(text);
  if (!root.is_object() || !root.contains("bars"))
    throw std::runtime_error("barcode JSON must be an object with a \"bars\" array");
  if (root.contains("scale")) {
    const std::int64_t s = root["scale"].get<std::int64_t>();
    if (s != Scalar::scale())
      throw std::runtime_error("barcode scale does not match the configured scale");
  }
  std::vector<Bar> bars;
  for (const json& jb : root["bars"]) {
    Scalar lo = scalar_from_json(jb.at("lo"));
    Scalar hi = scalar_from_json(jb.at("hi"));
    bool lo_open = jb.value("lo_open", lo.is_neg_inf());
    bool hi_open = jb.value("hi_open", true);
    auto iv = Interval::make(lo, hi, lo_open, hi_open);
    if (!iv) throw std::runtime_error("empty interval in barcode JSON");
    const int degree = jb.value("degree", 0);
    const std::int64_t mult = jb.value("mult", std::int64_t{1});
    if (mult < 1) throw std::runtime_error("bar multiplicity must be >= 1");
    bars.push_back(Bar{*iv, degree, mult});
  }
  return Barcode(std::move(bars));
}

namespace {

std::vector<Scalar> values_from_json(const json& root, std::size_t expected) {
  if (!root.contains("values")) throw std::runtime_error("model needs a \"values\" array");
  std::vector<Scalar> values;
  for (const json& v : root["values"]) values.push_back(scalar_from_json(v));
  if (values.size() != expected)
    throw std::runtime_error("expected " + std::to_string(expected) + " values, got " +
                             std::to_string(values.size()));
  return values;
}

}  // namespace

ParsedModel model_from_json(const std::string& text) {
  json root = json::parse(text);
  ParsedModel out;
  const std::string kind = root.value("kind", std::string("graph"));
  if (kind == "curve") {
    out.is_curve = true;
    out.has_lagrangian = true;
    std::vector<CurveSample> samples;
    for (const json& js : root.at("samples"))
      samples.push_back(CurveSample{js.at("s").get<double>(), js.at("x").get<double>(),
                                    js.at("xi").get<double>()});
    out.lagrangian = LagrangianModel::curve(std::move(samples), root.value("primitive_start", 0.0));
    return out;
  }
  const std::string preset = root.value("preset", std::string("s1"));
  if (preset == "s1") {
    int k = root.value("k", 0);
    if (k == 0 && root.contains("values")) k = static_cast<int>(root["values"].size());
    out.complex = SimplicialComplex::circle(k);
    out.values = values_from_json(root, static_cast<std::size_t>(k));
    out.lagrangian = LagrangianModel::graph_circle(k, out.values);
    out.has_lagrangian = true;
  } else if (preset == "t2") {
    int m = root.at("m").get<int>(), n = root.at("n").get<int>();
    out.complex = SimplicialComplex::torus_grid(m, n);
    out.values = values_from_json(root, static_cast<std::size_t>(m) * n);
    out.lagrangian = LagrangianModel::graph_torus(m, n, out.values);
    out.has_lagrangian = true;
  } else if (preset == "s3") {
    int p = root.value("p", 4), q = root.value("q", 4);
    out.complex = SimplicialComplex::sphere3_join(p, q);
    out.values = values_from_json(root, static_cast<std::size_t>(p) + q);
  } else if (preset == "custom") {
    SimplicialComplex k;
    k.n_vertices = root.at("vertices").get<int>();
    for (const json& js : root.at("simplices")) k.simplices.push_back(js.get<std::vector<int>>());
    k.validate();
    out.complex = k;
    out.values = values_from_json(root, static_cast<std::size_t>(k.n_vertices));
  } else {
    throw std::runtime_error("unknown preset: " + preset);
  }
  return out;
}

GroupGeometry geometry_from_json(const std::string& text) {
  json root = json::parse(text);
  GroupGeometry g;
  g.name = root.value("name", std::string("custom"));
  g.n = root.at("n").get<int>();
  g.m = root.value("m", g.n);
  g.l = scalar_from_json(root.at("l"));
  g.pi0h = root.value("pi0h", 1);
  g.is_quotient = root.value("quotient", g.m != g.n);
  if (g.n < g.m || g.m < 0 || !(g.l > Scalar())) throw std::runtime_error("bad geometry data");
  return g;
}

GridRep grid_rep_from_json(const std::string& text) {
  json root = json::parse(text);
  const std::int64_t prime = root.value("prime", std::int64_t{2});
  Field f = Field::fp(prime);
  std::vector<Scalar> bps;
  for (const json& v : root.at("breakpoints")) bps.push_back(scalar_from_json(v));
  Grid1 grid(bps);
  GridRep rep = GridRep::zero(grid, f);
  const json& dims = root.at("dims");
  if (static_cast<int>(dims.size()) != grid.num_cells())
    throw std::runtime_error("dims must list one dimension per cell (points and intervals)");
  for (int c = 0; c < grid.num_cells(); ++c) rep.dims[c] = dims[c].get<int>();
  for (int p = 1; p < grid.num_cells(); p += 2) {
    rep.to_left[(p - 1) / 2] = Mat(f, rep.dims[p - 1], rep.dims[p]);
    rep.to_right[(p - 1) / 2] = Mat(f, rep.dims[p + 1], rep.dims[p]);
  }
  if (root.contains("maps"))
    for (const json& jm : root["maps"]) {
      int point = jm.at("point").get<int>();
      if (point < 0 || point >= grid.num_cells() || !Grid1::is_point(point))
        throw std::runtime_error("map source must be a point cell index");
      bool right = jm.at("side").get<std::string>() == "right";
      int nb = right ? point + 1 : point - 1;
      Mat m(f, rep.dims[nb], rep.dims[point]);
      const json& rows = jm.at("matrix");
      if (static_cast<int>(rows.size()) != m.rows()) throw std::runtime_error("bad matrix shape");
      for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols())
          throw std::runtime_error("bad matrix shape");
        for (int c = 0; c < m.cols(); ++c) m.set_int(r, c, rows[r][c].get<std::int64_t>());
      }
      (right ? rep.to_right : rep.to_left)[(point - 1) / 2] = m;
    }
  rep.check();
  return rep;
}

}  // namespace tamcalc

// Command-line surface for the barcode calculus: decomposition, twisted
// homs, persistence, Reeb chords, bound reports, oracle verification and
// barcode rendering.  Exit codes: 0 success/pass, 1 verified failure,
// 2 input or usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tamcalc/config.hpp"
#include "tamcalc/homstar.hpp"
#include "tamcalc/json_io.hpp"
#include "tamcalc/oracle.hpp"
#include "tamcalc/persistence.hpp"
#include "tamcalc/svg.hpp"
#include "tamcalc/verify.hpp"

using namespace tamcalc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

GroupGeometry geometry_by_name(const std::string& name) {
  if (name == "u1") return GroupGeometry::u1();
  if (name == "su2") return GroupGeometry::su2();
  if (name == "t2") return GroupGeometry::torus(2);
  if (name == "t3") return GroupGeometry::torus(3);
  if (name == "s2") return GroupGeometry::s2();
  return geometry_from_json(slurp(name));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{tool_version() + " - barcode calculus for sheaf-style spectral invariants"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key=value configuration file");

  // decompose
  auto* cmd_decompose = app.add_subcommand("decompose", "interval decomposition of a grid representation");
  std::string decompose_in, decompose_out;
  cmd_decompose->add_option("rep", decompose_in, "grid representation JSON")->required();
  cmd_decompose->add_option("--out", decompose_out, "write the barcode JSON here");

  // homstar
  auto* cmd_homstar = app.add_subcommand("homstar", "twisted hom of two barcodes");
  std::string hs_lhs, hs_rhs, hs_out;
  bool hs_audit = false, hs_oracle = false;
  cmd_homstar->add_option("lhs", hs_lhs, "left barcode JSON")->required();
  cmd_homstar->add_option("rhs", hs_rhs, "right barcode JSON")->required();
  cmd_homstar->add_flag("--audit", hs_audit, "print the per-pair provenance table");
  cmd_homstar->add_flag("--oracle", hs_oracle, "compute with the grid oracle instead");
  cmd_homstar->add_option("--out", hs_out, "write the result barcode JSON here");

  // v
  auto* cmd_v = app.add_subcommand("v", "spectral-distance bound of two barcodes");
  std::string v_lhs, v_rhs;
  cmd_v->add_option("lhs", v_lhs)->required();
  cmd_v->add_option("rhs", v_rhs)->required();

  // persist
  auto* cmd_persist = app.add_subcommand("persist", "sublevel persistence of a sampled function");
  std::string persist_in, persist_out;
  std::int64_t persist_prime = 0;
  cmd_persist->add_option("model", persist_in, "model JSON")->required();
  cmd_persist->add_option("--prime", persist_prime, "coefficient prime");
  cmd_persist->add_option("--out", persist_out, "write the barcode JSON here");

  // chords
  auto* cmd_chords = app.add_subcommand("chords", "Reeb chords of a sampled curve");
  std::string chords_in;
  cmd_chords->add_option("curve", chords_in, "curve JSON")->required();

  // check-bound
  auto* cmd_check = app.add_subcommand("check-bound", "spectral-norm bound report for a model");
  std::string check_model, check_geometry = "u1", check_report;
  std::int64_t check_prime = 0;
  cmd_check->add_option("--model", check_model)->required();
  cmd_check->add_option("--geometry", check_geometry, "u1|su2|t2|t3|s2|<file.json>");
  cmd_check->add_option("--report", check_report, "write a markdown report here");
  cmd_check->add_option("--prime", check_prime);

  // oracle-verify
  auto* cmd_verify = app.add_subcommand("oracle-verify", "randomized ground-truth suites");
  std::string suite = "homstar";
  int verify_cases = 0;
  std::uint64_t verify_seed = 0;
  cmd_verify->add_option("--suite", suite, "homstar|tau|cone|equivariant")->required();
  cmd_verify->add_option("--cases", verify_cases);
  auto* seed_opt = cmd_verify->add_option("--seed", verify_seed);

  // render-svg
  auto* cmd_svg = app.add_subcommand("render-svg", "barcode diagram");
  std::string svg_in, svg_out;
  cmd_svg->add_option("barcode", svg_in)->required();
  cmd_svg->add_option("--out", svg_out, "write the SVG here (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    Config cfg = Config::load(config_path);
    cfg.apply_scale();

    if (cmd_decompose->parsed()) {
      GridRep rep = grid_rep_from_json(slurp(decompose_in));
      Barcode b = gabriel_barcode(rep, 0);
      std::string out = barcode_to_json(b);
      if (!decompose_out.empty()) spit(decompose_out, out);
      std::cout << out;
      return 0;
    }

    if (cmd_homstar->parsed()) {
      Barcode lhs = barcode_from_json(slurp(hs_lhs));
      Barcode rhs = barcode_from_json(slurp(hs_rhs));
      Barcode result;
      if (hs_oracle) {
        result = oracle::hom_star(lhs, rhs, Field::fp(cfg.prime));
      } else {
        HomResult hr = hom_star(lhs, rhs);
        result = hr.barcode;
        if (hs_audit) {
          std::cout << "# provenance\n";
          for (const auto& p : hr.provenance)
            std::cout << Barcode({p.lhs}).to_string() << " (x) " << Barcode({p.rhs}).to_string()
                      << " -> " << p.out.to_string() << "\n";
        }
      }
      std::string out = barcode_to_json(result);
      if (!hs_out.empty()) spit(hs_out, out);
      std::cout << out;
      return 0;
    }

    if (cmd_v->parsed()) {
      Barcode lhs = barcode_from_json(slurp(v_lhs));
      Barcode rhs = barcode_from_json(slurp(v_rhs));
      std::cout << hom_ray_depth(lhs, rhs).to_string() << "\n";
      return 0;
    }

    if (cmd_persist->parsed()) {
      ParsedModel model = model_from_json(slurp(persist_in));
      if (model.is_curve) throw std::runtime_error("persistence needs a sampled function model");
      std::int64_t p = persist_prime ? persist_prime : cfg.prime;
      Barcode b = persistent_homology(lower_star(model.complex, model.values), p);
      std::string out = barcode_to_json(b);
      if (!persist_out.empty()) spit(persist_out, out);
      std::cout << out;
      return 0;
    }

    if (cmd_chords->parsed()) {
      ParsedModel model = model_from_json(slurp(chords_in));
      ChordSet cs = reeb_chords(model.lagrangian, cfg.chord_tol);
      std::cout << "chords " << cs.chords.size() << "\n";
      for (const Chord& c : cs.chords) {
        std::ostringstream line;
        line.precision(9);
        line << "s1=" << c.s1 << " s2=" << c.s2 << " x=" << c.x << " xi=" << c.xi
             << " length=" << c.length;
        std::cout << line.str() << "\n";
      }
      std::cout << "l_max " << cs.l_max.to_string() << "\n";
      return 0;
    }

    if (cmd_check->parsed()) {
      std::string model_text = slurp(check_model);
      ParsedModel model = model_from_json(model_text);
      if (!model.has_lagrangian)
        throw std::runtime_error("bound reports need an s1/t2 graph model or a curve");
      GroupGeometry geometry = geometry_by_name(check_geometry);
      std::int64_t p = check_prime ? check_prime : cfg.prime;
      ConjectureReport report = verify_conjecture(model.lagrangian, geometry, p);
      std::ostringstream md;
      md << "# bound report\n\n";
      md << "- tool: " << tool_version() << "\n";
      md << "- input digest: " << fnv1a(model_text) << "\n";
      md << "- prime: " << p << "\n\n";
      md << "```\n" << report.detail << "```\n";
      if (!check_report.empty()) spit(check_report, md.str());
      std::cout << report.detail;
      return report.pass ? 0 : 1;
    }

    if (cmd_verify->parsed()) {
      int cases = verify_cases > 0 ? verify_cases : cfg.oracle_cases;
      std::uint64_t seed = seed_opt->count() ? verify_seed : cfg.seed;
      verify::SuiteResult r = verify::run_suite(suite, cases, seed, cfg.prime);
      std::cout << r.name << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.cases << " cases, "
                << r.failures << " failures, " << r.seconds << " s, seed " << seed << ")\n";
      for (const std::string& ce : r.counterexamples) std::cout << "counterexample: " << ce << "\n";
      return r.pass() ? 0 : 1;
    }

    if (cmd_svg->parsed()) {
      Barcode b = barcode_from_json(slurp(svg_in));
      std::string svg = render_svg(b);
      if (!svg_out.empty())
        spit(svg_out, svg);
      else
        std::cout << svg;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include "tamcalc/bounds.hpp"

#include <sstream>
#include <stdexcept>

#include "tamcalc/homstar.hpp"
#include "tamcalc/persistence.hpp"

namespace tamcalc {

GroupGeometry GroupGeometry::u1() { return GroupGeometry{"u1", 1, 1, Scalar::pi(), 1, false}; }

GroupGeometry GroupGeometry::su2() { return GroupGeometry{"su2", 3, 3, Scalar::pi(), 1, false}; }

GroupGeometry GroupGeometry::torus(int k) {
  if (k < 1) throw std::invalid_argument("torus dimension must be positive");
  return GroupGeometry{"t" + std::to_string(k), k, k, Scalar::pi_times_sqrt(k), 1, false};
}

GroupGeometry GroupGeometry::s2() { return GroupGeometry{"s2", 3, 2, Scalar::pi(), 1, true}; }

Scalar group_bound(int n, Scalar l, Scalar l_max) {
  if (n < 0 || l < Scalar() || l_max < Scalar())
    throw std::invalid_argument("bound inputs must be nonnegative");
  return (l.times(2) + l_max).times(n + 1);
}

HomogeneousBound homogeneous_bound(int m, int n, Scalar l, Scalar l_max) {
  if (m < 0) throw std::invalid_argument("quotient dimension must be nonnegative");
  Scalar base = (l.times(2) + l_max).times(static_cast<std::int64_t>(m + 3) * (m + 3) * (n + 1));
  Scalar value;
  try {
    value = base.div_exact(4);
  } catch (const std::domain_error&) {
    value = base.div_round_up(4);
  }
  int endpoint_factor = (m - 1 + 1) / 2 + 1;  // ceil((m-1)/2) + 1
  if (m == 0) endpoint_factor = 1;
  Scalar endpoint = group_bound(n, l, l_max).times(static_cast<std::int64_t>(endpoint_factor) *
                                                   endpoint_factor);
  if (endpoint > value)
    throw std::logic_error("recursion endpoint exceeds the displayed bound");
  return HomogeneousBound{value, endpoint};
}

Scalar chain_bound(const std::vector<Scalar>& segment_lengths, Scalar l_max) {
  if (l_max < Scalar()) throw std::invalid_argument("chord length must be nonnegative");
  for (const Scalar& len : segment_lengths)
    if (len < Scalar()) throw std::invalid_argument("segment lengths must be nonnegative");
  auto run = [&](Scalar delta) {
    Scalar c = l_max;
    for (const Scalar& len : segment_lengths) c += (len + delta).times(2);
    return c;
  };
  Scalar delta = Scalar::from_units(1);
  Scalar v1 = run(delta), v2 = run(delta.times(2));
  Scalar extrapolated = v1.times(2) - v2;  // linear in delta
  Scalar closed = l_max;
  for (const Scalar& len : segment_lengths) closed += len.times(2);
  if (extrapolated != closed)
    throw std::logic_error("chain extrapolation does not match the closed form");
  return extrapolated;
}

Scalar devissage(const std::map<int, Scalar>& per_dim_torsion, int n) {
  if (n < 0) throw std::invalid_argument("dimension must be nonnegative");
  Scalar total;
  for (int k = 0; k <= n; ++k) {
    auto it = per_dim_torsion.find(k);
    if (it == per_dim_torsion.end())
      throw std::invalid_argument("missing torsion threshold for dimension " + std::to_string(k));
    if (it->second < Scalar()) throw std::invalid_argument("torsion thresholds must be >= 0");
    total += it->second;
  }
  return total;
}

Scalar cone_recursion(int i, int j, Scalar c) {
  if (i < 0 || j < 0) throw std::invalid_argument("cone indices must be nonnegative");
  const int top = std::max(i, j);
  // dp over the double induction; row 0 and column 0 first
  std::vector<std::vector<Scalar>> dp(top + 1, std::vector<Scalar>(top + 1));
  dp[0][0] = c;
  for (int b = 1; b <= top; ++b) {
    dp[0][b] = dp[0][b - 1] + c;
    dp[b][0] = dp[0][b];
  }
  for (int a = 1; a <= top; ++a)
    for (int b = 1; b <= top; ++b) dp[a][b] = dp[a - 1][b] + dp[0][b];
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b) {
      Scalar closed = c.times(static_cast<std::int64_t>(a + 1) * (b + 1));
      if (dp[a][b] > closed)
        throw std::logic_error("cone recursion exceeds its closed form");
    }
  return dp[i][j];
}

std::int64_t GradedDims::rank(int degree) const {
  auto it = ranks.find(degree);
  return it == ranks.end() ? 0 : it->second;
}

int GradedDims::tail_min_degree() const {
  for (const auto& [deg, r] : ranks)
    if (deg >= 1 && r > 0) return deg;
  return -1;
}

LacunaryResult lacunary_steps(const GradedDims& l, int target_dim) {
  if (target_dim < 0) throw std::invalid_argument("dimension must be nonnegative");
  for (const auto& [deg, r] : l.ranks) {
    if (r < 0) throw std::invalid_argument("ranks must be nonnegative");
    if (deg < 0 && r > 0) throw std::invalid_argument("ranks below degree zero must vanish");
  }
  if (l.rank(0) != 1) throw std::invalid_argument("degree zero must have rank one");

  LacunaryResult result;
  if (l.tail_min_degree() < 0) {
    result.steps = 0;  // already a summand
    return result;
  }
  const int steps = target_dim <= 1 ? 0 : (target_dim - 1 + 1) / 2;
  GradedDims tail_l;  // the fixed truncated factor
  for (const auto& [deg, r] : l.ranks)
    if (deg >= 1) tail_l.ranks[deg] = r;

  GradedDims cur = l;
  for (int i = 0; i < steps; ++i) {
    // invariant: cur is 2i-lacunary
    int tmin = cur.tail_min_degree();
    if (tmin >= 0 && tmin < 2 * i + 1)
      throw std::logic_error("lacunarity invariant failed");
    // next tail: tensor of the two truncations, then the shift raising
    // cohomological degrees by one
    GradedDims next;
    next.ranks[0] = 1;
    for (const auto& [p, rp] : tail_l.ranks)
      for (const auto& [q, rq] : cur.ranks) {
        if (q < 1 || rq == 0 || rp == 0) continue;
        next.ranks[p + q + 1] += rp * rq;
      }
    cur = next;
    int new_tail = cur.tail_min_degree();
    if (new_tail >= 0 && new_tail < 2 * (i + 1) + 1)
      throw std::logic_error("tail entered the forbidden window");
    result.trace.push_back(LacunaryTraceStep{i + 1, 2 * (i + 1), new_tail});
  }
  result.steps = steps;
  return result;
}

ConjectureReport verify_conjecture(const LagrangianModel& model, const GroupGeometry& geometry,
                                   std::int64_t prime) {
  ConjectureReport report;
  report.margin = unit_ball_margin(model);
  if (report.margin < Scalar())
    throw std::runtime_error("model leaves the unit ball bundle; bound does not apply");

  report.l_max = Scalar();
  if (model.kind == LagrangianModel::Kind::Curve) report.l_max = reeb_chords(model).l_max;

  if (geometry.is_quotient)
    report.bound = homogeneous_bound(geometry.m, geometry.n, geometry.l, report.l_max).value;
  else
    report.bound = group_bound(geometry.n, geometry.l, report.l_max);

  std::ostringstream detail;
  detail << "geometry " << geometry.name << ": n=" << geometry.n << " m=" << geometry.m
         << " l=" << geometry.l.to_string() << "\n";
  detail << "margin " << report.margin.to_string() << "\n";
  detail << "l_max " << report.l_max.to_string() << "\n";
  detail << "bound " << report.bound.to_string() << "\n";

  if (model.kind == LagrangianModel::Kind::Graph) {
    auto spectral = spectral_from_function(model_complex(model), model.values, prime);
    report.spectral = spectral.spectral;
    report.has_spectral = true;
    report.depth = hom_ray_depth(spectral.barcode, spectral.barcode);
    report.gamma_le_depth = report.spectral.gamma <= report.depth;
    report.depth_le_bound = !(geometry.is_quotient) ? report.depth <= report.bound : true;
    report.pass = report.gamma_le_depth && report.depth_le_bound;
    detail << "gamma " << report.spectral.gamma.to_string() << "\n";
    detail << "depth " << report.depth.to_string() << "\n";
    detail << "gamma <= depth: " << (report.gamma_le_depth ? "yes" : "NO") << "\n";
    detail << "depth <= bound: " << (report.depth_le_bound ? "yes" : "NO") << "\n";
  } else {
    // No generating function: report the bound conditionally on a sheaf
    // model existing for the curve.
    report.pass = true;
    detail << "immersed curve: bound reported conditionally (includes l_max)\n";
  }
  detail << (report.pass ? "PASS" : "FAIL") << "\n";
  report.detail = detail.str();
  return report;
}

}  // namespace tamcalc

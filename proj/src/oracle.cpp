#include "tamcalc/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "tamcalc/homstar.hpp"

namespace tamcalc {
namespace oracle {

namespace {

// tau <= sigma in the face order of one line: tau lies in the closure of
// sigma.
bool le_closure1(int tau, int sigma) {
  if (tau == sigma) return true;
  if (Grid1::is_point(tau) && !Grid1::is_point(sigma)) return tau + 1 == sigma || tau - 1 == sigma;
  return false;
}

bool le_closure2(int tx, int ty, int sx, int sy) {
  return le_closure1(tx, sx) && le_closure1(ty, sy);
}

// Closed-cover resolution of the constant sheaf on a locally closed cell
// range: level 0 carries the closures of the interval cells (or the single
// point), level 1 the correction points.
struct Eres1 {
  std::vector<int> e0;
  std::vector<int> e1;
};

Eres1 eres_range(const Grid1& g, int lo, int hi) {
  if (lo > hi || lo < 0 || hi >= g.num_cells()) throw std::invalid_argument("bad cell range");
  Eres1 r;
  if (lo == hi && Grid1::is_point(lo)) {
    r.e0.push_back(lo);
    return r;
  }
  for (int c = lo; c <= hi; ++c)
    if (!Grid1::is_point(c)) r.e0.push_back(c);
  for (int p = 1; p < g.num_cells(); p += 2) {
    int in_l = (p - 1 >= lo && p - 1 <= hi) ? 1 : 0;
    int in_r = (p + 1 >= lo && p + 1 <= hi) ? 1 : 0;
    int in_p = (p >= lo && p <= hi) ? 1 : 0;
    int m = in_l + in_r - in_p;
    if (m == 1) r.e1.push_back(p);
    if (m < 0 || m > 1) throw std::logic_error("malformed cell range");
  }
  return r;
}

// Coefficient of the restriction from the closure of interval cell I to the
// point cell p in the covering differential.
int cover_coeff(int interval_cell, int point_cell) {
  if (point_cell == interval_cell + 1) return 1;
  if (point_cell == interval_cell - 1) return -1;
  return 0;
}

std::vector<int> term_offsets(const std::vector<InjSummand>& terms) {
  std::vector<int> offs;
  int t = 0;
  for (const InjSummand& s : terms) {
    offs.push_back(t);
    t += s.dim;
  }
  offs.push_back(t);
  return offs;
}

}  // namespace

int Inj2::total_dim(int deg) const {
  if (deg < deg_lo || deg >= deg_hi()) return 0;
  int t = 0;
  for (const InjSummand& s : terms[deg - deg_lo]) t += s.dim;
  return t;
}

void Inj2::check() const {
  for (std::size_t k = 0; k < diff.size(); ++k) {
    if (diff[k].rows() != total_dim(deg_lo + static_cast<int>(k) + 1) ||
        diff[k].cols() != total_dim(deg_lo + static_cast<int>(k)))
      throw std::logic_error("injective complex differential has wrong shape");
    if (k + 1 < diff.size())
      if (!(diff[k + 1] * diff[k]).is_zero())
        throw std::logic_error("injective complex differential does not square to zero");
    // blocks only between comparable cells
    auto of0 = term_offsets(terms[k]);
    auto of1 = term_offsets(terms[k + 1]);
    for (std::size_t s = 0; s < terms[k].size(); ++s)
      for (std::size_t t = 0; t < terms[k + 1].size(); ++t) {
        const InjSummand& ss = terms[k][s];
        const InjSummand& tt = terms[k + 1][t];
        if (le_closure2(tt.cx, tt.cy, ss.cx, ss.cy)) continue;
        for (int i = 0; i < tt.dim; ++i)
          for (int j = 0; j < ss.dim; ++j)
            if (!f.is_zero(diff[k].at(of1[t] + i, of0[s] + j)))
              throw std::logic_error("differential block between incomparable cells");
      }
  }
}

Inj2 resolve_boxes(const Grid1& gx, const Grid1& gy, Field f, const std::vector<BoxSheaf>& boxes) {
  Inj2 out;
  out.gx = gx;
  out.gy = gy;
  out.f = f;
  if (boxes.empty()) {
    out.deg_lo = 0;
    out.terms.assign(1, {});
    return out;
  }
  int dlo = boxes[0].degree, dhi = boxes[0].degree;
  for (const BoxSheaf& b : boxes) {
    dlo = std::min(dlo, b.degree);
    dhi = std::max(dhi, b.degree + 2);
  }
  out.deg_lo = dlo;
  out.terms.assign(dhi - dlo + 1, {});

  struct Located {
    int box;
    int lvl_x, lvl_y;
    int xc, yc;
    int index;  // summand index within its degree
  };
  std::vector<Located> all;
  std::vector<Eres1> ex, ey;
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    ex.push_back(eres_range(gx, boxes[b].x_lo, boxes[b].x_hi));
    ey.push_back(eres_range(gy, boxes[b].y_lo, boxes[b].y_hi));
  }
  for (std::size_t b = 0; b < boxes.size(); ++b)
    for (int lx = 0; lx < 2; ++lx)
      for (int ly = 0; ly < 2; ++ly) {
        const std::vector<int>& cx = lx ? ex[b].e1 : ex[b].e0;
        const std::vector<int>& cy = ly ? ey[b].e1 : ey[b].e0;
        int deg = boxes[b].degree + lx + ly;
        for (int xc : cx)
          for (int yc : cy) {
            InjSummand s{xc, yc, boxes[b].mult, static_cast<int>(b), lx + ly};
            auto& list = out.terms[deg - dlo];
            all.push_back(Located{static_cast<int>(b), lx, ly, xc, yc,
                                  static_cast<int>(list.size())});
            list.push_back(s);
          }
      }
  // differentials
  out.diff.clear();
  for (int k = 0; k + 1 < static_cast<int>(out.terms.size()); ++k)
    out.diff.push_back(Mat(f, out.total_dim(dlo + k + 1), out.total_dim(dlo + k)));
  auto offs = [&](int deg) { return term_offsets(out.terms[deg - dlo]); };
  for (const Located& src : all) {
    const BoxSheaf& box = boxes[src.box];
    int sdeg = box.degree + src.lvl_x + src.lvl_y;
    if (sdeg + 1 >= dlo + static_cast<int>(out.terms.size())) continue;
    auto o0 = offs(sdeg);
    auto o1 = offs(sdeg + 1);
    for (const Located& dst : all) {
      if (dst.box != src.box) continue;
      int coeff = 0;
      if (dst.lvl_x == src.lvl_x + 1 && dst.lvl_y == src.lvl_y && dst.yc == src.yc)
        coeff = cover_coeff(src.xc, dst.xc);
      else if (dst.lvl_y == src.lvl_y + 1 && dst.lvl_x == src.lvl_x && dst.xc == src.xc)
        coeff = cover_coeff(src.yc, dst.yc) * (src.lvl_x == 1 ? -1 : 1);
      if (coeff == 0) continue;
      Mat& d = out.diff[sdeg - dlo];
      FElem v = f.from_int(coeff);
      // find the summand offsets
      int so = o0[src.index], to = o1[dst.index];
      for (int t = 0; t < box.mult; ++t) d.set(to + t, so + t, v);
    }
  }
  return out;
}

namespace {

// Cellwise value structure of an injective complex: the summands whose
// closed cell contains gamma, with their offsets.
std::vector<std::pair<int, int>> alive_at(const std::vector<InjSummand>& terms, int gx_cell,
                                          int gy_cell) {
  std::vector<std::pair<int, int>> out;  // (summand index, offset)
  int off = 0;
  for (std::size_t s = 0; s < terms.size(); ++s) {
    if (le_closure2(gx_cell, gy_cell, terms[s].cx, terms[s].cy))
      out.emplace_back(static_cast<int>(s), off);
    off += terms[s].dim;
  }
  return out;
}

}  // namespace

Inj2Map lift_box_map(const Inj2& src, const std::vector<BoxSheaf>& src_boxes, const Inj2& dst,
                     const std::vector<BoxSheaf>& dst_boxes,
                     const std::map<std::pair<int, int>, Mat>& phi) {
  const Field f = src.f;
  const int dlo = std::min(src.deg_lo, dst.deg_lo);
  const int dhi = std::max(src.deg_hi(), dst.deg_hi());
  auto src_terms = [&](int d) {
    static const std::vector<InjSummand> empty;
    return (d >= src.deg_lo && d < src.deg_hi()) ? src.terms[d - src.deg_lo] : empty;
  };
  auto dst_terms = [&](int d) {
    static const std::vector<InjSummand> empty;
    return (d >= dst.deg_lo && d < dst.deg_hi()) ? dst.terms[d - dst.deg_lo] : empty;
  };
  // Unknown blocks per degree: comparable (target, source) summand pairs.
  struct Block {
    int deg, t, s;
    int rows, cols;
    int var_base;
  };
  std::vector<Block> blocks;
  int nvars = 0;
  for (int d = dlo; d < dhi; ++d) {
    const auto& st = src_terms(d);
    const auto& dt = dst_terms(d);
    for (std::size_t t = 0; t < dt.size(); ++t)
      for (std::size_t s = 0; s < st.size(); ++s) {
        if (!le_closure2(dt[t].cx, dt[t].cy, st[s].cx, st[s].cy)) continue;
        blocks.push_back(Block{d, static_cast<int>(t), static_cast<int>(s), dt[t].dim, st[s].dim,
                               nvars});
        nvars += dt[t].dim * st[s].dim;
      }
  }
  auto block_at = [&](int d, int t, int s) -> const Block* {
    for (const Block& b : blocks)
      if (b.deg == d && b.t == t && b.s == s) return &b;
    return nullptr;
  };

  std::vector<std::vector<FElem>> rows;
  std::vector<FElem> rhs;
  auto new_row = [&]() {
    rows.emplace_back(nvars, f.zero());
    rhs.push_back(f.zero());
    return static_cast<int>(rows.size()) - 1;
  };

  // Chain condition: L[d+1] * D_src[d] = D_dst[d] * L[d].
  for (int d = dlo; d + 1 < dhi; ++d) {
    const auto& st0 = src_terms(d);
    const auto& st1 = src_terms(d + 1);
    const auto& dt0 = dst_terms(d);
    const auto& dt1 = dst_terms(d + 1);
    auto so0 = term_offsets(st0), so1 = term_offsets(st1);
    auto do0 = term_offsets(dt0), do1 = term_offsets(dt1);
    bool src_d = d >= src.deg_lo && d + 1 < src.deg_hi();
    bool dst_d = d >= dst.deg_lo && d + 1 < dst.deg_hi();
    for (std::size_t t1 = 0; t1 < dt1.size(); ++t1)
      for (std::size_t s0 = 0; s0 < st0.size(); ++s0)
        for (int i = 0; i < dt1[t1].dim; ++i)
          for (int j = 0; j < st0[s0].dim; ++j) {
            int row = new_row();
            // sum_t0 Ddst[t1,t0] L[d][t0,s0] : coefficient on L-vars
            if (dst_d)
              for (std::size_t t0 = 0; t0 < dt0.size(); ++t0) {
                const Block* b = block_at(d, static_cast<int>(t0), static_cast<int>(s0));
                if (!b) continue;
                for (int r0 = 0; r0 < dt0[t0].dim; ++r0) {
                  FElem c = dst.diff[d - dst.deg_lo].at(do1[t1] + i, do0[t0] + r0);
                  if (f.is_zero(c)) continue;
                  int vi = b->var_base + r0 * b->cols + j;
                  rows[row][vi] = f.add(rows[row][vi], c);
                }
              }
            // - sum_s1 L[d+1][t1,s1] Dsrc[s1,s0]
            if (src_d)
              for (std::size_t s1 = 0; s1 < st1.size(); ++s1) {
                const Block* b = block_at(d + 1, static_cast<int>(t1), static_cast<int>(s1));
                if (!b) continue;
                for (int c1 = 0; c1 < st1[s1].dim; ++c1) {
                  FElem c = src.diff[d - src.deg_lo].at(so1[s1] + c1, so0[s0] + j);
                  if (f.is_zero(c)) continue;
                  int vi = b->var_base + i * b->cols + c1;
                  rows[row][vi] = f.sub(rows[row][vi], c);
                }
              }
          }
  }

  // Augmentation condition at every cell of the union of supports.
  std::vector<std::pair<int, int>> cells;
  {
    std::vector<std::vector<bool>> seen(src.gx.num_cells(),
                                        std::vector<bool>(src.gy.num_cells(), false));
    auto absorb = [&](const std::vector<BoxSheaf>& bs) {
      for (const BoxSheaf& b : bs)
        for (int x = b.x_lo; x <= b.x_hi; ++x)
          for (int y = b.y_lo; y <= b.y_hi; ++y)
            if (!seen[x][y]) {
              seen[x][y] = true;
              cells.emplace_back(x, y);
            }
    };
    absorb(src_boxes);
    absorb(dst_boxes);
  }
  for (auto [gxc, gyc] : cells) {
    // degrees present among boxes at this cell
    for (int d = dlo; d < dhi; ++d) {
      const auto& st0 = src_terms(d);
      const auto& dt0 = dst_terms(d);
      auto alive_t = alive_at(dt0, gxc, gyc);
      // source boxes of degree d alive at the cell
      for (std::size_t b = 0; b < src_boxes.size(); ++b) {
        const BoxSheaf& sb = src_boxes[b];
        if (sb.degree != d) continue;
        if (gxc < sb.x_lo || gxc > sb.x_hi || gyc < sb.y_lo || gyc > sb.y_hi) continue;
        for (auto [t, t_off] : alive_t) {
          (void)t_off;
          for (int i = 0; i < dt0[t].dim; ++i)
            for (int j = 0; j < sb.mult; ++j) {
              int row = new_row();
              // LHS: sum over source level-0 summands of box b alive at cell
              std::size_t s = 0;
              for (; s < st0.size(); ++s) {
                const InjSummand& ss = st0[s];
                if (ss.box_id != static_cast<int>(b) || ss.level != 0) continue;
                if (!le_closure2(gxc, gyc, ss.cx, ss.cy)) continue;
                const Block* blk = block_at(d, t, static_cast<int>(s));
                if (!blk) continue;
                int vi = blk->var_base + i * blk->cols + j;
                rows[row][vi] = f.add(rows[row][vi], f.one());
              }
              // RHS: sum over dst boxes b2 with phi[(b,b2)] and t a level-0
              // summand of b2
              const InjSummand& tt = dt0[t];
              FElem r = f.zero();
              if (tt.level == 0 && tt.box_id >= 0) {
                auto it = phi.find({static_cast<int>(b), tt.box_id});
                if (it != phi.end()) {
                  const BoxSheaf& db = dst_boxes[tt.box_id];
                  if (db.degree == d && gxc >= db.x_lo && gxc <= db.x_hi && gyc >= db.y_lo &&
                      gyc <= db.y_hi)
                    r = it->second.at(i, j);
                }
              }
              rhs[static_cast<std::size_t>(row)] = r;
            }
        }
      }
    }
  }

  Mat system(f, static_cast<int>(rows.size()), nvars);
  Mat b(f, static_cast<int>(rows.size()), 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < nvars; ++c) system.set(static_cast<int>(r), c, rows[r][c]);
    b.set(static_cast<int>(r), 0, rhs[r]);
  }
  auto sol = system.solve(b);
  if (!sol) throw std::logic_error("no lift of the box map exists");

  Inj2Map out;
  for (int d = dlo; d < dhi; ++d) {
    const auto& st = src_terms(d);
    const auto& dt = dst_terms(d);
    auto so = term_offsets(st);
    auto dofs = term_offsets(dt);
    Mat m(f, dofs.back(), so.back());
    for (const Block& blk : blocks) {
      if (blk.deg != d) continue;
      for (int i = 0; i < blk.rows; ++i)
        for (int j = 0; j < blk.cols; ++j)
          m.set(dofs[blk.t] + i, so[blk.s] + j, sol->at(blk.var_base + i * blk.cols + j, 0));
    }
    out.comp.push_back(m);
  }
  return out;
}

Inj2 hom_from_pullback(const Inj2& target, const CellComplex1& hom_values, bool values_on_y) {
  const Field f = target.f;
  Inj2 out;
  out.gx = target.gx;
  out.gy = target.gy;
  out.f = f;
  const int plo = hom_values.deg_lo(), phi_deg = hom_values.deg_hi();
  const int mlo = target.deg_lo - (phi_deg - 1);
  const int mhi = (target.deg_hi() - 1) - plo + 1;
  out.deg_lo = mlo;
  out.terms.assign(mhi - mlo + 1, {});

  // summand bookkeeping: (target degree q, summand index, p) -> out index
  struct Origin {
    int q, s, p;
  };
  std::vector<std::vector<Origin>> origins(out.terms.size());
  auto axis_cell = [&](const InjSummand& s) { return values_on_y ? s.cy : s.cx; };
  for (int q = target.deg_lo; q < target.deg_hi(); ++q) {
    const auto& terms = target.terms[q - target.deg_lo];
    for (std::size_t s = 0; s < terms.size(); ++s)
      for (int p = plo; p < phi_deg; ++p) {
        int a = hom_values.dim(axis_cell(terms[s]), p);
        if (a == 0) continue;
        int m = q - p;
        out.terms[m - mlo].push_back(
            InjSummand{terms[s].cx, terms[s].cy, a * terms[s].dim, -1, terms[s].level});
        origins[m - mlo].push_back(Origin{q, static_cast<int>(s), p});
      }
  }
  for (int k = 0; k + 1 < static_cast<int>(out.terms.size()); ++k)
    out.diff.push_back(Mat(f, out.total_dim(mlo + k + 1), out.total_dim(mlo + k)));

  // structure map of the pullback between two comparable cells
  auto pull_struct = [&](int tau_axis, int sigma_axis, int p) -> Mat {
    if (tau_axis == sigma_axis) return Mat::identity(f, hom_values.dim(tau_axis, p));
    // tau is a point adjacent to the interval sigma
    bool right = sigma_axis == tau_axis + 1;
    return hom_values.arrow(tau_axis, right, p);
  };

  for (int m = mlo; m + 1 < mhi + 1 && m - mlo + 1 < static_cast<int>(out.terms.size()); ++m) {
    const auto& t0 = out.terms[m - mlo];
    const auto& t1 = out.terms[m - mlo + 1];
    auto o0 = term_offsets(t0);
    auto o1 = term_offsets(t1);
    Mat& d = out.diff[m - mlo];
    for (std::size_t a = 0; a < t0.size(); ++a) {
      Origin oa = origins[m - mlo][a];
      for (std::size_t b = 0; b < t1.size(); ++b) {
        Origin ob = origins[m - mlo + 1][b];
        if (ob.p != oa.p || ob.q != oa.q + 1) continue;
        if (oa.q < target.deg_lo || oa.q + 1 >= target.deg_hi()) continue;
        const auto& src_terms = target.terms[oa.q - target.deg_lo];
        const auto& dst_terms = target.terms[oa.q + 1 - target.deg_lo];
        auto so = term_offsets(src_terms);
        auto dofs = term_offsets(dst_terms);
        const InjSummand& ss = src_terms[oa.s];
        const InjSummand& tt = dst_terms[ob.s];
        // block C of the target differential
        const Mat& big = target.diff[oa.q - target.deg_lo];
        bool nonzero = false;
        for (int i = 0; i < tt.dim && !nonzero; ++i)
          for (int j = 0; j < ss.dim && !nonzero; ++j)
            if (!f.is_zero(big.at(dofs[ob.s] + i, so[oa.s] + j))) nonzero = true;
        if (!nonzero) continue;
        Mat astruct = pull_struct(axis_cell(tt), axis_cell(ss), oa.p);
        // out block: rows (a2, v2), cols (a1, v1):
        //   value = astruct[a1, a2] * C[v2, v1]
        int adim_t = hom_values.dim(axis_cell(tt), oa.p);
        int adim_s = hom_values.dim(axis_cell(ss), oa.p);
        for (int a2 = 0; a2 < adim_t; ++a2)
          for (int a1 = 0; a1 < adim_s; ++a1) {
            FElem fa = astruct.at(a1, a2);
            if (f.is_zero(fa)) continue;
            for (int v2 = 0; v2 < tt.dim; ++v2)
              for (int v1 = 0; v1 < ss.dim; ++v1) {
                FElem c = big.at(dofs[ob.s] + v2, so[oa.s] + v1);
                if (f.is_zero(c)) continue;
                d.set(o1[b] + a2 * tt.dim + v2, o0[a] + a1 * ss.dim + v1, f.mul(fa, c));
              }
          }
      }
    }
  }
  return out;
}

namespace {

struct StripBounds {
  Scalar lo, hi;  // open strip (lo, hi) in the target line
};

StripBounds strip_for_cell(const Grid1& target, int cell) {
  if (Grid1::is_point(cell)) {
    int k = (cell - 1) / 2;
    Scalar lo = k == 0 ? Scalar::neg_inf() : target.breakpoints()[k - 1];
    Scalar hi = k + 1 == target.num_breakpoints() ? Scalar::pos_inf() : target.breakpoints()[k + 1];
    return {lo, hi};
  }
  return {target.closure_lo(cell), target.closure_hi(cell)};
}

bool summand_alive(const Inj2& k, const InjSummand& s, const StripBounds& strip) {
  Scalar sum_lo = k.gx.closure_lo(s.cx) + k.gy.closure_lo(s.cy);
  Scalar sum_hi = k.gx.closure_hi(s.cx) + k.gy.closure_hi(s.cy);
  return sum_lo < strip.hi && sum_hi > strip.lo;
}

// Indices and offsets of the summands alive in a strip, per degree.
struct AliveTable {
  std::vector<std::vector<int>> idx;      // per degree: summand indices
  std::vector<std::vector<int>> offsets;  // per degree: local offsets
  std::vector<int> dims;                  // per degree: total alive dim
};

AliveTable alive_table(const Inj2& k, const StripBounds& strip) {
  AliveTable t;
  for (std::size_t d = 0; d < k.terms.size(); ++d) {
    std::vector<int> idx, offs;
    int dim = 0;
    for (std::size_t s = 0; s < k.terms[d].size(); ++s)
      if (summand_alive(k, k.terms[d][s], strip)) {
        idx.push_back(static_cast<int>(s));
        offs.push_back(dim);
        dim += k.terms[d][s].dim;
      }
    t.idx.push_back(idx);
    t.offsets.push_back(offs);
    t.dims.push_back(dim);
  }
  return t;
}

Mat masked_block(const Inj2& k, int deg_index, const AliveTable& to_tab, int to_deg_index,
                 const AliveTable& from_tab) {
  // Extract the submatrix of k.diff[deg_index] over alive rows/cols.
  const Mat& big = k.diff[deg_index];
  auto from_offs = term_offsets(k.terms[deg_index]);
  auto to_offs = term_offsets(k.terms[to_deg_index]);
  Mat m(k.f, to_tab.dims[to_deg_index], from_tab.dims[deg_index]);
  for (std::size_t a = 0; a < from_tab.idx[deg_index].size(); ++a) {
    int s = from_tab.idx[deg_index][a];
    for (std::size_t b = 0; b < to_tab.idx[to_deg_index].size(); ++b) {
      int t = to_tab.idx[to_deg_index][b];
      for (int i = 0; i < k.terms[to_deg_index][t].dim; ++i)
        for (int j = 0; j < k.terms[deg_index][s].dim; ++j)
          m.set(to_tab.offsets[to_deg_index][b] + i, from_tab.offsets[deg_index][a] + j,
                big.at(to_offs[t] + i, from_offs[s] + j));
    }
  }
  return m;
}

}  // namespace

CellComplex1 push_sum(const Inj2& k, const Grid1& target) {
  const Field f = k.f;
  const int dlo = k.deg_lo, dhi = k.deg_hi();
  CellComplex1 out(target, f, dlo, dhi);
  std::vector<AliveTable> tabs;
  for (int c = 0; c < target.num_cells(); ++c)
    tabs.push_back(alive_table(k, strip_for_cell(target, c)));
  for (int c = 0; c < target.num_cells(); ++c)
    for (int d = dlo; d < dhi; ++d) out.set_dims(c, d, tabs[c].dims[d - dlo]);
  out.finalize_shapes();
  for (int c = 0; c < target.num_cells(); ++c)
    for (int d = dlo; d + 1 < dhi; ++d)
      out.diff(c, d) = masked_block(k, d - dlo, tabs[c], d - dlo + 1, tabs[c]);
  // arrows: restriction from the star of a point into each adjacent interval
  for (int p = 1; p < target.num_cells(); p += 2)
    for (bool right : {false, true}) {
      int nb = right ? p + 1 : p - 1;
      for (int d = dlo; d < dhi; ++d) {
        Mat m(f, tabs[nb].dims[d - dlo], tabs[p].dims[d - dlo]);
        // identity on summands alive in both strips
        const auto& pi = tabs[p].idx[d - dlo];
        const auto& ni = tabs[nb].idx[d - dlo];
        for (std::size_t a = 0; a < ni.size(); ++a) {
          auto it = std::find(pi.begin(), pi.end(), ni[a]);
          if (it == pi.end())
            throw std::logic_error("summand alive in an interval but not in the adjacent star");
          int ap = static_cast<int>(it - pi.begin());
          int dim = k.terms[d - dlo][ni[a]].dim;
          for (int t = 0; t < dim; ++t)
            m.set(tabs[nb].offsets[d - dlo][a] + t, tabs[p].offsets[d - dlo][ap] + t, f.one());
        }
        out.arrow(p, right, d) = m;
      }
    }
  return out;
}

ChainMap1 push_sum_map(const Inj2& src, const CellComplex1& pushed_src, const Inj2& dst,
                       const CellComplex1& pushed_dst, const Inj2Map& map, const Grid1& target) {
  const Field f = src.f;
  const int dlo = std::min(src.deg_lo, dst.deg_lo);
  ChainMap1 out;
  out.src = &pushed_src;
  out.dst = &pushed_dst;
  out.comp.assign(target.num_cells(), {});
  for (int c = 0; c < target.num_cells(); ++c) {
    StripBounds strip = strip_for_cell(target, c);
    AliveTable ts = alive_table(src, strip);
    AliveTable td = alive_table(dst, strip);
    for (int d = pushed_src.deg_lo(); d < pushed_src.deg_hi(); ++d) {
      Mat m(f, pushed_dst.dim(c, d), pushed_src.dim(c, d));
      int sd = d - src.deg_lo, dd = d - dst.deg_lo;
      int md = d - dlo;
      if (sd >= 0 && sd < static_cast<int>(src.terms.size()) && dd >= 0 &&
          dd < static_cast<int>(dst.terms.size()) && md >= 0 &&
          md < static_cast<int>(map.comp.size())) {
        auto so = term_offsets(src.terms[sd]);
        auto dofs = term_offsets(dst.terms[dd]);
        const Mat& big = map.comp[md];
        for (std::size_t a = 0; a < ts.idx[sd].size(); ++a) {
          int s = ts.idx[sd][a];
          for (std::size_t b = 0; b < td.idx[dd].size(); ++b) {
            int t = td.idx[dd][b];
            for (int i = 0; i < dst.terms[dd][t].dim; ++i)
              for (int j = 0; j < src.terms[sd][s].dim; ++j)
                m.set(td.offsets[dd][b] + i, ts.offsets[sd][a] + j,
                      big.at(dofs[t] + i, so[s] + j));
          }
        }
      }
      out.comp[c].push_back(m);
    }
  }
  return out;
}

namespace {

Barcode reflect_barcode(const Barcode& b) {
  std::vector<Bar> bars;
  for (const Bar& bar : b.bars()) {
    auto iv = Interval::make(-bar.interval.hi(), -bar.interval.lo(), bar.interval.hi_open(),
                             bar.interval.lo_open());
    if (!iv) throw std::logic_error("reflection produced an empty interval");
    bars.push_back(Bar{*iv, bar.degree, bar.mult});
  }
  return Barcode(std::move(bars));
}

Grid1 sum_grid(const Grid1& gx, const Grid1& gy, const std::vector<Scalar>& extra) {
  std::vector<Scalar> sums = extra;
  for (const Scalar& a : gx.breakpoints())
    for (const Scalar& b : gy.breakpoints()) sums.push_back(a + b);
  return Grid1(std::move(sums));
}

}  // namespace

CellComplex1 hom_star_complex(const Barcode& lhs, const Barcode& rhs, Field f,
                              const std::vector<Scalar>& extra_breakpoints) {
  if (lhs.empty() || rhs.empty()) {
    Grid1 target(extra_breakpoints);
    return CellComplex1(target, f, 0, 1);
  }
  Barcode refl = reflect_barcode(lhs);
  Grid1 gy = grid_from_barcode(refl);
  Grid1 gx = grid_from_barcode(rhs);
  CellComplex1 refl_cx = embed_barcode(refl, gy, f);
  std::vector<BoxSheaf> boxes;
  for (const Bar& bar : rhs.bars()) {
    auto xr = gx.cell_range(bar.interval);
    boxes.push_back(BoxSheaf{xr.first, xr.second, 0, gy.num_cells() - 1,
                             static_cast<int>(bar.mult), -bar.degree - 1});
  }
  Inj2 j = resolve_boxes(gx, gy, f, boxes);
  Inj2 k = hom_from_pullback(j, refl_cx, /*values_on_y=*/true);
  Grid1 target = sum_grid(gx, gy, extra_breakpoints);
  return push_sum(k, target);
}

Barcode hom_star(const Barcode& lhs, const Barcode& rhs, Field f) {
  return decompose_complex(hom_star_complex(lhs, rhs, f, {}));
}

TauProbe tau_single(const Interval& iv, Scalar c, Field f) {
  if (c < Scalar() || !c.finite()) throw std::invalid_argument("tau requires finite c >= 0");
  std::vector<Scalar> xb;
  for (const Scalar& e : {iv.lo(), iv.hi(), iv.lo() + c, iv.hi() + c})
    if (e.finite()) xb.push_back(e);
  Grid1 gx(xb);
  std::vector<Scalar> yb{Scalar()};
  if (!c.is_zero()) yb.push_back(c);
  Grid1 gy(yb);

  auto xr = gx.cell_range(iv);
  auto ray = gy.cell_range(Interval::closed_ray(Scalar()));
  int pt_c = gy.locate(c);
  int pt_0 = gy.locate(Scalar());

  std::vector<BoxSheaf> box_p{BoxSheaf{xr.first, xr.second, ray.first, ray.second, 1, 0}};
  std::vector<BoxSheaf> box_c{BoxSheaf{xr.first, xr.second, pt_c, pt_c, 1, 0}};
  std::vector<BoxSheaf> box_0{BoxSheaf{xr.first, xr.second, pt_0, pt_0, 1, 0}};

  Inj2 jp = resolve_boxes(gx, gy, f, box_p);
  Inj2 jc = resolve_boxes(gx, gy, f, box_c);
  Inj2 j0 = resolve_boxes(gx, gy, f, box_0);

  std::map<std::pair<int, int>, Mat> phi;
  phi[{0, 0}] = Mat::identity(f, 1);
  Inj2Map lc = lift_box_map(jp, box_p, jc, box_c, phi);
  Inj2Map l0 = lift_box_map(jp, box_p, j0, box_0, phi);

  Grid1 target = sum_grid(gx, gy, {});
  CellComplex1 pm = push_sum(jp, target);
  CellComplex1 cm = push_sum(jc, target);
  CellComplex1 zm = push_sum(j0, target);
  ChainMap1 mc = push_sum_map(jp, pm, jc, cm, lc, target);
  ChainMap1 m0 = push_sum_map(jp, pm, j0, zm, l0, target);

  TauProbe probe;
  probe.model_ok = true;
  // P(F) -> F must be a quasi-isomorphism (per-cell cohomology iso).
  for (int d = pm.deg_lo(); d < pm.deg_hi(); ++d) {
    auto h_src = pm.cohomology_sheaf(d);
    auto h_dst = zm.cohomology_sheaf(d);
    auto maps = induced_on_cohomology(m0, d);
    for (int cell = 0; cell < target.num_cells(); ++cell) {
      if (h_src.dims[cell] != h_dst.dims[cell] || maps[cell].rank() != h_src.dims[cell]) {
        probe.model_ok = false;
        break;
      }
    }
    if (!probe.model_ok) break;
  }
  probe.zero = true;
  for (int d = pm.deg_lo(); d < pm.deg_hi(); ++d) {
    auto maps = induced_on_cohomology(mc, d);
    if (d == 0) probe.h0_map = maps;
    for (const Mat& m : maps)
      if (!m.is_zero()) probe.zero = false;
  }
  return probe;
}

TauReport tau_morphism(const Barcode& b, Scalar c, Field f) {
  thread_local std::unordered_map<std::string, std::pair<bool, bool>> cache;
  TauReport report;
  for (const Bar& bar : b.bars()) {
    // normalize by translation to keep the cache small
    Scalar base = bar.interval.lo().finite() ? bar.interval.lo() : bar.interval.hi();
    Interval norm = bar.interval.translate(-base);
    std::string key = norm.to_string() + "|" + c.to_string() + "|" +
                      std::to_string(f.prime());
    auto it = cache.find(key);
    std::pair<bool, bool> verdict;
    if (it != cache.end()) {
      verdict = it->second;
    } else {
      TauProbe probe = tau_single(norm, c, f);
      verdict = {probe.zero, probe.model_ok};
      cache[key] = verdict;
    }
    report.bars.push_back(TauReport::BarVerdict{bar.interval, bar.degree, bar.mult, verdict.first});
    report.zero = report.zero && verdict.first;
    report.model_ok = report.model_ok && verdict.second;
  }
  return report;
}

namespace {

// 1-D injective resolution of a barcode: level-0 closed interval covers and
// level-1 correction points, per bar.
struct Inj1 {
  Grid1 g;
  Field f = Field::fp(2);
  int deg_lo = 0;
  struct Summand {
    int cell;
    int dim;
  };
  std::vector<std::vector<Summand>> terms;
  std::vector<Mat> diff;

  int deg_hi() const { return deg_lo + static_cast<int>(terms.size()); }
  int total_dim(int deg) const {
    if (deg < deg_lo || deg >= deg_hi()) return 0;
    int t = 0;
    for (const Summand& s : terms[deg - deg_lo]) t += s.dim;
    return t;
  }
};

Inj1 resolve_barcode_1d(const Barcode& b, const Grid1& g, Field f) {
  Inj1 out;
  out.g = g;
  out.f = f;
  if (b.empty()) {
    out.terms.assign(1, {});
    return out;
  }
  int dlo = 1 << 20, dhi = -(1 << 20);
  for (const Bar& bar : b.bars()) {
    dlo = std::min(dlo, -bar.degree);
    dhi = std::max(dhi, -bar.degree + 2);
  }
  out.deg_lo = dlo;
  out.terms.assign(dhi - dlo, {});
  struct Located {
    int bar, level, cell, index;
  };
  std::vector<Located> all;
  std::vector<Eres1> er;
  const auto& bars = b.bars();
  for (std::size_t i = 0; i < bars.size(); ++i) {
    auto r = g.cell_range(bars[i].interval);
    er.push_back(eres_range(g, r.first, r.second));
  }
  for (std::size_t i = 0; i < bars.size(); ++i)
    for (int lvl = 0; lvl < 2; ++lvl) {
      const auto& cells = lvl ? er[i].e1 : er[i].e0;
      int deg = -bars[i].degree + lvl;
      for (int cell : cells) {
        auto& list = out.terms[deg - dlo];
        all.push_back(Located{static_cast<int>(i), lvl, cell, static_cast<int>(list.size())});
        list.push_back(Inj1::Summand{cell, static_cast<int>(bars[i].mult)});
      }
    }
  for (int k = 0; k + 1 < static_cast<int>(out.terms.size()); ++k)
    out.diff.push_back(Mat(f, out.total_dim(dlo + k + 1), out.total_dim(dlo + k)));
  auto offs = [&](int deg) {
    std::vector<int> o;
    int t = 0;
    for (const auto& s : out.terms[deg - dlo]) {
      o.push_back(t);
      t += s.dim;
    }
    return o;
  };
  for (const Located& src : all) {
    if (src.level != 0) continue;
    int deg = -bars[src.bar].degree;
    if (deg + 1 >= out.deg_hi()) continue;
    auto o0 = offs(deg), o1 = offs(deg + 1);
    for (const Located& dst : all) {
      if (dst.bar != src.bar || dst.level != 1) continue;
      int coeff = cover_coeff(src.cell, dst.cell);
      if (coeff == 0) continue;
      for (int t = 0; t < static_cast<int>(bars[src.bar].mult); ++t)
        out.diff[deg - dlo].set(o1[dst.index] + t, o0[src.index] + t, f.from_int(coeff));
    }
  }
  return out;
}

}  // namespace

std::map<int, int> rhom_dims(const Barcode& src, const Barcode& dst, Field f) {
  Grid1 g = merge_grids(grid_from_barcode(src), grid_from_barcode(dst));
  CellComplex1 fx = embed_barcode(src, g, f);
  Inj1 j = resolve_barcode_1d(dst, g, f);
  // Hom terms: for J summand (cell tau, V) at degree q and src degree p,
  // a block of dimension dim F^p(tau) * dim V at degree q - p.
  const int plo = fx.deg_lo(), phi = fx.deg_hi();
  const int mlo = j.deg_lo - (phi - 1);
  const int mhi = (j.deg_hi() - 1) - plo + 1;
  struct Term {
    int q, s, p, dim, off;
  };
  std::vector<std::vector<Term>> terms(mhi - mlo + 1);
  for (int q = j.deg_lo; q < j.deg_hi(); ++q)
    for (std::size_t s = 0; s < j.terms[q - j.deg_lo].size(); ++s)
      for (int p = plo; p < phi; ++p) {
        int a = fx.dim(j.terms[q - j.deg_lo][s].cell, p);
        if (a == 0) continue;
        int m = q - p;
        auto& list = terms[m - mlo];
        int off = list.empty() ? 0 : list.back().off + list.back().dim;
        list.push_back(Term{q, static_cast<int>(s), p, a * j.terms[q - j.deg_lo][s].dim, off});
      }
  std::vector<int> dims;
  for (const auto& list : terms) dims.push_back(list.empty() ? 0 : list.back().off + list.back().dim);
  std::vector<Mat> d;
  for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
    Mat m(f, dims[k + 1], dims[k]);
    for (const Term& a : terms[k])
      for (const Term& b : terms[k + 1]) {
        if (b.p != a.p || b.q != a.q + 1) continue;
        const auto& st = j.terms[a.q - j.deg_lo];
        const auto& dt = j.terms[a.q + 1 - j.deg_lo];
        // offsets inside the J differential
        std::vector<int> so, dofs;
        {
          int t = 0;
          for (const auto& s2 : st) {
            so.push_back(t);
            t += s2.dim;
          }
          t = 0;
          for (const auto& s2 : dt) {
            dofs.push_back(t);
            t += s2.dim;
          }
        }
        int tau = dt[b.s].cell, sigma = st[a.s].cell;
        if (!le_closure1(tau, sigma)) continue;
        Mat astruct = tau == sigma ? Mat::identity(f, fx.dim(tau, a.p))
                                   : fx.arrow(tau, sigma == tau + 1, a.p);
        int vdim_s = st[a.s].dim, vdim_t = dt[b.s].dim;
        int adim_s = fx.dim(sigma, a.p), adim_t = fx.dim(tau, a.p);
        const Mat& big = j.diff[a.q - j.deg_lo];
        for (int a2 = 0; a2 < adim_t; ++a2)
          for (int a1 = 0; a1 < adim_s; ++a1) {
            FElem fa = astruct.at(a1, a2);
            if (f.is_zero(fa)) continue;
            for (int v2 = 0; v2 < vdim_t; ++v2)
              for (int v1 = 0; v1 < vdim_s; ++v1) {
                FElem cc = big.at(dofs[b.s] + v2, so[a.s] + v1);
                if (f.is_zero(cc)) continue;
                m.set(b.off + a2 * vdim_t + v2, a.off + a1 * vdim_s + v1, f.mul(fa, cc));
              }
          }
      }
    d.push_back(m);
  }
  std::map<int, int> out;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    int rank_out = k < d.size() ? d[k].rank() : 0;
    int rank_in = (k > 0 && k - 1 < d.size()) ? d[k - 1].rank() : 0;
    int h = dims[k] - rank_out - rank_in;
    if (h != 0) out[mlo + static_cast<int>(k)] = h;
  }
  return out;
}

CostalkReport section_costalk_check(const Barcode& f_bc, const Barcode& g_bc, Scalar c, Field f) {
  CostalkReport report;
  if (f_bc.empty() || g_bc.empty()) return report;
  CellComplex1 cx = hom_star_complex(f_bc, g_bc, f, {-c});
  int cell = cx.grid().locate(-c);
  if (!Grid1::is_point(cell)) throw std::logic_error("costalk location missing from target grid");
  report.costalk = costalk_dims(cx, cell);
  report.rhom = rhom_dims(f_bc, translate(g_bc, c), f);
  return report;
}

EquivariantFamily equivariant_hom_star(const EquivariantFamily& lhs, const EquivariantFamily& rhs,
                                       Field f, bool via_oracle) {
  if (lhs.order != rhs.order) throw std::invalid_argument("group orders differ");
  if (static_cast<int>(lhs.comp.size()) != lhs.order ||
      static_cast<int>(rhs.comp.size()) != rhs.order)
    throw std::invalid_argument("family must have one component per group element");
  EquivariantFamily out;
  out.order = lhs.order;
  for (int g = 0; g < lhs.order; ++g) {
    Barcode total;
    for (int h = 0; h < lhs.order; ++h) {
      const Barcode& a = lhs.comp[h];
      const Barcode& b = rhs.comp[(g + h) % lhs.order];
      if (a.empty() || b.empty()) continue;
      if (via_oracle)
        total.add(oracle::hom_star(a, b, f));
      else
        total.add(tamcalc::hom_star(a, b).barcode);
    }
    out.comp.push_back(total);
  }
  return out;
}

Barcode family_sum(const EquivariantFamily& fam) {
  Barcode out;
  for (const Barcode& b : fam.comp) out.add(b);
  return out;
}

}  // namespace oracle
}  // namespace tamcalc

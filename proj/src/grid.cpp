#include "tamcalc/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamcalc {

Grid1::Grid1(std::vector<Scalar> breakpoints) : bps_(std::move(breakpoints)) {
  for (const Scalar& s : bps_)
    if (!s.finite()) throw std::invalid_argument("breakpoints must be finite");
  std::sort(bps_.begin(), bps_.end());
  bps_.erase(std::unique(bps_.begin(), bps_.end()), bps_.end());
}

Scalar Grid1::point_value(int cell) const {
  if (!is_point(cell)) throw std::invalid_argument("not a point cell");
  return bps_[(cell - 1) / 2];
}

Scalar Grid1::closure_lo(int cell) const {
  if (is_point(cell)) return point_value(cell);
  int k = cell / 2;
  return k == 0 ? Scalar::neg_inf() : bps_[k - 1];
}

Scalar Grid1::closure_hi(int cell) const {
  if (is_point(cell)) return point_value(cell);
  int k = cell / 2;
  return k == num_breakpoints() ? Scalar::pos_inf() : bps_[k];
}

int Grid1::locate(Scalar v) const {
  if (!v.finite()) throw std::invalid_argument("locate requires a finite value");
  auto it = std::lower_bound(bps_.begin(), bps_.end(), v);
  int k = static_cast<int>(it - bps_.begin());
  if (it != bps_.end() && *it == v) return 2 * k + 1;
  return 2 * k;
}

std::pair<int, int> Grid1::cell_range(const Interval& iv) const {
  int first, last;
  if (iv.lo().is_neg_inf()) {
    first = 0;
  } else {
    auto it = std::lower_bound(bps_.begin(), bps_.end(), iv.lo());
    if (it == bps_.end() || *it != iv.lo())
      throw std::invalid_argument("interval endpoint is not a grid breakpoint");
    int k = static_cast<int>(it - bps_.begin());
    first = iv.lo_open() ? 2 * k + 2 : 2 * k + 1;
  }
  if (iv.hi().is_pos_inf()) {
    last = num_cells() - 1;
  } else {
    auto it = std::lower_bound(bps_.begin(), bps_.end(), iv.hi());
    if (it == bps_.end() || *it != iv.hi())
      throw std::invalid_argument("interval endpoint is not a grid breakpoint");
    int k = static_cast<int>(it - bps_.begin());
    last = iv.hi_open() ? 2 * k : 2 * k + 1;
  }
  if (first > last) throw std::logic_error("interval maps to an empty cell range");
  return {first, last};
}

Interval Grid1::range_to_interval(int lo_cell, int hi_cell) const {
  if (lo_cell > hi_cell) throw std::invalid_argument("bad cell range");
  if (lo_cell == hi_cell && is_point(lo_cell))
    throw std::runtime_error("summand supported on a single point has no bar representation");
  Scalar lo, hi;
  bool lo_open, hi_open;
  if (is_point(lo_cell)) {
    lo = point_value(lo_cell);
    lo_open = false;
  } else {
    lo = closure_lo(lo_cell);
    lo_open = true;
  }
  if (is_point(hi_cell)) {
    hi = point_value(hi_cell);
    hi_open = false;
  } else {
    hi = closure_hi(hi_cell);
    hi_open = true;
  }
  auto iv = Interval::make(lo, hi, lo_open, hi_open);
  if (!iv) throw std::logic_error("cell range produced an empty interval");
  return *iv;
}

Grid1 merge_grids(const Grid1& a, const Grid1& b) {
  std::vector<Scalar> bps = a.breakpoints();
  bps.insert(bps.end(), b.breakpoints().begin(), b.breakpoints().end());
  return Grid1(std::move(bps));
}

Grid1 grid_from_barcode(const Barcode& b) {
  std::vector<Scalar> bps;
  for (const Bar& bar : b.bars()) {
    if (bar.interval.lo().finite()) bps.push_back(bar.interval.lo());
    if (bar.interval.hi().finite()) bps.push_back(bar.interval.hi());
  }
  return Grid1(std::move(bps));
}

GridRep GridRep::zero(const Grid1& g, Field field) {
  GridRep rep;
  rep.grid = g;
  rep.f = field;
  rep.dims.assign(g.num_cells(), 0);
  int npts = g.num_breakpoints();
  rep.to_left.assign(npts, Mat(field, 0, 0));
  rep.to_right.assign(npts, Mat(field, 0, 0));
  return rep;
}

const Mat& GridRep::arrow(int point_cell, bool right) const {
  int k = (point_cell - 1) / 2;
  return right ? to_right[k] : to_left[k];
}

void GridRep::check() const {
  for (int p = 1; p < grid.num_cells(); p += 2) {
    const Mat& l = arrow(p, false);
    const Mat& r = arrow(p, true);
    if (l.cols() != dims[p] || l.rows() != dims[p - 1])
      throw std::logic_error("left structure map has wrong shape");
    if (r.cols() != dims[p] || r.rows() != dims[p + 1])
      throw std::logic_error("right structure map has wrong shape");
  }
}

std::int64_t GridRep::total_dim() const {
  std::int64_t n = 0;
  for (int d : dims) n += d;
  return n;
}

CellComplex1::CellComplex1(Grid1 grid, Field f, int deg_lo, int deg_hi)
    : grid_(std::move(grid)), f_(f), deg_lo_(deg_lo), deg_hi_(deg_hi) {
  if (deg_hi_ <= deg_lo_) deg_hi_ = deg_lo_ + 1;
  dims_.assign(grid_.num_cells(), std::vector<int>(deg_hi_ - deg_lo_, 0));
  finalize_shapes();
}

int CellComplex1::dim(int cell, int deg) const {
  if (deg < deg_lo_ || deg >= deg_hi_) return 0;
  return dims_[cell][deg - deg_lo_];
}

Mat& CellComplex1::diff(int cell, int deg) { return diff_[cell][deg - deg_lo_]; }
const Mat& CellComplex1::diff(int cell, int deg) const { return diff_[cell][deg - deg_lo_]; }

Mat& CellComplex1::arrow(int point_cell, bool right, int deg) {
  return (right ? right_ : left_)[(point_cell - 1) / 2][deg - deg_lo_];
}

const Mat& CellComplex1::arrow(int point_cell, bool right, int deg) const {
  return (right ? right_ : left_)[(point_cell - 1) / 2][deg - deg_lo_];
}

void CellComplex1::set_dims(int cell, int deg, int dim) {
  dims_[cell][deg - deg_lo_] = dim;
}

void CellComplex1::finalize_shapes() {
  const int nd = deg_hi_ - deg_lo_;
  diff_.assign(grid_.num_cells(), {});
  for (int c = 0; c < grid_.num_cells(); ++c)
    for (int k = 0; k + 1 < nd; ++k)
      diff_[c].push_back(Mat(f_, dims_[c][k + 1], dims_[c][k]));
  left_.assign(grid_.num_breakpoints(), {});
  right_.assign(grid_.num_breakpoints(), {});
  for (int p = 1; p < grid_.num_cells(); p += 2) {
    int k = (p - 1) / 2;
    for (int d = 0; d < nd; ++d) {
      left_[k].push_back(Mat(f_, dims_[p - 1][d], dims_[p][d]));
      right_[k].push_back(Mat(f_, dims_[p + 1][d], dims_[p][d]));
    }
  }
}

void CellComplex1::check() const {
  for (int c = 0; c < grid_.num_cells(); ++c)
    for (int k = deg_lo_; k + 2 < deg_hi_; ++k)
      if (!(diff(c, k + 1) * diff(c, k)).is_zero())
        throw std::logic_error("differential does not square to zero");
  for (int p = 1; p < grid_.num_cells(); p += 2)
    for (bool right : {false, true}) {
      int nb = right ? p + 1 : p - 1;
      for (int k = deg_lo_; k + 1 < deg_hi_; ++k) {
        Mat lhs = arrow(p, right, k + 1) * diff(p, k);
        Mat rhs = diff(nb, k) * arrow(p, right, k);
        if (!(lhs == rhs)) throw std::logic_error("structure maps are not chain maps");
      }
    }
}

namespace {

// Quotient data for H^deg at every cell.
std::vector<Quotient> cell_quotients(const CellComplex1& cx, int deg) {
  std::vector<Quotient> out;
  const Field f = cx.field();
  for (int c = 0; c < cx.grid().num_cells(); ++c) {
    const int n = cx.dim(c, deg);
    Mat in = (deg - 1 >= cx.deg_lo() && deg < cx.deg_hi()) ? cx.diff(c, deg - 1) : Mat(f, n, 0);
    Mat out_map =
        (deg >= cx.deg_lo() && deg + 1 < cx.deg_hi()) ? cx.diff(c, deg) : Mat(f, 0, n);
    out.emplace_back(in, out_map);
  }
  return out;
}

}  // namespace

GridRep CellComplex1::cohomology_sheaf(int deg) const {
  auto quot = cell_quotients(*this, deg);
  GridRep rep = GridRep::zero(grid_, f_);
  for (int c = 0; c < grid_.num_cells(); ++c) rep.dims[c] = quot[c].dim();
  const bool in_range = deg >= deg_lo_ && deg < deg_hi_;
  for (int p = 1; p < grid_.num_cells(); p += 2) {
    int k = (p - 1) / 2;
    for (bool right : {false, true}) {
      int nb = right ? p + 1 : p - 1;
      Mat basis = Mat::identity(f_, quot[p].dim());
      Mat lifted = quot[p].lift(basis);
      Mat mapped = in_range ? arrow(p, right, deg) * lifted : Mat(f_, dim(nb, deg), quot[p].dim());
      (right ? rep.to_right : rep.to_left)[k] = quot[nb].project(mapped);
    }
  }
  return rep;
}

Mat ChainMap1::component(int cell, int deg) const {
  if (deg < src->deg_lo() || deg >= src->deg_hi())
    return Mat(src->field(), dst->dim(cell, deg), src->dim(cell, deg));
  return comp[cell][deg - src->deg_lo()];
}

void ChainMap1::check() const {
  if (!(src->grid() == dst->grid())) throw std::logic_error("chain map across different grids");
  if (src->deg_lo() != dst->deg_lo() || src->deg_hi() != dst->deg_hi())
    throw std::logic_error("chain map requires aligned degree ranges");
  for (int c = 0; c < src->grid().num_cells(); ++c)
    for (int k = src->deg_lo(); k + 1 < src->deg_hi(); ++k) {
      Mat lhs = dst->diff(c, k) * component(c, k);
      Mat rhs = component(c, k + 1) * src->diff(c, k);
      if (!(lhs == rhs)) throw std::logic_error("not a chain map");
    }
  for (int p = 1; p < src->grid().num_cells(); p += 2)
    for (bool right : {false, true}) {
      int nb = right ? p + 1 : p - 1;
      for (int k = src->deg_lo(); k < src->deg_hi(); ++k) {
        Mat lhs = dst->arrow(p, right, k) * component(p, k);
        Mat rhs = component(nb, k) * src->arrow(p, right, k);
        if (!(lhs == rhs)) throw std::logic_error("chain map is not natural");
      }
    }
}

std::vector<Mat> induced_on_cohomology(const ChainMap1& u, int deg) {
  auto qs = cell_quotients(*u.src, deg);
  auto qt = cell_quotients(*u.dst, deg);
  std::vector<Mat> out;
  for (int c = 0; c < u.src->grid().num_cells(); ++c) {
    Mat basis = Mat::identity(u.src->field(), qs[c].dim());
    Mat lifted = qs[c].lift(basis);
    Mat mapped = u.component(c, deg) * lifted;
    out.push_back(qt[c].project(mapped));
  }
  return out;
}

bool ChainMap1::is_zero_on_cohomology() const {
  for (int deg = src->deg_lo(); deg < src->deg_hi(); ++deg)
    for (const Mat& m : induced_on_cohomology(*this, deg))
      if (!m.is_zero()) return false;
  return true;
}

CellComplex1 widen(const CellComplex1& cx, int dlo, int dhi) {
  if (dlo > cx.deg_lo() || dhi < cx.deg_hi())
    throw std::invalid_argument("widen cannot shrink the degree range");
  CellComplex1 out(cx.grid(), cx.field(), dlo, dhi);
  for (int c = 0; c < cx.grid().num_cells(); ++c)
    for (int k = cx.deg_lo(); k < cx.deg_hi(); ++k) out.set_dims(c, k, cx.dim(c, k));
  out.finalize_shapes();
  for (int c = 0; c < cx.grid().num_cells(); ++c)
    for (int k = cx.deg_lo(); k + 1 < cx.deg_hi(); ++k) out.diff(c, k) = cx.diff(c, k);
  for (int p = 1; p < cx.grid().num_cells(); p += 2)
    for (bool right : {false, true})
      for (int k = cx.deg_lo(); k < cx.deg_hi(); ++k)
        out.arrow(p, right, k) = cx.arrow(p, right, k);
  return out;
}

CellComplex1 embed_barcode(const Barcode& b, const Grid1& grid, Field f) {
  int dlo = 0, dhi = 1;
  if (!b.empty()) {
    dlo = 1 << 20;
    dhi = -(1 << 20);
    for (const Bar& bar : b.bars()) {
      dlo = std::min(dlo, -bar.degree);
      dhi = std::max(dhi, -bar.degree + 1);
    }
  }
  CellComplex1 cx(grid, f, dlo, dhi);
  struct Block {
    std::pair<int, int> range;
    std::int64_t mult;
  };
  std::map<int, std::vector<Block>> blocks;
  for (const Bar& bar : b.bars())
    blocks[-bar.degree].push_back(Block{grid.cell_range(bar.interval), bar.mult});
  for (auto& [deg, list] : blocks)
    for (int c = 0; c < grid.num_cells(); ++c) {
      int total = 0;
      for (const Block& blk : list)
        if (blk.range.first <= c && c <= blk.range.second) total += static_cast<int>(blk.mult);
      cx.set_dims(c, deg, total);
    }
  cx.finalize_shapes();
  for (auto& [deg, list] : blocks)
    for (int p = 1; p < grid.num_cells(); p += 2)
      for (bool right : {false, true}) {
        int nb = right ? p + 1 : p - 1;
        int off_p = 0, off_nb = 0;
        Mat& m = cx.arrow(p, right, deg);
        for (const Block& blk : list) {
          bool in_p = blk.range.first <= p && p <= blk.range.second;
          bool in_nb = blk.range.first <= nb && nb <= blk.range.second;
          if (in_p && in_nb)
            for (int t = 0; t < static_cast<int>(blk.mult); ++t)
              m.set(off_nb + t, off_p + t, f.one());
          if (in_p) off_p += static_cast<int>(blk.mult);
          if (in_nb) off_nb += static_cast<int>(blk.mult);
        }
      }
  return cx;
}

std::vector<ChainMap1> nat_chain_basis(const CellComplex1& src, const CellComplex1& dst) {
  if (!(src.grid() == dst.grid())) throw std::invalid_argument("grids differ");
  if (src.deg_lo() != dst.deg_lo() || src.deg_hi() != dst.deg_hi())
    throw std::invalid_argument("degree ranges differ; widen first");
  const Field f = src.field();
  const int nc = src.grid().num_cells();
  const int dlo = src.deg_lo(), dhi = src.deg_hi();

  std::vector<std::vector<int>> offset(nc, std::vector<int>(dhi - dlo, -1));
  int nvars = 0;
  for (int c = 0; c < nc; ++c)
    for (int k = dlo; k < dhi; ++k) {
      int sz = dst.dim(c, k) * src.dim(c, k);
      if (sz > 0) {
        offset[c][k - dlo] = nvars;
        nvars += sz;
      }
    }

  std::vector<std::vector<FElem>> sys;
  // Adds entries of post * U(cell,k) * pre to the block of rows starting at
  // base (row index base + r * pre.cols() + c for output entry (r, c)).
  auto emit = [&](int base, int cell, int k, const Mat& post, const Mat& pre, bool negate) {
    if (offset[cell][k - dlo] < 0) return;
    const int dc = src.dim(cell, k);
    for (int r = 0; r < post.rows(); ++r)
      for (int c2 = 0; c2 < pre.cols(); ++c2) {
        int row = base + r * pre.cols() + c2;
        for (int i = 0; i < post.cols(); ++i) {
          FElem a = post.at(r, i);
          if (f.is_zero(a)) continue;
          for (int j = 0; j < dc; ++j) {
            FElem bcoef = pre.at(j, c2);
            if (f.is_zero(bcoef)) continue;
            FElem v = f.mul(a, bcoef);
            if (negate) v = f.neg(v);
            int vi = offset[cell][k - dlo] + i * dc + j;
            sys[row][vi] = f.add(sys[row][vi], v);
          }
        }
      }
  };
  auto new_rows = [&](int n) {
    int base = static_cast<int>(sys.size());
    for (int i = 0; i < n; ++i) sys.emplace_back(nvars, f.zero());
    return base;
  };

  for (int c = 0; c < nc; ++c)
    for (int k = dlo; k + 1 < dhi; ++k) {
      int rn = dst.dim(c, k + 1), cn = src.dim(c, k);
      if (rn == 0 || cn == 0) continue;
      int base = new_rows(rn * cn);
      emit(base, c, k, dst.diff(c, k), Mat::identity(f, cn), false);
      emit(base, c, k + 1, Mat::identity(f, rn), src.diff(c, k), true);
    }
  for (int p = 1; p < nc; p += 2)
    for (bool right : {false, true}) {
      int nb = right ? p + 1 : p - 1;
      for (int k = dlo; k < dhi; ++k) {
        int rn = dst.dim(nb, k), cn = src.dim(p, k);
        if (rn == 0 || cn == 0) continue;
        int base = new_rows(rn * cn);
        emit(base, p, k, dst.arrow(p, right, k), Mat::identity(f, cn), false);
        emit(base, nb, k, Mat::identity(f, rn), src.arrow(p, right, k), true);
      }
    }

  Mat system(f, static_cast<int>(sys.size()), nvars);
  for (std::size_t r = 0; r < sys.size(); ++r)
    for (int c = 0; c < nvars; ++c) system.set(static_cast<int>(r), c, sys[r][c]);
  Mat basis = system.kernel();

  std::vector<ChainMap1> out;
  for (int b = 0; b < basis.cols(); ++b) {
    ChainMap1 u;
    u.src = &src;
    u.dst = &dst;
    u.comp.assign(nc, {});
    for (int c = 0; c < nc; ++c)
      for (int k = dlo; k < dhi; ++k) {
        Mat m(f, dst.dim(c, k), src.dim(c, k));
        if (offset[c][k - dlo] >= 0)
          for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
              m.set(i, j, basis.at(offset[c][k - dlo] + i * m.cols() + j, b));
        u.comp[c].push_back(m);
      }
    out.push_back(std::move(u));
  }
  return out;
}

CellComplex1 mapping_cone(const ChainMap1& u) {
  const CellComplex1& x = *u.src;
  const CellComplex1& y = *u.dst;
  const Field f = x.field();
  const int dlo = std::min(x.deg_lo() - 1, y.deg_lo());
  const int dhi = std::max(x.deg_hi() - 1, y.deg_hi());
  CellComplex1 cone(x.grid(), f, dlo, dhi);
  for (int c = 0; c < x.grid().num_cells(); ++c)
    for (int k = dlo; k < dhi; ++k) cone.set_dims(c, k, x.dim(c, k + 1) + y.dim(c, k));
  cone.finalize_shapes();
  auto xdiff = [&](int c, int k) {
    if (k >= x.deg_lo() && k + 1 < x.deg_hi()) return x.diff(c, k);
    return Mat(f, x.dim(c, k + 1), x.dim(c, k));
  };
  auto ydiff = [&](int c, int k) {
    if (k >= y.deg_lo() && k + 1 < y.deg_hi()) return y.diff(c, k);
    return Mat(f, y.dim(c, k + 1), y.dim(c, k));
  };
  for (int c = 0; c < x.grid().num_cells(); ++c)
    for (int k = dlo; k + 1 < dhi; ++k) {
      Mat xd = xdiff(c, k + 1);
      Mat yd = ydiff(c, k);
      Mat ub = u.component(c, k + 1);
      Mat& m = cone.diff(c, k);
      for (int i = 0; i < xd.rows(); ++i)
        for (int j = 0; j < xd.cols(); ++j) m.set(i, j, f.neg(xd.at(i, j)));
      for (int i = 0; i < ub.rows(); ++i)
        for (int j = 0; j < ub.cols(); ++j) m.set(xd.rows() + i, j, ub.at(i, j));
      for (int i = 0; i < yd.rows(); ++i)
        for (int j = 0; j < yd.cols(); ++j) m.set(xd.rows() + i, xd.cols() + j, yd.at(i, j));
    }
  auto xarrow = [&](int p, bool right, int k) {
    int nb = right ? p + 1 : p - 1;
    if (k >= x.deg_lo() && k < x.deg_hi()) return x.arrow(p, right, k);
    return Mat(f, x.dim(nb, k), x.dim(p, k));
  };
  auto yarrow = [&](int p, bool right, int k) {
    int nb = right ? p + 1 : p - 1;
    if (k >= y.deg_lo() && k < y.deg_hi()) return y.arrow(p, right, k);
    return Mat(f, y.dim(nb, k), y.dim(p, k));
  };
  for (int p = 1; p < x.grid().num_cells(); p += 2)
    for (bool right : {false, true})
      for (int k = dlo; k < dhi; ++k) {
        Mat xa = xarrow(p, right, k + 1);
        Mat ya = yarrow(p, right, k);
        Mat& m = cone.arrow(p, right, k);
        for (int i = 0; i < xa.rows(); ++i)
          for (int j = 0; j < xa.cols(); ++j) m.set(i, j, xa.at(i, j));
        for (int i = 0; i < ya.rows(); ++i)
          for (int j = 0; j < ya.cols(); ++j) m.set(xa.rows() + i, xa.cols() + j, ya.at(i, j));
      }
  return cone;
}

std::vector<RangeSummand> gabriel_ranges(const GridRep& rep) {
  const Field f = rep.f;
  const int nc = rep.grid.num_cells();
  std::vector<std::vector<int>> r(nc, std::vector<int>(nc, 0));
  for (int i = 0; i < nc; ++i) {
    Mat pi = Mat::identity(f, rep.dims[i]);
    int co_dim = rep.dims[i];
    Mat q = Mat::identity(f, rep.dims[i]);
    r[i][i] = (q * pi).rank();
    for (int j = i; j + 1 < nc; ++j) {
      int next = j + 1;
      if (Grid1::is_point(next)) {
        // New point maps into the interval j already present.
        const Mat& m = rep.arrow(next, false);
        Mat big = pi.hstack(m.scaled(f.from_int(-1)));
        Mat ker = big.kernel();
        Mat npi(f, rep.dims[next], ker.cols());
        for (int c2 = 0; c2 < ker.cols(); ++c2)
          for (int t = 0; t < rep.dims[next]; ++t)
            npi.set(t, c2, ker.at(pi.cols() + t, c2));
        pi = npi;
        q = q * m;
      } else {
        // New interval receives the point j: push out along the arrow.
        const Mat& m = rep.arrow(j, true);
        pi = m * pi;
        Mat rel(f, co_dim + rep.dims[next], rep.dims[j]);
        for (int v = 0; v < rep.dims[j]; ++v) {
          for (int t = 0; t < co_dim; ++t) rel.set(t, v, q.at(t, v));
          for (int t = 0; t < rep.dims[next]; ++t) rel.set(co_dim + t, v, f.neg(m.at(t, v)));
        }
        Quotient quo(rel, Mat(f, 0, co_dim + rep.dims[next]));
        Mat incl(f, co_dim + rep.dims[next], rep.dims[next]);
        for (int t = 0; t < rep.dims[next]; ++t) incl.set(co_dim + t, t, f.one());
        q = quo.project(incl);
        co_dim = quo.dim();
      }
      r[i][next] = (q * pi).rank();
    }
  }
  auto rk = [&](int i, int j) { return (i < 0 || j >= nc) ? 0 : r[i][j]; };
  std::vector<RangeSummand> out;
  std::vector<std::int64_t> regen(nc, 0);
  for (int i = 0; i < nc; ++i)
    for (int j = i; j < nc; ++j) {
      int m = rk(i, j) - rk(i - 1, j) - rk(i, j + 1) + rk(i - 1, j + 1);
      if (m < 0) throw std::logic_error("negative interval multiplicity");
      if (m > 0) {
        out.push_back(RangeSummand{i, j, m});
        for (int c = i; c <= j; ++c) regen[c] += m;
      }
    }
  for (int c = 0; c < nc; ++c)
    if (regen[c] != rep.dims[c])
      throw std::logic_error("interval decomposition does not regenerate the representation");
  return out;
}

Barcode gabriel_barcode(const GridRep& rep, int bar_degree) {
  std::vector<Bar> bars;
  for (const RangeSummand& s : gabriel_ranges(rep))
    bars.push_back(Bar{rep.grid.range_to_interval(s.cell_lo, s.cell_hi), bar_degree, s.mult});
  return Barcode(std::move(bars));
}

Barcode decompose_complex(const CellComplex1& cx) {
  Barcode out;
  for (int deg = cx.deg_lo(); deg < cx.deg_hi(); ++deg) {
    GridRep h = cx.cohomology_sheaf(deg);
    if (h.total_dim() == 0) continue;
    out.add(gabriel_barcode(h, -deg));
  }
  return out;
}

namespace {

std::map<int, int> plain_cohomology_dims(int deg_lo, const std::vector<int>& dims,
                                         const std::vector<Mat>& d) {
  std::map<int, int> out;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    int rank_out = k < d.size() ? d[k].rank() : 0;
    int rank_in = (k > 0 && k - 1 < d.size()) ? d[k - 1].rank() : 0;
    int h = dims[k] - rank_out - rank_in;
    if (h != 0) out[deg_lo + static_cast<int>(k)] = h;
  }
  return out;
}

}  // namespace

std::map<int, int> section_dims(const CellComplex1& cx, int lo_cell, int hi_cell) {
  if (Grid1::is_point(lo_cell) || Grid1::is_point(hi_cell))
    throw std::invalid_argument("open cellular sets are bounded by interval cells");
  const Field f = cx.field();
  struct Arrow {
    int p;
    bool right;
  };
  std::vector<int> cells;
  for (int c = lo_cell; c <= hi_cell; ++c) cells.push_back(c);
  std::vector<Arrow> arrows;
  for (int p = lo_cell + 1; p < hi_cell; p += 2) {
    arrows.push_back(Arrow{p, false});
    arrows.push_back(Arrow{p, true});
  }
  const int dlo = cx.deg_lo(), dhi = cx.deg_hi();
  const int nd = dhi - dlo + 1;
  auto cell_dim = [&](int n) {
    int t = 0;
    for (int c : cells) t += cx.dim(c, n);
    return t;
  };
  auto arrow_dim = [&](int n) {
    int t = 0;
    for (const Arrow& a : arrows) t += cx.dim(a.right ? a.p + 1 : a.p - 1, n);
    return t;
  };
  std::vector<int> dims;
  for (int k = 0; k < nd; ++k) dims.push_back(cell_dim(dlo + k) + arrow_dim(dlo + k - 1));
  std::vector<Mat> d;
  for (int k = 0; k + 1 < nd; ++k) {
    const int n = dlo + k;
    Mat D(f, dims[k + 1], dims[k]);
    // offsets at degree n and n+1
    auto offsets = [&](int level, std::vector<int>& co, std::vector<int>& ao) {
      co.clear();
      ao.clear();
      int t = 0;
      for (int c : cells) {
        co.push_back(t);
        t += cx.dim(c, level);
      }
      for (const Arrow& a : arrows) {
        ao.push_back(t);
        t += cx.dim(a.right ? a.p + 1 : a.p - 1, level - 1);
      }
    };
    std::vector<int> co0, ao0, co1, ao1;
    offsets(n, co0, ao0);
    offsets(n + 1, co1, ao1);
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      int c = cells[ci];
      if (n >= dlo && n + 1 < dhi) {
        const Mat& m = cx.diff(c, n);
        for (int i = 0; i < m.rows(); ++i)
          for (int j = 0; j < m.cols(); ++j) D.set(co1[ci] + i, co0[ci] + j, m.at(i, j));
      }
    }
    for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
      const Arrow& a = arrows[ai];
      int nb = a.right ? a.p + 1 : a.p - 1;
      int p_idx = a.p - lo_cell;
      int nb_idx = nb - lo_cell;
      if (n >= dlo && n < dhi) {
        const Mat& m = cx.arrow(a.p, a.right, n);
        for (int i = 0; i < m.rows(); ++i)
          for (int j = 0; j < m.cols(); ++j) D.set(ao1[ai] + i, co0[p_idx] + j, m.at(i, j));
        for (int i = 0; i < cx.dim(nb, n); ++i)
          D.set(ao1[ai] + i, co0[nb_idx] + i, f.from_int(-1));
      }
      if (n - 1 >= dlo && n < dhi) {
        const Mat& m = cx.diff(nb, n - 1);
        for (int i = 0; i < m.rows(); ++i)
          for (int j = 0; j < m.cols(); ++j) D.set(ao1[ai] + i, ao0[ai] + j, f.neg(m.at(i, j)));
      }
    }
    d.push_back(D);
  }
  return plain_cohomology_dims(dlo, dims, d);
}

std::map<int, int> costalk_dims(const CellComplex1& cx, int point_cell) {
  if (!Grid1::is_point(point_cell)) throw std::invalid_argument("costalk requires a point cell");
  const Field f = cx.field();
  const int dlo = cx.deg_lo(), dhi = cx.deg_hi();
  const int nd = dhi - dlo + 1;
  auto gdim = [&](int n) { return cx.dim(point_cell - 1, n) + cx.dim(point_cell + 1, n); };
  std::vector<int> dims;
  for (int k = 0; k < nd; ++k) dims.push_back(cx.dim(point_cell, dlo + k) + gdim(dlo + k - 1));
  std::vector<Mat> d;
  for (int k = 0; k + 1 < nd; ++k) {
    const int n = dlo + k;
    const int fd1 = cx.dim(point_cell, n + 1);
    Mat D(f, dims[k + 1], dims[k]);
    if (n >= dlo && n + 1 < dhi) {
      const Mat& m = cx.diff(point_cell, n);
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) D.set(i, j, m.at(i, j));
    }
    if (n >= dlo && n < dhi) {
      const Mat& l = cx.arrow(point_cell, false, n);
      const Mat& r = cx.arrow(point_cell, true, n);
      for (int i = 0; i < l.rows(); ++i)
        for (int j = 0; j < l.cols(); ++j) D.set(fd1 + i, j, l.at(i, j));
      for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) D.set(fd1 + l.rows() + i, j, r.at(i, j));
    }
    if (n - 1 >= dlo && n < dhi) {
      const Mat& ml = cx.diff(point_cell - 1, n - 1);
      const Mat& mr = cx.diff(point_cell + 1, n - 1);
      const int base0 = cx.dim(point_cell, n);
      for (int i = 0; i < ml.rows(); ++i)
        for (int j = 0; j < ml.cols(); ++j) D.set(fd1 + i, base0 + j, f.neg(ml.at(i, j)));
      for (int i = 0; i < mr.rows(); ++i)
        for (int j = 0; j < mr.cols(); ++j)
          D.set(fd1 + ml.rows() + i, base0 + ml.cols() + j, f.neg(mr.at(i, j)));
    }
    d.push_back(D);
  }
  return plain_cohomology_dims(dlo, dims, d);
}

}  // namespace tamcalc

#include "tamcalc/field.hpp"

#include <numeric>
#include <stdexcept>

namespace tamcalc {

namespace {

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_norm(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("element has no inverse mod p");
  return mod_norm(t, p);
}

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

FElem rat_norm(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) { num = -num; den = -den; }
  if (num == 0) return FElem{0, 1};
  __int128 a = num < 0 ? -num : num, b = den;
  while (b) { __int128 t = a % b; a = b; b = t; }
  return FElem{checked(num / a), checked(den / a)};
}

}  // namespace

Field Field::fp(std::int64_t p) {
  if (p < 2) throw std::invalid_argument("prime must be >= 2");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("characteristic must be prime");
  return Field(p);
}

Field Field::rationals() { return Field(0); }

FElem Field::from_int(std::int64_t n) const {
  if (p_ == 0) return FElem{n, 1};
  return FElem{mod_norm(n, p_), 1};
}

FElem Field::add(FElem a, FElem b) const {
  if (p_ == 0)
    return rat_norm(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
  return FElem{mod_norm(a.num + b.num, p_), 1};
}

FElem Field::sub(FElem a, FElem b) const { return add(a, neg(b)); }

FElem Field::mul(FElem a, FElem b) const {
  if (p_ == 0)
    return rat_norm(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
  return FElem{mod_norm(a.num * b.num, p_), 1};
}

FElem Field::neg(FElem a) const {
  if (p_ == 0) return FElem{-a.num, a.den};
  return FElem{mod_norm(-a.num, p_), 1};
}

FElem Field::inv(FElem a) const {
  if (a.num == 0) throw std::domain_error("division by zero");
  if (p_ == 0) return rat_norm(a.den, a.num);
  return FElem{mod_inv(a.num, p_), 1};
}

std::string Field::to_string(FElem a) const {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

Mat::Mat(Field f, int rows, int cols)
    : f_(f), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, f.zero()) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

Mat Mat::identity(Field f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Mat r(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      FElem v = at(i, k);
      if (f_.is_zero(v)) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.set(i, j, f_.add(r.at(i, j), f_.mul(v, o.at(k, j))));
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Mat r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + o.scaled(f_.from_int(-1)); }

Mat Mat::scaled(FElem s) const {
  Mat r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.mul(a_[i], s);
  return r;
}

Mat Mat::transpose() const {
  Mat r(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

bool Mat::is_zero() const {
  for (const FElem& v : a_)
    if (v.num != 0) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Mat Mat::hstack(const Mat& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack shape mismatch");
  Mat r(f_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (int j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
  }
  return r;
}

Mat Mat::vstack(const Mat& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vstack shape mismatch");
  Mat r(f_, rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(rows_ + i, j, o.at(i, j));
  return r;
}

Mat Mat::column(int c) const {
  Mat r(f_, rows_, 1);
  for (int i = 0; i < rows_; ++i) r.set(i, 0, at(i, c));
  return r;
}

Mat Mat::submatrix_rows(const std::vector<int>& rows) const {
  Mat r(f_, static_cast<int>(rows.size()), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols_; ++j) r.set(static_cast<int>(i), j, at(rows[i], j));
  return r;
}

namespace {

// In-place row echelon on `m`, applying identical row operations to `aug`
// when present.  Returns pivot (row, col) pairs.
std::vector<std::pair<int, int>> echelonize(Mat& m, Mat* aug) {
  const Field f = m.field();
  std::vector<std::pair<int, int>> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!f.is_zero(m.at(r, col))) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != row) {
      for (int j = 0; j < m.cols(); ++j) {
        FElem t = m.at(row, j); m.set(row, j, m.at(sel, j)); m.set(sel, j, t);
      }
      if (aug)
        for (int j = 0; j < aug->cols(); ++j) {
          FElem t = aug->at(row, j); aug->set(row, j, aug->at(sel, j)); aug->set(sel, j, t);
        }
    }
    FElem piv_inv = f.inv(m.at(row, col));
    for (int j = 0; j < m.cols(); ++j) m.set(row, j, f.mul(m.at(row, j), piv_inv));
    if (aug)
      for (int j = 0; j < aug->cols(); ++j) aug->set(row, j, f.mul(aug->at(row, j), piv_inv));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      FElem c = m.at(r, col);
      if (f.is_zero(c)) continue;
      for (int j = 0; j < m.cols(); ++j)
        m.set(r, j, f.sub(m.at(r, j), f.mul(c, m.at(row, j))));
      if (aug)
        for (int j = 0; j < aug->cols(); ++j)
          aug->set(r, j, f.sub(aug->at(r, j), f.mul(c, aug->at(row, j))));
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  return pivots;
}

}  // namespace

int Mat::rank() const {
  Mat m = *this;
  return static_cast<int>(echelonize(m, nullptr).size());
}

Mat Mat::kernel() const {
  Mat m = *this;
  auto pivots = echelonize(m, nullptr);
  std::vector<bool> is_pivot(cols_, false);
  for (auto [r, c] : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis(f_, cols_, static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.set(fc, static_cast<int>(k), f_.one());
    for (auto [r, c] : pivots)
      basis.set(c, static_cast<int>(k), f_.neg(m.at(r, fc)));
  }
  return basis;
}

std::optional<Mat> Mat::solve(const Mat& rhs) const {
  if (rhs.rows() != rows_) throw std::invalid_argument("solve shape mismatch");
  Mat m = *this;
  Mat b = rhs;
  auto pivots = echelonize(m, &b);
  // Consistency: zero rows of m must have zero rhs.
  std::vector<bool> pivot_row(rows_, false);
  for (auto [r, c] : pivots) pivot_row[r] = true;
  for (int r = 0; r < rows_; ++r) {
    if (pivot_row[r]) continue;
    for (int j = 0; j < b.cols(); ++j)
      if (!f_.is_zero(b.at(r, j))) return std::nullopt;
  }
  Mat x(f_, cols_, rhs.cols());
  for (auto [r, c] : pivots)
    for (int j = 0; j < b.cols(); ++j) x.set(c, j, b.at(r, j));
  return x;
}

std::string Mat::to_string() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    out += "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += " ";
      out += f_.to_string(at(i, j));
    }
    out += "]\n";
  }
  return out;
}

Quotient::Quotient(const Mat& in, const Mat& out)
    : f_(in.field()), dim_(0), z_(out.kernel()), reducer_(in.field(), 0, 0) {
  if (in.rows() != out.cols()) throw std::invalid_argument("subquotient shape mismatch");
  auto incoords = z_.solve(in);
  if (!incoords) throw std::logic_error("image does not lie in the kernel");
  // Column-reduce the image inside kernel coordinates; pivot rows get
  // eliminated, free rows carry the quotient.
  Mat y = incoords->transpose();
  auto pivots = echelonize(y, nullptr);
  reducer_ = y.transpose();  // fully reduced column form
  std::vector<bool> pivot(z_.cols(), false);
  for (auto [r, c] : pivots) {
    pivot_rows_.push_back(c);
    pivot[c] = true;
  }
  for (int r = 0; r < z_.cols(); ++r)
    if (!pivot[r]) free_rows_.push_back(r);
  dim_ = static_cast<int>(free_rows_.size());
}

Mat Quotient::project(const Mat& vectors) const {
  auto w = z_.solve(vectors);
  if (!w) throw std::logic_error("vector is not a cycle");
  Mat red = *w;
  // Eliminate pivot-row entries with reducer columns (each reducer column k
  // has a 1 at pivot_rows_[k] and zeros at other pivot rows).
  for (std::size_t k = 0; k < pivot_rows_.size(); ++k) {
    int pr = pivot_rows_[k];
    for (int j = 0; j < red.cols(); ++j) {
      FElem c = red.at(pr, j);
      if (f_.is_zero(c)) continue;
      for (int r = 0; r < red.rows(); ++r)
        red.set(r, j, f_.sub(red.at(r, j), f_.mul(c, reducer_.at(r, static_cast<int>(k)))));
    }
  }
  return red.submatrix_rows(free_rows_);
}

Mat Quotient::lift(const Mat& hvecs) const {
  if (hvecs.rows() != dim_) throw std::invalid_argument("quotient lift shape mismatch");
  Mat w(f_, z_.cols(), hvecs.cols());
  for (int k = 0; k < dim_; ++k)
    for (int j = 0; j < hvecs.cols(); ++j) w.set(free_rows_[k], j, hvecs.at(k, j));
  return z_ * w;
}

}  // namespace tamcalc

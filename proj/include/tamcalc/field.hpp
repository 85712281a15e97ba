#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tamcalc {

/// Field element: num/den.  Over F_p the denominator is always 1 and num is
/// reduced mod p; over the rationals (p == 0) the fraction is normalized
/// with positive denominator.
struct FElem {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool operator==(const FElem& o) const = default;
};

/// Runtime coefficient field: F_p for a prime p, or exact rationals when
/// p == 0.  Rational arithmetic throws on int64 overflow instead of losing
/// precision.
class Field {
 public:
  static Field fp(std::int64_t p);
  static Field rationals();

  std::int64_t prime() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  FElem zero() const { return FElem{0, 1}; }
  FElem one() const { return FElem{1, 1}; }
  FElem from_int(std::int64_t n) const;

  FElem add(FElem a, FElem b) const;
  FElem sub(FElem a, FElem b) const;
  FElem mul(FElem a, FElem b) const;
  FElem neg(FElem a) const;
  FElem inv(FElem a) const;
  bool is_zero(FElem a) const { return a.num == 0; }

  std::string to_string(FElem a) const;

  bool operator==(const Field& o) const = default;

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 2;
};

/// Dense matrix over a runtime field, column-vector convention: (*this) maps
/// k^cols -> k^rows.
class Mat {
 public:
  Mat() : f_(Field::fp(2)), rows_(0), cols_(0) {}
  Mat(Field f, int rows, int cols);
  static Mat identity(Field f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return f_; }

  FElem at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, FElem v) { a_[static_cast<std::size_t>(r) * cols_ + c] = v; }
  void set_int(int r, int c, std::int64_t v) { set(r, c, f_.from_int(v)); }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(FElem s) const;
  Mat transpose() const;

  bool is_zero() const;
  bool operator==(const Mat& o) const;

  // Columns of `o` appended to the right.
  Mat hstack(const Mat& o) const;
  // Rows of `o` appended below.
  Mat vstack(const Mat& o) const;
  Mat column(int c) const;
  Mat submatrix_rows(const std::vector<int>& rows) const;

  int rank() const;
  // Basis of the null space, as columns.  May have zero columns.
  Mat kernel() const;
  // Solve (*this) X = rhs; nullopt when inconsistent.
  std::optional<Mat> solve(const Mat& rhs) const;

  std::string to_string() const;

 private:
  Field f_;
  int rows_, cols_;
  std::vector<FElem> a_;
};

/// Coordinates on a subquotient ker(out)/im(in) of k^n: `in` lands in k^n,
/// `out` leaves k^n, with out*in = 0.
class Quotient {
 public:
  Quotient(const Mat& in, const Mat& out);

  int dim() const { return dim_; }
  const Field& field() const { return f_; }

  // Columns must lie in ker(out); returns quotient coordinates.
  Mat project(const Mat& vectors) const;
  // Lift quotient coordinates to representatives in k^n.
  Mat lift(const Mat& hvecs) const;

 private:
  Field f_;
  int dim_;
  Mat z_;                   // kernel basis of `out`, columns
  Mat reducer_;             // column-reduced basis of im(in) in z-coords
  std::vector<int> pivot_rows_;
  std::vector<int> free_rows_;
};

}  // namespace tamcalc

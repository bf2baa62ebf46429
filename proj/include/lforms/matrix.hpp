#pragma once

#include "lforms/exact_arith.hpp"

namespace lforms {

// Dense matrix over Q(sqrt d) elements (plain rationals included as d = 0).
// Dimensions stay small (forms of rank <= ~10); all arithmetic is exact.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  QuadElem& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const QuadElem& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  Mat transpose() const;
  Mat operator*(const Mat& rhs) const;
  bool operator==(const Mat& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_; }
  bool operator!=(const Mat& rhs) const { return !(*this == rhs); }

  // Gaussian elimination with pivoting; throws std::domain_error on non-square.
  QuadElem det() const;
  // Nullopt when singular.
  std::optional<Mat> inverse() const;

  bool is_identity() const;
  bool is_integral() const;  // every entry a rational integer
  bool is_zero() const;

  void swap_cols(int i, int j);
  void swap_rows(int i, int j);
  // col_i += c * col_j
  void add_col(int i, int j, const QuadElem& c);
  void scale_col(int i, const QuadElem& c);

  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<QuadElem> e_;
};

using Vec = std::vector<QuadElem>;
using IVec = std::vector<Int>;

Vec mat_vec(const Mat& m, const Vec& v);
Vec to_vec(const IVec& v);
Vec column_of(const Mat& m, int j);
Mat from_columns(const std::vector<Vec>& cols);

// u^t G v
QuadElem pairing(const Mat& gram, const Vec& u, const Vec& v);

// Scale a rational vector to the unique primitive integer vector on the same
// ray with positive first nonzero entry.  Throws on zero or irrational input.
IVec primitive_integer_vector(const Vec& v);

Int gcd_of(const IVec& v);

}  // namespace lforms

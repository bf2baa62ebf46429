#include "lforms/matrix.hpp"

namespace lforms {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = QuadElem(1);
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) throw std::domain_error("matrix product dimension mismatch");
  Mat r(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const QuadElem& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const QuadElem& b = rhs.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

QuadElem Mat::det() const {
  if (rows_ != cols_) throw std::domain_error("determinant of non-square matrix");
  Mat w = *this;
  int n = rows_;
  QuadElem result(1);
  for (int i = 0; i < n; ++i) {
    int pivot = -1;
    for (int r = i; r < n; ++r)
      if (!w.at(r, i).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return QuadElem(0);
    if (pivot != i) {
      w.swap_rows(i, pivot);
      result = -result;
    }
    result = result * w.at(i, i);
    for (int r = i + 1; r < n; ++r) {
      if (w.at(r, i).is_zero()) continue;
      QuadElem c = w.at(r, i) / w.at(i, i);
      for (int j = i; j < n; ++j) w.at(r, j) -= c * w.at(i, j);
    }
  }
  return result;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
  int n = rows_;
  Mat w = *this;
  Mat inv = identity(n);
  for (int i = 0; i < n; ++i) {
    int pivot = -1;
    for (int r = i; r < n; ++r)
      if (!w.at(r, i).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != i) {
      w.swap_rows(i, pivot);
      inv.swap_rows(i, pivot);
    }
    QuadElem p = w.at(i, i);
    for (int j = 0; j < n; ++j) {
      w.at(i, j) = w.at(i, j) / p;
      inv.at(i, j) = inv.at(i, j) / p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == i || w.at(r, i).is_zero()) continue;
      QuadElem c = w.at(r, i);
      for (int j = 0; j < n; ++j) {
        w.at(r, j) -= c * w.at(i, j);
        inv.at(r, j) -= c * inv.at(i, j);
      }
    }
  }
  return inv;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j && at(i, j) != QuadElem(1)) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

bool Mat::is_integral() const {
  for (const auto& x : e_)
    if (!x.is_rational() || !is_integer(x.a())) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

void Mat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void Mat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Mat::add_col(int i, int j, const QuadElem& c) {
  for (int r = 0; r < rows_; ++r) at(r, i) += c * at(r, j);
}

void Mat::scale_col(int i, const QuadElem& c) {
  for (int r = 0; r < rows_; ++r) at(r, i) *= c;
}

std::string Mat::str() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    s += (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).str();
  }
  return s + "]";
}

Vec mat_vec(const Mat& m, const Vec& v) {
  if (static_cast<int>(v.size()) != m.cols()) throw std::domain_error("matrix-vector dimension mismatch");
  Vec r(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

Vec to_vec(const IVec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = QuadElem(Rational(v[i]));
  return r;
}

Vec column_of(const Mat& m, int j) {
  Vec r(m.rows());
  for (int i = 0; i < m.rows(); ++i) r[i] = m.at(i, j);
  return r;
}

Mat from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Mat();
  Mat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != cols[0].size()) throw std::domain_error("ragged column list");
    for (size_t i = 0; i < cols[j].size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

QuadElem pairing(const Mat& gram, const Vec& u, const Vec& v) {
  if (static_cast<int>(u.size()) != gram.rows() || static_cast<int>(v.size()) != gram.cols())
    throw std::domain_error("pairing dimension mismatch");
  QuadElem s;
  for (int i = 0; i < gram.rows(); ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < gram.cols(); ++j)
      if (!gram.at(i, j).is_zero() && !v[j].is_zero()) s += u[i] * gram.at(i, j) * v[j];
  }
  return s;
}

IVec primitive_integer_vector(const Vec& v) {
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& x : v) {
    if (!x.is_rational()) throw std::domain_error("primitive scaling needs a rational vector");
    den_lcm = lcm(den_lcm, x.a().get_den());
  }
  IVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i].a() * den_lcm;
    w[i] = scaled.get_num();
    num_gcd = gcd(num_gcd, w[i]);
  }
  if (num_gcd == 0) throw std::domain_error("zero vector has no primitive representative");
  int lead = 0;
  for (auto& x : w) {
    x /= num_gcd;
    if (lead == 0) lead = sgn(x);
  }
  if (lead < 0)
    for (auto& x : w) x = -x;
  return w;
}

Int gcd_of(const IVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

}  // namespace lforms

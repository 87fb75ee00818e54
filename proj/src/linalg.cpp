#include "kslim/linalg.hpp"

#include <stdexcept>

namespace kslim {

namespace {

void check_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
}

}  // namespace

Vec operator+(const Vec& a, const Vec& b) {
  check_same_size(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  check_same_size(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Vec conj(const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].conj();
  return out;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Mat::row(std::size_t i) const {
  Vec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return out;
}

Vec Mat::col(std::size_t j) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Mat Mat::conj() const {
  Mat out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).conj();
  return out;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix dimension mismatch");
  Mat out(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix dimension mismatch");
  Mat out(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
  return out;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  Mat out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out(i, j) += a * o(k, j);
    }
  return out;
}

Mat Mat::operator*(const Scalar& c) const {
  Mat out(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = c * e_[k];
  return out;
}

Mat Mat::operator-() const { return *this * Scalar(-1); }

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

RrefResult rref(const Mat& m) {
  Mat r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < r.rows() && r(piv, col).is_zero()) ++piv;
    if (piv == r.rows()) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(piv, j), r(lead, j));
    Scalar inv = r(lead, col).inverse();
    for (std::size_t j = col; j < r.cols(); ++j) r(lead, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r(i, col).is_zero()) continue;
      Scalar f = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= f * r(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Scalar det(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  Mat a = m;
  std::size_t n = a.rows();
  Scalar d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    Scalar inv = a(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      Scalar f = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  RrefResult r = rref(aug);
  if (r.pivots.size() != n || r.pivots.back() != n - 1)
    throw std::domain_error("matrix is singular");
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
  return out;
}

Vec solve(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  Vec x(a.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) {
    if (r.pivots[k] == a.cols())
      throw std::domain_error("inconsistent linear system");
    x[r.pivots[k]] = r.reduced(k, a.cols());
  }
  return x;
}

Subspace Subspace::zero(std::size_t ambient) {
  return Subspace(ambient, Mat(0, ambient));
}

Subspace Subspace::full(std::size_t ambient) {
  return Subspace(ambient, Mat::identity(ambient));
}

Subspace Subspace::row_space(const Mat& m) {
  RrefResult r = rref(m);
  Mat basis(r.pivots.size(), m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = r.reduced(i, j);
  return Subspace(m.cols(), std::move(basis));
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
  if (vectors.empty()) return zero(ambient);
  return row_space(Mat::from_rows(vectors, ambient));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
  // Reduce v against the echelon basis; membership iff the residue is zero.
  Vec w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (p < ambient_ && basis_(i, p).is_zero()) ++p;
    if (p == ambient_) continue;
    if (w[p].is_zero()) continue;
    Scalar f = w[p];
    for (std::size_t j = p; j < ambient_; ++j) w[j] -= f * basis_(i, j);
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace kernel(const Mat& m) {
  RrefResult r = rref(m);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
      v[r.pivots[k]] = -r.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

Subspace image(const Mat& m) { return Subspace::row_space(m.transpose()); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
  Mat stacked(a.dim() + b.dim(), a.ambient());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient(); ++j) stacked(i, j) = a.basis()(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient(); ++j)
      stacked(a.dim() + i, j) = b.basis()(i, j);
  return Subspace::row_space(stacked);
}

Mat annihilator(const Subspace& s) {
  // row(B) = (null B)^perp under the standard bilinear pairing, so the kernel
  // basis of the subspace's matrix cuts out the subspace again.
  return kernel(s.basis()).basis();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
  Mat anna = annihilator(a);
  Mat annb = annihilator(b);
  Mat stacked(anna.rows() + annb.rows(), a.ambient());
  for (std::size_t i = 0; i < anna.rows(); ++i)
    for (std::size_t j = 0; j < a.ambient(); ++j) stacked(i, j) = anna(i, j);
  for (std::size_t i = 0; i < annb.rows(); ++i)
    for (std::size_t j = 0; j < a.ambient(); ++j)
      stacked(anna.rows() + i, j) = annb(i, j);
  return kernel(stacked);
}

Subspace preimage(const Mat& m, const Subspace& s) {
  if (m.rows() != s.ambient()) throw std::invalid_argument("ambient mismatch");
  return kernel(annihilator(s) * m);
}

Subspace apply(const Mat& m, const Subspace& s) {
  if (m.cols() != s.ambient()) throw std::invalid_argument("ambient mismatch");
  std::vector<Vec> rows;
  rows.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(m.apply(s.basis_vector(i)));
  return Subspace::span(rows, m.rows());
}

Subspace conj(const Subspace& s) {
  // Conjugation fixes pivots, so the conjugated matrix is still RREF.
  return Subspace::row_space(s.basis().conj());
}

}  // namespace kslim

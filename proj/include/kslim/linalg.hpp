#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kslim/scalar.hpp"

namespace kslim {

using Vec = std::vector<Scalar>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
Vec conj(const Vec& v);
bool is_zero(const Vec& v);

/// Dense exact matrix, row-major. Entries live in Q or Q(i); operations stay
/// in whatever field the entries span.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_cols(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Mat transpose() const;
  Mat conj() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Scalar& c) const;
  Mat operator-() const;
  Vec apply(const Vec& v) const;  // M v

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form with its pivot columns; rank = pivot count.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
Scalar det(const Mat& m);
Mat inverse(const Mat& m);  // throws std::domain_error if singular

/// Solves A x = b exactly; returns one solution. Throws std::domain_error
/// when the system is inconsistent.
Vec solve(const Mat& a, const Vec& b);

/// Linear subspace of Q^n or Q(i)^n, stored as the reduced row-echelon basis
/// of its span. Equality is entry-wise equality of the echelon matrices,
/// which is a canonical form, so it decides equality of subspaces.
class Subspace {
 public:
  Subspace() : ambient_(0), basis_(0, 0) {}  // the zero space of Q^0

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
  static Subspace row_space(const Mat& m);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  Subspace(std::size_t ambient, Mat basis)
      : ambient_(ambient), basis_(std::move(basis)) {}
  std::size_t ambient_;
  Mat basis_;  // RREF, no zero rows
};

Subspace kernel(const Mat& m);
Subspace image(const Mat& m);  // column space
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// {x : M x in s}; realizes preimages like N^{-1}(W_0).
Subspace preimage(const Mat& m, const Subspace& s);
Subspace apply(const Mat& m, const Subspace& s);  // M(s)
Subspace conj(const Subspace& s);

/// Rows of `ann` span the annihilator of s under the standard bilinear
/// pairing: s = {y : ann y = 0}.
Mat annihilator(const Subspace& s);

}  // namespace kslim

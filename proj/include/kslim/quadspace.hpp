#pragma once

#include <optional>
#include <utility>

#include "kslim/linalg.hpp"

namespace kslim {

/// Non-degenerate rational quadratic space (V, q) given by its Gram matrix.
/// q extends bilinearly (not hermitially) to Q(i)-vectors.
class QuadSpace {
 public:
  explicit QuadSpace(Mat gram);

  std::size_t dim() const { return gram_.rows(); }
  const Mat& gram() const { return gram_; }

  /// v^T G w; symmetric in its arguments.
  Scalar inner(const Vec& v, const Vec& w) const;
  Scalar norm(const Vec& v) const { return inner(v, v); }

  /// (positive count, negative count) after exact Lagrange diagonalization.
  std::pair<std::size_t, std::size_t> signature() const;

  /// Signature (2, r-2), the K3-polarized case.
  bool is_k3_polarized() const;

  struct Diagonalization {
    Mat change_of_basis;       // P, invertible over Q
    std::vector<Scalar> diag;  // nonzero entries of P^T G P
  };
  Diagonalization lagrange_diagonalize() const;

  /// For isotropic v != 0, returns (x, y) with q(x,x)=2, q(y,y)=-2,
  /// q(x,y)=0 and x+y = 2v: pick z with q(v,z)=1, set w = z - q(z,z)/2 * v,
  /// x = v+w, y = v-w. z is the first standard basis vector not orthogonal
  /// to v, rescaled.
  std::pair<Vec, Vec> hyperbolic_extension(const Vec& v) const;

 private:
  Mat gram_;
};

/// Searches for a nonzero rational isotropic vector: integer vectors of
/// bounded height first, then opposite-sign diagonal entries whose ratio is
/// a rational square. Returns nothing when the bounded search fails.
std::optional<Vec> find_isotropic(const QuadSpace& q, long height = 2);

}  // namespace kslim

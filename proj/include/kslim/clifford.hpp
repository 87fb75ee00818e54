#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "kslim/quadspace.hpp"

namespace kslim {

class CliffordElement;

/// The exact Clifford algebra Cl(V,q) of a rational quadratic space, with
/// blades indexed by subsets of an orthogonal frame obtained by Lagrange
/// diagonalization. For the frame vectors f_i: f_i^2 = d_i and
/// f_i f_j = -f_j f_i (i != j). Vectors of V enter and leave through the
/// change of basis, so results are frame-independent.
class CliffordAlgebra {
 public:
  explicit CliffordAlgebra(QuadSpace space);

  std::size_t rank() const;             // r = dim V
  std::size_t dim() const;              // d = 2^r
  const QuadSpace& space() const;
  const Mat& frame() const;             // columns are f_i in V coordinates
  const Mat& frame_inverse() const;
  const std::vector<Scalar>& frame_norms() const;  // d_i = q(f_i, f_i)

  CliffordElement zero() const;
  CliffordElement unit() const;
  CliffordElement blade(std::uint32_t mask) const;
  /// Degree-one element with embed(v)^2 = q(v,v) * 1.
  CliffordElement embed_vector(const Vec& v) const;

  /// Structural compatibility: same Gram matrix.
  bool compatible(const CliffordAlgebra& other) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Sparse element of Cl(V,q): blade mask -> nonzero coefficient.
class CliffordElement {
 public:
  explicit CliffordElement(CliffordAlgebra algebra)
      : algebra_(std::move(algebra)) {}

  const CliffordAlgebra& algebra() const { return algebra_; }
  const std::map<std::uint32_t, Scalar>& terms() const { return terms_; }
  Scalar coeff(std::uint32_t mask) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_even() const;   // only even-degree blades
  bool is_vector() const; // only degree-one blades

  /// Coordinates in the blade basis (length d).
  Vec blade_coords() const;
  static CliffordElement from_blade_coords(const CliffordAlgebra& a, const Vec& c);

  /// Degree-one part mapped back to V coordinates. Throws unless the element
  /// is a pure vector.
  Vec vector_part() const;

  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement operator-() const;
  CliffordElement operator*(const CliffordElement& o) const;  // Clifford product
  CliffordElement operator*(const Scalar& c) const;

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const CliffordElement& a, const CliffordElement& b) {
    return !(a == b);
  }

  CliffordElement parity() const;    // alpha: negates odd-degree blades
  CliffordElement reversal() const;  // anti-involution reversing blade factors
  /// The other natural anti-involution, parity o reversal. Agrees with
  /// reversal on even elements (in particular on Spin norms); on the full
  /// algebra it is the involution under which +-omega polarizes.
  CliffordElement clifford_conj() const;
  CliffordElement coeff_conj() const;  // conjugates coefficients only

  /// Trace of the left regular representation: d * (unit-blade coefficient).
  Scalar trace() const;

  std::string str() const;

  void set_coeff(std::uint32_t mask, const Scalar& c);  // drops zeros

 private:
  CliffordAlgebra algebra_;
  std::map<std::uint32_t, Scalar> terms_;
};

/// Matrix of x -> a x in the blade basis (d x d).
Mat left_mul_matrix(const CliffordElement& a);

/// Span of {v . b : b blade}: d/2-dimensional for isotropic v != 0, the whole
/// algebra otherwise.
Subspace right_ideal(const CliffordAlgebra& a, const Vec& v);

/// Coefficients of e_i ^ e_j (original basis, i < j).
using Bivector = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

bool in_so(const QuadSpace& q, const Mat& n);  // N^T G + G N = 0

/// Matrix of the operator v^w -> q(w,-)v - q(v,-)w attached to a bivector.
Mat bivector_to_so(const QuadSpace& q, const Bivector& b);

/// Unique preimage of N under bivector_to_so; throws if N is not in so(V,q).
Bivector so_to_bivector(const QuadSpace& q, const Mat& n);

/// x^y -> (xy - yx)/4 on bivectors.
CliffordElement eta_prime(const CliffordAlgebra& a, const Bivector& b);

/// The Lie algebra embedding so(V,q) -> Cl(V,q); satisfies
/// [eta(N), v] = N v for all v in V.
CliffordElement eta(const CliffordAlgebra& a, const Mat& n);

/// Finite exponential of a nilpotent element; the result lies in Spin(V,q).
/// Throws if no power up to d+1 vanishes.
CliffordElement spin_exp(const CliffordElement& a);

}  // namespace kslim

#pragma once

#include "kslim/clifford.hpp"
#include "kslim/hodge.hpp"

namespace kslim {

/// Weight-one limit mixed Hodge structure on H = Cl(V,q): the output of the
/// limit Kuga-Satake functor. F^1 is the right ideal generated by v_lim,
/// N' = eta(N), and the weight filtration is W_0 = im(N'), W_1 = ker(N')
/// for N' acting by left multiplication.
struct AbLimitMHS {
  CliffordAlgebra algebra;
  Subspace f1;           // over Q(i), dim d/2
  CliffordElement nprime;
  Mat nprime_mat;        // d x d over Q
  Subspace w0, w1;       // over Q
};

AbLimitMHS ks_lim(const K3LimitMHS& m);

/// h^{0,0} = dim W_0, h^{1,1} = dim(H/W_1), h^{1,0} = h^{0,1} = dim of the
/// F^1-part of gr^W_1. Throws on filtration incompatibility.
HodgeDiamond hodge_diamond_ab(const AbLimitMHS& ab);

/// The morphism of extended period domains: an isotropic [v] goes to the
/// half-dimensional right ideal v . Cl(V_C, q).
Subspace kappa(const CliffordAlgebra& a, const Vec& v);

/// Rescales an isotropic v with q(v, conj v) > 0 by a Gaussian rational so
/// that q(v, conj v) = 2. Throws when no bounded-height scale exists.
Vec rescale_pure_point(const QuadSpace& q, const Vec& v);

/// I_v = Re(v) Im(v) for a pure point v (q(v,v) = 0, q(v, conj v) = 2);
/// satisfies I_v^2 = -1 and I_v v = i v.
CliffordElement i_v_operator(const CliffordAlgebra& a, const Vec& v);

/// Left multiplication by v as an endomorphism of H, with its position in
/// the Hodge and weight filtrations of a given structure.
struct EndomorphismClass {
  Mat mat;           // d x d
  bool in_f0_end;    // preserves F^1
  bool in_f1_end;    // maps H into F^1 and kills F^1
  int weight_shift;  // least s with f(W_k) <= W_{k+s} for all k
};

EndomorphismClass ks_embedding(const AbLimitMHS& ab, const Vec& v);

/// omega(x, y) = Tr(x a y-bar) with a = a_1 a_2, on the blade basis, plus the
/// sign s for which s*omega polarizes the given pure structure.
struct PolarizationResult {
  Mat omega;  // antisymmetric, over Q
  int sign;
};

PolarizationResult polarization_form(const AbLimitMHS& ab, const Vec& a1,
                                     const Vec& a2);

struct OrbitSample {
  Scalar z;
  bool subspaces_equal;
  bool pairing_positive;  // q(e^{zN} v, conj(e^{zN} v)) > 0
};

struct OrbitReport {
  std::vector<OrbitSample> samples;
  bool all_equal() const;
};

/// Certifies kappa(e^{zN} v_lim) = spin_exp(z eta(N)) . kappa(v_lim) at the
/// sample points; both sides are polynomial in z, so enough samples prove the
/// identity. The two sides go through independent code paths.
OrbitReport orbit_commutativity_check(const K3LimitMHS& m,
                                      const std::vector<Scalar>& z_samples);

/// 0, 1, ..., 2d: one more sample than the degree bound of either side.
std::vector<Scalar> default_orbit_samples(std::size_t d);

/// e^{zN} for nilpotent N, as a finite sum.
Mat exp_nilpotent(const Mat& n, const Scalar& z);

/// The functorial operator v_1...v_k -> T(v_1)...T(v_k) on blades. This is
/// not the monodromy operator of the Kuga-Satake local system; it exists
/// only as a regression target.
Mat naive_clifford_operator(const CliffordAlgebra& a, const Mat& t);

}  // namespace kslim

#pragma once

#include <array>
#include <map>
#include <string>

#include "kslim/quadspace.hpp"

namespace kslim {

enum class DegenerationType { I, II, III };

std::string type_name(DegenerationType t);

/// N = 0 / N != 0 = N^2 / N^2 != 0. Requires N^3 = 0.
DegenerationType classify_type(const Mat& n);

/// Limit mixed Hodge structure of K3 type: (V, q) with a nilpotent N in
/// so(V,q), N^3 = 0, and the limit period vector spanning F^2. F^1 is the
/// q-orthogonal complement of v_lim.
struct K3LimitMHS {
  QuadSpace space;
  Mat n;      // over Q
  Vec v_lim;  // over Q(i)

  /// F^p V_C as a subspace of Q(i)^r (F^0 = all, F^3 = 0).
  Subspace filtration_step(int p) const;
};

/// W_0 <= W_1 <= W_2 <= W_3 <= W_4 = V for the monodromy weight filtration:
/// W_0 = im(N^2), W_3 = ker(N^2), W_1 = N(W_3), W_2 = N^{-1}(W_0).
struct WeightFiltrationK3 {
  std::array<Subspace, 5> w;

  const Subspace& operator[](std::size_t k) const { return w[k]; }
  std::array<std::size_t, 5> dims() const;
};

WeightFiltrationK3 weight_filtration_k3(const QuadSpace& q, const Mat& n);

/// (p,q) -> h^{p,q} of a (mixed) Hodge structure.
using HodgeDiamond = std::map<std::pair<int, int>, std::size_t>;

std::size_t diamond_total(const HodgeDiamond& d);
std::size_t diamond_get(const HodgeDiamond& d, int p, int q);

struct ValidationItem {
  std::string id;
  std::string description;
  bool pass;
  std::string detail;
};

/// Realized definiteness sign of the primitive Hermitian form on one
/// (p,q)-component (+1 positive definite, -1 negative definite).
struct PrimitiveSign {
  int weight;
  int p, q;
  int sign;
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  std::vector<PrimitiveSign> primitive_signs;
  // Membership in the essential image of the limit functor is not decidable
  // from the data; the report carries the caveat explicitly.
  bool essential_image_checked = false;

  bool ok() const;
  const ValidationItem* find(const std::string& id) const;
};

/// Checks the polarized-limit-MHS axioms: (a) structural invariants,
/// (b) two-dimensional image of a nonzero N, (c) purity of every graded
/// piece, (d) definiteness of the primitive Hermitian forms with recorded
/// signs. Failures are report entries, never exceptions.
ValidationReport validate_pmhs_k3(const K3LimitMHS& m);

/// Counts of the I^{p,q} pieces of the limit MHS. Requires axioms (a)-(c).
HodgeDiamond hodge_diamond_k3(const K3LimitMHS& m);

/// +1 / -1 when the Hermitian matrix is positive / negative definite
/// (leading principal minors, exact); 0 otherwise.
int hermitian_definiteness(const Mat& h);

}  // namespace kslim

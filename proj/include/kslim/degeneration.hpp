#pragma once

#include <optional>
#include <string>

#include "kslim/kuga_satake.hpp"

namespace kslim {

/// What the Clemens-Schmid consequence H^1(A_0) = W_1 H^1_lim yields for the
/// central fibre of the Kuga-Satake family.
struct CentralFibreReport {
  DegenerationType type;
  HodgeDiamond h1_diamond;  // of H^1(A_0)
  std::size_t torus_rank;   // w = dim W_0 H
  std::size_t dim_b;        // abelian-part dimension
  std::string birational_type;
};

CentralFibreReport central_fibre_h1(const K3LimitMHS& m);

struct DualComplexReport {
  std::size_t torus_rank;             // w
  std::vector<mpz_class> betti;       // H^k(Sigma), k = 0..w
  mpz_class component_lower_bound;    // on the number of components of A_0
};

DualComplexReport dual_complex_cohomology(const K3LimitMHS& m);

/// Betti number in a single degree, binomial(w, k).
mpz_class dual_complex_betti(const K3LimitMHS& m, std::size_t k);

/// Invariants of the Neron special fibre: 0 -> (C^*)^w -> A -> B -> 0.
struct NeronData {
  std::size_t w;
  std::size_t dim_b;
  Mat gr1_basis;           // representatives of a basis of W_1/W_0
  std::size_t gr1_f1_dim;  // h^{1,0} of the induced structure on gr_1
  std::string birational_type;
};

NeronData neron_data(const K3LimitMHS& m);

/// Coefficient of T^d in Z(T) = N [B] (L-1)^w sum_d d^w T^d.
struct ZetaCoefficient {
  std::size_t d;
  std::optional<mpz_class> n_components;  // symbolic "N" when absent
  std::size_t w;
  mpz_class multiplier;  // d^w

  std::string str() const;
};

std::vector<ZetaCoefficient> motivic_zeta(
    const K3LimitMHS& m, std::size_t terms,
    std::optional<mpz_class> n_components = std::nullopt);

std::string birational_type_label(DegenerationType t, std::size_t r);

}  // namespace kslim

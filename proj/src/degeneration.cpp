#include "kslim/degeneration.hpp"

#include <sstream>
#include <stdexcept>

namespace kslim {

namespace {

mpz_class pow2(std::size_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

mpz_class binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

}  // namespace

std::string birational_type_label(DegenerationType t, std::size_t r) {
  std::ostringstream os;
  switch (t) {
    case DegenerationType::I:
      os << "abelian(dim " << pow2(r - 1) << ")";
      break;
    case DegenerationType::II:
      os << "P^" << pow2(r - 2) << "-bundle over abelian(" << pow2(r - 2) << ")";
      break;
    case DegenerationType::III:
      os << "rational";
      break;
  }
  return os.str();
}

CentralFibreReport central_fibre_h1(const K3LimitMHS& m) {
  DegenerationType type = classify_type(m.n);
  AbLimitMHS ab = ks_lim(m);
  HodgeDiamond full = hodge_diamond_ab(ab);

  // H^1(A_0) = W_1 H^1_lim: drop the weight-2 part of the diamond.
  HodgeDiamond h1;
  std::size_t w = diamond_get(full, 0, 0);
  std::size_t b = diamond_get(full, 1, 0);
  if (w) h1[{0, 0}] = w;
  if (b) {
    h1[{1, 0}] = b;
    h1[{0, 1}] = b;
  }

  // Cross-check against the closed forms of the type theorem.
  std::size_t r = m.space.dim();
  bool ok = false;
  switch (type) {
    case DegenerationType::I:
      ok = w == 0 && mpz_class(b) == pow2(r - 1);
      break;
    case DegenerationType::II:
      ok = mpz_class(w) == pow2(r - 2) && mpz_class(b) == pow2(r - 2);
      break;
    case DegenerationType::III:
      ok = mpz_class(w) == pow2(r - 1) && b == 0;
      break;
  }
  if (!ok)
    throw std::logic_error(
        "central fibre diamond disagrees with the closed form");

  return {type, std::move(h1), w, b, birational_type_label(type, r)};
}

DualComplexReport dual_complex_cohomology(const K3LimitMHS& m) {
  DegenerationType type = classify_type(m.n);
  AbLimitMHS ab = ks_lim(m);
  std::size_t w = ab.w0.dim();

  DualComplexReport rep;
  rep.torus_rank = w;
  for (std::size_t k = 0; k <= w; ++k) rep.betti.push_back(binomial(w, k));
  switch (type) {
    case DegenerationType::I:
      rep.component_lower_bound = 1;  // the dual complex is a point
      break;
    case DegenerationType::II:
      rep.component_lower_bound = pow2(m.space.dim() - 2);
      break;
    case DegenerationType::III:
      rep.component_lower_bound = pow2(m.space.dim() - 1);
      break;
  }
  return rep;
}

mpz_class dual_complex_betti(const K3LimitMHS& m, std::size_t k) {
  AbLimitMHS ab = ks_lim(m);
  return binomial(ab.w0.dim(), k);
}

NeronData neron_data(const K3LimitMHS& m) {
  DegenerationType type = classify_type(m.n);
  AbLimitMHS ab = ks_lim(m);
  std::size_t w = ab.w0.dim();
  std::size_t gr1 = ab.w1.dim() - w;

  // Representatives of W_1/W_0 and the induced F^1-dimension.
  std::vector<Vec> reps;
  {
    Subspace acc = ab.w0;
    for (std::size_t i = 0; i < ab.w1.dim(); ++i) {
      Vec cand = ab.w1.basis_vector(i);
      if (!acc.contains(cand)) {
        reps.push_back(cand);
        acc = sum(acc, Subspace::span({cand}, ab.w1.ambient()));
      }
    }
  }
  std::size_t f1_dim = sum(intersect(ab.f1, ab.w1), ab.w0).dim() - w;

  return {w, gr1 / 2, Mat::from_rows(reps, ab.algebra.dim()), f1_dim,
          birational_type_label(type, m.space.dim())};
}

std::string ZetaCoefficient::str() const {
  std::ostringstream os;
  if (n_components)
    os << *n_components;
  else
    os << "N";
  os << "*[B]";
  if (w > 0) os << "*(L-1)^" << w << "*" << multiplier;
  os << "*T^" << d;
  return os.str();
}

std::vector<ZetaCoefficient> motivic_zeta(const K3LimitMHS& m,
                                          std::size_t terms,
                                          std::optional<mpz_class> n_components) {
  if (terms < 1) throw std::invalid_argument("need at least one term");
  AbLimitMHS ab = ks_lim(m);
  std::size_t w = ab.w0.dim();

  std::vector<ZetaCoefficient> out;
  out.reserve(terms);
  for (std::size_t d = 1; d <= terms; ++d) {
    mpz_class mult;
    mpz_ui_pow_ui(mult.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(w));
    out.push_back({d, n_components, w, std::move(mult)});
  }
  return out;
}

}  // namespace kslim

#include "kslim/kuga_satake.hpp"

#include <bit>
#include <stdexcept>

namespace kslim {

namespace {

void require_valid(const K3LimitMHS& m) {
  ValidationReport rep = validate_pmhs_k3(m);
  if (rep.ok()) return;
  for (const auto& item : rep.items)
    if (!item.pass)
      throw std::invalid_argument("invalid K3 limit MHS: " + item.id);
}

}  // namespace

AbLimitMHS ks_lim(const K3LimitMHS& m) {
  require_valid(m);
  CliffordAlgebra algebra(m.space);
  std::size_t d = algebra.dim();

  Subspace f1 = right_ideal(algebra, m.v_lim);
  if (f1.dim() != d / 2)
    throw std::invalid_argument("F^1 is not half-dimensional");

  CliffordElement nprime = eta(algebra, m.n);
  if (!(nprime * nprime).is_zero())
    throw std::invalid_argument("eta(N)^2 != 0");
  Mat nprime_mat = left_mul_matrix(nprime);
  Subspace w0 = image(nprime_mat);
  Subspace w1 = kernel(nprime_mat);
  if (!w1.contains(w0))
    throw std::invalid_argument("W_0 is not contained in W_1");

  if (!m.n.is_zero()) {
    // N' must be a scalar multiple of the bivector of im(N).
    Subspace im_n = image(m.n);
    CliffordElement c1 = algebra.embed_vector(im_n.basis_vector(0));
    CliffordElement c2 = algebra.embed_vector(im_n.basis_vector(1));
    CliffordElement cand = (c1 * c2 - c2 * c1) * Scalar::rational(1, 4);
    if (cand.is_zero() || nprime.is_zero())
      throw std::invalid_argument("degenerate image bivector");
    auto lead = cand.terms().begin();
    Scalar lambda = nprime.coeff(lead->first) / lead->second;
    if (lambda.is_zero() || !lambda.is_real() || nprime != cand * lambda)
      throw std::invalid_argument(
          "eta(N) is not proportional to the bivector of im(N)");
  }

  return {algebra, std::move(f1), std::move(nprime), std::move(nprime_mat),
          std::move(w0), std::move(w1)};
}

HodgeDiamond hodge_diamond_ab(const AbLimitMHS& ab) {
  std::size_t d = ab.algebra.dim();
  std::size_t h00 = ab.w0.dim();
  std::size_t h11 = d - ab.w1.dim();

  Subspace gr1_f = sum(intersect(ab.f1, ab.w1), ab.w0);
  Subspace gr1_fc = sum(intersect(conj(ab.f1), ab.w1), ab.w0);
  std::size_t h10 = gr1_f.dim() - h00;
  std::size_t h01 = gr1_fc.dim() - h00;

  bool ok = h10 == h01 && h00 + h10 + h01 + h11 == d &&
            sum(ab.f1, ab.w1).dim() == d &&        // F^1 surjects onto gr_2
            intersect(ab.f1, ab.w0).dim() == 0 &&  // F^1(gr_0) = 0
            intersect(gr1_f, gr1_fc) == ab.w0;     // opposedness on gr_1
  if (!ok) throw std::domain_error("filtration incompatibility on H");

  HodgeDiamond out;
  if (h00) out[{0, 0}] = h00;
  if (h10) out[{1, 0}] = h10;
  if (h01) out[{0, 1}] = h01;
  if (h11) out[{1, 1}] = h11;
  return out;
}

Subspace kappa(const CliffordAlgebra& a, const Vec& v) {
  if (is_zero(v)) throw std::invalid_argument("kappa of the zero vector");
  if (!a.space().norm(v).is_zero())
    throw std::invalid_argument("kappa needs an isotropic vector");
  return right_ideal(a, v);
}

namespace {

std::optional<mpz_class> exact_sqrt(const mpz_class& n) {
  if (n < 0) return std::nullopt;
  mpz_class root = sqrt(n);
  if (root * root == n) return root;
  return std::nullopt;
}

// Gaussian rational c = (a + b i)/m with |c|^2 = t, by bounded enumeration.
std::optional<Scalar> gaussian_of_norm(const mpq_class& t) {
  if (t <= 0) return std::nullopt;
  for (long m = 1; m <= 64; ++m) {
    mpq_class rhs = t * m * m;
    if (rhs.get_den() != 1) continue;
    mpz_class target = rhs.get_num();
    for (mpz_class a = 0; a * a <= target; ++a) {
      auto b = exact_sqrt(target - a * a);
      if (!b) continue;
      mpq_class re(a, m), im(*b, m);
      re.canonicalize();
      im.canonicalize();
      return Scalar(re, im);
    }
  }
  return std::nullopt;
}

}  // namespace

Vec rescale_pure_point(const QuadSpace& q, const Vec& v) {
  if (!q.norm(v).is_zero())
    throw std::invalid_argument("pure point must be isotropic");
  Scalar pairing = q.inner(v, conj(v));
  if (!pairing.is_real() || pairing.sign() <= 0)
    throw std::invalid_argument("q(v, conj v) must be positive");
  if (pairing == Scalar(2)) return v;
  auto c = gaussian_of_norm(mpq_class(2) / pairing.re());
  if (!c)
    throw std::domain_error("no bounded Gaussian rational rescaling found");
  return *c * v;
}

CliffordElement i_v_operator(const CliffordAlgebra& a, const Vec& v) {
  const QuadSpace& q = a.space();
  if (!q.norm(v).is_zero())
    throw std::invalid_argument("I_v needs an isotropic vector");
  if (q.inner(v, conj(v)) != Scalar(2))
    throw std::invalid_argument("I_v needs q(v, conj v) = 2");
  Vec re(v.size()), im(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    re[i] = Scalar(v[i].re());
    im[i] = Scalar(v[i].im());
  }
  return a.embed_vector(re) * a.embed_vector(im);
}

EndomorphismClass ks_embedding(const AbLimitMHS& ab, const Vec& v) {
  const CliffordAlgebra& a = ab.algebra;
  Mat f = left_mul_matrix(a.embed_vector(v));

  bool in_f0 = ab.f1.contains(apply(f, ab.f1));
  bool in_f1 = ab.f1.contains(image(f)) && apply(f, ab.f1).dim() == 0;

  std::size_t d = a.dim();
  auto wstep = [&](int k) {
    if (k < 0) return Subspace::zero(d);
    if (k == 0) return ab.w0;
    if (k == 1) return ab.w1;
    return Subspace::full(d);
  };
  int shift = 2;
  for (int s = -2; s <= 2; ++s) {
    bool ok = true;
    for (int k = 0; k <= 2 && ok; ++k)
      ok = wstep(k + s).contains(apply(f, wstep(k)));
    if (ok) {
      shift = s;
      break;
    }
  }
  return {std::move(f), in_f0, in_f1, shift};
}

PolarizationResult polarization_form(const AbLimitMHS& ab, const Vec& a1,
                                     const Vec& a2) {
  const CliffordAlgebra& alg = ab.algebra;
  const QuadSpace& q = alg.space();
  Scalar n1 = q.norm(a1), n2 = q.norm(a2);
  if (!n1.is_real() || n1.sign() <= 0 || !n2.is_real() || n2.sign() <= 0 ||
      !q.inner(a1, a2).is_zero())
    throw std::invalid_argument(
        "polarization needs orthogonal vectors of positive norm");

  // omega(x, y) = Tr(x a y-bar). With y-bar the plain reversal the form
  // splits with opposite signs on the even and odd halves of F^1, so no
  // global sign polarizes; the Clifford conjugation makes one sign work on
  // the full algebra, which is what the construction asserts.
  CliffordElement a = alg.embed_vector(a1) * alg.embed_vector(a2);
  std::size_t d = alg.dim();
  Mat omega(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    CliffordElement left = alg.blade(std::uint32_t(i)) * a;
    for (std::size_t j = 0; j < d; ++j)
      omega(i, j) = (left * alg.blade(std::uint32_t(j)).clifford_conj()).trace();
  }

  // i * s * omega(h, conj h) > 0 on F^1 determines the sign s.
  std::size_t k = ab.f1.dim();
  Mat omega_t = omega.transpose();
  Mat herm(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    Vec oi = omega_t.apply(ab.f1.basis_vector(i));  // row i of u^T omega
    for (std::size_t j = 0; j < k; ++j) {
      Scalar acc;
      Vec uc = conj(ab.f1.basis_vector(j));
      for (std::size_t t = 0; t < d; ++t) acc += oi[t] * uc[t];
      herm(i, j) = Scalar::i() * acc;
    }
  }
  int def = hermitian_definiteness(herm);
  if (def == 0)
    throw std::domain_error("neither omega nor -omega polarizes F^1");
  return {std::move(omega), def};
}

bool OrbitReport::all_equal() const {
  for (const auto& s : samples)
    if (!s.subspaces_equal) return false;
  return true;
}

std::vector<Scalar> default_orbit_samples(std::size_t d) {
  std::vector<Scalar> zs;
  zs.reserve(2 * d + 1);
  for (std::size_t k = 0; k <= 2 * d; ++k) zs.push_back(Scalar(long(k)));
  return zs;
}

Mat exp_nilpotent(const Mat& n, const Scalar& z) {
  if (n.rows() != n.cols()) throw std::invalid_argument("non-square matrix");
  Mat result = Mat::identity(n.rows());
  Mat power = n;
  Scalar zk(1);
  mpz_class factorial = 1;
  for (std::size_t k = 1; !power.is_zero(); ++k) {
    if (k > n.rows() + 1) throw std::domain_error("matrix is not nilpotent");
    factorial *= static_cast<unsigned long>(k);
    zk *= z;
    result = result + power * (zk * Scalar(mpq_class(mpz_class(1), factorial)));
    power = power * n;
  }
  return result;
}

OrbitReport orbit_commutativity_check(const K3LimitMHS& m,
                                      const std::vector<Scalar>& z_samples) {
  require_valid(m);
  CliffordAlgebra algebra(m.space);
  CliffordElement eta_n = eta(algebra, m.n);
  Subspace kappa0 = kappa(algebra, m.v_lim);

  OrbitReport report;
  for (const Scalar& z : z_samples) {
    Vec vz = exp_nilpotent(m.n, z).apply(m.v_lim);
    Subspace lhs = kappa(algebra, vz);
    Mat g = left_mul_matrix(spin_exp(eta_n * z));
    Subspace rhs = apply(g, kappa0);
    Scalar pairing = m.space.inner(vz, conj(vz));
    report.samples.push_back(
        {z, lhs == rhs, pairing.is_real() && pairing.sign() > 0});
  }
  return report;
}

Mat naive_clifford_operator(const CliffordAlgebra& a, const Mat& t) {
  std::size_t d = a.dim();
  std::size_t r = a.rank();
  std::vector<CliffordElement> tf;
  tf.reserve(r);
  for (std::size_t i = 0; i < r; ++i)
    tf.push_back(a.embed_vector(t.apply(a.frame().col(i))));

  Mat out(d, d);
  for (std::size_t mask = 0; mask < d; ++mask) {
    CliffordElement prod = a.unit();
    for (std::uint32_t m = std::uint32_t(mask); m != 0; m &= m - 1)
      prod = prod * tf[std::size_t(std::countr_zero(m))];
    for (const auto& [row, c] : prod.terms()) out(row, mask) = c;
  }
  return out;
}

}  // namespace kslim

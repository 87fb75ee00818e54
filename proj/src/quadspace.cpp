#include "kslim/quadspace.hpp"

#include <stdexcept>

namespace kslim {

QuadSpace::QuadSpace(Mat gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols())
    throw std::invalid_argument("Gram matrix must be square");
  if (!gram_.is_symmetric())
    throw std::invalid_argument("Gram matrix must be symmetric");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = 0; j < gram_.cols(); ++j)
      if (!gram_(i, j).is_real())
        throw std::invalid_argument("Gram matrix must be rational");
  if (det(gram_).is_zero())
    throw std::invalid_argument("quadratic form is degenerate");
}

Scalar QuadSpace::inner(const Vec& v, const Vec& w) const {
  if (v.size() != dim() || w.size() != dim())
    throw std::invalid_argument("vector length mismatch");
  Scalar acc;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      acc += v[i] * gram_(i, j) * w[j];
  }
  return acc;
}

QuadSpace::Diagonalization QuadSpace::lagrange_diagonalize() const {
  std::size_t n = dim();
  Mat a = gram_;
  Mat p = Mat::identity(n);

  auto swap_basis = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(a(i, k), a(j, k));
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(a(k, i), a(k, j));
      std::swap(p(k, i), p(k, j));
    }
  };
  // basis_i += c * basis_j
  auto add_basis = [&](std::size_t i, std::size_t j, const Scalar& c) {
    for (std::size_t k = 0; k < n; ++k) a(i, k) += c * a(j, k);
    for (std::size_t k = 0; k < n; ++k) {
      a(k, i) += c * a(k, j);
      p(k, i) += c * p(k, j);
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i).is_zero()) {
      std::size_t jd = i + 1;
      while (jd < n && a(jd, jd).is_zero()) ++jd;
      if (jd < n) {
        swap_basis(i, jd);
      } else {
        std::size_t jo = i + 1;
        while (jo < n && a(i, jo).is_zero()) ++jo;
        if (jo == n) throw std::domain_error("quadratic form is degenerate");
        add_basis(i, jo, Scalar(1));  // new norm 2*a(i,jo) != 0
      }
    }
    Scalar inv = a(i, i).inverse();
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(i, j).is_zero()) continue;
      add_basis(j, i, -(a(i, j) * inv));
    }
  }

  std::vector<Scalar> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  return {std::move(p), std::move(d)};
}

std::pair<std::size_t, std::size_t> QuadSpace::signature() const {
  Diagonalization dg = lagrange_diagonalize();
  std::size_t pos = 0, neg = 0;
  for (const auto& x : dg.diag) (x.sign() > 0 ? pos : neg) += 1;
  return {pos, neg};
}

bool QuadSpace::is_k3_polarized() const {
  auto [pos, neg] = signature();
  return pos == 2 && neg == dim() - 2;
}

std::pair<Vec, Vec> QuadSpace::hyperbolic_extension(const Vec& v) const {
  if (v.size() != dim()) throw std::invalid_argument("vector length mismatch");
  if (is_zero(v)) throw std::invalid_argument("v must be nonzero");
  if (!norm(v).is_zero()) throw std::invalid_argument("v must be isotropic");

  Vec z;
  for (std::size_t i = 0; i < dim(); ++i) {
    Vec e(dim());
    e[i] = Scalar(1);
    Scalar pairing = inner(v, e);
    if (!pairing.is_zero()) {
      z = pairing.inverse() * e;
      break;
    }
  }
  if (z.empty()) throw std::domain_error("no pairing vector; form degenerate");

  Scalar half = Scalar::rational(1, 2);
  Vec w = z - (half * norm(z)) * v;
  return {v + w, v - w};
}

namespace {

// Integer vectors with entries in [-h, h], first nonzero entry positive.
bool next_candidate(std::vector<long>& c, long h) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < h) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = -h;
      return true;
    }
  }
  return false;
}

std::optional<mpz_class> exact_sqrt(const mpz_class& n) {
  if (n < 0) return std::nullopt;
  mpz_class root = sqrt(n);
  if (root * root == n) return root;
  return std::nullopt;
}

}  // namespace

std::optional<Vec> find_isotropic(const QuadSpace& q, long height) {
  std::size_t n = q.dim();
  std::vector<long> c(n, -height);
  do {
    bool zero = true;
    for (long x : c)
      if (x != 0) zero = false;
    if (zero) continue;
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar(c[i]);
    if (q.norm(v).is_zero()) return v;
  } while (next_candidate(c, height));

  // Combine frame vectors of opposite sign: q(f_i + t f_j) = d_i + t^2 d_j
  // vanishes when -d_i/d_j is a rational square.
  auto dg = q.lagrange_diagonalize();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || dg.diag[i].sign() * dg.diag[j].sign() >= 0) continue;
      mpq_class ratio = -(dg.diag[i].re() / dg.diag[j].re());
      auto num = exact_sqrt(ratio.get_num());
      auto den = exact_sqrt(ratio.get_den());
      if (!num || !den) continue;
      mpq_class t(*num, *den);
      t.canonicalize();
      Vec v = dg.change_of_basis.col(i) + (Scalar(mpq_class(t)) * dg.change_of_basis.col(j));
      if (!q.norm(v).is_zero()) continue;  // unreachable; kept as a guard
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace kslim

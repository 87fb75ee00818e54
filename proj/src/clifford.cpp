#include "kslim/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace kslim {

namespace {

constexpr std::size_t kMaxRank = 16;

// Sign of reordering f_a * f_b into canonical ascending order: counts pairs
// (i in a, j in b) with i > j. Repeated indices end up adjacent and contract.
int reorder_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t x = a >> 1; x != 0; x >>= 1)
    swaps += std::popcount(x & b);
  return (swaps & 1) ? -1 : 1;
}

}  // namespace

struct CliffordAlgebra::Data {
  QuadSpace space;
  Mat frame;      // P
  Mat frame_inv;  // P^{-1}
  std::vector<Scalar> norms;

  explicit Data(QuadSpace s) : space(std::move(s)), frame(), frame_inv() {
    auto dg = space.lagrange_diagonalize();
    frame = std::move(dg.change_of_basis);
    frame_inv = inverse(frame);
    norms = std::move(dg.diag);
  }
};

CliffordAlgebra::CliffordAlgebra(QuadSpace space)
    : data_(std::make_shared<const Data>(std::move(space))) {
  if (rank() > kMaxRank)
    throw std::invalid_argument("Clifford algebra dimension 2^r too large");
}

std::size_t CliffordAlgebra::rank() const { return data_->space.dim(); }
std::size_t CliffordAlgebra::dim() const { return std::size_t(1) << rank(); }
const QuadSpace& CliffordAlgebra::space() const { return data_->space; }
const Mat& CliffordAlgebra::frame() const { return data_->frame; }
const Mat& CliffordAlgebra::frame_inverse() const { return data_->frame_inv; }
const std::vector<Scalar>& CliffordAlgebra::frame_norms() const {
  return data_->norms;
}

CliffordElement CliffordAlgebra::zero() const { return CliffordElement(*this); }

CliffordElement CliffordAlgebra::unit() const { return blade(0); }

CliffordElement CliffordAlgebra::blade(std::uint32_t mask) const {
  if (mask >= dim()) throw std::invalid_argument("blade index out of range");
  CliffordElement e(*this);
  e.set_coeff(mask, Scalar(1));
  return e;
}

CliffordElement CliffordAlgebra::embed_vector(const Vec& v) const {
  if (v.size() != rank()) throw std::invalid_argument("vector length mismatch");
  Vec u = data_->frame_inv.apply(v);
  CliffordElement e(*this);
  for (std::size_t i = 0; i < rank(); ++i)
    e.set_coeff(std::uint32_t(1) << i, u[i]);
  return e;
}

bool CliffordAlgebra::compatible(const CliffordAlgebra& other) const {
  return data_ == other.data_ || data_->space.gram() == other.data_->space.gram();
}

Scalar CliffordElement::coeff(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void CliffordElement::set_coeff(std::uint32_t mask, const Scalar& c) {
  if (c.is_zero())
    terms_.erase(mask);
  else
    terms_[mask] = c;
}

bool CliffordElement::is_even() const {
  for (const auto& [mask, c] : terms_)
    if (std::popcount(mask) % 2 != 0) return false;
  return true;
}

bool CliffordElement::is_vector() const {
  for (const auto& [mask, c] : terms_)
    if (std::popcount(mask) != 1) return false;
  return true;
}

Vec CliffordElement::blade_coords() const {
  Vec out(algebra_.dim());
  for (const auto& [mask, c] : terms_) out[mask] = c;
  return out;
}

CliffordElement CliffordElement::from_blade_coords(const CliffordAlgebra& a,
                                                   const Vec& c) {
  if (c.size() != a.dim()) throw std::invalid_argument("coordinate length mismatch");
  CliffordElement e(a);
  for (std::size_t m = 0; m < c.size(); ++m)
    e.set_coeff(std::uint32_t(m), c[m]);
  return e;
}

Vec CliffordElement::vector_part() const {
  if (!is_vector()) throw std::domain_error("element is not a pure vector");
  Vec u(algebra_.rank());
  for (const auto& [mask, c] : terms_)
    u[std::countr_zero(mask)] = c;
  return algebra_.frame().apply(u);
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  if (!algebra_.compatible(o.algebra_))
    throw std::invalid_argument("Clifford algebra mismatch");
  CliffordElement out = *this;
  for (const auto& [mask, c] : o.terms_) out.set_coeff(mask, out.coeff(mask) + c);
  return out;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
  return *this + (-o);
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement out = *this;
  for (auto& [mask, c] : out.terms_) c = -c;
  return out;
}

CliffordElement CliffordElement::operator*(const Scalar& s) const {
  CliffordElement out(algebra_);
  if (s.is_zero()) return out;
  for (const auto& [mask, c] : terms_) out.terms_[mask] = s * c;
  return out;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
  if (!algebra_.compatible(o.algebra_))
    throw std::invalid_argument("Clifford algebra mismatch");
  const auto& norms = algebra_.frame_norms();
  CliffordElement out(algebra_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      Scalar factor = ca * cb;
      if (reorder_sign(a, b) < 0) factor = -factor;
      for (std::uint32_t common = a & b; common != 0; common &= common - 1)
        factor *= norms[std::countr_zero(common)];
      std::uint32_t mask = a ^ b;
      out.set_coeff(mask, out.coeff(mask) + factor);
    }
  }
  return out;
}

CliffordElement CliffordElement::parity() const {
  CliffordElement out = *this;
  for (auto& [mask, c] : out.terms_)
    if (std::popcount(mask) % 2 != 0) c = -c;
  return out;
}

CliffordElement CliffordElement::reversal() const {
  // Reversing a degree-k blade costs k(k-1)/2 transpositions.
  CliffordElement out = *this;
  for (auto& [mask, c] : out.terms_) {
    int k = std::popcount(mask);
    if ((k * (k - 1) / 2) % 2 != 0) c = -c;
  }
  return out;
}

CliffordElement CliffordElement::clifford_conj() const {
  return reversal().parity();
}

CliffordElement CliffordElement::coeff_conj() const {
  CliffordElement out = *this;
  for (auto& [mask, c] : out.terms_) c = c.conj();
  return out;
}

Scalar CliffordElement::trace() const {
  return Scalar(long(algebra_.dim())) * coeff(0);
}

std::string CliffordElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (std::uint32_t m = mask; m != 0; m &= m - 1)
      os << "*f" << (std::countr_zero(m) + 1);
  }
  return os.str();
}

Mat left_mul_matrix(const CliffordElement& a) {
  std::size_t d = a.algebra().dim();
  Mat m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    CliffordElement prod = a * a.algebra().blade(std::uint32_t(j));
    for (const auto& [mask, c] : prod.terms()) m(mask, j) = c;
  }
  return m;
}

Subspace right_ideal(const CliffordAlgebra& a, const Vec& v) {
  if (is_zero(v)) throw std::invalid_argument("right ideal of the zero vector");
  CliffordElement ev = a.embed_vector(v);
  std::size_t d = a.dim();
  std::vector<Vec> cols;
  cols.reserve(d);
  for (std::size_t j = 0; j < d; ++j)
    cols.push_back((ev * a.blade(std::uint32_t(j))).blade_coords());
  return image(Mat::from_cols(cols, d));
}

bool in_so(const QuadSpace& q, const Mat& n) {
  if (n.rows() != q.dim() || n.cols() != q.dim()) return false;
  return (n.transpose() * q.gram() + q.gram() * n).is_zero();
}

Mat bivector_to_so(const QuadSpace& q, const Bivector& b) {
  std::size_t r = q.dim();
  Mat out(r, r);
  for (const auto& [ij, c] : b) {
    auto [i, j] = ij;
    if (i >= j || j >= r) throw std::invalid_argument("bad bivector index");
    // (e_i ^ e_j)(x) = q(e_j, x) e_i - q(e_i, x) e_j
    for (std::size_t k = 0; k < r; ++k) {
      out(i, k) += c * q.gram()(j, k);
      out(j, k) -= c * q.gram()(i, k);
    }
  }
  return out;
}

Bivector so_to_bivector(const QuadSpace& q, const Mat& n) {
  if (!in_so(q, n))
    throw std::invalid_argument("operator is not in so(V,q)");
  std::size_t r = q.dim();
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) idx.emplace_back(i, j);

  // Columns are the vectorized so-matrices of the basis bivectors.
  Mat sys(r * r, idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    Bivector unit_biv{{idx[c], Scalar(1)}};
    Mat m = bivector_to_so(q, unit_biv);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sys(i * r + j, c) = m(i, j);
  }
  Vec rhs(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) rhs[i * r + j] = n(i, j);
  Vec lambda = solve(sys, rhs);

  Bivector out;
  for (std::size_t c = 0; c < idx.size(); ++c)
    if (!lambda[c].is_zero()) out[idx[c]] = lambda[c];
  if (bivector_to_so(q, out) != n)
    throw std::domain_error("bivector recovery failed to reproduce N");
  return out;
}

CliffordElement eta_prime(const CliffordAlgebra& a, const Bivector& b) {
  CliffordElement out = a.zero();
  Scalar quarter = Scalar::rational(1, 4);
  std::size_t r = a.rank();
  for (const auto& [ij, c] : b) {
    Vec ei(r), ej(r);
    ei[ij.first] = Scalar(1);
    ej[ij.second] = Scalar(1);
    CliffordElement x = a.embed_vector(ei);
    CliffordElement y = a.embed_vector(ej);
    out = out + (x * y - y * x) * (quarter * c);
  }
  return out;
}

CliffordElement eta(const CliffordAlgebra& a, const Mat& n) {
  return eta_prime(a, so_to_bivector(a.space(), n));
}

CliffordElement spin_exp(const CliffordElement& a) {
  const CliffordAlgebra& alg = a.algebra();
  CliffordElement result = alg.unit();
  CliffordElement power = a;
  mpz_class factorial = 1;
  for (std::size_t k = 1; !power.is_zero(); ++k) {
    if (k > alg.dim() + 1)
      throw std::domain_error("element is not nilpotent");
    factorial *= static_cast<unsigned long>(k);
    result = result + power * Scalar(mpq_class(mpz_class(1), factorial));
    power = power * a;
  }
  return result;
}

}  // namespace kslim

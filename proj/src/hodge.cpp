#include "kslim/hodge.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kslim/clifford.hpp"

namespace kslim {

std::string type_name(DegenerationType t) {
  switch (t) {
    case DegenerationType::I: return "I";
    case DegenerationType::II: return "II";
    default: return "III";
  }
}

DegenerationType classify_type(const Mat& n) {
  Mat n2 = n * n;
  if (!(n2 * n).is_zero()) throw std::invalid_argument("N^3 != 0");
  if (n.is_zero()) return DegenerationType::I;
  if (n2.is_zero()) return DegenerationType::II;
  return DegenerationType::III;
}

Subspace K3LimitMHS::filtration_step(int p) const {
  std::size_t r = space.dim();
  if (p <= 0) return Subspace::full(r);
  if (p >= 3) return Subspace::zero(r);
  if (p == 2) return Subspace::span({v_lim}, r);
  // F^1 = (F^2)^perp: the kernel of x -> q(v_lim, x).
  Mat row(1, r);
  Vec gv = space.gram().apply(v_lim);
  for (std::size_t j = 0; j < r; ++j) row(0, j) = gv[j];
  return kernel(row);
}

std::array<std::size_t, 5> WeightFiltrationK3::dims() const {
  std::array<std::size_t, 5> out{};
  for (std::size_t k = 0; k < 5; ++k) out[k] = w[k].dim();
  return out;
}

WeightFiltrationK3 weight_filtration_k3(const QuadSpace& q, const Mat& n) {
  Mat n2 = n * n;
  if (!(n2 * n).is_zero()) throw std::invalid_argument("N^3 != 0");
  if (!in_so(q, n)) throw std::invalid_argument("N is not in so(V,q)");
  Subspace w0 = image(n2);
  Subspace w3 = kernel(n2);
  Subspace w1 = apply(n, w3);
  Subspace w2 = preimage(n, w0);
  Subspace w4 = Subspace::full(q.dim());
  return {{w0, w1, w2, w3, w4}};
}

std::size_t diamond_total(const HodgeDiamond& d) {
  std::size_t t = 0;
  for (const auto& [pq, h] : d) t += h;
  return t;
}

std::size_t diamond_get(const HodgeDiamond& d, int p, int q) {
  auto it = d.find({p, q});
  return it == d.end() ? 0 : it->second;
}

bool ValidationReport::ok() const {
  for (const auto& item : items)
    if (!item.pass) return false;
  return true;
}

const ValidationItem* ValidationReport::find(const std::string& id) const {
  for (const auto& item : items)
    if (item.id == id) return &item;
  return nullptr;
}

int hermitian_definiteness(const Mat& h) {
  if (h.rows() != h.cols()) return 0;
  bool pos = true, neg = true;
  for (std::size_t k = 1; k <= h.rows(); ++k) {
    Mat sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = h(i, j);
    Scalar minor = det(sub);
    if (!minor.is_real()) return 0;
    int s = minor.sign();
    if (s == 0) return 0;
    pos = pos && s > 0;
    neg = neg && s == ((k % 2) ? -1 : 1);
  }
  return pos ? 1 : (neg ? -1 : 0);
}

namespace {

// The subspace of W_k representing the image of F^p in gr_k = W_k / W_{k-1}
// (always contains W_{k-1}).
Subspace induced(const Subspace& fp, const Subspace& wk, const Subspace& wk1) {
  return sum(intersect(fp, wk), wk1);
}

// Representatives of a basis of u / w, for w <= u.
std::vector<Vec> quotient_representatives(const Subspace& u, const Subspace& w) {
  std::vector<Vec> reps;
  Subspace acc = w;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Vec cand = u.basis_vector(i);
    if (!acc.contains(cand)) {
      reps.push_back(cand);
      acc = sum(acc, Subspace::span({cand}, u.ambient()));
    }
  }
  return reps;
}

struct GradedData {
  WeightFiltrationK3 w;
  std::array<Subspace, 5> f;       // F^p, p = 0..4 (4 unused, zero)
  std::array<Subspace, 5> f_conj;  // conjugates
  std::size_t r;

  explicit GradedData(const K3LimitMHS& m)
      : w(weight_filtration_k3(m.space, m.n)), r(m.space.dim()) {
    for (int p = 0; p <= 4; ++p) {
      Subspace fp = m.filtration_step(p);
      f[p] = fp;
      f_conj[p] = conj(fp);
    }
  }

  Subspace wk_or_zero(int k) const {
    if (k < 0) return Subspace::zero(r);
    if (k > 4) return Subspace::full(r);
    return w.w[std::size_t(k)];
  }
  std::size_t gr_dim(int k) const {
    return wk_or_zero(k).dim() - wk_or_zero(k - 1).dim();
  }
  const Subspace& fstep(int p) const {
    return f[std::size_t(std::clamp(p, 0, 4))];
  }
  const Subspace& fstep_conj(int p) const {
    return f_conj[std::size_t(std::clamp(p, 0, 4))];
  }

  // Image of F^p resp. conj F^q in gr_k, as an ambient subspace >= W_{k-1}.
  Subspace ind_f(int p, int k) const {
    return induced(fstep(p), wk_or_zero(k), wk_or_zero(k - 1));
  }
  Subspace ind_fconj(int q, int k) const {
    return induced(fstep_conj(q), wk_or_zero(k), wk_or_zero(k - 1));
  }

  bool purity_at(int k, std::string* detail) const {
    std::size_t grd = gr_dim(k);
    std::size_t base = wk_or_zero(k - 1).dim();
    for (int p = 0; p <= 3; ++p) {
      Subspace a = ind_f(p, k);
      Subspace b = ind_fconj(k - p + 1, k);
      bool opposed = (a.dim() - base) + (b.dim() - base) == grd &&
                     intersect(a, b).dim() == base;
      if (!opposed) {
        std::ostringstream os;
        os << "gr_" << k << ": F^" << p << " and conj F^" << (k - p + 1)
           << " are not " << k << "-opposed";
        *detail = os.str();
        return false;
      }
    }
    return true;
  }

  // dim of I^{p,q} inside gr_{p+q}.
  std::size_t ipq_dim(int p, int q) const {
    int k = p + q;
    std::size_t base = wk_or_zero(k - 1).dim();
    return intersect(ind_f(p, k), ind_fconj(q, k)).dim() - base;
  }
};

bool structural_items(const K3LimitMHS& m, std::vector<ValidationItem>& items) {
  bool all = true;
  auto add = [&](std::string id, std::string desc, bool pass, std::string detail) {
    all = all && pass;
    items.push_back({std::move(id), std::move(desc), pass, std::move(detail)});
  };

  add("a.signature", "q has signature (2, r-2)", m.space.is_k3_polarized(), "");

  bool square_ok = m.n.rows() == m.space.dim() && m.n.cols() == m.space.dim();
  Mat n3 = square_ok ? m.n * m.n * m.n : Mat(1, 1);
  add("a.nilpotent", "N^3 = 0", square_ok && n3.is_zero(), "");
  add("a.infinitesimal-isometry", "N^T G + G N = 0",
      square_ok && in_so(m.space, m.n), "");

  bool len_ok = m.v_lim.size() == m.space.dim();
  add("a.period-nonzero", "F^2 is one-dimensional", len_ok && !is_zero(m.v_lim),
      "");
  bool isotropic = false, positive = false;
  std::string pos_detail;
  if (len_ok && !is_zero(m.v_lim)) {
    isotropic = m.space.norm(m.v_lim).is_zero();
    Scalar pairing = m.space.inner(m.v_lim, conj(m.v_lim));
    positive = pairing.is_real() && pairing.sign() > 0;
    pos_detail = "q(sigma, conj sigma) = " + pairing.str();
  }
  add("a.period-isotropic", "q(sigma, sigma) = 0", isotropic, "");
  add("a.period-positive", "q(sigma, conj sigma) > 0", positive, pos_detail);
  return all;
}

}  // namespace

ValidationReport validate_pmhs_k3(const K3LimitMHS& m) {
  ValidationReport rep;
  bool structural_ok = structural_items(m, rep.items);

  auto add = [&](std::string id, std::string desc, bool pass, std::string detail) {
    rep.items.push_back({std::move(id), std::move(desc), pass, std::move(detail)});
  };

  if (!structural_ok) {
    add("b.image-dim", "dim im(N) = 2 when N != 0", false,
        "not evaluated (structural axioms failed)");
    add("c.purity", "graded pieces are pure", false,
        "not evaluated (structural axioms failed)");
    add("d.primitive-definite", "primitive Hermitian forms definite", false,
        "not evaluated (structural axioms failed)");
    return rep;
  }

  if (m.n.is_zero()) {
    add("b.image-dim", "dim im(N) = 2 when N != 0", true, "N = 0");
  } else {
    std::size_t imd = image(m.n).dim();
    add("b.image-dim", "dim im(N) = 2 when N != 0", imd == 2,
        "dim im(N) = " + std::to_string(imd));
  }

  GradedData g(m);
  bool purity_all = true;
  for (int k = 0; k <= 4; ++k) {
    if (g.gr_dim(k) == 0) continue;
    std::string detail;
    bool p = g.purity_at(k, &detail);
    purity_all = purity_all && p;
    add("c.purity-w" + std::to_string(k),
        "gr_" + std::to_string(k) + " is pure of weight " + std::to_string(k),
        p, detail);
  }
  if (!purity_all) {
    add("d.primitive-definite", "primitive Hermitian forms definite", false,
        "not evaluated (purity failed)");
    return rep;
  }

  // Primitive parts P_{2+i} = ker(N^{i+1}: gr_{2+i} -> gr_{-i}); only i = 0
  // has a nontrivial kernel condition since N^{i+1} W_{2+i} = 0 for i >= 1.
  Mat npow = Mat::identity(m.space.dim());
  for (int i = 0; i <= 2; ++i) {
    int k = 2 + i;
    if (i > 0) npow = npow * m.n;
    if (g.gr_dim(k) == 0) continue;
    Subspace prim =
        i == 0 ? sum(intersect(kernel(m.n), g.wk_or_zero(2)), g.wk_or_zero(1))
               : g.wk_or_zero(k);
    bool all_definite = true;
    std::string detail;
    for (int p = 0; p <= 2; ++p) {
      int qdeg = k - p;
      if (qdeg < 0 || qdeg > 2) continue;
      Subspace comp = intersect(intersect(g.ind_f(p, k), g.ind_fconj(qdeg, k)), prim);
      std::vector<Vec> reps = quotient_representatives(comp, g.wk_or_zero(k - 1));
      if (reps.empty()) continue;
      Mat herm(reps.size(), reps.size());
      Scalar phase = i_power(p - qdeg);
      for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = 0; b < reps.size(); ++b)
          herm(a, b) = phase * m.space.inner(reps[a], npow.apply(conj(reps[b])));
      if (herm != herm.transpose().conj()) {
        all_definite = false;
        detail = "form is not Hermitian";
        continue;
      }
      int sign = hermitian_definiteness(herm);
      if (sign == 0) {
        all_definite = false;
        detail = "indefinite on I^{" + std::to_string(p) + "," +
                 std::to_string(qdeg) + "}";
        continue;
      }
      rep.primitive_signs.push_back({k, p, qdeg, sign});
    }
    add("d.primitive-definite-w" + std::to_string(k),
        "primitive Hermitian form definite on gr_" + std::to_string(k),
        all_definite, detail);
  }
  return rep;
}

HodgeDiamond hodge_diamond_k3(const K3LimitMHS& m) {
  ValidationReport rep = validate_pmhs_k3(m);
  for (const auto& item : rep.items) {
    if (item.id.rfind("d.", 0) == 0) continue;  // (d) not required here
    if (!item.pass)
      throw std::invalid_argument("invalid K3 limit MHS: " + item.id);
  }
  GradedData g(m);
  HodgeDiamond out;
  for (int k = 0; k <= 4; ++k) {
    if (g.gr_dim(k) == 0) continue;
    for (int p = 0; p <= 2; ++p) {
      int q = k - p;
      if (q < 0 || q > 2) continue;
      std::size_t h = g.ipq_dim(p, q);
      if (h > 0) out[{p, q}] += h;
    }
  }
  return out;
}

}  // namespace kslim

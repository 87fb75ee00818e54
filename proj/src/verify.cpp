#include "kslim/verify.hpp"

#include <functional>
#include <sstream>

#include "kslim/examples.hpp"

namespace kslim {

long Rng::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(gen_);
}

Scalar Rng::rational(long max_num, long max_den) {
  return Scalar::rational(integer(-max_num, max_num), integer(1, max_den));
}

Scalar Rng::gaussian(long max_num, long max_den) {
  return Scalar::gaussian(rational(max_num, max_den), rational(max_num, max_den));
}

Vec Rng::vector(std::size_t n, bool gaussian_entries) {
  Vec v(n);
  for (auto& x : v) x = gaussian_entries ? gaussian() : rational();
  return v;
}

Mat Rng::invertible(std::size_t n) {
  for (;;) {
    Mat p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = Scalar(integer(-2, 2));
    if (!det(p).is_zero()) return p;
  }
}

Mat Rng::so_element(const QuadSpace& q) {
  Bivector b;
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i + 1; j < q.dim(); ++j) {
      Scalar c = rational(3, 2);
      if (!c.is_zero()) b[{i, j}] = c;
    }
  return bivector_to_so(q, b);
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

namespace {

struct Suite {
  std::vector<CheckResult> results;

  void check(const std::string& name, const std::function<bool()>& body) {
    try {
      bool ok = body();
      results.push_back({name, ok, ok ? "" : "assertion failed"});
    } catch (const std::exception& e) {
      results.push_back({name, false, e.what()});
    }
  }
};

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

// A nilpotent element of so(V,q) from an isotropic u and some w with
// q(u,w) = 0: the operator of u ^ w cubes to zero.
std::optional<Mat> nilpotent_so(const QuadSpace& q, Rng& rng) {
  auto u = find_isotropic(q);
  if (!u) return std::nullopt;
  Vec z;
  for (std::size_t i = 0; i < q.dim(); ++i) {
    Vec e = basis_vec(q.dim(), i);
    if (!q.inner(*u, e).is_zero()) {
      z = q.inner(*u, e).inverse() * e;
      break;
    }
  }
  for (int attempt = 0; attempt < 32; ++attempt) {
    Vec w = rng.vector(q.dim());
    w = w - q.inner(*u, w) * z;
    if (is_zero(w)) continue;
    // Solve forward(u ^ w) directly through the bivector expansion.
    Bivector b;
    for (std::size_t i = 0; i < q.dim(); ++i)
      for (std::size_t j = i + 1; j < q.dim(); ++j) {
        Scalar c = (*u)[i] * w[j] - (*u)[j] * w[i];
        if (!c.is_zero()) b[{i, j}] = c;
      }
    Mat m = bivector_to_so(q, b);
    if (!m.is_zero()) return m;
  }
  return std::nullopt;
}

std::vector<QuadSpace> sample_spaces(Rng& rng) {
  std::vector<QuadSpace> spaces;
  for (const auto& spec : builtin_examples())
    spaces.push_back(make_example(spec).space);
  // one random congruence transform to leave the diagonal comfort zone
  const Mat& g = spaces[1].gram();
  Mat p = rng.invertible(g.rows());
  spaces.emplace_back(p.transpose() * g * p);
  return spaces;
}

void clifford_checks(Suite& s, Rng& rng) {
  std::vector<QuadSpace> spaces = sample_spaces(rng);

  s.check("clifford.defining_relation", [&] {
    for (int t = 0; t < 200; ++t) {
      const QuadSpace& q = spaces[std::size_t(t) % spaces.size()];
      CliffordAlgebra a(q);
      Vec v = rng.vector(q.dim(), t % 3 == 0);
      CliffordElement e = a.embed_vector(v);
      if (e * e != a.unit() * q.norm(v)) return false;
    }
    return true;
  });

  s.check("clifford.orthogonal_anticommute", [&] {
    for (const QuadSpace& q : spaces) {
      CliffordAlgebra a(q);
      Vec v = basis_vec(q.dim(), 0);
      for (int t = 0; t < 8; ++t) {
        Vec w = rng.vector(q.dim());
        // project w against v to force q(v, w) = 0
        w = w - (q.inner(v, w) / q.norm(v)) * v;
        CliffordElement ev = a.embed_vector(v), ew = a.embed_vector(w);
        if (ev * ew != -(ew * ev)) return false;
      }
    }
    return true;
  });

  s.check("clifford.mul_associative", [&] {
    for (const QuadSpace& q : spaces) {
      CliffordAlgebra a(q);
      for (int t = 0; t < 12; ++t) {
        auto rand_elt = [&] {
          CliffordElement e = a.zero();
          for (int k = 0; k < 3; ++k)
            e.set_coeff(std::uint32_t(rng.integer(0, long(a.dim()) - 1)),
                        rng.gaussian());
          return e;
        };
        CliffordElement x = rand_elt(), y = rand_elt(), z = rand_elt();
        if ((x * y) * z != x * (y * z)) return false;
      }
    }
    return true;
  });

  s.check("clifford.unit_neutral", [&] {
    CliffordAlgebra a(spaces[0]);
    CliffordElement e = a.embed_vector(rng.vector(spaces[0].dim())) +
                        a.blade(3) * rng.rational();
    return a.unit() * e == e && e * a.unit() == e;
  });

  s.check("clifford.contraction_rule", [&] {
    // f1 f2 . f2 f3 = d2 . f1 f3 in the orthogonal frame
    CliffordAlgebra a(spaces[0]);
    return a.blade(0b011) * a.blade(0b110) ==
           a.blade(0b101) * a.frame_norms()[1];
  });

  s.check("clifford.reversal_antihom", [&] {
    CliffordAlgebra a(spaces[1]);
    for (int t = 0; t < 20; ++t) {
      CliffordElement x = a.blade(std::uint32_t(rng.integer(0, long(a.dim()) - 1))) *
                          rng.rational();
      CliffordElement y = a.blade(std::uint32_t(rng.integer(0, long(a.dim()) - 1))) *
                          rng.rational();
      if ((x * y).reversal() != y.reversal() * x.reversal()) return false;
    }
    return true;
  });

  s.check("clifford.involution_on_vectors", [&] {
    CliffordAlgebra a(spaces[0]);
    Vec v = rng.vector(3), w = rng.vector(3);
    CliffordElement ev = a.embed_vector(v), ew = a.embed_vector(w);
    return ev.reversal() == ev && (ev * ew).reversal() == ew * ev &&
           ev.parity() == -ev;
  });

  s.check("clifford.trace", [&] {
    CliffordAlgebra a(spaces[0]);  // r = 3, d = 8
    bool ok = a.unit().trace() == Scalar(8);
    for (std::uint32_t m = 1; m < 8; ++m)
      ok = ok && a.blade(m).trace().is_zero();
    ok = ok && (a.blade(0b011) + a.unit() * Scalar(3)).trace() == Scalar(24);
    for (int t = 0; t < 10 && ok; ++t) {
      CliffordElement x = a.embed_vector(rng.vector(3)) * rng.gaussian();
      CliffordElement y = a.embed_vector(rng.vector(3)) + a.blade(5) * rng.rational();
      ok = (x * y).trace() == (y * x).trace();
    }
    return ok;
  });

  s.check("clifford.eta_lie_map", [&] {
    for (const QuadSpace& q : spaces) {
      CliffordAlgebra a(q);
      for (int t = 0; t < 4; ++t) {
        Mat m1 = rng.so_element(q), m2 = rng.so_element(q);
        CliffordElement lhs = eta(a, m1 * m2 - m2 * m1);
        CliffordElement e1 = eta(a, m1), e2 = eta(a, m2);
        if (lhs != e1 * e2 - e2 * e1) return false;
      }
    }
    return true;
  });

  s.check("clifford.ad_identity", [&] {
    for (const QuadSpace& q : spaces) {
      CliffordAlgebra a(q);
      Mat m = rng.so_element(q);
      CliffordElement em = eta(a, m);
      for (std::size_t i = 0; i < q.dim(); ++i) {
        CliffordElement v = a.embed_vector(basis_vec(q.dim(), i));
        if (em * v - v * em != a.embed_vector(m.apply(basis_vec(q.dim(), i))))
          return false;
      }
    }
    return true;
  });

  s.check("clifford.spin_membership", [&] {
    for (const QuadSpace& q : spaces) {
      auto nil = nilpotent_so(q, rng);
      if (!nil) continue;
      CliffordAlgebra a(q);
      CliffordElement g = spin_exp(eta(a, *nil));
      if (g * g.reversal() != a.unit() || !g.is_even()) return false;
      for (std::size_t i = 0; i < q.dim(); ++i) {
        CliffordElement v = a.embed_vector(basis_vec(q.dim(), i));
        if (!(g * v * g.reversal()).is_vector()) return false;
      }
    }
    return true;
  });

  s.check("clifford.eta_square_zero", [&] {
    for (const auto& spec : builtin_examples()) {
      K3LimitMHS m = make_example(spec);
      CliffordAlgebra a(m.space);
      CliffordElement e = eta(a, m.n);
      if (!(e * e).is_zero()) return false;
      // randomized congruence conjugate
      Mat p = rng.invertible(m.space.dim());
      QuadSpace qc(p.transpose() * m.space.gram() * p);
      Mat nc = inverse(p) * m.n * p;
      CliffordAlgebra ac(qc);
      CliffordElement ec = eta(ac, nc);
      if (!(ec * ec).is_zero()) return false;
    }
    return true;
  });

  s.check("clifford.ideal_dimension", [&] {
    int tested = 0;
    for (std::size_t rk = 3; rk <= 6; ++rk) {
      std::vector<long> diag_entries{2, 2};
      for (std::size_t i = 2; i < rk; ++i) diag_entries.push_back(-2);
      Mat g0(rk, rk);
      for (std::size_t i = 0; i < rk; ++i) g0(i, i) = Scalar(diag_entries[i]);
      for (int t = 0; t < 13; ++t) {
        Mat p = rng.invertible(rk);
        QuadSpace q(p.transpose() * g0 * p);
        Mat pinv = inverse(p);
        Vec v0 = t % 2 == 0
                     ? basis_vec(rk, 0) + basis_vec(rk, 2)  // q = 2 - 2 = 0
                     : basis_vec(rk, 0) + Scalar::i() * basis_vec(rk, 1);
        Vec v = pinv.apply(v0);
        CliffordAlgebra a(q);
        if (right_ideal(a, v).dim() != a.dim() / 2) return false;
        ++tested;
      }
    }
    return tested >= 50;
  });

  s.check("clifford.ideal_full_for_anisotropic", [&] {
    K3LimitMHS m = make_example({DegenerationType::I, 3});
    CliffordAlgebra a(m.space);
    return right_ideal(a, basis_vec(3, 0)).dim() == a.dim();
  });

  s.check("clifford.bivector_roundtrip", [&] {
    for (const QuadSpace& q : spaces) {
      Mat m = rng.so_element(q);
      if (bivector_to_so(q, so_to_bivector(q, m)) != m) return false;
    }
    return true;
  });
}

void ks_checks(Suite& s, Rng& rng) {
  K3LimitMHS ex1 = make_example({DegenerationType::I, 3});
  K3LimitMHS ex2 = make_example({DegenerationType::II, 4});
  K3LimitMHS ex3 = make_example({DegenerationType::III, 3});

  s.check("ks.monodromy_lift", [&] {
    for (const K3LimitMHS* m : {&ex2, &ex3}) {
      CliffordAlgebra a(m->space);
      Mat t = exp_nilpotent(m->n, Scalar(1));
      CliffordElement tp = spin_exp(eta(a, m->n));
      if (tp * tp.reversal() != a.unit()) return false;
      for (std::size_t i = 0; i < m->space.dim(); ++i) {
        Vec e = basis_vec(m->space.dim(), i);
        if (tp * a.embed_vector(e) * tp.reversal() != a.embed_vector(t.apply(e)))
          return false;
      }
    }
    return true;
  });

  s.check("ks.unipotent_index_two", [&] {
    for (const K3LimitMHS* m : {&ex2, &ex3}) {
      CliffordAlgebra a(m->space);
      Mat l = left_mul_matrix(spin_exp(eta(a, m->n)));
      Mat delta = l - Mat::identity(a.dim());
      if (!(delta * delta).is_zero()) return false;
    }
    return true;
  });

  s.check("ks.naive_operator_differs", [&] {
    CliffordAlgebra a(ex2.space);
    Mat t = exp_nilpotent(ex2.n, Scalar(1));
    Mat naive = naive_clifford_operator(a, t);
    Mat lift = left_mul_matrix(spin_exp(eta(a, ex2.n)));
    Mat delta = naive - Mat::identity(a.dim());
    return naive != lift && !(delta * delta).is_zero();
  });

  s.check("ks.naturality", [&] {
    for (const K3LimitMHS* m : {&ex2, &ex3}) {
      CliffordAlgebra a(m->space);
      Mat t = exp_nilpotent(m->n, Scalar(1));
      CliffordElement tp = spin_exp(eta(a, m->n));
      Mat lift = left_mul_matrix(tp);
      Mat lift_inv = left_mul_matrix(tp.reversal());
      for (std::size_t i = 0; i < m->space.dim(); ++i) {
        Vec e = basis_vec(m->space.dim(), i);
        Mat fv = left_mul_matrix(a.embed_vector(e));
        Mat ftv = left_mul_matrix(a.embed_vector(t.apply(e)));
        if (ftv != lift * fv * lift_inv) return false;
      }
    }
    return true;
  });

  s.check("ks.bracket_compatibility", [&] {
    for (const K3LimitMHS* m : {&ex2, &ex3}) {
      CliffordAlgebra a(m->space);
      Mat ln = left_mul_matrix(eta(a, m->n));
      for (std::size_t i = 0; i < m->space.dim(); ++i) {
        Vec e = basis_vec(m->space.dim(), i);
        Mat fv = left_mul_matrix(a.embed_vector(e));
        Mat fnv = left_mul_matrix(a.embed_vector(m->n.apply(e)));
        if (ln * fv - fv * ln != fnv) return false;
      }
    }
    return true;
  });

  s.check("ks.weight_dimensions", [&] {
    AbLimitMHS k1 = ks_lim(ex1), k2 = ks_lim(ex2), k3 = ks_lim(ex3);
    return k1.w0.dim() == 0 && k1.w1.dim() == 8 && k1.f1.dim() == 4 &&
           k2.w0.dim() == 4 && k2.w1.dim() == 12 && k2.f1.dim() == 8 &&
           k3.w0.dim() == 4 && k3.w1.dim() == 4 && k3.f1.dim() == 4 &&
           k3.w0 == k3.w1;
  });

  s.check("ks.nprime_flattens_weights", [&] {
    for (const K3LimitMHS* m : {&ex1, &ex2, &ex3}) {
      AbLimitMHS ab = ks_lim(*m);
      if (!(ab.nprime_mat * ab.nprime_mat).is_zero()) return false;
      if (!ab.w1.contains(ab.w0)) return false;
      if (apply(ab.nprime_mat, ab.w1).dim() != 0) return false;
      if (!ab.w1.contains(image(ab.nprime_mat))) return false;
    }
    return true;
  });

  s.check("ks.kappa_equivariance", [&] {
    for (const K3LimitMHS* m : {&ex2, &ex3}) {
      CliffordAlgebra a(m->space);
      CliffordElement g = spin_exp(eta(a, m->n));
      Mat lg = left_mul_matrix(g);
      Vec v = m->v_lim;
      Vec gvg = (g * a.embed_vector(v) * g.reversal()).vector_part();
      if (kappa(a, gvg) != apply(lg, kappa(a, v))) return false;
    }
    return true;
  });

  s.check("ks.i_v_operator", [&] {
    CliffordAlgebra a(ex1.space);
    Vec v = rescale_pure_point(ex1.space, ex1.v_lim);
    CliffordElement iv = i_v_operator(a, v);
    if (iv * iv != a.unit() * Scalar(-1)) return false;
    CliffordElement ev = a.embed_vector(v);
    if (iv * ev != ev * Scalar::i()) return false;
    Mat l = left_mul_matrix(iv);
    Mat d = Mat::identity(a.dim());
    Subspace plus = kernel(l - d * Scalar::i());
    Subspace minus = kernel(l + d * Scalar::i());
    return plus.dim() == a.dim() / 2 && minus.dim() == a.dim() / 2 &&
           plus == right_ideal(a, ex1.v_lim);
  });

  s.check("ks.polarization", [&] {
    AbLimitMHS ab = ks_lim(ex1);
    std::size_t r = ex1.space.dim();
    auto pol = polarization_form(ab, basis_vec(r, 0), basis_vec(r, 1));
    if (pol.omega.transpose() != -pol.omega) return false;
    if (pol.sign != 1 && pol.sign != -1) return false;
    // Spin invariance under three distinct exponentials.
    CliffordAlgebra a = ab.algebra;
    auto nil = nilpotent_so(ex1.space, rng);
    if (!nil) return false;
    std::vector<CliffordElement> gs{
        spin_exp(eta(a, *nil)), spin_exp(eta(a, *nil * Scalar(2))),
        spin_exp(eta(a, -*nil))};
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j)
        if (gs[i] == gs[j]) return false;
    for (const auto& g : gs) {
      Mat lg = left_mul_matrix(g);
      if (lg.transpose() * pol.omega * lg != pol.omega) return false;
    }
    return true;
  });

  s.check("ks.filtration_flags", [&] {
    AbLimitMHS ab = ks_lim(ex1);
    EndomorphismClass f_vlim = ks_embedding(ab, ex1.v_lim);
    if (!f_vlim.in_f1_end || !f_vlim.in_f0_end) return false;
    // e3 is q-orthogonal to v_lim = e1 + i e2, so it sits in F^0 V(1).
    EndomorphismClass f_e3 = ks_embedding(ab, basis_vec(3, 2));
    return f_e3.in_f0_end && !f_e3.in_f1_end;
  });

  s.check("ks.weight_shift_of_embedding", [&] {
    AbLimitMHS ab = ks_lim(ex2);
    WeightFiltrationK3 wf = weight_filtration_k3(ex2.space, ex2.n);
    for (std::size_t k = 0; k <= 4; ++k) {
      for (std::size_t i = 0; i < wf[k].dim(); ++i) {
        EndomorphismClass f = ks_embedding(ab, wf[k].basis_vector(i));
        if (f.weight_shift > int(k) - 2) return false;
      }
    }
    return true;
  });

  s.check("ks.orbit_commutativity", [&] {
    for (const K3LimitMHS* m : {&ex2, &ex3}) {
      std::size_t d = std::size_t(1) << m->space.dim();
      OrbitReport rep = orbit_commutativity_check(*m, default_orbit_samples(d));
      if (!rep.all_equal()) return false;
      for (const auto& sample : rep.samples)
        if (!sample.pairing_positive) return false;
    }
    OrbitReport imag = orbit_commutativity_check(
        ex3, {Scalar(mpq_class(0), mpq_class(5))});  // z = 5i
    return imag.all_equal() && imag.samples[0].pairing_positive;
  });
}

void degeneration_checks(Suite& s, Rng& rng) {
  auto diamond_entry = diamond_get;

  s.check("degeneration.k3_weight_dims", [&] {
    K3LimitMHS ex2 = make_example({DegenerationType::II, 4});
    K3LimitMHS ex3 = make_example({DegenerationType::III, 3});
    auto d0 = weight_filtration_k3(ex2.space, Mat(4, 4)).dims();
    auto d2 = weight_filtration_k3(ex2.space, ex2.n).dims();
    auto d3 = weight_filtration_k3(ex3.space, ex3.n).dims();
    return d0 == std::array<std::size_t, 5>{0, 0, 4, 4, 4} &&
           d2 == std::array<std::size_t, 5>{0, 2, 2, 4, 4} &&
           d3 == std::array<std::size_t, 5>{1, 1, 2, 2, 3};
  });

  s.check("degeneration.type_theorem_diamonds", [&] {
    for (const auto& spec : std::vector<ExampleSpec>{
             {DegenerationType::I, 3},
             {DegenerationType::I, 4},
             {DegenerationType::II, 4},
             {DegenerationType::II, 5},
             {DegenerationType::III, 3},
             {DegenerationType::III, 4}}) {
      K3LimitMHS m = make_example(spec);
      HodgeDiamond h = hodge_diamond_ab(ks_lim(m));
      std::size_t r = spec.rank;
      std::size_t half = std::size_t(1) << (r - 1);
      std::size_t quarter = std::size_t(1) << (r - 2);
      bool ok = false;
      switch (spec.type) {
        case DegenerationType::I:
          ok = diamond_entry(h, 1, 0) == half && diamond_entry(h, 0, 1) == half &&
               diamond_entry(h, 0, 0) == 0 && diamond_entry(h, 1, 1) == 0;
          break;
        case DegenerationType::II:
          ok = diamond_entry(h, 1, 0) == quarter &&
               diamond_entry(h, 0, 1) == quarter &&
               diamond_entry(h, 0, 0) == quarter &&
               diamond_entry(h, 1, 1) == quarter;
          break;
        case DegenerationType::III:
          ok = diamond_entry(h, 0, 0) == half && diamond_entry(h, 1, 1) == half &&
               diamond_entry(h, 1, 0) == 0;
          break;
      }
      if (!ok) return false;
    }
    return true;
  });

  s.check("degeneration.central_fibre", [&] {
    CentralFibreReport c1 = central_fibre_h1(make_example({DegenerationType::I, 3}));
    CentralFibreReport c2 = central_fibre_h1(make_example({DegenerationType::II, 4}));
    CentralFibreReport c3 = central_fibre_h1(make_example({DegenerationType::III, 3}));
    return diamond_entry(c1.h1_diamond, 1, 0) == 4 && c1.torus_rank == 0 &&
           diamond_entry(c2.h1_diamond, 1, 0) == 4 &&
           diamond_entry(c2.h1_diamond, 0, 0) == 4 &&
           diamond_entry(c3.h1_diamond, 0, 0) == 4 &&
           diamond_entry(c3.h1_diamond, 1, 0) == 0;
  });

  s.check("degeneration.dual_complex", [&] {
    auto d1 = dual_complex_cohomology(make_example({DegenerationType::I, 3}));
    auto d2 = dual_complex_cohomology(make_example({DegenerationType::II, 4}));
    auto d3 = dual_complex_cohomology(make_example({DegenerationType::III, 3}));
    std::vector<mpz_class> torus4{1, 4, 6, 4, 1};
    return d1.betti == std::vector<mpz_class>{1} && d1.torus_rank == 0 &&
           d2.betti == torus4 && d2.component_lower_bound == 4 &&
           d3.betti == torus4 && d3.component_lower_bound == 4;
  });

  s.check("degeneration.neron", [&] {
    NeronData n1 = neron_data(make_example({DegenerationType::I, 3}));
    NeronData n2 = neron_data(make_example({DegenerationType::II, 4}));
    NeronData n3 = neron_data(make_example({DegenerationType::III, 3}));
    return n1.w == 0 && n1.dim_b == 4 &&
           n1.birational_type == "abelian(dim 4)" && n2.w == 4 &&
           n2.dim_b == 4 &&
           n2.birational_type == "P^4-bundle over abelian(4)" && n3.w == 4 &&
           n3.dim_b == 0 && n3.birational_type == "rational";
  });

  s.check("degeneration.zeta_strings", [&] {
    K3LimitMHS ex3 = make_example({DegenerationType::III, 3});
    auto zs = motivic_zeta(ex3, 3);
    if (zs[0].str() != "N*[B]*(L-1)^4*1*T^1" ||
        zs[1].str() != "N*[B]*(L-1)^4*16*T^2" ||
        zs[2].str() != "N*[B]*(L-1)^4*81*T^3")
      return false;
    auto with_n = motivic_zeta(ex3, 2, mpz_class(3));
    if (with_n[1].str() != "3*[B]*(L-1)^4*16*T^2") return false;
    auto type1 = motivic_zeta(make_example({DegenerationType::I, 3}), 2);
    return type1[0].str() == "N*[B]*T^1" && type1[1].str() == "N*[B]*T^2";
  });

  s.check("degeneration.consistency_triangle", [&] {
    for (const auto& spec : std::vector<ExampleSpec>{{DegenerationType::I, 3},
                                                     {DegenerationType::II, 4},
                                                     {DegenerationType::II, 5},
                                                     {DegenerationType::III, 3},
                                                     {DegenerationType::III, 4}}) {
      K3LimitMHS m = make_example(spec);
      AbLimitMHS ab = ks_lim(m);
      NeronData nd = neron_data(m);
      DualComplexReport dc = dual_complex_cohomology(m);
      std::size_t d = ab.algebra.dim();
      if (nd.w != ab.w0.dim() || nd.w != dc.torus_rank) return false;
      if (ab.w1.dim() != d - nd.w) return false;
      if (2 * nd.dim_b + nd.w != ab.w1.dim()) return false;
    }
    return true;
  });

  s.check("degeneration.congruence_invariance", [&] {
    for (const auto& spec : builtin_examples()) {
      K3LimitMHS base = make_example(spec);
      auto base_wdims = weight_filtration_k3(base.space, base.n).dims();
      HodgeDiamond base_k3 = hodge_diamond_k3(base);
      AbLimitMHS base_ab = ks_lim(base);
      HodgeDiamond base_diamond = hodge_diamond_ab(base_ab);
      auto base_dc = dual_complex_cohomology(base);
      auto base_zeta = motivic_zeta(base, 2);
      for (int t = 0; t < 7; ++t) {
        Mat p = rng.invertible(base.space.dim());
        Mat pinv = inverse(p);
        K3LimitMHS m{QuadSpace(p.transpose() * base.space.gram() * p),
                     pinv * base.n * p, pinv.apply(base.v_lim)};
        if (classify_type(m.n) != classify_type(base.n)) return false;
        if (weight_filtration_k3(m.space, m.n).dims() != base_wdims) return false;
        if (hodge_diamond_k3(m) != base_k3) return false;
        AbLimitMHS ab = ks_lim(m);
        if (ab.w0.dim() != base_ab.w0.dim() || ab.w1.dim() != base_ab.w1.dim() ||
            ab.f1.dim() != base_ab.f1.dim())
          return false;
        if (hodge_diamond_ab(ab) != base_diamond) return false;
        auto dc = dual_complex_cohomology(m);
        if (dc.betti != base_dc.betti ||
            dc.component_lower_bound != base_dc.component_lower_bound)
          return false;
        auto zeta = motivic_zeta(m, 2);
        for (std::size_t i = 0; i < zeta.size(); ++i)
          if (zeta[i].str() != base_zeta[i].str()) return false;
      }
    }
    return true;
  });
}

}  // namespace

std::vector<CheckResult> run_verification(const std::string& scope,
                                          std::uint64_t seed) {
  if (scope != "all" && scope != "clifford" && scope != "ks" &&
      scope != "degeneration")
    throw std::invalid_argument("unknown scope: " + scope);
  Suite suite;
  Rng rng(seed);
  if (scope == "all" || scope == "clifford") clifford_checks(suite, rng);
  if (scope == "all" || scope == "ks") ks_checks(suite, rng);
  if (scope == "all" || scope == "degeneration") degeneration_checks(suite, rng);
  return suite.results;
}

}  // namespace kslim

#include <doctest.h>

#include "kslim/examples.hpp"
#include "kslim/kuga_satake.hpp"
#include "kslim/verify.hpp"
#include "oracles.hpp"

using namespace kslim;

namespace {

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

}  // namespace

TEST_CASE("ks_lim dimensions per type") {
  AbLimitMHS k1 = ks_lim(make_example({DegenerationType::I, 3}));
  CHECK(k1.algebra.dim() == 8);
  CHECK(k1.f1.dim() == 4);
  CHECK(k1.w0.dim() == 0);
  CHECK(k1.w1.dim() == 8);
  CHECK(k1.nprime.is_zero());

  AbLimitMHS k2 = ks_lim(make_example({DegenerationType::II, 4}));
  CHECK(k2.algebra.dim() == 16);
  CHECK(k2.f1.dim() == 8);
  CHECK(k2.w0.dim() == 4);
  CHECK(k2.w1.dim() == 12);

  AbLimitMHS k3 = ks_lim(make_example({DegenerationType::III, 3}));
  CHECK(k3.algebra.dim() == 8);
  CHECK(k3.f1.dim() == 4);
  CHECK(k3.w0.dim() == 4);
  CHECK(k3.w1.dim() == 4);
  CHECK(k3.w0 == k3.w1);
}

TEST_CASE("ks_lim invariants") {
  for (const auto& spec : builtin_examples()) {
    AbLimitMHS ab = ks_lim(make_example(spec));
    CHECK((ab.nprime * ab.nprime).is_zero());
    CHECK((ab.nprime_mat * ab.nprime_mat).is_zero());
    CHECK(ab.w1.contains(ab.w0));
    CHECK(ab.w0 == image(ab.nprime_mat));
    CHECK(ab.w1 == kernel(ab.nprime_mat));
  }
}

TEST_CASE("N' is proportional to the bivector of im(N)") {
  K3LimitMHS m = make_example({DegenerationType::II, 4});
  AbLimitMHS ab = ks_lim(m);  // ks_lim already enforces the proportionality
  Subspace im_n = image(m.n);
  REQUIRE(im_n.dim() == 2);
  CliffordElement c1 = ab.algebra.embed_vector(im_n.basis_vector(0));
  CliffordElement c2 = ab.algebra.embed_vector(im_n.basis_vector(1));
  CliffordElement cand = (c1 * c2 - c2 * c1) * Scalar::rational(1, 4);
  auto lead = cand.terms().begin();
  Scalar lambda = ab.nprime.coeff(lead->first) / lead->second;
  CHECK(lambda.is_real());
  CHECK_FALSE(lambda.is_zero());
  CHECK(ab.nprime == cand * lambda);
}

TEST_CASE("ks_lim rejects invalid input") {
  K3LimitMHS m = make_example({DegenerationType::II, 4});
  m.v_lim = Vec{Scalar(1), Scalar(0), Scalar(0), Scalar::i()};
  CHECK_THROWS_AS(ks_lim(m), std::invalid_argument);
}

TEST_CASE("abelian-side Hodge diamonds") {
  HodgeDiamond d1 = hodge_diamond_ab(ks_lim(make_example({DegenerationType::I, 3})));
  CHECK(diamond_get(d1, 1, 0) == 4);
  CHECK(diamond_get(d1, 0, 1) == 4);
  CHECK(diamond_get(d1, 0, 0) == 0);
  CHECK(diamond_get(d1, 1, 1) == 0);

  HodgeDiamond d2 = hodge_diamond_ab(ks_lim(make_example({DegenerationType::II, 4})));
  for (auto [p, q] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}})
    CHECK(diamond_get(d2, p, q) == 4);

  HodgeDiamond d3 = hodge_diamond_ab(ks_lim(make_example({DegenerationType::III, 3})));
  CHECK(diamond_get(d3, 0, 0) == 4);
  CHECK(diamond_get(d3, 1, 1) == 4);
  CHECK(diamond_get(d3, 1, 0) == 0);
}

TEST_CASE("kappa is the right ideal and is Spin-equivariant") {
  for (const auto& spec :
       {ExampleSpec{DegenerationType::II, 4}, ExampleSpec{DegenerationType::III, 3}}) {
    K3LimitMHS m = make_example(spec);
    CliffordAlgebra a(m.space);
    Subspace k = kappa(a, m.v_lim);
    CHECK(k.dim() == a.dim() / 2);

    CliffordElement g = spin_exp(eta(a, m.n));
    Vec gvg = (g * a.embed_vector(m.v_lim) * g.reversal()).vector_part();
    CHECK(kappa(a, gvg) == apply(left_mul_matrix(g), k));
  }
  CliffordAlgebra a3{make_example({DegenerationType::III, 3}).space};
  CHECK_THROWS_AS(kappa(a3, basis_vec(3, 0)), std::invalid_argument);  // q = 2
  CHECK_THROWS_AS(kappa(a3, Vec(3)), std::invalid_argument);
}

TEST_CASE("pure point operator I_v") {
  K3LimitMHS m = make_example({DegenerationType::I, 3});
  CliffordAlgebra a(m.space);

  // q(v_lim, conj v_lim) = 4, so the rescaling is forced to be non-trivial
  Vec v = rescale_pure_point(m.space, m.v_lim);
  CHECK(m.space.inner(v, conj(v)) == Scalar(2));
  CHECK(m.space.norm(v).is_zero());

  CliffordElement iv = i_v_operator(a, v);
  CHECK(iv * iv == a.unit() * Scalar(-1));
  CHECK(iv * a.embed_vector(v) == a.embed_vector(v) * Scalar::i());

  Mat l = left_mul_matrix(iv);
  Subspace plus = kernel(l - Mat::identity(8) * Scalar::i());
  Subspace minus = kernel(l + Mat::identity(8) * Scalar::i());
  CHECK(plus.dim() == 4);
  CHECK(minus.dim() == 4);
  CHECK(plus == right_ideal(a, m.v_lim));

  CHECK_THROWS_AS(i_v_operator(a, m.v_lim), std::invalid_argument);  // pairing 4
}

TEST_CASE("ks embedding filtration flags") {
  K3LimitMHS m = make_example({DegenerationType::I, 3});
  AbLimitMHS ab = ks_lim(m);

  EndomorphismClass f_vlim = ks_embedding(ab, m.v_lim);
  CHECK(f_vlim.in_f1_end);
  CHECK(f_vlim.in_f0_end);

  // q(e3, v_lim) = 0 puts e3 in F^0 V(1)
  CHECK(m.space.inner(basis_vec(3, 2), m.v_lim).is_zero());
  EndomorphismClass f_e3 = ks_embedding(ab, basis_vec(3, 2));
  CHECK(f_e3.in_f0_end);
  CHECK_FALSE(f_e3.in_f1_end);

  // e1 pairs with v_lim, so f_{e1} cannot preserve F^1
  EndomorphismClass f_e1 = ks_embedding(ab, basis_vec(3, 0));
  CHECK_FALSE(f_e1.in_f0_end);
}

TEST_CASE("monodromy compatibility of the embedding") {
  for (const auto& spec :
       {ExampleSpec{DegenerationType::II, 4}, ExampleSpec{DegenerationType::III, 3}}) {
    K3LimitMHS m = make_example(spec);
    AbLimitMHS ab = ks_lim(m);
    CliffordAlgebra a = ab.algebra;
    Mat t = oracle::taylor_exp(m.n, Scalar(1));
    CliffordElement tp = spin_exp(eta(a, m.n));
    Mat lift = left_mul_matrix(tp);
    Mat lift_inv = left_mul_matrix(tp.reversal());
    CHECK(lift * lift_inv == Mat::identity(a.dim()));
    for (std::size_t i = 0; i < m.space.dim(); ++i) {
      Vec e = basis_vec(m.space.dim(), i);
      CHECK(ks_embedding(ab, t.apply(e)).mat ==
            lift * ks_embedding(ab, e).mat * lift_inv);
    }
    // weight compatibility as a bracket identity
    Mat ln = left_mul_matrix(eta(a, m.n));
    for (std::size_t i = 0; i < m.space.dim(); ++i) {
      Vec e = basis_vec(m.space.dim(), i);
      Mat fv = ks_embedding(ab, e).mat;
      CHECK(ln * fv - fv * ln == ks_embedding(ab, m.n.apply(e)).mat);
    }
  }
}

TEST_CASE("the lift is unipotent of index two; the naive operator is not") {
  K3LimitMHS m = make_example({DegenerationType::II, 4});
  CliffordAlgebra a(m.space);
  Mat lift = left_mul_matrix(spin_exp(eta(a, m.n)));
  Mat delta = lift - Mat::identity(16);
  CHECK((delta * delta).is_zero());

  Mat t = oracle::taylor_exp(m.n, Scalar(1));
  Mat naive = naive_clifford_operator(a, t);
  CHECK(naive != lift);
  Mat ndelta = naive - Mat::identity(16);
  CHECK_FALSE((ndelta * ndelta).is_zero());
}

TEST_CASE("polarization form") {
  K3LimitMHS m = make_example({DegenerationType::I, 3});
  AbLimitMHS ab = ks_lim(m);
  auto pol = polarization_form(ab, basis_vec(3, 0), basis_vec(3, 1));

  CHECK(pol.omega.transpose() == -pol.omega);
  CHECK((pol.sign == 1 || pol.sign == -1));

  // exactly one of the two signs passes the definiteness gate
  std::size_t k = ab.f1.dim();
  Mat herm(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vec row = pol.omega.apply(conj(ab.f1.basis_vector(j)));
      Scalar acc;
      for (std::size_t t = 0; t < row.size(); ++t)
        acc += ab.f1.basis_vector(i)[t] * row[t];
      herm(i, j) = Scalar::i() * acc;
    }
  CHECK(hermitian_definiteness(herm) == pol.sign);
  CHECK(hermitian_definiteness(-herm) == -pol.sign);

  // Spin invariance: omega(g x, g y) = omega(x, y)
  auto run_g = [&](const Mat& nil) {
    Mat lg = left_mul_matrix(spin_exp(eta(ab.algebra, nil)));
    CHECK(lg.transpose() * pol.omega * lg == pol.omega);
  };
  // u ^ w with u = e2+e3 isotropic and w = e1 orthogonal to it:
  // (e2+e3) ^ e1 = -(e1 ^ e2) - (e1 ^ e3)
  Bivector buw{{{0, 1}, Scalar(-1)}, {{0, 2}, Scalar(-1)}};
  Mat nil2 = bivector_to_so(m.space, buw);
  CHECK((nil2 * nil2 * nil2).is_zero());
  run_g(nil2);
  run_g(nil2 * Scalar(2));
  run_g(-nil2);

  CHECK_THROWS_AS(polarization_form(ab, basis_vec(3, 2), basis_vec(3, 1)),
                  std::invalid_argument);  // q(e3,e3) = -2 < 0
}

TEST_CASE("orbit commutativity at assorted samples") {
  K3LimitMHS ex2 = make_example({DegenerationType::II, 4});
  K3LimitMHS ex3 = make_example({DegenerationType::III, 3});

  OrbitReport r0 = orbit_commutativity_check(ex2, {Scalar(0)});
  CHECK(r0.all_equal());  // z = 0 is trivially equal

  OrbitReport r2 = orbit_commutativity_check(ex2, {Scalar(1), Scalar(2), Scalar(7)});
  CHECK(r2.all_equal());
  for (const auto& s : r2.samples) CHECK(s.pairing_positive);

  OrbitReport r3 = orbit_commutativity_check(
      ex3, {Scalar(3), Scalar(mpq_class(0), mpq_class(5))});
  CHECK(r3.all_equal());
  CHECK(r3.samples[1].pairing_positive);  // q(v_z, conj v_z) = 144 at z = 5i
}

TEST_CASE("rescale_pure_point edge cases") {
  K3LimitMHS m = make_example({DegenerationType::I, 3});
  CHECK_THROWS_AS(rescale_pure_point(m.space, basis_vec(3, 0)),
                  std::invalid_argument);  // not isotropic
  Vec v = rescale_pure_point(m.space, m.v_lim);
  // rescaling by (1+i)/2 halves the pairing from 4 to 2
  CHECK(m.space.inner(v, conj(v)) == Scalar(2));
}

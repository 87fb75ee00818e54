#include <doctest.h>

#include "kslim/clifford.hpp"
#include "kslim/examples.hpp"
#include "kslim/verify.hpp"
#include "oracles.hpp"

using namespace kslim;

namespace {

Mat diag(std::vector<long> entries) {
  Mat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = Scalar(entries[i]);
  return m;
}

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

}  // namespace

TEST_CASE("defining relation and anticommutation") {
  Rng rng(3);
  QuadSpace q(diag({2, -2}));
  CliffordAlgebra a(q);
  for (int t = 0; t < 30; ++t) {
    Vec v = rng.vector(2, t % 2);
    CliffordElement e = a.embed_vector(v);
    CHECK(e * e == a.unit() * q.norm(v));
  }
  CliffordElement e1 = a.embed_vector(basis_vec(2, 0));
  CliffordElement e2 = a.embed_vector(basis_vec(2, 1));
  CHECK(e1 * e2 == -(e2 * e1));
  // (e1 e2)^2 = -q(e1,e1) q(e2,e2) = 4
  CHECK((e1 * e2) * (e1 * e2) == a.unit() * Scalar(4));
}

TEST_CASE("product in a non-diagonal frame stays exact") {
  Rng rng(9);
  Mat p = rng.invertible(3);
  QuadSpace q(p.transpose() * diag({2, 2, -2}) * p);
  CliffordAlgebra a(q);
  for (int t = 0; t < 40; ++t) {
    Vec v = rng.vector(3, t % 2);
    CliffordElement e = a.embed_vector(v);
    CHECK(e * e == a.unit() * q.norm(v));
  }
}

TEST_CASE("unit, associativity, contraction") {
  QuadSpace q(diag({2, 2, -2, 6}));
  CliffordAlgebra a(q);
  Rng rng(27);
  CliffordElement x = a.embed_vector(rng.vector(4)) + a.blade(0b1010) * Scalar(3);
  CHECK(a.unit() * x == x);
  CHECK(x * a.unit() == x);

  for (int t = 0; t < 25; ++t) {
    CliffordElement u = a.blade(std::uint32_t(rng.integer(0, 15))) * rng.gaussian();
    CliffordElement v = a.blade(std::uint32_t(rng.integer(0, 15))) * rng.rational();
    CliffordElement w = a.blade(std::uint32_t(rng.integer(0, 15))) * rng.gaussian();
    CHECK((u * v) * w == u * (v * w));
  }

  // f1f2 . f2f3 = d_2 f1f3
  CHECK(a.blade(0b011) * a.blade(0b110) == a.blade(0b101) * a.frame_norms()[1]);
}

TEST_CASE("parity and reversal") {
  QuadSpace q(diag({2, -2, 2}));
  CliffordAlgebra a(q);
  Rng rng(15);
  Vec vv = rng.vector(3), wv = rng.vector(3);
  CliffordElement v = a.embed_vector(vv), w = a.embed_vector(wv);
  CHECK(v.reversal() == v);
  CHECK((v * w).reversal() == w * v);
  CHECK(v.parity() == -v);
  CHECK((v * w).parity() == v * w);
  for (int t = 0; t < 20; ++t) {
    CliffordElement x = a.blade(std::uint32_t(rng.integer(0, 7))) * rng.rational();
    CliffordElement y = a.blade(std::uint32_t(rng.integer(0, 7))) * rng.gaussian();
    CHECK((x * y).reversal() == y.reversal() * x.reversal());
  }
}

TEST_CASE("trace of the regular representation") {
  QuadSpace q(diag({2, 2, -2}));
  CliffordAlgebra a(q);
  CHECK(a.unit().trace() == Scalar(8));
  for (std::uint32_t m = 1; m < 8; ++m) CHECK(a.blade(m).trace() == Scalar(0));
  CHECK((a.blade(0b011) + a.unit() * Scalar(3)).trace() == Scalar(24));

  // trace really is the matrix trace of left multiplication
  Rng rng(33);
  CliffordElement x = a.embed_vector(rng.vector(3)) + a.blade(0b110) * Scalar(2);
  Mat l = left_mul_matrix(x);
  Scalar tr;
  for (std::size_t i = 0; i < 8; ++i) tr += l(i, i);
  CHECK(tr == x.trace());
  CliffordElement y = a.embed_vector(rng.vector(3));
  CHECK((x * y).trace() == (y * x).trace());
}

TEST_CASE("so membership and bivector recovery") {
  K3LimitMHS ex2 = make_example({DegenerationType::II, 4});
  K3LimitMHS ex3 = make_example({DegenerationType::III, 3});
  CHECK(in_so(ex2.space, ex2.n));
  CHECK(in_so(ex3.space, ex3.n));

  CHECK(so_to_bivector(ex2.space, Mat(4, 4)).empty());

  // N of EX-II.4 corresponds to (e2+e3)^(e1+e4)/4
  Bivector b2 = so_to_bivector(ex2.space, ex2.n);
  Bivector expected2{{{0, 1}, Scalar::rational(-1, 4)},
                     {{0, 2}, Scalar::rational(-1, 4)},
                     {{1, 3}, Scalar::rational(1, 4)},
                     {{2, 3}, Scalar::rational(1, 4)}};
  CHECK(b2 == expected2);

  // N of EX-III.3 corresponds to (e1+e2)^e3 / q(e3,e3) with q(e3,e3) = 2
  Bivector b3 = so_to_bivector(ex3.space, ex3.n);
  Bivector expected3{{{0, 2}, Scalar::rational(1, 2)},
                     {{1, 2}, Scalar::rational(1, 2)}};
  CHECK(b3 == expected3);

  Mat not_so = Mat::identity(4);
  CHECK_FALSE(in_so(ex2.space, not_so));
  CHECK_THROWS_AS(so_to_bivector(ex2.space, not_so), std::invalid_argument);
}

TEST_CASE("eta hits the paper values") {
  K3LimitMHS ex2 = make_example({DegenerationType::II, 4});
  CliffordAlgebra a2(ex2.space);
  CHECK(eta(a2, Mat(4, 4)).is_zero());

  // eta(N) = (e2+e3)(e1+e4)/8
  Vec e23 = basis_vec(4, 1) + basis_vec(4, 2);
  Vec e14 = basis_vec(4, 0) + basis_vec(4, 3);
  CliffordElement expected2 =
      a2.embed_vector(e23) * a2.embed_vector(e14) * Scalar::rational(1, 8);
  CHECK(eta(a2, ex2.n) == expected2);

  // eta(N) = (e1+e2) e3 / (2 q(e3,e3)) on the type III example
  K3LimitMHS ex3 = make_example({DegenerationType::III, 3});
  CliffordAlgebra a3(ex3.space);
  Vec e12 = basis_vec(3, 0) + basis_vec(3, 1);
  CliffordElement expected3 = a3.embed_vector(e12) *
                              a3.embed_vector(basis_vec(3, 2)) *
                              Scalar::rational(1, 4);
  CHECK(eta(a3, ex3.n) == expected3);
}

TEST_CASE("eta is a Lie algebra map with the ad identity") {
  Rng rng(21);
  QuadSpace q(diag({2, 2, -2, -2}));
  CliffordAlgebra a(q);
  for (int t = 0; t < 6; ++t) {
    Mat m1 = rng.so_element(q);
    Mat m2 = rng.so_element(q);
    CliffordElement h1 = eta(a, m1), h2 = eta(a, m2);
    CHECK(eta(a, m1 * m2 - m2 * m1) == h1 * h2 - h2 * h1);
    for (std::size_t i = 0; i < 4; ++i) {
      CliffordElement v = a.embed_vector(basis_vec(4, i));
      CHECK(h1 * v - v * h1 == a.embed_vector(m1.apply(basis_vec(4, i))));
    }
  }
}

TEST_CASE("spin exponentials") {
  K3LimitMHS ex2 = make_example({DegenerationType::II, 4});
  CliffordAlgebra a(ex2.space);

  CHECK(spin_exp(a.zero()) == a.unit());

  CliffordElement n = eta(a, ex2.n);
  CHECK((n * n).is_zero());
  CHECK(spin_exp(n) == a.unit() + n);  // truncated series

  // g v g^{-1} = e^N v, against the Taylor-series oracle
  CliffordElement g = spin_exp(n);
  CHECK(g * g.reversal() == a.unit());
  CHECK(g.is_even());
  Mat en = oracle::taylor_exp(ex2.n, Scalar(1));
  for (std::size_t i = 0; i < 4; ++i) {
    Vec e = basis_vec(4, i);
    CHECK(g * a.embed_vector(e) * g.reversal() ==
          a.embed_vector(en.apply(e)));
  }

  CHECK_THROWS_AS(spin_exp(a.unit()), std::domain_error);
}

TEST_CASE("left multiplication matrices") {
  K3LimitMHS ex3 = make_example({DegenerationType::III, 3});
  CliffordAlgebra a(ex3.space);
  CHECK(left_mul_matrix(a.unit()) == Mat::identity(8));

  Rng rng(39);
  for (int t = 0; t < 10; ++t) {
    CliffordElement x = a.embed_vector(rng.vector(3)) + a.blade(3) * rng.gaussian();
    CliffordElement y = a.embed_vector(rng.vector(3)) + a.blade(6) * rng.rational();
    CHECK(left_mul_matrix(x * y) == left_mul_matrix(x) * left_mul_matrix(y));
  }

  CliffordElement nprime = eta(a, ex3.n);
  CHECK(rank(left_mul_matrix(nprime)) == 4);  // half of d = 8
}

TEST_CASE("right ideals") {
  // rank-2 hyperbolic plane: ideal = <v, vw>
  Mat g(2, 2);
  g(0, 1) = Scalar(1);
  g(1, 0) = Scalar(1);
  CliffordAlgebra a2{QuadSpace(g)};
  Vec v = basis_vec(2, 0);
  Subspace ideal = right_ideal(a2, v);
  CHECK(ideal.dim() == 2);
  CliffordElement ev = a2.embed_vector(v);
  CliffordElement evw = ev * a2.embed_vector(basis_vec(2, 1));
  CHECK(ideal == Subspace::span({ev.blade_coords(), evw.blade_coords()}, 4));

  // isotropic vector in rank 5: dimension 16
  QuadSpace q5(diag({2, 2, -2, -2, -2}));
  CliffordAlgebra a5(q5);
  Vec iso = basis_vec(5, 0) + basis_vec(5, 2);
  CHECK(q5.norm(iso).is_zero());
  CHECK(right_ideal(a5, iso).dim() == 16);

  // non-isotropic vectors are invertible: the ideal is everything
  CHECK(right_ideal(a5, basis_vec(5, 0)).dim() == 32);

  CHECK_THROWS_AS(right_ideal(a5, Vec(5)), std::invalid_argument);
}

TEST_CASE("algebra mismatch is rejected") {
  CliffordAlgebra a{QuadSpace(diag({2, -2}))};
  CliffordAlgebra b{QuadSpace(diag({2, 2}))};
  CHECK_THROWS_AS(a.unit() * b.unit(), std::invalid_argument);
  CHECK_THROWS_AS(a.unit() + b.unit(), std::invalid_argument);
  // equal Gram matrices are structurally compatible
  CliffordAlgebra c{QuadSpace(diag({2, -2}))};
  CHECK((a.unit() * c.unit()) == a.unit());
}

TEST_CASE("eta squares to zero whenever N^3 = 0") {
  Rng rng(51);
  for (const auto& spec : builtin_examples()) {
    K3LimitMHS m = make_example(spec);
    CliffordAlgebra a(m.space);
    CliffordElement e = eta(a, m.n);
    CHECK((e * e).is_zero());
    for (int t = 0; t < 3; ++t) {
      Mat p = rng.invertible(m.space.dim());
      QuadSpace qc(p.transpose() * m.space.gram() * p);
      Mat nc = inverse(p) * m.n * p;
      CHECK((nc * nc * nc).is_zero());
      CliffordAlgebra ac(qc);
      CliffordElement ec = eta(ac, nc);
      CHECK((ec * ec).is_zero());
    }
  }
}

#include <doctest.h>

#include "kslim/examples.hpp"
#include "kslim/verify.hpp"
#include "oracles.hpp"

using namespace kslim;

namespace {

Mat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, bool gaussian) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = gaussian ? rng.gaussian(4, 3) : rng.rational(4, 3);
  return m;
}

}  // namespace

TEST_CASE("rref on identity and zero") {
  auto id = rref(Mat::identity(3));
  CHECK(id.reduced == Mat::identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto zero = rref(Mat(2, 2));
  CHECK(zero.reduced == Mat(2, 2));
  CHECK(zero.pivots.empty());
}

TEST_CASE("rref rank matches the minor-expansion oracle") {
  Rng rng(7);
  for (int t = 0; t < 6; ++t) {
    Mat m = random_matrix(rng, 5, 5, true);
    CHECK(rank(m) == oracle::minor_rank(m));
  }
  // forced rank deficiency through a 5x3 * 3x5 product
  for (int t = 0; t < 6; ++t) {
    Mat m = random_matrix(rng, 5, 3, true) * random_matrix(rng, 3, 5, true);
    std::size_t r = rank(m);
    CHECK(r <= 3);
    CHECK(r == oracle::minor_rank(m));
  }
}

TEST_CASE("rref is idempotent") {
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    Mat m = random_matrix(rng, 4, 6, t % 2);
    Mat r = rref(m).reduced;
    CHECK(rref(r).reduced == r);
  }
}

TEST_CASE("rank-nullity") {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    std::size_t rows = 2 + std::size_t(rng.integer(0, 3));
    std::size_t cols = 2 + std::size_t(rng.integer(0, 3));
    Mat m = random_matrix(rng, rows, cols, t % 2);
    CHECK(kernel(m).dim() + image(m).dim() == cols);
  }
}

TEST_CASE("kernel and intersection basics") {
  CHECK(kernel(Mat::identity(3)) == Subspace::zero(3));
  Rng rng(19);
  Subspace s = Subspace::span({rng.vector(4), rng.vector(4)}, 4);
  CHECK(intersect(s, s) == s);
  CHECK(sum(s, s) == s);
  CHECK(s.contains(s));
}

TEST_CASE("sum and intersection dimension formula") {
  Rng rng(23);
  for (int t = 0; t < 15; ++t) {
    Subspace a = Subspace::span({rng.vector(5), rng.vector(5)}, 5);
    Subspace b = Subspace::span({rng.vector(5), rng.vector(5), rng.vector(5)}, 5);
    CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
    CHECK(sum(a, b).contains(a));
    CHECK(a.contains(intersect(a, b)));
  }
}

TEST_CASE("preimage realizes W_2 = N^{-1}(W_0) on the type III example") {
  K3LimitMHS m = make_example({DegenerationType::III, 3});
  Subspace w0 = image(m.n * m.n);
  Subspace w2 = preimage(m.n, w0);

  // Hand oracle: N x = (b-a) e_3 + c (e_1+e_2) lies in <e_1+e_2> iff a = b,
  // so the preimage is the span of e_1+e_2 and e_3.
  Vec e12{Scalar(1), Scalar(1), Scalar(0)};
  Vec e3{Scalar(0), Scalar(0), Scalar(1)};
  CHECK(w2.dim() == 2);
  CHECK(w2 == Subspace::span({e12, e3}, 3));
}

TEST_CASE("preimage of the full and zero spaces") {
  Rng rng(29);
  Mat m = random_matrix(rng, 3, 3, false);
  CHECK(preimage(m, Subspace::full(3)) == Subspace::full(3));
  CHECK(preimage(m, Subspace::zero(3)) == kernel(m));
}

TEST_CASE("solve") {
  Mat a(2, 2);
  a(0, 0) = Scalar(1);
  a(0, 1) = Scalar(2);
  a(1, 0) = Scalar(3);
  a(1, 1) = Scalar(4);
  Vec x = solve(a, Vec{Scalar(5), Scalar(11)});
  CHECK(a.apply(x) == Vec{Scalar(5), Scalar(11)});

  Mat sing(2, 2);
  sing(0, 0) = Scalar(1);
  sing(1, 0) = Scalar(1);
  CHECK_THROWS_AS(solve(sing, Vec{Scalar(0), Scalar(1)}), std::domain_error);
}

TEST_CASE("determinant against the cofactor oracle") {
  Rng rng(31);
  for (int t = 0; t < 8; ++t) {
    Mat m = random_matrix(rng, 4, 4, t % 2);
    CHECK(det(m) == oracle::minor_det(m));
  }
}

TEST_CASE("inverse") {
  Rng rng(37);
  Mat p = rng.invertible(4);
  CHECK(p * inverse(p) == Mat::identity(4));
  CHECK_THROWS_AS(inverse(Mat(3, 3)), std::domain_error);
}

TEST_CASE("dimension mismatches throw") {
  CHECK_THROWS_AS(Mat(2, 2) * Mat(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(sum(Subspace::zero(2), Subspace::zero(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Subspace::full(2).contains(Vec{Scalar(1)}),
                  std::invalid_argument);
}

TEST_CASE("subspace equality is echelon-form equality") {
  Vec a{Scalar(1), Scalar(2)};
  Vec b{Scalar(2), Scalar(4)};
  Vec c{Scalar(3), Scalar(6)};
  CHECK(Subspace::span({a, b}, 2) == Subspace::span({c}, 2));
  CHECK(Subspace::span({a}, 2) != Subspace::span({Vec{Scalar(1), Scalar(0)}}, 2));
}

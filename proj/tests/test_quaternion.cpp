#include "doctest.h"

#include "qframes/errors.hpp"
#include "qframes/quaternion.hpp"
#include "qframes/qvector.hpp"
#include "qframes/random.hpp"

using namespace qframes;

TEST_CASE("hamilton table is exact") {
  const Quaternion i = Quaternion::i();
  const Quaternion j = Quaternion::j();
  const Quaternion k = Quaternion::k();
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == i);
  CHECK(k * j == -i);
  CHECK(k * i == j);
  CHECK(i * k == -j);
  CHECK(i * i == Quaternion(-1.0));
  CHECK(j * j == Quaternion(-1.0));
  CHECK(k * k == Quaternion(-1.0));
}

TEST_CASE("(1+i)(1+j) = 1+i+j+k") {
  const Quaternion p(1.0, 1.0, 0.0, 0.0);
  const Quaternion q(1.0, 0.0, 1.0, 0.0);
  CHECK(p * q == Quaternion(1.0, 1.0, 1.0, 1.0));
  // the reversed product flips the sign of the k part
  CHECK(q * p == Quaternion(1.0, 1.0, 1.0, -1.0));
}

TEST_CASE("conjugate and modulus of 1+i+j+k") {
  const Quaternion q(1.0, 1.0, 1.0, 1.0);
  CHECK(conj(q) == Quaternion(1.0, -1.0, -1.0, -1.0));
  CHECK(abs(q) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(q.norm_sq() == 4.0);
}

TEST_CASE("inverse") {
  CHECK(Quaternion::i().inverse() == -Quaternion::i());
  const Quaternion q(0.5, -1.0, 2.0, 0.25);
  CHECK(close(q * q.inverse(), Quaternion::one(), 1e-15));
  CHECK(close(q.inverse() * q, Quaternion::one(), 1e-15));
  CHECK_THROWS_AS(Quaternion::zero().inverse(), ZeroDivisorError);
}

TEST_CASE("norm is multiplicative") {
  SplitMix64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    CHECK(abs(p * q) ==
          doctest::Approx(abs(p) * abs(q)).epsilon(1e-13));
  }
}

TEST_CASE("conjugation reverses products") {
  SplitMix64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    CHECK(close(conj(p * q), conj(q) * conj(p), 1e-12));
  }
}

TEST_CASE("inner product on H^2 is conjugate-linear first") {
  QVector u{Quaternion::i(), Quaternion::zero()};
  QVector v{Quaternion::j(), Quaternion::zero()};
  // conj(i) j = -ij = -k
  CHECK(inner(u, v) == -Quaternion::k());

  QVector e1 = QVector::basis(2, 0);
  CHECK(inner(e1, e1 * Quaternion::j()) == Quaternion::j());
  CHECK(inner(e1 * Quaternion::j(), e1) == -Quaternion::j());
}

TEST_CASE("right scalar action and normalization") {
  QVector u{Quaternion(3.0), Quaternion(0.0, 4.0, 0.0, 0.0)};
  CHECK(u.norm() == doctest::Approx(5.0).epsilon(1e-15));
  QVector n = u.normalized();
  CHECK(n.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(QVector(2).normalized(), ZeroDivisorError);

  // (u q) scales the inner product on the right
  SplitMix64 rng(13);
  QVector a = random_qvector(rng, 3);
  QVector b = random_qvector(rng, 3);
  Quaternion q = random_quaternion(rng);
  CHECK(close(inner(a, b * q), inner(a, b) * q, 1e-12));
  CHECK(close(inner(a * q, b), conj(q) * inner(a, b), 1e-12));
}

TEST_CASE("splitmix stream is reproducible") {
  SplitMix64 a(42), b(42);
  for (int t = 0; t < 16; ++t) CHECK(a.next() == b.next());
  CHECK(derive_seed(7, 0) != derive_seed(7, 1));
  SplitMix64 c(99), d(99);
  for (int t = 0; t < 16; ++t) CHECK(c.gaussian() == d.gaussian());
}

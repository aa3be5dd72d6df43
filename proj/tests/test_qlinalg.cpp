#include "doctest.h"

#include <complex>
#include <vector>

#include "qframes/embedding.hpp"
#include "qframes/errors.hpp"
#include "qframes/generators.hpp"
#include "qframes/qmatrix.hpp"
#include "qframes/random.hpp"
#include "qframes/spectral.hpp"

using namespace qframes;
using cd = std::complex<double>;

TEST_CASE("embedding of j is the standard symplectic block") {
  QMatrix m(1, 1);
  m(0, 0) = Quaternion::j();
  ComplexEmbedding e = embed(m);
  REQUIRE(e.mat.rows() == 2);
  REQUIRE(e.mat.cols() == 2);
  CHECK(e.mat(0, 0) == cd(0.0, 0.0));
  CHECK(e.mat(0, 1) == cd(1.0, 0.0));
  CHECK(e.mat(1, 0) == cd(-1.0, 0.0));
  CHECK(e.mat(1, 1) == cd(0.0, 0.0));
  CHECK(unembed(e) == m);
}

TEST_CASE("embedding is multiplicative and adjoint-compatible") {
  SplitMix64 rng(21);
  for (int t = 0; t < 25; ++t) {
    QMatrix a = random_matrix(rng, 3, 2);
    QMatrix b = random_matrix(rng, 2, 4);
    ComplexEmbedding ea = embed(a);
    ComplexEmbedding eb = embed(b);
    CHECK((ea.mat * eb.mat - embed(a * b).mat).cwiseAbs().maxCoeff() <=
          1e-12 * (1.0 + opnorm(a) * opnorm(b)));
    CHECK((Eigen::MatrixXcd(ea.mat.adjoint()) - embed(adjoint(a)).mat)
              .cwiseAbs()
              .maxCoeff() == 0.0);
    CHECK(unembed(ea) == a);

    QVector u = random_qvector(rng, 2);
    CHECK((ea.mat * embed_vector(u) - embed_vector(a * u))
              .cwiseAbs()
              .maxCoeff() <= 1e-12 * (1.0 + opnorm(a) * u.norm()));
    CHECK(embed_vector(u).norm() ==
          doctest::Approx(u.norm()).epsilon(1e-14));
  }
}

TEST_CASE("unembed rejects non-symplectic patterns") {
  ComplexEmbedding bad;
  bad.mat = Eigen::MatrixXcd::Identity(2, 2);
  bad.mat(0, 1) = cd(1.0, 0.0);  // the paired block entry stays 0
  bad.qrows = 1;
  bad.qcols = 1;
  CHECK_THROWS_AS(unembed(bad), EmbeddingPatternError);
}

TEST_CASE("rank-one gram spectrum") {
  QVector f{Quaternion(1.0, 1.0, 0.0, 0.0), Quaternion::j()};
  QMatrix m = QMatrix::from_columns({f});
  QMatrix gram = m * adjoint(m);
  std::vector<double> ev = herm_eigvals(gram);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(f.norm_sq()).epsilon(1e-12));
}

TEST_CASE("herm_eigvals requires a Hermitian input") {
  QMatrix m(1, 1);
  m(0, 0) = Quaternion::i();
  CHECK_THROWS_AS(herm_eigvals(m), NotHermitianError);
  CHECK_FALSE(is_hermitian(m));
}

TEST_CASE("pseudoinverse of a tall full-rank matrix is a left inverse") {
  SplitMix64 rng(22);
  QMatrix m = well_conditioned_matrix(rng, 4, 2);
  QMatrix left = pinv(m) * m;
  CHECK(close(left, QMatrix::identity(2), 1e-10));
  CHECK(opnorm(m * pinv(m) * m - m) <= 1e-10 * (1.0 + opnorm(m)));
}

TEST_CASE("pinv of the zero matrix is zero") {
  QMatrix z(3, 2);
  CHECK(pinv(z) == QMatrix(2, 3));
}

TEST_CASE("range inclusion distinguishes proper subspaces") {
  QMatrix proj = QMatrix::diagonal({1.0, 0.0});
  QMatrix eye = QMatrix::identity(2);
  CHECK_FALSE(range_inclusion(eye, proj).included);
  CHECK(range_inclusion(proj, eye).included);
  CHECK(range_inclusion(proj, proj).included);
}

TEST_CASE("rank and nullspace") {
  QMatrix proj = QMatrix::diagonal({1.0, 0.0});
  CHECK(rank(proj) == 1);
  QMatrix ns = nullspace(proj);
  REQUIRE(ns.cols() > 0);
  CHECK(opnorm(proj * ns) <= 1e-12);
  CHECK(rank(ns) == 1);

  SplitMix64 rng(23);
  QMatrix d = rank_deficient_matrix(rng, 5, 4, 2);
  CHECK(rank(d) == 2);
  QMatrix nd = nullspace(d);
  CHECK(rank(nd) == 2);
  CHECK(opnorm(d * nd) <= 1e-10 * (1.0 + opnorm(d)));
}

TEST_CASE("gram-schmidt on (e1, e1 + e2 j)") {
  QVector e1 = QVector::basis(2, 0);
  QVector e2 = QVector::basis(2, 1);
  std::vector<QVector> basis =
      gram_schmidt({e1, e1 + e2 * Quaternion::j()});
  REQUIRE(basis.size() == 2);
  CHECK(close(basis[0], e1, 1e-14));
  CHECK(close(basis[1], e2 * Quaternion::j(), 1e-14));
  CHECK_THROWS_AS(gram_schmidt({e1, e1 * Quaternion::k()}),
                  PreconditionError);
}

TEST_CASE("hermitian square root and positivity") {
  QMatrix d = QMatrix::diagonal({4.0, 9.0});
  CHECK(close(herm_sqrt(d), QMatrix::diagonal({2.0, 3.0}), 1e-12));
  CHECK(is_psd(d));
  CHECK_FALSE(is_psd(QMatrix::diagonal({1.0, -1.0})));
  CHECK_THROWS_AS(herm_sqrt(QMatrix::diagonal({1.0, -1.0})),
                  PreconditionError);
}

TEST_CASE("operator norm and singular values") {
  QMatrix d = QMatrix::diagonal({3.0, 1.0});
  CHECK(opnorm(d) == doctest::Approx(3.0).epsilon(1e-13));
  std::vector<double> sv = singular_values(d);
  REQUIRE(sv.size() == 2);
  CHECK(sv[0] == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(sv[1] == doctest::Approx(1.0).epsilon(1e-13));
}

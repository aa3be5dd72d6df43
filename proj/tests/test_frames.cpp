#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "qframes/frames.hpp"
#include "qframes/generators.hpp"
#include "qframes/random.hpp"
#include "qframes/spectral.hpp"

using namespace qframes;

TEST_CASE("one-atom partition family: f = e1/2 for weight 4") {
  DiscreteMeasureSpace space({4.0});
  FrameFamily fam = parseval_from_partition(space);
  REQUIRE(fam.dim == 1);
  REQUIRE(fam.atoms() == 1);
  CHECK(close(fam.vectors[0], QVector::basis(1, 0) * 0.5, 1e-15));
  OperatorBundle b = build_bundle(fam);
  CHECK(close(b.frame_op, QMatrix::identity(1), 1e-15));
  FrameBounds fb = frame_bounds(fam);
  CHECK(fb.lower == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fb.upper == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fb.cls == Classification::Parseval);
}

TEST_CASE("partition family is parseval for uneven weights") {
  DiscreteMeasureSpace space({4.0, 1.0, 0.25});
  FrameFamily fam = parseval_from_partition(space);
  FrameBounds fb = frame_bounds(fam);
  CHECK(std::fabs(fb.lower - 1.0) <= 1e-9);
  CHECK(std::fabs(fb.upper - 1.0) <= 1e-9);
  CHECK(fb.cls == Classification::Parseval);

  SplitMix64 rng(41);
  QVector u = random_qvector(rng, 3);
  EnergyTriple e = frame_energy(fam, u);
  CHECK(e.direct_sum == doctest::Approx(u.norm_sq()).epsilon(1e-12));
}

TEST_CASE("analysis of e1 j lands on the j coefficient") {
  DiscreteMeasureSpace space({1.0, 1.0});
  FrameFamily fam = parseval_from_partition(space);
  OperatorBundle b = build_bundle(fam);
  QVector out = b.theta * (QVector::basis(2, 0) * Quaternion::j());
  CHECK(out[0] == Quaternion::j());
  CHECK(out[1] == Quaternion::zero());
}

TEST_CASE("doubled basis is a tight frame with bound 2") {
  std::vector<QVector> vecs;
  for (int copy = 0; copy < 2; ++copy) {
    for (int i = 0; i < 2; ++i) vecs.push_back(QVector::basis(2, i));
  }
  FrameFamily fam(DiscreteMeasureSpace({1.0, 1.0, 1.0, 1.0}), vecs, 2);
  FrameBounds fb = frame_bounds(fam);
  CHECK(fb.lower == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fb.upper == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fb.cls == Classification::Frame);
  CHECK_FALSE(is_minimal(fam));
}

TEST_CASE("energy triple agrees on a random bessel family") {
  SplitMix64 rng(42);
  FrameFamily fam = random_bessel_family(rng, 3, 2);
  FrameBounds fb = frame_bounds(fam);
  CHECK(fb.cls == Classification::BesselOnly);
  CHECK(fb.lower <= 1e-10);
  OperatorBundle b = build_bundle(fam);
  const double scale = 1e-10 * (1.0 + opnorm(b.frame_op));
  for (int t = 0; t < 8; ++t) {
    QVector u = random_unit_qvector(rng, 3);
    EnergyTriple e = frame_energy(fam, u);
    CHECK(std::fabs(e.direct_sum - e.quadratic_form) <= scale);
    CHECK(std::fabs(e.direct_sum - e.analysis_norm_sq) <= scale);
  }
}

TEST_CASE("zero K is vacuously a k-frame with infinite constant") {
  SplitMix64 rng(43);
  FrameFamily fam = random_bessel_family(rng, 2, 1);
  KFrameReport rep = kframe_check(fam, QMatrix(2, 2));
  CHECK(rep.is_kframe);
  CHECK(rep.conditions_agree);
  CHECK(rep.c_opt == std::numeric_limits<double>::infinity());
}

TEST_CASE("identity K on an orthonormal basis has c_opt 1") {
  DiscreteMeasureSpace space({1.0, 1.0, 1.0});
  FrameFamily fam = parseval_from_partition(space);
  KFrameReport rep = kframe_check(fam, QMatrix::identity(3));
  CHECK(rep.is_kframe);
  CHECK(rep.conditions_agree);
  CHECK(rep.c_opt == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("image families are k-frames and negatives fail four ways") {
  SplitMix64 rng(44);
  for (int t = 0; t < 6; ++t) {
    KFrameInstance pos = kframe_positive(rng, 3, 4, t % 2 == 1);
    KFrameReport rp = kframe_check(pos.fam, pos.k);
    CHECK(rp.conditions_agree);
    CHECK(rp.is_kframe);
    CHECK(rp.c_opt > 0.0);

    KFrameInstance neg = kframe_negative(rng, 3);
    KFrameReport rn = kframe_check(neg.fam, neg.k);
    CHECK(rn.conditions_agree);
    CHECK_FALSE(rn.is_kframe);
  }
}

TEST_CASE("map_family by the identity and by zero") {
  SplitMix64 rng(45);
  FrameFamily fam = random_frame(rng, 2, 3);
  FrameFamily same = map_family(QMatrix::identity(2), fam);
  for (int i = 0; i < fam.atoms(); ++i) {
    CHECK(close(same.vectors[static_cast<std::size_t>(i)],
                fam.vectors[static_cast<std::size_t>(i)], 1e-15));
  }
  FrameFamily dead = map_family(QMatrix(2, 2), fam);
  FrameBounds fb = frame_bounds(dead);
  CHECK(fb.upper <= 1e-12);
}

TEST_CASE("minimality: repeated atoms starve the synthesis kernel") {
  QVector e1 = QVector::basis(2, 0);
  FrameFamily doubled(DiscreteMeasureSpace({1.0, 1.0}), {e1, e1}, 2);
  MinimalityReport mr = minimality(doubled);
  CHECK_FALSE(mr.minimal);
  CHECK(mr.synthesis_rank == 1);
  CHECK(mr.nonvanishing);

  FrameFamily single(DiscreteMeasureSpace({2.0}), {e1}, 2);
  CHECK(is_minimal(single));
}

TEST_CASE("k-frame composition closure") {
  SplitMix64 rng(46);
  KFrameInstance pos = kframe_positive(rng, 3, 5, false);
  QMatrix x = well_conditioned_matrix(rng, 3, 3);
  CHECK(kframe_check(pos.fam, pos.k * x).is_kframe);
}

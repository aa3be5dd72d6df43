#include "doctest.h"

#include <cmath>

#include "qframes/frames.hpp"
#include "qframes/generators.hpp"
#include "qframes/random.hpp"
#include "qframes/spectral.hpp"
#include "qframes/superspace.hpp"

using namespace qframes;

TEST_CASE("supervector split and join round-trip") {
  SplitMix64 rng(51);
  SuperVector a{random_qvector(rng, 2), random_qvector(rng, 3)};
  QVector w = a.joined();
  REQUIRE(w.dim() == 5);
  SuperVector back = SuperVector::split(w, 2);
  CHECK(close(back.left, a.left, 0.0));
  CHECK(close(back.right, a.right, 0.0));

  SuperVector b{random_qvector(rng, 2), random_qvector(rng, 3)};
  CHECK(close(inner(a, b), inner(a.left, b.left) + inner(a.right, b.right),
              1e-15));
  CHECK(a.norm_sq() ==
        doctest::Approx(w.norm_sq()).epsilon(1e-15));
}

TEST_CASE("direct-sum operators act blockwise") {
  SplitMix64 rng(52);
  QMatrix k1 = random_matrix(rng, 2, 2);
  QMatrix k2 = random_matrix(rng, 3, 3);
  SuperOperator k = SuperOperator::direct_sum(k1, k2);
  SuperVector a{random_qvector(rng, 2), random_qvector(rng, 3)};
  SuperVector out = k.apply(a);
  CHECK(close(out.left, k1 * a.left, 0.0));
  CHECK(close(out.right, k2 * a.right, 0.0));
  CHECK(k.slice1() == QMatrix::hcat(k1, QMatrix(2, 3)));
  CHECK(k.slice2() == QMatrix::hcat(QMatrix(3, 2), k2));

  SuperVector p1 = SuperOperator::projection1(2, 3).apply(a);
  CHECK(close(p1.left, a.left, 0.0));
  CHECK(p1.right.is_zero());
  SuperVector p2 = SuperOperator::projection2(2, 3).apply(a);
  CHECK(p2.left.is_zero());
  CHECK(close(p2.right, a.right, 0.0));
}

TEST_CASE("combined bundle splits into component blocks") {
  SplitMix64 rng(53);
  SuperInstance si = shared_support_super(rng, 2, 3, 4);
  SuperBundleReport rep = super_bundle(si.sf);
  CHECK(rep.max_residual == 0.0);

  BesselSumReport bs = bessel_sum_equivalence(si.sf);
  CHECK(bs.upper_ok);
  CHECK(bs.lower_ok);
  CHECK(bs.b_sum >= std::max(bs.b1, bs.b2) - 1e-9);
}

TEST_CASE("identical pair admits only the zero operators") {
  SplitMix64 rng(54);
  FrameFamily fam = random_frame(rng, 3, 4);
  QMatrix k1 = well_conditioned_matrix(rng, 3, 3);

  ObstructionReport bad =
      identical_pair_obstruction(fam, k1, QMatrix(3, 3));
  CHECK_FALSE(bad.is_kframe);
  CHECK_FALSE(bad.theorem_verdict);
  CHECK(bad.witness_energy == 0.0);
  CHECK(bad.witness_k_norm_sq > 1e-4);
  REQUIRE(bad.witness.dim() == 3);
  // the witness kills the frame energy atomwise
  EnergyTriple left = frame_energy(fam, bad.witness);
  EnergyTriple right = frame_energy(fam, -bad.witness);
  CHECK(left.direct_sum == doctest::Approx(right.direct_sum).epsilon(1e-15));

  ObstructionReport good =
      identical_pair_obstruction(fam, QMatrix(3, 3), QMatrix(3, 3));
  CHECK(good.is_kframe);
  CHECK(good.theorem_verdict);
}

TEST_CASE("disjoint supports: sufficiency, necessity, inequalities") {
  SplitMix64 rng(55);
  SuperInstance si = disjoint_support_super(rng, 2, 2, 3, 3);

  SufficiencyReport suf = k1k2_sufficiency(si.sf, si.k1, si.k2);
  CHECK(suf.applicable);
  CHECK(suf.s_block_diagonal);
  CHECK(suf.verdict);
  CHECK(suf.combined_c_opt >= suf.claimed_lower - 1e-9);
  CHECK(suf.cross12_norm <= 1e-12);
  CHECK(suf.cross21_norm <= 1e-12);

  NecessityReport nec = k1k2_necessity(si.sf, si.k1, si.k2);
  CHECK(nec.verdict);
  CHECK(nec.transposed_applicable);

  SuperOperator k = SuperOperator::direct_sum(si.k1, si.k2);
  KFrameReport rc = kframe_check(si.sf.combined(), k.mat);
  REQUIRE(rc.is_kframe);
  ComponentInequalityReport ci = component_inequalities(
      si.sf, k, std::min(rc.c_opt, rc.bounds.upper), rc.bounds.upper);
  CHECK(ci.adjoint_identities_exact);
  CHECK(ci.all_hold);
}

TEST_CASE("shared supports make the sufficiency test inapplicable") {
  SplitMix64 rng(56);
  SuperInstance si = shared_support_super(rng, 2, 2, 3);
  SufficiencyReport suf = k1k2_sufficiency(si.sf, si.k1, si.k2);
  CHECK_FALSE(suf.applicable);
  CHECK(suf.cross12_norm > 1e-6);
}

TEST_CASE("super minimality matches the stacked rank count") {
  SplitMix64 rng(57);
  // three atoms in dimension 2 + 2: minimal exactly when each block
  // carries at most its own dimension
  SuperInstance tight = disjoint_support_super(rng, 2, 2, 2, 1);
  OperatorBundle b1 = build_bundle(tight.sf.f1);
  OperatorBundle b2 = build_bundle(tight.sf.f2);
  SuperOperator ks = SuperOperator::direct_sum(b1.frame_op, b2.frame_op);
  SuperMinimalityReport rep = super_minimality(tight.sf, ks);
  CHECK(rep.minimal);
  CHECK(rep.stacked_rank == rep.atoms);
  CHECK(rep.closure_condition);
  CHECK(rep.implication_ok);

  SuperInstance fat = disjoint_support_super(rng, 2, 2, 4, 1);
  OperatorBundle c1 = build_bundle(fat.sf.f1);
  OperatorBundle c2 = build_bundle(fat.sf.f2);
  SuperOperator kf = SuperOperator::direct_sum(c1.frame_op, c2.frame_op);
  SuperMinimalityReport rf = super_minimality(fat.sf, kf);
  CHECK_FALSE(rf.minimal);
  CHECK_FALSE(rf.closure_condition);
  CHECK(rf.implication_ok);
}

TEST_CASE("padded union places families on disjoint atoms") {
  SplitMix64 rng(58);
  FrameFamily a = random_frame(rng, 2, 3);
  FrameFamily b = random_frame(rng, 2, 2);
  SuperFrame sf = SuperFrame::padded_union(a, b);
  CHECK(sf.f1.atoms() == 5);
  CHECK(sf.f2.atoms() == 5);
  // padding preserves both frame operators
  CHECK(close(build_bundle(sf.f1).frame_op, build_bundle(a).frame_op,
              1e-14));
  CHECK(close(build_bundle(sf.f2).frame_op, build_bundle(b).frame_op,
              1e-14));
}

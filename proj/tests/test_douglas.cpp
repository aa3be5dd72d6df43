#include "doctest.h"

#include "qframes/douglas.hpp"
#include "qframes/errors.hpp"
#include "qframes/generators.hpp"
#include "qframes/random.hpp"
#include "qframes/spectral.hpp"

using namespace qframes;

TEST_CASE("L = M gives constant 1, L = 2M gives 4") {
  SplitMix64 rng(31);
  QMatrix m = well_conditioned_matrix(rng, 3, 3);
  CHECK(min_majorization_constant(m, m) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(min_majorization_constant(m * 2.0, m) ==
        doctest::Approx(4.0).epsilon(1e-9));
  QMatrix x = douglas_factor(m * 2.0, m);
  CHECK(opnorm(m * x - m * 2.0) <= 1e-9 * (1.0 + 2.0 * opnorm(m)));
  CHECK(opnorm(x) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("L = 0 gives constant 0") {
  SplitMix64 rng(32);
  QMatrix m = well_conditioned_matrix(rng, 3, 2);
  QMatrix z(3, 4);
  CHECK(min_majorization_constant(z, m) == 0.0);
  CHECK(douglas_factor(z, m) == QMatrix(2, 4));
}

TEST_CASE("certificate holds at the optimum and fails below it") {
  SplitMix64 rng(33);
  for (int t = 0; t < 10; ++t) {
    DouglasInstance di = douglas_instance(rng, 4, 3, true, t % 2 == 1);
    const double c = min_majorization_constant(di.l, di.m);
    CHECK(majorization_certificate(di.l, di.m, c).holds);
    if (c > 0.0) {
      CHECK_FALSE(majorization_certificate(di.l, di.m, 0.99 * c).holds);
    }
  }
}

TEST_CASE("infeasible instances fail all three ways") {
  QMatrix m = QMatrix::diagonal({1.0, 0.0});
  QMatrix l = QMatrix::identity(2);
  DouglasReport rep = douglas_equivalence_report(l, m);
  CHECK_FALSE(rep.range_included);
  CHECK_FALSE(rep.majorized);
  CHECK_FALSE(rep.factorizable);
  CHECK_THROWS_AS(min_majorization_constant(l, m), InfeasibleError);
  bool threw = false;
  try {
    douglas_factor(l, m);
  } catch (const FactorizationError& e) {
    threw = true;
    CHECK(e.residual > 0.5);
  }
  CHECK(threw);
}

TEST_CASE("three conditions agree on generated instances") {
  SplitMix64 rng(34);
  for (int t = 0; t < 24; ++t) {
    const bool feasible = t % 2 == 0;
    DouglasInstance di = douglas_instance(rng, 3, 3, feasible);
    DouglasReport rep = douglas_equivalence_report(di.l, di.m);
    CHECK(rep.range_included == feasible);
    CHECK(rep.majorized == feasible);
    CHECK(rep.factorizable == feasible);
    if (feasible) {
      CHECK(rep.factor_norm * rep.factor_norm ==
            doctest::Approx(rep.c_min).epsilon(1e-6));
    }
  }
}

TEST_CASE("factor c_min matches the squared factor norm") {
  SplitMix64 rng(35);
  QMatrix m = well_conditioned_matrix(rng, 4, 4);
  QMatrix x0 = random_matrix(rng, 4, 2);
  QMatrix l = m * x0;
  const double c = min_majorization_constant(l, m);
  QMatrix x = douglas_factor(l, m);
  CHECK(opnorm(x) * opnorm(x) == doctest::Approx(c).epsilon(1e-8));
  // the minimal factor never beats the planted one
  CHECK(opnorm(x) <= opnorm(x0) * (1.0 + 1e-9));
}

#pragma once

#include "qframes/frames.hpp"
#include "qframes/qmatrix.hpp"
#include "qframes/random.hpp"
#include "qframes/superspace.hpp"

namespace qframes {

// Instance generators for the randomized verifiers.  Conditioning is kept
// deliberately tame (singular values in [0.5, 2], weights in [0.2, 2],
// frame floors at 0.05) so pass/fail margins sit orders of magnitude away
// from the decision tolerances.

QMatrix random_matrix(SplitMix64& rng, int rows, int cols);

/// Singular values uniform in [0.5, 2]; full rank.
QMatrix well_conditioned_matrix(SplitMix64& rng, int rows, int cols);

/// Prescribed rank, nonzero singular values in [0.5, 2].
QMatrix rank_deficient_matrix(SplitMix64& rng, int rows, int cols, int rank);

/// Weights uniform in [0.2, 2].
DiscreteMeasureSpace random_measure(SplitMix64& rng, int atoms);

/// Gaussian vectors over a random measure; Bessel but usually not a frame
/// when atoms < dim.
FrameFamily random_bessel_family(SplitMix64& rng, int dim, int atoms);

/// Basis-plus-noise family (atoms >= dim) regenerated until the frame
/// operator's smallest eigenvalue clears 0.05.
FrameFamily random_frame(SplitMix64& rng, int dim, int atoms);

struct KFrameInstance {
  FrameFamily fam;
  QMatrix k;
  bool positive = false;
};

/// Positive instance: the image family K F of a frame F is a K-frame.
/// K is invertible or deliberately rank-deficient.
KFrameInstance kframe_positive(SplitMix64& rng, int dim, int atoms,
                               bool singular_k);

/// Negative instance: fewer atoms than dimensions starves the synthesis
/// rank, while K stays invertible.
KFrameInstance kframe_negative(SplitMix64& rng, int dim);

struct DouglasInstance {
  QMatrix l;
  QMatrix m;
  bool feasible = false;
};

/// Feasible: L = M X0 through a square well- (or optionally rank-)
/// conditioned M.  Infeasible: L gains a unit column orthogonal to R(M),
/// with M rank-deficient so the escape direction exists.
DouglasInstance douglas_instance(SplitMix64& rng, int rows, int cols_l,
                                 bool feasible, bool singular_m = false);

struct SuperInstance {
  SuperFrame sf;
  QMatrix k1;
  QMatrix k2;
};

/// Components framed on disjoint atom blocks of the union measure; cross
/// operators vanish exactly, so sufficiency applies.
SuperInstance disjoint_support_super(SplitMix64& rng, int n1, int n2, int m1,
                                     int m2);

/// Generic components over shared atoms; cross operators are macroscopic.
SuperInstance shared_support_super(SplitMix64& rng, int n1, int n2,
                                   int atoms);

}  // namespace qframes

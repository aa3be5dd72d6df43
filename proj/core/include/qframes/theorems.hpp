#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qframes {

/// Outcome of one randomized suite.  `passes == trials` means every trial
/// upheld every checked identity; otherwise `first_failure_seed` is the
/// derived seed of the first offending trial so it can be replayed.
struct TheoremResult {
  std::string name;
  int trials = 0;
  int passes = 0;
  std::uint64_t first_failure_seed = 0;
  bool has_failure = false;
  std::string note;
};

/// Names accepted by run_theorem, in reporting order.
const std::vector<std::string>& theorem_names();

/// Runs `trials` randomized checks of the named result.  Dimensions are
/// drawn from [1, max_dim] (at least 2 where the statement needs room).
/// Throws PreconditionError for an unknown name.
TheoremResult run_theorem(const std::string& name, std::uint64_t seed,
                          int trials, int max_dim, double tol);

}  // namespace qframes

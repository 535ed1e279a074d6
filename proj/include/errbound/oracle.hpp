#pragma once

#include <cstdint>
#include <vector>

#include "errbound/simulate.hpp"

namespace errbound {

struct FrontierPoint {
  double delta;
  double min_kl;
};

// Brute-force check of the refined bound's first segment. For each target
// delta in (0, 1-2t) the oracle minimizes the joint KL over two routes:
//   - the two-observation equality family, solved analytically at eps = 0
//     (lambda = (delta+t)/(delta+2t), value pr(x2) B(2 lambda - 1));
//   - a randomized local search over small pairs accepted under
//     |delta_q - delta| <= 1e-3 and E* <= t.
// Returns the smaller value per delta. Throws GridOutOfRange for targets
// outside the segment.
std::vector<FrontierPoint> frontier_oracle(double t, const std::vector<double>& deltas,
                                           long search_trials = 10000,
                                           std::uint64_t seed = 2024);

// Closed-form minimum of the equality family at a given delta (eps = 0).
// At eps = 0 the model argmax at x2 is a tie between the two active
// classes; the family's value uses the intended limit decision c_q = c2,
// so it is evaluated from the closed form rather than through the
// library's lowest-index tie-break.
double frontier_family_value(double t, double delta);

}  // namespace errbound

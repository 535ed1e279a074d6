#pragma once

#include <functional>
#include <string>
#include <vector>

#include "errbound/distribution.hpp"

namespace errbound {

// Convex generator for an f-divergence: f convex on (0, inf) with f(1) = 0.
// f_at_zero is lim_{u->0+} f(u); slope_at_inf is lim_{u->inf} f(u)/u,
// which weights mass p > 0 placed on a q-null atom (+inf for KL).
struct ConvexGenerator {
  std::function<double(double)> f;
  double f_at_zero;
  double slope_at_inf;
  std::string name;
};

// f(u) = u log u in nats: f(0+) = 0, slope at infinity = +inf.
const ConvexGenerator& kl_generator();

// f(u) = |u - 1| / 2, whose f-divergence is the total variation distance.
const ConvexGenerator& total_variation_generator();

// sum_c q_c f(p_c / q_c) with the edge cases 0 f(0/0) = 0,
// q_c f(0 / q_c) = q_c f(0+), and p_c > 0 on q_c = 0 weighted by
// slope_at_inf. Inputs must be probability vectors of equal length.
double f_divergence(const std::vector<double>& p, const std::vector<double>& q,
                    const ConvexGenerator& gen);

// KL(p || q) in nats with the same edge-case semantics.
double kl_divergence(const std::vector<double>& p, const std::vector<double>& q);

// Per-observation and aggregated KL quantities for a (pr, q) pair.
// Observations with pr(x) = 0 contribute nothing and their local entry is 0.
struct KlComponents {
  std::vector<double> local;    // KL(pr(c|x) || q(c|x)) per x
  double conditional;           // sum_x pr(x) local(x)
  double marginal_term;         // sum_x pr(x) log(pr(x)/q(x))
  double joint;                 // conditional + marginal_term
};

KlComponents kl_components(const JointDistribution& pr, const JointDistribution& q);

// Every scalar measure for a mismatched (pr, q) pair. Expectations are
// always under pr; entries at pr(x) = 0 are zero and carry no weight.
struct MismatchReport {
  double bayes_error;        // E*
  double model_error;        // E_q
  double delta_q;            // E_q - E*
  double total_variation;    // half L1 between joints
  double kl_conditional;
  double kl_marginal_term;
  double kl_joint;
  std::vector<double> local_bayes_errors;
  std::vector<double> local_model_errors;
  std::vector<double> local_mismatches;
};

MismatchReport mismatch_report(const JointDistribution& pr, const JointDistribution& q);

}  // namespace errbound

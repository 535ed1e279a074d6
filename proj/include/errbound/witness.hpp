#pragma once

#include <optional>
#include <utility>

#include "errbound/bounds.hpp"
#include "errbound/distribution.hpp"

namespace errbound {

enum class WitnessFamily { nussbaum, refined };

// Parameters selecting one member of an equality-achieving family.
// The nussbaum family needs lambda in (0.5, 1]; the refined family needs
// lambda in [0.5, 1-t) together with t in (0, 0.5). epsilon in (0, 0.25)
// breaks the model argmax tie; equality holds in the epsilon -> 0+ limit.
struct WitnessSpec {
  WitnessFamily family = WitnessFamily::nussbaum;
  double lambda = 0.75;
  double epsilon = 1e-6;
  std::optional<double> t;
  int num_classes = 2;
  int num_obs = 2;
};

using DistributionPair = std::pair<JointDistribution, JointDistribution>;

// Every observation carries pr(c|x) = (lambda, 1-lambda, 0, ...) against
// q(c|x) = (0.5-eps, 0.5+eps, 0, ...); marginals are uniform and shared,
// so conditional and joint KL coincide. delta_q = 2 lambda - 1 exactly;
// the joint KL tends to B(delta_q) as epsilon -> 0+.
DistributionPair nussbaum_witness(const WitnessSpec& spec);

// Two active observations: x1 where both distributions are a point mass
// on class 0 (decisions agree), and x2 with mass t/(1-lambda) carrying
// the nussbaum-style conditional pair. E* = t exactly and
// delta_q = (2 lambda - 1) t / (1 - lambda); the joint KL tends to the
// first segment of the refined bound as epsilon -> 0+.
DistributionPair refined_witness(const WitnessSpec& spec);

// Dispatches on spec.family.
DistributionPair make_witness(const WitnessSpec& spec);

// Measured divergence of a pair against a named bound at its delta_q.
struct GapReport {
  double delta_q;
  double kl_joint;
  double bound_value;
  double gap;          // kl_joint - bound_value, >= 0 up to 1e-12
  double bayes_error;
};

GapReport witness_gap(const JointDistribution& pr, const JointDistribution& q,
                      const BoundKind& kind);

}  // namespace errbound

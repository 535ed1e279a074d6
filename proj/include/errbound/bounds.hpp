#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errbound/measures.hpp"

namespace errbound {

// B(u) = ((1+u)log(1+u) + (1-u)log(1-u)) / 2 in nats; B(1) = log 2 by
// continuity of (1-u)log(1-u). Convex, nondecreasing on [0,1], B(0) = 0.
double b_function(double u);

// (f(1+delta) + f(1-delta)) / 2; equals b_function for the KL generator.
double local_f_bound(double delta, const ConvexGenerator& gen);

// D_KL(pr || q) >= B(delta_q) for unconstrained true distributions.
double nussbaum_bound(double delta);

// Piecewise bound under the constraint E* <= t < 0.5:
// (delta + 2t) B(delta / (delta + 2t)) on [0, 1-2t), B(delta) on [1-2t, 1].
// The junction delta = 1-2t belongs to the second segment; both segments
// agree there.
double refined_bound(double delta, double t);

// delta^2 / 2: Pinsker's inequality D_KL >= 2V^2 combined with
// delta_q <= 2V. Comparison curve only, weaker than b_function everywhere.
double pinsker_comparison(double delta);

enum class BoundTag { local_f, nussbaum, refined, pinsker_comparison };

// A named bound; refined requires constraint_t in (0, 0.5).
struct BoundKind {
  BoundTag tag;
  std::optional<double> constraint_t;

  static BoundKind local_f() { return {BoundTag::local_f, std::nullopt}; }
  static BoundKind nussbaum() { return {BoundTag::nussbaum, std::nullopt}; }
  static BoundKind refined(double t) { return {BoundTag::refined, t}; }
  static BoundKind pinsker() { return {BoundTag::pinsker_comparison, std::nullopt}; }
};

BoundKind bound_kind_from_name(const std::string& name, std::optional<double> t);
std::string bound_kind_name(const BoundKind& kind);

// Bound value at delta; throws MissingConstraint for refined without t.
// local_f evaluates with the KL generator.
double evaluate_bound(const BoundKind& kind, double delta);

// Sampled (delta, value) pairs over a uniform grid spanning [0, 1].
struct BoundCurve {
  BoundKind kind;
  std::vector<std::pair<double, double>> samples;
};

BoundCurve bound_curve(const BoundKind& kind, int grid_size);

}  // namespace errbound

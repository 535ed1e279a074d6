#pragma once

#include <vector>

#include "errbound/errors.hpp"

namespace errbound {

// Construction-time tolerances.
inline constexpr double kNormTolerance = 1e-12;      // invariant check
inline constexpr double kIngestTolerance = 1e-9;     // build_joint renormalization window
inline constexpr double kTieTolerance = 1e-12;       // argmax tie detection

// Joint probability matrix over (class, observation), row-major with
// classes as rows. Entries are nonnegative and sum to 1 within 1e-12.
class JointDistribution {
 public:
  int num_classes() const { return num_classes_; }
  int num_obs() const { return num_obs_; }

  double at(int c, int x) const { return probs_[static_cast<std::size_t>(c) * num_obs_ + x]; }
  const std::vector<double>& data() const { return probs_; }

  std::vector<std::vector<double>> rows() const;

  bool same_shape(const JointDistribution& other) const {
    return num_classes_ == other.num_classes_ && num_obs_ == other.num_obs_;
  }

  friend JointDistribution build_joint(const std::vector<std::vector<double>>& matrix);
  friend JointDistribution build_joint_flat(std::vector<double> probs, int num_classes, int num_obs);

 private:
  JointDistribution(std::vector<double> probs, int num_classes, int num_obs)
      : probs_(std::move(probs)), num_classes_(num_classes), num_obs_(num_obs) {}

  std::vector<double> probs_;
  int num_classes_;
  int num_obs_;
};

// Validates and normalizes a nonnegative matrix into a JointDistribution.
// Entries are renormalized only if the total deviates from 1 by at most
// 1e-9; a larger deviation throws NotNormalized.
JointDistribution build_joint(const std::vector<std::vector<double>>& matrix);

// Same contract, flat row-major storage.
JointDistribution build_joint_flat(std::vector<double> probs, int num_classes, int num_obs);

// Marginal pr(x) plus per-observation conditionals pr(c|x). Observations
// with zero marginal are flagged undefined and excluded from expectations.
class ConditionalDecomposition {
 public:
  int num_classes() const { return num_classes_; }
  int num_obs() const { return num_obs_; }

  const std::vector<double>& marginal() const { return marginal_; }
  bool defined(int x) const { return marginal_[x] > 0.0; }

  // pr(c|x); throws UndefinedColumn when marginal(x) == 0.
  double conditional(int c, int x) const;

  // Conditional column at x as a vector; throws UndefinedColumn.
  std::vector<double> column(int x) const;

  friend ConditionalDecomposition decompose(const JointDistribution& joint);

 private:
  ConditionalDecomposition() = default;

  std::vector<double> marginal_;
  std::vector<double> cond_;  // row-major (class, obs); zeros in undefined columns
  int num_classes_ = 0;
  int num_obs_ = 0;
};

ConditionalDecomposition decompose(const JointDistribution& joint);

// Argmax decisions per observation with deterministic lowest-index
// tie-breaking; ties within 1e-12 are flagged.
class DecisionMap {
 public:
  int num_obs() const { return static_cast<int>(decisions_.size()); }
  bool defined(int x) const { return decisions_[x] >= 0; }

  // Chosen class at x; throws UndefinedColumn for undefined observations.
  int decision(int x) const;
  bool tie(int x) const { return tie_flags_[x]; }

  bool operator==(const DecisionMap&) const = default;

  friend DecisionMap decisions(const ConditionalDecomposition& cond);
  friend DecisionMap decide_joint_columns(const JointDistribution& joint);

 private:
  std::vector<int> decisions_;  // -1 marks undefined
  std::vector<bool> tie_flags_;
};

DecisionMap decisions(const ConditionalDecomposition& cond);

// Decision rule applied directly to the columns of a joint matrix:
// argmax_c joint(c, x), equal to the conditional argmax wherever the
// marginal is positive. An all-zero column is treated as a full tie
// (class 0, flagged) instead of undefined, which lets the model decision
// rule stay total even where the model assigns no mass.
DecisionMap decide_joint_columns(const JointDistribution& joint);

// Smallest index within 1e-12 of the column maximum; tie flag when at
// least two entries attain the maximum within that tolerance.
struct ArgmaxResult {
  int index;
  bool tie;
};
ArgmaxResult argmax_with_ties(const double* values, int n, double tol = kTieTolerance);

}  // namespace errbound

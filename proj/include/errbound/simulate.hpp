#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errbound/measures.hpp"
#include "errbound/witness.hpp"

namespace errbound {

// Monte Carlo configuration. Identical configs produce identical outputs
// regardless of thread count: sample index i draws only from the
// counter-based substream (master_seed, i).
struct SimConfig {
  int num_classes = 2;
  int num_obs = 2;
  double t = 0.08;            // Bayes-error ceiling, in (0, 0.5)
  long num_samples = 0;       // indices to draw; accepted count is lower
  std::uint64_t master_seed = 0;
  double witness_mix = 0.0;   // fraction drawn as perturbed refined witnesses
  double concentration = 0.1; // symmetric Dirichlet sharpness for random draws
};

// Throws InvalidSpec when a field is outside its range.
void validate(const SimConfig& config);

enum class SampleSource { random, witness_perturbed };

const char* to_string(SampleSource source);

struct PairSample {
  JointDistribution pr;
  JointDistribution q;
  SampleSource source;
};

// Draws the pair at one index, or nullopt when rejected (E* > t).
// Model entries are floored at 1e-9 and renormalized before measurement
// so KL values stay finite; all reported measures refer to the floored
// pair. Bitwise deterministic in (config, index).
std::optional<PairSample> sample_pair(const SimConfig& config, long index);

// One accepted sample with its full measurement record.
struct SimulationPoint {
  long index;
  SampleSource source;
  double bayes_error;
  double model_error;
  double delta_q;
  double total_variation;
  double kl_conditional;
  double kl_joint;
  double bound_nussbaum;
  double bound_refined;
};

SimulationPoint measure_point(const PairSample& sample, long index, double t);

// Runs all indices, keeps accepted pairs in index order. Throws
// EmptyResult when nothing is accepted. num_threads > 1 parallelizes
// sample generation without changing the output.
std::vector<SimulationPoint> run_simulation(const SimConfig& config, int num_threads = 1);

// Runtime check record for Lemma 2 / Lemma 3. The whole agreement set
// (observations where the two decision rules pick the same class) is
// pooled into the x0 role; the lemmas' algebra is preserved because every
// pooled observation has a zero local mismatch.
struct LemmaReport {
  bool applicable;            // 0 < delta_q < 1 - 2t
  double agreement_mass;      // pr-mass of the agreement set
  double renorm_mismatch;     // mismatch over the renormalized disagreement set
  double renorm_bayes_error;  // Bayes error over the renormalized disagreement set
  double lemma3_lower;        // delta_q / (2t + delta_q)
  double lemma3_middle;       // bound that keeps the pooled E{e*|x0} term
};

// Requires E* <= t (throws OutOfRange otherwise). Not-applicable cases
// (delta_q = 0 or delta_q >= 1 - 2t) are reported, not thrown.
LemmaReport lemma_checks(const JointDistribution& pr, const JointDistribution& q, double t);

}  // namespace errbound

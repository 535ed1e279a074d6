#pragma once

#include <cstdint>
#include <vector>

namespace errbound {

// splitmix64 finalizer; bijective on uint64.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based random stream: output j of stream (seed, index) is
// mix64(key + j*gamma), so the pair (master_seed, index) fully determines
// every draw independent of any other stream. Used for per-sample
// substreams in the simulator and anywhere reproducibility is contractual.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : key_(mix64(master_seed ^ mix64(stream_index + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next_u64() { return mix64(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL); }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; never returns 0 (safe under log).
  double next_unit_open() { return 1.0 - next_unit(); }

  double next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // Standard normal via Box-Muller (one value per call).
  double next_normal();

  // Gamma(alpha, 1) via Marsaglia-Tsang squeeze; alpha > 0.
  double next_gamma(double alpha);

  // Symmetric Dirichlet(alpha) point on the n-simplex.
  std::vector<double> next_simplex(int n, double alpha);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace errbound

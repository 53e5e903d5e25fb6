#pragma once

#include <cmath>
#include <cstdint>

namespace relloc {

// splitmix64 step; also used to derive per-run seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Deterministic random stream. Gaussian draws use plain Box-Muller so the
/// sequence is bit-reproducible everywhere (std::normal_distribution is
/// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  // uniform in (0, 1]
  double uniform01() {
    return static_cast<double>((next_u64() >> 11) + 1) * (1.0 / 9007199254740992.0);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * (uniform01() - 1.0 / 9007199254740992.0); }

  double gauss(double mean, double sigma) {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    return mean + sigma * z;
  }

 private:
  std::uint64_t state_;
};

/// Per-run seed from (master seed, scenario index, sweep index). The data
/// rate divisor is deliberately excluded so every divisor replays the same
/// measurement realization, which is what the paired statistics assume.
inline std::uint64_t derive_run_seed(std::uint64_t master, int scenario_index, int sweep_index) {
  std::uint64_t s = master;
  splitmix64(s);
  s ^= 0x8000000000000000ull | (static_cast<std::uint64_t>(scenario_index) << 32) |
       static_cast<std::uint64_t>(static_cast<std::uint32_t>(sweep_index));
  std::uint64_t t = s;
  return splitmix64(t);
}

}  // namespace relloc

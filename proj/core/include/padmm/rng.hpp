#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <initializer_list>

namespace padmm {

// Deterministic random stream (xoshiro256++ seeded through splitmix64).
//
// Streams are addressed by a chain of 64-bit labels, e.g.
// Rng(Rng::derive(seed, {kNoiseStream, node, t})), so every (run, node,
// iteration) draw is reproducible and independent of evaluation order and of
// worker scheduling. All transforms (Box-Muller normals, inverse-CDF
// exponentials) are spelled out here instead of using <random> distributions,
// whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Hash-chains labels onto a base seed to address a substream.
  static std::uint64_t derive(std::uint64_t seed,
                              std::initializer_list<std::uint64_t> labels);

  // Uniform on (0, 1].
  double uniform01();

  // Standard normal (Box-Muller, spare value cached).
  double normal();

  // Unit-rate exponential.
  double exponential();

  // Gamma with integer shape and the given scale (sum of exponentials).
  double gamma_integer(int shape, double scale);

  Eigen::VectorXd normal_vector(int dim);

  // Uniform direction on the unit sphere in R^dim.
  Eigen::VectorXd unit_vector(int dim);

 private:
  std::uint64_t next();

  std::uint64_t state_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stream labels used across the engine; fixed constants so traces are stable.
inline constexpr std::uint64_t kInitStream = 0x696e6974ULL;    // primal init
inline constexpr std::uint64_t kNoiseStream = 0x6e6f6973ULL;   // penalty noise
inline constexpr std::uint64_t kDataStream = 0x64617461ULL;    // synthetic data
inline constexpr std::uint64_t kShuffleStream = 0x73687566ULL; // partition
inline constexpr std::uint64_t kRunStream = 0x72756e73ULL;     // per-run seeds
inline constexpr std::uint64_t kTopologyStream = 0x746f706fULL;

}  // namespace padmm

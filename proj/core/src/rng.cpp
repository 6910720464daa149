#include "padmm/rng.hpp"

#include <cmath>
#include <numbers>

#include "padmm/errors.hpp"

namespace padmm {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Rng::derive(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> labels) {
  std::uint64_t h = seed;
  for (std::uint64_t label : labels) {
    std::uint64_t s = h ^ (label * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    h = splitmix64(s);
  }
  return h;
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform01() {
  return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

double Rng::exponential() { return -std::log(uniform01()); }

double Rng::gamma_integer(int shape, double scale) {
  if (shape < 1) throw InvalidArgument("gamma_integer: shape must be >= 1");
  double sum = 0.0;
  for (int k = 0; k < shape; ++k) sum += exponential();
  return sum * scale;
}

Eigen::VectorXd Rng::normal_vector(int dim) {
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = normal();
  return v;
}

Eigen::VectorXd Rng::unit_vector(int dim) {
  while (true) {
    Eigen::VectorXd v = normal_vector(dim);
    const double n = v.norm();
    if (n > 1e-12) return v / n;
  }
}

}  // namespace padmm

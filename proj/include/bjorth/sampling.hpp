#pragma once

#include <cstdint>
#include <random>

#include "bjorth/space.hpp"
#include "bjorth/vector.hpp"

namespace bjorth {

/// Seed of the index-th substream of a run. Sample i of any sweep draws only
/// from substream i, so results do not depend on how the sweep is partitioned
/// across workers.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index)
      : engine_(substream_seed(seed, index)) {}

  double gaussian() { return normal_(engine_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  std::uint64_t next_u64() { return engine_(); }

  /// i.i.d. standard normal coordinates.
  Vector gaussian_vector(std::size_t dim);

  /// Gaussian vector redrawn until its space norm is at least `min_norm`.
  Vector nonzero_vector(const NormedSpace& space, double min_norm = 1e-3);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Projection of z onto the kernel of f (Euclidean projection in coordinates).
Vector project_to_kernel(const Functional& f, const Vector& z);

}  // namespace bjorth

#include "bjorth/sampling.hpp"

namespace bjorth {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over a combination of seed and index.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Vector SampleRng::gaussian_vector(std::size_t dim) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = gaussian();
  return v;
}

Vector SampleRng::nonzero_vector(const NormedSpace& space, double min_norm) {
  for (;;) {
    Vector v = gaussian_vector(space.dim());
    if (space.norm(v) >= min_norm) return v;
  }
}

Vector project_to_kernel(const Functional& f, const Vector& z) {
  double ff = 0.0;
  for (double c : f.coords()) ff += c * c;
  const double t = functional_apply(f, z) / ff;
  Vector out = z;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= t * f[i];
  return out;
}

}  // namespace bjorth

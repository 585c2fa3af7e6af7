#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "bjorth/orthogonality.hpp"
#include "bjorth/space.hpp"
#include "bjorth/tolerances.hpp"
#include "bjorth/vector.hpp"

namespace bjtest {

using bjorth::NormedSpace;
using bjorth::Vector;

// Random spaces and vectors for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double gaussian() { return normal_(rng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  double exponent() { return uniform(1.2, 5.0); }

  NormedSpace leaf() {
    switch (index(4)) {
      case 0: return NormedSpace::lp(1 + index(4), exponent());
      case 1: return NormedSpace::linf(1 + index(4));
      case 2: {
        const double p = exponent();
        return NormedSpace::day_james(p, p / (p - 1.0));
      }
      default: return NormedSpace::day_james(exponent(), exponent());
    }
  }

  NormedSpace space() {
    if (index(3) != 0) return leaf();
    std::vector<NormedSpace> parts;
    const std::size_t k = 2 + index(2);
    for (std::size_t i = 0; i < k; ++i) parts.push_back(leaf());
    return NormedSpace::inf_sum(std::move(parts));
  }

  Vector vector(std::size_t dim) {
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = gaussian();
    return v;
  }

  Vector nonzero(const NormedSpace& space) {
    for (;;) {
      Vector v = vector(space.dim());
      if (space.norm(v) >= 1e-3) return v;
    }
  }

  // Nonzero scalar with |c| in [1e-2, 1e2], log-uniform.
  double scale() { return std::exp(uniform(std::log(1e-2), std::log(1e2))); }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// The fixed set of spaces the acceptance-style sweeps rotate through.
inline std::vector<NormedSpace> reference_spaces() {
  return {
      NormedSpace::lp(2, 2.0),
      NormedSpace::lp(2, 3.0),
      NormedSpace::linf(2),
      NormedSpace::day_james(3.0, 1.5),
      NormedSpace::inf_sum({NormedSpace::lp(2, 2.0), NormedSpace::linf(1)}),
      NormedSpace::inf_sum({NormedSpace::day_james(3.0, 1.5), NormedSpace::linf(2)}),
      NormedSpace::inf_sum({NormedSpace::lp(3, 1.5), NormedSpace::day_james(4.0, 4.0 / 3.0)}),
  };
}

// Dense scan of t -> ||x + t y|| followed by a local rescan around the best
// grid point. Independent of the golden-section oracle.
inline double scan_line_minimum(const NormedSpace& space, const Vector& x, const Vector& y,
                                double lo, double hi, std::size_t points = 2001) {
  double best_t = lo;
  double best = space.norm(x + lo * y);
  for (int pass = 0; pass < 4; ++pass) {
    const double step = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
      const double t = lo + step * static_cast<double>(i);
      const double v = space.norm(x + t * y);
      if (v < best) {
        best = v;
        best_t = t;
      }
    }
    lo = std::max(lo, best_t - 2.0 * step);
    hi = std::min(hi, best_t + 2.0 * step);
  }
  return best;
}

// Central difference of the norm along each coordinate.
inline std::vector<double> numeric_gradient(const NormedSpace& space, const Vector& x,
                                            double h = 1e-6) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Vector a = x, b = x;
    a[i] += h;
    b[i] -= h;
    g[i] = (space.norm(a) - space.norm(b)) / (2.0 * h);
  }
  return g;
}

// A y with x _|_ y built from one extreme of nu(x): project a random vector
// onto the kernel of that extreme.
inline Vector orthogonal_direction(const NormedSpace& space, const Vector& x, Gen& gen) {
  const auto nu = space.support_set(x);
  const auto& f = nu.extremes[gen.index(nu.extremes.size())];
  Vector z = gen.vector(space.dim());
  double ff = 0.0, fz = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    ff += f[i] * f[i];
    fz += f[i] * z[i];
  }
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= fz / ff * f[i];
  return z;
}


struct CrossCheck {
  std::size_t compared = 0;
  std::size_t excluded = 0;
  std::size_t orthogonal_pairs = 0;
  std::size_t orthogonality_disagreements = 0;
  std::size_t acute_disagreements = 0;
};

// Support-functional decisions against the line-minimization oracles. Every
// other pair is built orthogonal. Pairs whose statistic lies between the
// margin and the oracle resolution band are excluded.
inline CrossCheck cross_validate(const std::vector<NormedSpace>& spaces, std::size_t target,
                                 std::uint64_t seed, double margin = bjorth::kDefaultMargin) {
  using namespace bjorth;
  Gen gen(seed);
  CrossCheck out;
  for (std::size_t i = 0; out.compared < target; ++i) {
    const NormedSpace& s = spaces[i % spaces.size()];
    const Vector x = gen.nonzero(s);
    const Vector y = (i / spaces.size()) % 2 == 0 ? gen.nonzero(s) : orthogonal_direction(s, x, gen);
    if (s.norm(y) < 1e-3) continue;
    const double ny = s.norm(y);
    const DirectionalBounds b = directional_bounds(s, x, y);
    const double gap = orthogonality_gap(b, ny);
    const double acute_stat = b.max / ny;
    if ((gap > margin && gap <= kOracleResolutionBand) ||
        (acute_stat < -margin && acute_stat >= -kOracleResolutionBand)) {
      ++out.excluded;
      continue;
    }
    ++out.compared;
    const AngleRelation rel = classify_angle(s, x, y, margin);
    const bool orth = rel.tag == AngleTag::kOrthogonal;
    if (orth) ++out.orthogonal_pairs;
    if (orth != is_bj_orthogonal_oracle(s, x, y, kOracleMargin)) ++out.orthogonality_disagreements;
    if (rel.acute() != one_sided_acute_oracle(s, x, y, kOracleMargin)) ++out.acute_disagreements;
  }
  return out;
}

}  // namespace bjtest

#pragma once

#include <string_view>

#include "bjorth/space.hpp"
#include "bjorth/tolerances.hpp"
#include "bjorth/vector.hpp"

namespace bjorth {

/// (min, max) of f(y) over the extremes f of nu(x). These are the one-sided
/// derivatives of t -> ||x + t y|| at 0 from the left and from the right.
struct DirectionalBounds {
  double min;
  double max;
};

enum class AngleTag { kStrictlyAcute, kOrthogonal, kStrictlyObtuse, kDegenerateLeft };

std::string_view to_string(AngleTag tag);

/// Result of classify_angle. Orthogonal means y is in R_x (x _|_ y);
/// StrictlyAcute means y is in R_x^{++}.
struct AngleRelation {
  AngleTag tag;
  DirectionalBounds bounds;  // raw f(y) values; zero when x = 0

  /// x is at an acute angle to y: ||x + t y|| >= ||x|| for all t >= 0.
  bool acute() const noexcept {
    return tag == AngleTag::kOrthogonal || tag == AngleTag::kStrictlyAcute ||
           tag == AngleTag::kDegenerateLeft;
  }
  /// x is at an obtuse angle to y: ||x + t y|| >= ||x|| for all t <= 0.
  bool obtuse() const noexcept {
    return tag == AngleTag::kOrthogonal || tag == AngleTag::kStrictlyObtuse ||
           tag == AngleTag::kDegenerateLeft;
  }
};

/// Throws kZeroVector if x = 0, kDimensionMismatch on size mismatch.
DirectionalBounds directional_bounds(const NormedSpace& space, const Vector& x,
                                     const Vector& y);

/// Classifies by James' condition with a tolerance band. The band is
/// margin * ||y||, since every f in nu(x) has dual norm one.
AngleRelation classify_angle(const NormedSpace& space, const Vector& x, const Vector& y,
                             double margin = kDefaultMargin);

/// x _|_BJ y. True for x = 0 (and for y = 0, which classifies as Orthogonal).
bool is_bj_orthogonal(const NormedSpace& space, const Vector& x, const Vector& y,
                      double margin = kDefaultMargin);

/// x _|_BJ y and y _|_BJ x.
bool is_mutually_orthogonal(const NormedSpace& space, const Vector& x, const Vector& y,
                            double margin = kDefaultMargin);

struct LineMinimum {
  double lambda;
  double value;
};

/// Golden-section minimization of t -> ||x + t y|| over [-L, L] with
/// L = 2 ||x|| / ||y||, which contains every minimizer. Throws kZeroDirection
/// for y = 0.
LineMinimum oracle_min_over_line(const NormedSpace& space, const Vector& x, const Vector& y);

/// Independent check of x _|_BJ y straight from the definition: true iff
/// x = 0, y = 0, or min_t ||x + t y|| >= ||x|| (1 - margin).
bool is_bj_orthogonal_oracle(const NormedSpace& space, const Vector& x, const Vector& y,
                             double margin = kDefaultMargin);

/// Same minimization restricted to t in [0, L]; true iff the minimum is at
/// least ||x|| (1 - margin), i.e. x is at an acute angle to y. Throws
/// kZeroVector for x = 0. y = 0 is acute.
bool one_sided_acute_oracle(const NormedSpace& space, const Vector& x, const Vector& y,
                            double margin = kDefaultMargin);

/// Relative deficit max(0, 1 - min / ||x||) of the two-sided (or one-sided
/// when `one_sided`) line minimum. Zero for degenerate inputs.
double oracle_deficit(const NormedSpace& space, const Vector& x, const Vector& y,
                      bool one_sided);

/// How far the support-functional decision for x _|_ y is from flipping:
/// distance of 0 from [min, max] divided by ||y||. Orthogonal iff <= margin.
double orthogonality_gap(const DirectionalBounds& b, double y_norm);

}  // namespace bjorth

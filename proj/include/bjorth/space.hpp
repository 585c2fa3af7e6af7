#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "bjorth/vector.hpp"

namespace bjorth {

class NormedSpace;

struct LpSpace {
  std::size_t dim;
  double p;
  friend bool operator==(const LpSpace&, const LpSpace&) = default;
};

struct LInfSpace {
  std::size_t dim;
  friend bool operator==(const LInfSpace&, const LInfSpace&) = default;
};

/// R^2 with the l_p norm on quadrants where ab >= 0 and l_q where ab <= 0.
struct DayJamesSpace {
  double p;
  double q;
  friend bool operator==(const DayJamesSpace&, const DayJamesSpace&) = default;
};

/// Finite l-infinity direct sum: ||(x_1, ..., x_k)|| = max_i ||x_i||.
struct InfSumSpace {
  std::vector<NormedSpace> parts;
  friend bool operator==(const InfSumSpace&, const InfSumSpace&) = default;
};

enum class SpaceKind { kLp, kLInf, kDayJames, kInfSum };

/// The extreme points of nu(x) = { f in B_{X*} : f(x) = ||x|| }. For the norm
/// family supported here nu(x) is a polytope (a single point at smooth x), so
/// the finite extreme list determines it; the convex hull is never formed.
struct SupportSet {
  std::vector<Functional> extremes;

  bool is_singleton() const noexcept { return extremes.size() == 1; }
};

/// A validated norm on R^n. Immutable value type; construct through the
/// named factories (or validate_space in descriptor.hpp), which reject
/// exponents p <= 1, empty sums and zero dimensions.
class NormedSpace {
 public:
  static NormedSpace lp(std::size_t dim, double p);
  static NormedSpace linf(std::size_t dim);
  static NormedSpace day_james(double p, double q);
  static NormedSpace inf_sum(std::vector<NormedSpace> parts);
  static NormedSpace euclidean_plane() { return lp(2, 2.0); }

  SpaceKind kind() const noexcept;
  std::size_t dim() const noexcept { return dim_; }

  /// Day-James space with 1/p + 1/q = 1 (within 1e-12).
  bool radon_candidate() const noexcept;

  /// True when nu(x) is a singleton at every x != 0 (Lp and Day-James).
  bool smooth_family() const noexcept;

  const LpSpace* as_lp() const noexcept { return std::get_if<LpSpace>(&rep_); }
  const LInfSpace* as_linf() const noexcept { return std::get_if<LInfSpace>(&rep_); }
  const DayJamesSpace* as_day_james() const noexcept {
    return std::get_if<DayJamesSpace>(&rep_);
  }
  const InfSumSpace* as_inf_sum() const noexcept {
    return std::get_if<InfSumSpace>(&rep_);
  }

  double norm(const Vector& v) const;
  SupportSet support_set(const Vector& x) const;

  friend bool operator==(const NormedSpace&, const NormedSpace&) = default;

 private:
  using Rep = std::variant<LpSpace, LInfSpace, DayJamesSpace, InfSumSpace>;
  explicit NormedSpace(Rep rep);

  Rep rep_;
  std::size_t dim_ = 0;
};

/// ||v||. Throws kDimensionMismatch.
double norm(const NormedSpace& space, const Vector& v);

/// Extreme points of nu(x). Throws kZeroVector when ||x|| <= kTauZero and
/// kDimensionMismatch on size mismatch.
SupportSet support_set(const NormedSpace& space, const Vector& x);

/// True when ||v|| <= kTauZero.
bool is_zero(const NormedSpace& space, const Vector& v);

/// x(theta) = (cos theta, sin theta). Integer multiples of the double kHalfPi
/// map to exact axis vectors, since the rounded sine of kPi would otherwise
/// leave a 1e-16 component that Holder-continuous gradients amplify.
Vector direction_at_angle(double theta);

/// y(theta) = x(theta) / ||x(theta)||.
/// Throws kNotAPlane unless the space is two-dimensional.
Vector unit_vector_at_angle(const NormedSpace& plane, double theta);

/// Restriction of a sum-space vector to each part, in order.
std::vector<Vector> split_parts(const InfSumSpace& sum, const Vector& v);

}  // namespace bjorth

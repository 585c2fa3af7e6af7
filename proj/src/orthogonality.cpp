#include "bjorth/orthogonality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bjorth/errors.hpp"
#include "bjorth/numerics.hpp"

namespace bjorth {

namespace {

constexpr double kLambdaTol = 1e-10;

void check_pair(const NormedSpace& space, const Vector& x, const Vector& y) {
  if (x.size() != space.dim() || y.size() != space.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vectors must have dimension " + std::to_string(space.dim()));
  }
}

LineMinimum minimize_on(const NormedSpace& space, const Vector& x, const Vector& y,
                        double lo, double hi) {
  const double width = hi - lo;
  const double tol = kLambdaTol * std::min(1.0, width);
  auto phi = [&](double t) { return space.norm(x + t * y); };
  const auto r = numerics::golden_section_minimize(phi, lo, hi, tol);
  return {r.argmin, r.value};
}

double line_bracket(const NormedSpace& space, const Vector& x, const Vector& y) {
  return 2.0 * space.norm(x) / space.norm(y);
}

}  // namespace

std::string_view to_string(AngleTag tag) {
  switch (tag) {
    case AngleTag::kStrictlyAcute: return "strictly acute";
    case AngleTag::kOrthogonal: return "orthogonal";
    case AngleTag::kStrictlyObtuse: return "strictly obtuse";
    case AngleTag::kDegenerateLeft: return "degenerate";
  }
  return "unknown";
}

DirectionalBounds directional_bounds(const NormedSpace& space, const Vector& x,
                                     const Vector& y) {
  check_pair(space, x, y);
  const SupportSet nu = space.support_set(x);
  DirectionalBounds b{std::numeric_limits<double>::infinity(),
                      -std::numeric_limits<double>::infinity()};
  for (const auto& f : nu.extremes) {
    const double v = functional_apply(f, y);
    b.min = std::min(b.min, v);
    b.max = std::max(b.max, v);
  }
  return b;
}

AngleRelation classify_angle(const NormedSpace& space, const Vector& x, const Vector& y,
                             double margin) {
  check_pair(space, x, y);
  if (is_zero(space, x)) return {AngleTag::kDegenerateLeft, {0.0, 0.0}};
  const DirectionalBounds b = directional_bounds(space, x, y);
  const double band = margin * space.norm(y);
  if (b.min > band) return {AngleTag::kStrictlyAcute, b};
  if (b.max < -band) return {AngleTag::kStrictlyObtuse, b};
  return {AngleTag::kOrthogonal, b};
}

bool is_bj_orthogonal(const NormedSpace& space, const Vector& x, const Vector& y,
                      double margin) {
  const AngleTag tag = classify_angle(space, x, y, margin).tag;
  return tag == AngleTag::kOrthogonal || tag == AngleTag::kDegenerateLeft;
}

bool is_mutually_orthogonal(const NormedSpace& space, const Vector& x, const Vector& y,
                            double margin) {
  return is_bj_orthogonal(space, x, y, margin) && is_bj_orthogonal(space, y, x, margin);
}

LineMinimum oracle_min_over_line(const NormedSpace& space, const Vector& x,
                                 const Vector& y) {
  check_pair(space, x, y);
  if (is_zero(space, y)) throw Error(ErrorCode::kZeroDirection, "line direction is zero");
  const double bracket = line_bracket(space, x, y);
  return minimize_on(space, x, y, -bracket, bracket);
}

double oracle_deficit(const NormedSpace& space, const Vector& x, const Vector& y,
                      bool one_sided) {
  check_pair(space, x, y);
  if (is_zero(space, x) || is_zero(space, y)) return 0.0;
  const double nx = space.norm(x);
  const double bracket = line_bracket(space, x, y);
  const LineMinimum m = one_sided ? minimize_on(space, x, y, 0.0, bracket)
                                  : minimize_on(space, x, y, -bracket, bracket);
  return std::max(0.0, 1.0 - m.value / nx);
}

bool is_bj_orthogonal_oracle(const NormedSpace& space, const Vector& x, const Vector& y,
                             double margin) {
  check_pair(space, x, y);
  if (is_zero(space, x) || is_zero(space, y)) return true;
  const LineMinimum m = oracle_min_over_line(space, x, y);
  return m.value >= space.norm(x) * (1.0 - margin);
}

bool one_sided_acute_oracle(const NormedSpace& space, const Vector& x, const Vector& y,
                            double margin) {
  check_pair(space, x, y);
  if (is_zero(space, x)) throw Error(ErrorCode::kZeroVector, "acute test needs x != 0");
  if (is_zero(space, y)) return true;
  const double bracket = line_bracket(space, x, y);
  const LineMinimum m = minimize_on(space, x, y, 0.0, bracket);
  return m.value >= space.norm(x) * (1.0 - margin);
}

double orthogonality_gap(const DirectionalBounds& b, double y_norm) {
  if (y_norm == 0.0) return 0.0;
  const double dist = b.min > 0.0 ? b.min : (b.max < 0.0 ? -b.max : 0.0);
  return dist / y_norm;
}

}  // namespace bjorth

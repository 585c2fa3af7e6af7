#include "bjorth/space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bjorth/errors.hpp"
#include "bjorth/tolerances.hpp"

namespace bjorth {

namespace {

void check_exponent(double p, const char* name) {
  if (!std::isfinite(p) || !(p > 1.0)) {
    throw Error(ErrorCode::kInvalidExponent,
                std::string(name) + " must be finite and > 1, got " +
                    std::to_string(p));
  }
}

void check_dim(const NormedSpace& space, const Vector& v) {
  if (v.size() != space.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector of size " + std::to_string(v.size()) +
                    " in space of dimension " + std::to_string(space.dim()));
  }
}

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// Scaled evaluation avoids overflow/underflow of |x_i|^p.
double lp_norm(std::span<const double> x, double p) {
  double scale = 0.0;
  for (double c : x) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double c : x) sum += std::pow(std::abs(c) / scale, p);
  return scale * std::pow(sum, 1.0 / p);
}

std::vector<double> lp_gradient(std::span<const double> x, double p) {
  const double n = lp_norm(x, p);
  std::vector<double> f(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    f[i] = sign(x[i]) * std::pow(std::abs(x[i]) / n, p - 1.0);
  }
  return f;
}

double linf_norm(std::span<const double> x) {
  double m = 0.0;
  for (double c : x) m = std::max(m, std::abs(c));
  return m;
}

// ab >= 0 by exact sign test (no product, so no underflow to 0).
bool in_p_quadrant(double a, double b) {
  return (a >= 0.0 && b >= 0.0) || (a <= 0.0 && b <= 0.0);
}

double day_james_norm(const DayJamesSpace& s, std::span<const double> x) {
  return lp_norm(x, in_p_quadrant(x[0], x[1]) ? s.p : s.q);
}

std::vector<double> day_james_gradient(const DayJamesSpace& s,
                                       std::span<const double> x) {
  const bool on_axis = x[0] == 0.0 || x[1] == 0.0;
  if (on_axis) {
    auto fp = lp_gradient(x, s.p);
    auto fq = lp_gradient(x, s.q);
    for (std::size_t i = 0; i < 2; ++i) {
      if (std::abs(fp[i] - fq[i]) > kTauSup) {
        throw Error(ErrorCode::kNotSmooth,
                    "Day-James quadrant gradients disagree on an axis");
      }
    }
    return fp;
  }
  return lp_gradient(x, in_p_quadrant(x[0], x[1]) ? s.p : s.q);
}

}  // namespace

NormedSpace::NormedSpace(Rep rep) : rep_(std::move(rep)) {
  dim_ = std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DayJamesSpace>) {
          return 2;
        } else if constexpr (std::is_same_v<T, InfSumSpace>) {
          std::size_t d = 0;
          for (const auto& part : s.parts) d += part.dim();
          return d;
        } else {
          return s.dim;
        }
      },
      rep_);
}

NormedSpace NormedSpace::lp(std::size_t dim, double p) {
  if (dim < 1) throw Error(ErrorCode::kBadDimension, "lp dimension must be >= 1");
  check_exponent(p, "p");
  return NormedSpace(LpSpace{dim, p});
}

NormedSpace NormedSpace::linf(std::size_t dim) {
  if (dim < 1) throw Error(ErrorCode::kBadDimension, "linf dimension must be >= 1");
  return NormedSpace(LInfSpace{dim});
}

NormedSpace NormedSpace::day_james(double p, double q) {
  check_exponent(p, "p");
  check_exponent(q, "q");
  return NormedSpace(DayJamesSpace{p, q});
}

NormedSpace NormedSpace::inf_sum(std::vector<NormedSpace> parts) {
  if (parts.size() < 2) {
    throw Error(ErrorCode::kEmptySum, "an l-infinity sum needs at least 2 parts");
  }
  return NormedSpace(InfSumSpace{std::move(parts)});
}

SpaceKind NormedSpace::kind() const noexcept {
  return static_cast<SpaceKind>(rep_.index());
}

bool NormedSpace::radon_candidate() const noexcept {
  const auto* dj = as_day_james();
  return dj != nullptr && std::abs(1.0 / dj->p + 1.0 / dj->q - 1.0) <= 1e-12;
}

bool NormedSpace::smooth_family() const noexcept {
  return kind() == SpaceKind::kLp || kind() == SpaceKind::kDayJames;
}

double NormedSpace::norm(const Vector& v) const {
  check_dim(*this, v);
  if (const auto* s = as_lp()) return lp_norm(v.coords(), s->p);
  if (as_linf()) return linf_norm(v.coords());
  if (const auto* s = as_day_james()) return day_james_norm(*s, v.coords());
  const auto& sum = *as_inf_sum();
  double m = 0.0;
  std::size_t offset = 0;
  for (const auto& part : sum.parts) {
    m = std::max(m, part.norm(v.slice(offset, part.dim())));
    offset += part.dim();
  }
  return m;
}

SupportSet NormedSpace::support_set(const Vector& x) const {
  const double nx = norm(x);
  if (nx <= kTauZero) {
    throw Error(ErrorCode::kZeroVector, "support set of the zero vector");
  }
  SupportSet out;
  if (const auto* s = as_lp()) {
    out.extremes.emplace_back(lp_gradient(x.coords(), s->p));
  } else if (as_linf()) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (std::abs(x[i]) >= (1.0 - kTauTie) * nx) {
        std::vector<double> f(x.size(), 0.0);
        f[i] = sign(x[i]);
        out.extremes.emplace_back(std::move(f));
      }
    }
  } else if (const auto* s = as_day_james()) {
    out.extremes.emplace_back(day_james_gradient(*s, x.coords()));
  } else {
    const auto& sum = *as_inf_sum();
    std::size_t offset = 0;
    for (const auto& part : sum.parts) {
      const Vector xk = x.slice(offset, part.dim());
      if (part.norm(xk) >= (1.0 - kTauTie) * nx) {
        for (const auto& g : part.support_set(xk).extremes) {
          std::vector<double> f(x.size(), 0.0);
          std::copy(g.coords().begin(), g.coords().end(), f.begin() + offset);
          out.extremes.emplace_back(std::move(f));
        }
      }
      offset += part.dim();
    }
  }
  return out;
}

double norm(const NormedSpace& space, const Vector& v) { return space.norm(v); }

SupportSet support_set(const NormedSpace& space, const Vector& x) {
  return space.support_set(x);
}

bool is_zero(const NormedSpace& space, const Vector& v) {
  return space.norm(v) <= kTauZero;
}

Vector unit_vector_at_angle(const NormedSpace& plane, double theta) {
  if (plane.dim() != 2) {
    throw Error(ErrorCode::kNotAPlane,
                "dimension " + std::to_string(plane.dim()) + " is not 2");
  }
  Vector x = direction_at_angle(theta);
  x *= 1.0 / plane.norm(x);
  return x;
}

Vector direction_at_angle(double theta) {
  const double k = std::round(theta / kHalfPi);
  if (std::abs(k) <= 1e6 && k * kHalfPi == theta) {
    static constexpr double kCos[4] = {1.0, 0.0, -1.0, 0.0};
    static constexpr double kSin[4] = {0.0, 1.0, 0.0, -1.0};
    const auto q = static_cast<std::size_t>(((static_cast<long long>(k) % 4) + 4) % 4);
    return Vector{kCos[q], kSin[q]};
  }
  return Vector{std::cos(theta), std::sin(theta)};
}

std::vector<Vector> split_parts(const InfSumSpace& sum, const Vector& v) {
  std::vector<Vector> out;
  out.reserve(sum.parts.size());
  std::size_t offset = 0;
  for (const auto& part : sum.parts) {
    out.push_back(v.slice(offset, part.dim()));
    offset += part.dim();
  }
  if (offset != v.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector does not fit the sum");
  }
  return out;
}

}  // namespace bjorth

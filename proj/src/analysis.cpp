#include "bjorth/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "bjorth/errors.hpp"
#include "bjorth/numerics.hpp"
#include "bjorth/orthogonality.hpp"
#include "bjorth/report_io.hpp"
#include "bjorth/sampling.hpp"

namespace bjorth {

namespace {

void require_plane(const NormedSpace& space) {
  if (space.dim() != 2) throw Error(ErrorCode::kNotAPlane, "expected a two-dimensional space");
}

// Smallest f(u(t)) over the extremes of nu(x), u(t) = (cos t, sin t).
double min_support_value(const SupportSet& nu, double t) {
  const Vector u{std::cos(t), std::sin(t)};
  double lo = functional_apply(nu.extremes.front(), u);
  for (const Functional& f : nu.extremes) lo = std::min(lo, functional_apply(f, u));
  return lo;
}

}  // namespace

double orthogonal_partner_angle(const NormedSpace& plane, double theta) {
  require_plane(plane);
  const SupportSet nu = plane.support_set(unit_vector_at_angle(plane, theta));
  return numerics::bisect_boundary(
      [&](double t) { return min_support_value(nu, t) > 0.0; }, theta, theta + kPi);
}

RadonDefectReport radon_defect(const NormedSpace& plane, std::size_t grid, double margin) {
  require_plane(plane);
  if (grid < 16) throw Error(ErrorCode::kGridTooCoarse, "radon grid needs at least 16 angles");
  RadonDefectReport report;
  report.margin = margin;
  report.rows.reserve(grid);
  std::size_t worst = 0;
  for (std::size_t k = 0; k < grid; ++k) {
    const double theta = kPi * static_cast<double>(k) / static_cast<double>(grid);
    const double star = orthogonal_partner_angle(plane, theta);
    const Vector y = unit_vector_at_angle(plane, theta);
    const Vector y_star = unit_vector_at_angle(plane, star);
    const double forward =
        orthogonality_gap(directional_bounds(plane, y, y_star), plane.norm(y_star));
    const double reverse = oracle_deficit(plane, y_star, y, false);
    report.rows.push_back({theta, star, forward, reverse});
    if (reverse > report.rows[worst].reverse_deficit) worst = k;
  }
  report.defect = report.rows[worst].reverse_deficit;
  if (report.defect > margin) {
    report.witness = std::make_pair(report.rows[worst].theta, report.rows[worst].theta_star);
  }
  return report;
}

std::string to_csv(const RadonDefectReport& report) {
  std::vector<std::vector<double>> rows;
  rows.reserve(report.rows.size());
  for (const auto& r : report.rows) {
    rows.push_back({r.theta, r.theta_star, r.forward_residual, r.reverse_deficit});
  }
  return to_csv({"theta", "theta_star", "forward_residual", "reverse_deficit"}, rows);
}

std::string to_json(const RadonDefectReport& report) {
  JsonObject o;
  o.add("defect", report.defect)
      .add("radon", report.radon())
      .add("margin", report.margin)
      .add("grid", static_cast<std::uint64_t>(report.rows.size()));
  if (report.witness) {
    o.add_raw("witness", "[" + format_real(report.witness->first) + ", " +
                             format_real(report.witness->second) + "]");
  } else {
    o.add_raw("witness", "null");
  }
  return o.str();
}

// ---------------------------------------------------------------------------

SmoothnessReport smoothness_probe(const NormedSpace& space, std::size_t samples,
                                  std::uint64_t seed, const std::vector<Vector>& forced) {
  constexpr std::array<double, 3> kSteps = {1e-6, 1e-8, 1e-10};
  constexpr std::size_t kDirectionsPerPoint = 4;
  const std::size_t n = space.dim();

  // Axes and the all-ones diagonal are where kinks of the supported families live.
  std::vector<Vector> points = forced;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = 1.0;
    points.push_back(e);
  }
  points.emplace_back(std::vector<double>(n, 1.0));
  // In a sum, the norm also kinks where parts tie.
  if (const InfSumSpace* sum = space.as_inf_sum()) {
    std::vector<Vector> parts;
    for (const NormedSpace& part : sum->parts) {
      Vector ones(std::vector<double>(part.dim(), 1.0));
      parts.push_back(ones * (1.0 / part.norm(ones)));
    }
    points.push_back(concat(parts));
  }
  const std::size_t deterministic = points.size();
  for (std::size_t s = 0; s < samples; ++s) {
    SampleRng rng(seed, s);
    points.push_back(rng.nonzero_vector(space));
  }

  SmoothnessReport report;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (is_zero(space, points[k])) continue;
    const Vector x = points[k] * (1.0 / space.norm(points[k]));
    ++report.samples;
    if (!space.support_set(x).is_singleton()) ++report.non_singleton;

    std::vector<Vector> dirs;
    if (k < deterministic) {
      for (std::size_t i = 0; i < n; ++i) {
        Vector e(n);
        e[i] = 1.0;
        dirs.push_back(e);
        for (std::size_t j = i + 1; j < n; ++j) {
          Vector d(n);
          d[i] = std::sqrt(0.5);
          d[j] = -std::sqrt(0.5);
          dirs.push_back(d);
        }
      }
    }
    SampleRng rng(seed ^ 0x5bd1e995ULL, k);
    for (std::size_t j = 0; j < kDirectionsPerPoint; ++j) {
      Vector d = rng.gaussian_vector(n);
      const double len = euclidean_norm(d);
      if (len > 0.0) dirs.push_back(d * (1.0 / len));
    }

    const double nx = space.norm(x);
    for (const Vector& d : dirs) {
      double gap = std::numeric_limits<double>::infinity();
      for (double h : kSteps) {
        const double right = (space.norm(x + h * d) - nx) / h;
        const double left = (nx - space.norm(x - h * d)) / h;
        gap = std::min(gap, std::abs(right - left));
      }
      if (gap > report.worst_gap) {
        report.worst_gap = gap;
        report.worst_at = x;
      }
    }
  }
  report.smooth = report.worst_gap <= kSmoothnessGapTolerance && report.non_singleton == 0;
  return report;
}

// ---------------------------------------------------------------------------

double parallelogram_defect(const NormedSpace& space, const Vector& u, const Vector& v) {
  const double a = norm(space, u + v);
  const double b = norm(space, u - v);
  const double nu = norm(space, u);
  const double nv = norm(space, v);
  return a * a + b * b - 2.0 * nu * nu - 2.0 * nv * nv;
}

SectionCandidate::SectionCandidate(Vector u_in, Vector v_in)
    : u(std::move(u_in)), v(std::move(v_in)) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "section basis vectors differ in size");
  }
  const double lu = euclidean_norm(u);
  const double lv = euclidean_norm(v);
  if (lu == 0.0 || lv == 0.0) throw Error(ErrorCode::kDegenerateSection, "zero basis vector");
  double dot = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) dot += (u[i] / lu) * (v[i] / lv);
  if (1.0 - dot * dot <= 1e-6) {
    throw Error(ErrorCode::kDegenerateSection, "section basis vectors are nearly parallel");
  }
}

std::vector<SectionCandidate> section_candidates(const NormedSpace& space, std::size_t total,
                                                 std::uint64_t seed) {
  const std::size_t n = space.dim();
  std::vector<SectionCandidate> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector u(n), v(n);
      u[i] = 1.0;
      v[j] = 1.0;
      out.emplace_back(std::move(u), std::move(v));
    }
  }
  if (n < 2) return out;
  for (std::uint64_t k = 0; out.size() < total; ++k) {
    SampleRng rng(seed, k);
    Vector u = rng.gaussian_vector(n);
    Vector v = rng.gaussian_vector(n);
    try {
      out.emplace_back(std::move(u), std::move(v));
    } catch (const Error&) {
      // Redraw from the next substream.
    }
  }
  return out;
}

SectionSearchResult euclidean_section_search(const NormedSpace& space,
                                             const std::vector<SectionCandidate>& candidates,
                                             std::size_t pair_samples, double tol,
                                             std::uint64_t seed) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "section search needs at least one candidate");
  }
  SectionSearchResult result;
  result.worst_defect.reserve(candidates.size());
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const SectionCandidate& c = candidates[k];
    if (c.u.size() != space.dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "section candidate dimension mismatch");
    }
    SampleRng rng(seed, k);
    double worst = 0.0;
    for (std::size_t s = 0; s < pair_samples; ++s) {
      const double a = rng.gaussian(), b = rng.gaussian(), cc = rng.gaussian(), d = rng.gaussian();
      const Vector p = a * c.u + b * c.v;
      const Vector q = cc * c.u + d * c.v;
      const double np = space.norm(p);
      const double nq = space.norm(q);
      const double scale = np * np + nq * nq;
      if (scale == 0.0) continue;
      worst = std::max(worst, std::abs(parallelogram_defect(space, p, q)) / scale);
    }
    result.worst_defect.push_back(worst);
    if (worst <= tol) result.flagged.push_back(k);
  }
  return result;
}

std::string to_json(const SectionSearchResult& result, std::size_t candidates,
                    std::size_t pair_samples, double tol, std::uint64_t seed) {
  std::string flagged = "[";
  for (std::size_t i = 0; i < result.flagged.size(); ++i) {
    if (i) flagged += ", ";
    flagged += std::to_string(result.flagged[i]);
  }
  flagged += "]";
  double min_defect = std::numeric_limits<double>::infinity();
  for (double d : result.worst_defect) min_defect = std::min(min_defect, d);
  JsonObject o;
  o.add("candidates", static_cast<std::uint64_t>(candidates))
      .add("pair_samples", static_cast<std::uint64_t>(pair_samples))
      .add("tol", tol)
      .add("seed", seed)
      .add("flagged_count", static_cast<std::uint64_t>(result.flagged.size()))
      .add_raw("flagged", flagged)
      .add("smallest_worst_defect", min_defect)
      .add("tool_version", kToolVersion);
  return o.str();
}

// ---------------------------------------------------------------------------

namespace {

enum class PartDecision { kAcute, kNotAcute, kAmbiguous };

PartDecision decide_part(const NormedSpace& space, const Vector& x, const Vector& y,
                         double margin) {
  const AngleRelation rel = classify_angle(space, x, y, margin);
  if (rel.acute()) return PartDecision::kAcute;
  const double ny = space.norm(y);
  if (rel.bounds.max >= -kOracleResolutionBand * ny) return PartDecision::kAmbiguous;
  return PartDecision::kNotAcute;
}

std::optional<bool> resolve(PartDecision d) {
  if (d == PartDecision::kAmbiguous) return std::nullopt;
  return d == PartDecision::kAcute;
}

}  // namespace

SumAcutePrediction sum_acute_prediction(const NormedSpace& x_space, const NormedSpace& y_space,
                                        const Vector& x1, const Vector& y1, const Vector& x2,
                                        const Vector& y2, double margin) {
  const double n1 = norm(x_space, x1);
  const double m1 = norm(y_space, y1);
  const double big = std::max(n1, m1);
  if (big <= kTauZero) throw Error(ErrorCode::kZeroVector, "(x1, y1) is zero");
  const double rel = std::abs(n1 - m1) / big;
  if (rel > kTauTie && rel <= kBoundaryBandFactor * kTauTie) {
    return {SumCase::kNearTie, std::nullopt};
  }
  if (rel <= kTauTie) {
    const PartDecision dx = decide_part(x_space, x1, x2, margin);
    const PartDecision dy = decide_part(y_space, y1, y2, margin);
    if (dx == PartDecision::kAcute || dy == PartDecision::kAcute) return {SumCase::kTie, true};
    if (dx == PartDecision::kAmbiguous || dy == PartDecision::kAmbiguous) {
      return {SumCase::kTie, std::nullopt};
    }
    return {SumCase::kTie, false};
  }
  if (n1 > m1) return {SumCase::kFirstLarger, resolve(decide_part(x_space, x1, x2, margin))};
  return {SumCase::kSecondLarger, resolve(decide_part(y_space, y1, y2, margin))};
}

SumAcuteReport sum_acute_equivalence_check(const NormedSpace& x_space,
                                           const NormedSpace& y_space, std::size_t n_samples,
                                           double margin, std::uint64_t seed) {
  const NormedSpace sum = NormedSpace::inf_sum({x_space, y_space});
  SumAcuteReport report;
  report.samples = n_samples;
  report.seed = seed;
  report.margin = margin;
  for (std::size_t i = 0; i < n_samples; ++i) {
    SampleRng rng(seed, i);
    const Vector x1 = rng.nonzero_vector(x_space);
    Vector y1 = rng.nonzero_vector(y_space);
    const Vector x2 = rng.gaussian_vector(x_space.dim());
    const Vector y2 = rng.gaussian_vector(y_space.dim());
    if (i % 4 == 3) y1 *= x_space.norm(x1) / y_space.norm(y1);

    const SumAcutePrediction pred =
        sum_acute_prediction(x_space, y_space, x1, y1, x2, y2, margin);
    switch (pred.which) {
      case SumCase::kFirstLarger: ++report.case_counts[0]; break;
      case SumCase::kTie: ++report.case_counts[1]; break;
      case SumCase::kSecondLarger: ++report.case_counts[2]; break;
      case SumCase::kNearTie: break;
    }
    if (!pred.acute) {
      if (pred.which == SumCase::kNearTie) {
        ++report.excluded_tie;
      } else {
        ++report.excluded_boundary;
      }
      continue;
    }
    const std::array<Vector, 2> first = {x1, y1};
    const std::array<Vector, 2> second = {x2, y2};
    const bool oracle = one_sided_acute_oracle(sum, concat(first), concat(second), kOracleMargin);
    ++report.compared;
    if (oracle != *pred.acute) ++report.disagreements;
  }
  return report;
}

std::string to_json(const SumAcuteReport& report) {
  JsonObject o;
  o.add("samples", static_cast<std::uint64_t>(report.samples))
      .add("compared", static_cast<std::uint64_t>(report.compared))
      .add("disagreements", static_cast<std::uint64_t>(report.disagreements))
      .add("excluded_boundary", static_cast<std::uint64_t>(report.excluded_boundary))
      .add("excluded_tie", static_cast<std::uint64_t>(report.excluded_tie))
      .add("excluded_fraction", report.excluded_fraction())
      .add("case_i", static_cast<std::uint64_t>(report.case_counts[0]))
      .add("case_ii", static_cast<std::uint64_t>(report.case_counts[1]))
      .add("case_iii", static_cast<std::uint64_t>(report.case_counts[2]))
      .add("margin", report.margin)
      .add("seed", report.seed)
      .add("pass", report.pass())
      .add("tool_version", kToolVersion);
  return o.str();
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::size_t, std::size_t>> Orthograph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    for (std::size_t j = i + 1; j < adjacency.size(); ++j) {
      if (adjacency[i][j]) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t Orthograph::degree(std::size_t i) const {
  return static_cast<std::size_t>(std::count(adjacency.at(i).begin(), adjacency.at(i).end(), true));
}

Orthograph sample_orthograph(const NormedSpace& space, const std::vector<Vector>& directions,
                             double margin) {
  Orthograph g;
  g.vertices = directions;
  const std::size_t n = directions.size();
  g.adjacency.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool edge = is_mutually_orthogonal(space, directions[i], directions[j], margin);
      g.adjacency[i][j] = edge;
      g.adjacency[j][i] = edge;
    }
  }
  return g;
}

Orthograph sample_orthograph(const NormedSpace& plane, const std::vector<double>& angles,
                             double margin) {
  require_plane(plane);
  std::vector<Vector> dirs;
  dirs.reserve(angles.size());
  for (double a : angles) dirs.push_back(unit_vector_at_angle(plane, a));
  return sample_orthograph(plane, dirs, margin);
}

std::vector<double> uniform_angles(std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = kPi * static_cast<double>(k) / static_cast<double>(n);
  }
  return out;
}

Orthograph refined_orthograph(const NormedSpace& plane, std::size_t n, double margin) {
  constexpr double kMergeDistance = 1e-9;
  require_plane(plane);
  std::vector<double> angles = uniform_angles(n);
  for (std::size_t k = 0; k < n; ++k) {
    double partner = std::fmod(orthogonal_partner_angle(plane, angles[k]), kPi);
    if (partner < 0.0) partner += kPi;
    angles.push_back(partner);
  }
  std::sort(angles.begin(), angles.end());
  std::vector<double> merged;
  for (double a : angles) {
    if (merged.empty() || a - merged.back() > kMergeDistance) merged.push_back(a);
  }
  // Directions are taken modulo sign, so angles just below pi coincide with 0.
  while (merged.size() > 1 && kPi - merged.back() <= kMergeDistance) merged.pop_back();
  return sample_orthograph(plane, merged, margin);
}

std::string to_edge_list(const Orthograph& graph) {
  std::string out;
  for (const auto& [i, j] : graph.edges()) {
    out += std::to_string(i) + " " + std::to_string(j) + "\n";
  }
  return out;
}

}  // namespace bjorth

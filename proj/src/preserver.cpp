#include "bjorth/preserver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bjorth/errors.hpp"
#include "bjorth/numerics.hpp"
#include "bjorth/orthogonality.hpp"
#include "bjorth/report_io.hpp"
#include "bjorth/sampling.hpp"

namespace bjorth {

namespace {

constexpr double kEndpointTolerance = 1e-10;
constexpr double kNodeOrthogonalityMargin = 1e-8;

bool is_radon_plane(const NormedSpace& plane) {
  if (plane.radon_candidate()) return true;
  const auto* lp = plane.as_lp();
  return lp != nullptr && lp->dim == 2 && lp->p == 2.0;
}

Vector direction(double theta) { return direction_at_angle(theta); }

// The support functional at x(theta); nu is scale invariant so no
// normalization is needed.
Functional smooth_support(const NormedSpace& plane, double theta) {
  SupportSet nu = plane.support_set(direction(theta));
  if (!nu.is_singleton()) {
    throw Error(ErrorCode::kNotSmooth, "support set at angle is not a singleton");
  }
  return std::move(nu.extremes.front());
}

double apply2(const Functional& f, double c, double s) { return f[0] * c + f[1] * s; }

// Upper half: theta in [0, pi). The lower half is handled through oddness.
bool upper_half(const Vector& v) { return v[1] > 0.0 || (v[1] == 0.0 && v[0] > 0.0); }

void check_size(const NormedSpace& space, const Vector& v) {
  if (v.size() != space.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector of size " + std::to_string(v.size()) + " for a map on dimension " +
                    std::to_string(space.dim()));
  }
}

Vector radon_apply(const EtaTable& table, const Vector& v) {
  if (v.is_exact_zero()) return v;
  if (!upper_half(v)) return -radon_apply(table, -v);
  const NormedSpace& plane = table.plane();
  const double r = euclidean_norm(v);
  if (v[0] >= 0.0) {
    // theta in [0, pi/2]: T(x(theta)) = y(theta), scaled by ||v||_2.
    return (r / plane.norm(v)) * v;
  }
  // theta in (pi/2, pi): v / r = x(t + pi/2) with t = atan2(-v_x, v_y).
  const double t = std::atan2(-v[0], v[1]);
  const Vector d = direction(table.eval(t));
  return (r / plane.norm(d)) * d;
}

Vector radon_inverse(const EtaTable& table, const Vector& w) {
  if (w.is_exact_zero()) return w;
  if (!upper_half(w)) return -radon_inverse(table, -w);
  const double big_r = table.plane().norm(w);
  if (w[0] >= 0.0) return (big_r / euclidean_norm(w)) * w;
  const double t = table.preimage(w);
  return Vector{-big_r * std::sin(t), big_r * std::cos(t)};
}

}  // namespace

double solve_eta(const NormedSpace& plane, double theta, double tol) {
  if (!is_radon_plane(plane)) {
    throw Error(ErrorCode::kNotRadonPlane,
                "eta needs a conjugate Day-James plane or the Euclidean plane");
  }
  if (!(theta >= 0.0 && theta <= kHalfPi)) {
    throw Error(ErrorCode::kInvalidArgument, "theta must lie in [0, pi/2]");
  }
  if (theta == 0.0) return kHalfPi;
  if (theta == kHalfPi) return kPi;
  const Functional f = smooth_support(plane, theta);
  if (apply2(f, std::cos(kHalfPi), std::sin(kHalfPi)) < 0.0 ||
      apply2(f, std::cos(kPi), std::sin(kPi)) > 0.0) {
    throw Error(ErrorCode::kNoBracket, "f(y(theta')) keeps its sign on [pi/2, pi]");
  }
  const double root = numerics::bisect_boundary(
      [&](double t) { return apply2(f, std::cos(t), std::sin(t)) > 0.0; }, kHalfPi, kPi);
  const double residual = std::abs(functional_apply(f, unit_vector_at_angle(plane, root)));
  if (residual > tol) {
    throw Error(ErrorCode::kNonConvergence,
                "eta residual " + format_real(residual) + " above tolerance");
  }
  return root;
}

EtaTable::EtaTable(NormedSpace plane, std::vector<double> grid, std::vector<double> values,
                   std::vector<double> residuals)
    : plane_(std::move(plane)),
      grid_(std::move(grid)),
      values_(std::move(values)),
      residuals_(std::move(residuals)) {}

EtaTable EtaTable::build(const NormedSpace& plane, std::size_t grid_size) {
  if (grid_size < kMinGridSize) {
    throw Error(ErrorCode::kGridTooCoarse,
                "grid size " + std::to_string(grid_size) + " is below " +
                    std::to_string(kMinGridSize));
  }
  std::vector<double> grid(grid_size + 1);
  std::vector<double> values(grid_size + 1);
  std::vector<double> residuals(grid_size + 1);
  for (std::size_t k = 0; k <= grid_size; ++k) {
    grid[k] = k == grid_size ? kHalfPi
                             : kHalfPi * static_cast<double>(k) / static_cast<double>(grid_size);
    values[k] = solve_eta(plane, grid[k]);
    residuals[k] = std::abs(functional_apply(plane.support_set(direction(grid[k])).extremes[0],
                                             unit_vector_at_angle(plane, values[k])));
  }
  EtaTable table(plane, std::move(grid), std::move(values), std::move(residuals));
  table.validate();
  return table;
}

void EtaTable::validate() const {
  if (grid_.size() < kMinGridSize + 1) {
    throw Error(ErrorCode::kGridTooCoarse, "table has too few nodes");
  }
  if (grid_.front() != 0.0 || std::abs(grid_.back() - kHalfPi) > kEndpointTolerance) {
    throw Error(ErrorCode::kInvalidArgument, "grid must span [0, pi/2]");
  }
  if (std::abs(values_.front() - kHalfPi) > kEndpointTolerance ||
      std::abs(values_.back() - kPi) > kEndpointTolerance) {
    throw Error(ErrorCode::kInvalidArgument, "eta endpoints must be pi/2 and pi");
  }
  for (std::size_t k = 0; k + 1 < grid_.size(); ++k) {
    if (!(grid_[k] < grid_[k + 1])) {
      throw Error(ErrorCode::kInvalidArgument, "grid must be strictly increasing");
    }
    if (!(values_[k] < values_[k + 1])) {
      throw Error(ErrorCode::kMonotonicityViolation,
                  "eta is not strictly increasing at node " + std::to_string(k));
    }
  }
  for (std::size_t k = 0; k < grid_.size(); ++k) {
    const Vector y = unit_vector_at_angle(plane_, grid_[k]);
    const Vector y_eta = unit_vector_at_angle(plane_, values_[k]);
    if (!is_bj_orthogonal(plane_, y, y_eta, kNodeOrthogonalityMargin)) {
      throw Error(ErrorCode::kNonConvergence,
                  "y(theta) is not orthogonal to y(eta(theta)) at node " + std::to_string(k));
    }
  }
}

EtaTable EtaTable::from_csv(const NormedSpace& plane, std::string_view csv) {
  if (!is_radon_plane(plane)) {
    throw Error(ErrorCode::kNotRadonPlane, "eta tables exist only for smooth Radon planes");
  }
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line.rfind("theta,eta,residual", 0) != 0) {
    throw Error(ErrorCode::kParseError, "expected header 'theta,eta,residual'");
  }
  std::vector<double> grid, values, residuals;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    double cols[3];
    std::istringstream row(line);
    std::string cell;
    int n = 0;
    while (n < 3 && std::getline(row, cell, ',')) {
      try {
        std::size_t used = 0;
        cols[n] = std::stod(cell, &used);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParseError, "bad number on line " + std::to_string(line_no));
      }
      ++n;
    }
    if (n != 3) throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no));
    grid.push_back(cols[0]);
    values.push_back(cols[1]);
    residuals.push_back(cols[2]);
  }
  EtaTable table(plane, std::move(grid), std::move(values), std::move(residuals));
  table.validate();
  return table;
}

std::string EtaTable::to_csv() const {
  std::vector<std::vector<double>> rows;
  rows.reserve(grid_.size());
  for (std::size_t k = 0; k < grid_.size(); ++k) {
    rows.push_back({grid_[k], values_[k], residuals_[k]});
  }
  return bjorth::to_csv({"theta", "eta", "residual"}, rows);
}

std::size_t EtaTable::cell_of(double theta) const {
  // Largest k with grid[k] <= theta, capped so that k + 1 is a node.
  auto it = std::upper_bound(grid_.begin(), grid_.end(), theta);
  std::size_t k = it == grid_.begin() ? 0 : static_cast<std::size_t>(it - grid_.begin()) - 1;
  return std::min(k, grid_.size() - 2);
}

double EtaTable::eval(double theta) const {
  if (!(theta >= 0.0 && theta <= kHalfPi)) {
    throw Error(ErrorCode::kInvalidArgument, "eta is defined on [0, pi/2]");
  }
  const std::size_t k = cell_of(theta);
  if (theta == grid_[k]) return values_[k];
  if (theta == grid_[k + 1]) return values_[k + 1];
  const Functional f = smooth_support(plane_, theta);
  return numerics::bisect_boundary(
      [&](double t) { return apply2(f, std::cos(t), std::sin(t)) > 0.0; }, values_[k],
      values_[k + 1]);
}

double EtaTable::preimage(const Vector& w) const {
  const double phi = std::atan2(w[1], w[0]);
  // Cell k with values[k] <= phi <= values[k + 1]; written out rather than
  // std::upper_bound so that a corrupted (unsorted) table stays well defined.
  std::size_t lo = 0;
  std::size_t hi = values_.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (values_[mid] <= phi) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Before the root, f_{x(t)}(w) < 0: w lies past the orthogonal direction.
  return numerics::bisect_boundary(
      [&](double t) { return functional_apply(smooth_support(plane_, t), w) < 0.0; },
      grid_[lo], grid_[lo + 1]);
}

EtaTable EtaTable::with_swapped_entries(std::size_t i, std::size_t j) const {
  EtaTable copy = *this;
  std::swap(copy.values_.at(i), copy.values_.at(j));
  return copy;
}

PreserverMap::PreserverMap(Rep rep, NormedSpace source, NormedSpace target)
    : rep_(std::move(rep)), source_(std::move(source)), target_(std::move(target)) {}

PreserverMap PreserverMap::radon_plane(EtaTable table) {
  NormedSpace target = table.plane();
  return PreserverMap(RadonPlaneMap{std::make_shared<const EtaTable>(std::move(table))},
                      NormedSpace::euclidean_plane(), std::move(target));
}

PreserverMap PreserverMap::identity(NormedSpace space) {
  NormedSpace copy = space;
  return PreserverMap(IdentityMap{std::move(space)}, copy, copy);
}

PreserverMap PreserverMap::sum(std::vector<PreserverMap> parts) {
  if (parts.size() < 2) {
    throw Error(ErrorCode::kEmptyParts, "a sum map needs at least 2 parts");
  }
  std::vector<NormedSpace> sources, targets;
  for (const auto& part : parts) {
    sources.push_back(part.source());
    targets.push_back(part.target());
  }
  return PreserverMap(SumMap{std::move(parts)}, NormedSpace::inf_sum(std::move(sources)),
                      NormedSpace::inf_sum(std::move(targets)));
}

Vector PreserverMap::apply(const Vector& v) const {
  check_size(source_, v);
  if (const auto* m = as_radon_plane()) return radon_apply(*m->eta, v);
  if (as_identity()) return v;
  const auto& parts = as_sum()->parts;
  std::vector<Vector> out;
  out.reserve(parts.size());
  const auto pieces = split_parts(*source_.as_inf_sum(), v);
  for (std::size_t i = 0; i < parts.size(); ++i) out.push_back(parts[i].apply(pieces[i]));
  return concat(out);
}

Vector PreserverMap::apply_inverse(const Vector& w) const {
  check_size(target_, w);
  if (const auto* m = as_radon_plane()) return radon_inverse(*m->eta, w);
  if (as_identity()) return w;
  const auto& parts = as_sum()->parts;
  std::vector<Vector> out;
  out.reserve(parts.size());
  const auto pieces = split_parts(*target_.as_inf_sum(), w);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.push_back(parts[i].apply_inverse(pieces[i]));
  }
  return concat(out);
}

PreserverMap build_preserver(const NormedSpace& plane, std::size_t grid_size) {
  return PreserverMap::radon_plane(EtaTable::build(plane, grid_size));
}

Vector apply_preserver(const PreserverMap& map, const Vector& v) { return map.apply(v); }

Vector apply_inverse(const PreserverMap& map, const Vector& w) { return map.apply_inverse(w); }

PreserverMap compose_inf_sum(std::vector<PreserverMap> parts) {
  return PreserverMap::sum(std::move(parts));
}

namespace {

enum class Decision { kYes, kNo, kAmbiguous };

// x _|_ y from the support bounds, with the exclusion band above the margin.
Decision orthogonality_decision(const NormedSpace& space, const Vector& x, const Vector& y,
                                double margin) {
  const double gap = orthogonality_gap(directional_bounds(space, x, y), space.norm(y));
  if (gap <= margin) return Decision::kYes;
  if (gap <= kBoundaryBandFactor * margin) return Decision::kAmbiguous;
  return Decision::kNo;
}

// x acute to y: some f in nu(x) has f(y) >= -margin ||y||.
Decision acute_decision(const NormedSpace& space, const Vector& x, const Vector& y,
                        double margin) {
  const double top = directional_bounds(space, x, y).max / space.norm(y);
  if (top >= -margin) return Decision::kYes;
  if (top >= -kBoundaryBandFactor * margin) return Decision::kAmbiguous;
  return Decision::kNo;
}

Vector orthogonal_partner(const NormedSpace& space, const Vector& x, SampleRng& rng) {
  const Functional f = space.support_set(x).extremes.front();
  for (;;) {
    Vector y = project_to_kernel(f, rng.gaussian_vector(space.dim()));
    if (space.norm(y) >= 1e-3) return y;
  }
}

}  // namespace

VerificationReport verify_preserver(const PreserverMap& map, std::size_t n_samples,
                                    double margin, std::uint64_t seed) {
  VerificationReport report;
  report.seed = seed;
  report.margin = margin;
  report.samples = n_samples;
  const NormedSpace& src = map.source();
  const NormedSpace& dst = map.target();
  bool finite = true;

  for (std::size_t i = 0; i < n_samples; ++i) {
    SampleRng rng(seed, i);
    Vector x, y;
    switch (i % 3) {
      case 0:
        x = rng.nonzero_vector(src);
        y = rng.nonzero_vector(src);
        break;
      case 1:
        x = rng.nonzero_vector(src);
        y = orthogonal_partner(src, x, rng);
        break;
      default: {
        const Vector w1 = rng.nonzero_vector(dst);
        const Vector w2 = orthogonal_partner(dst, w1, rng);
        x = map.apply_inverse(w1);
        y = map.apply_inverse(w2);
      }
    }
    const Vector tx = map.apply(x);
    const Vector ty = map.apply(y);

    const Decision orth_src = orthogonality_decision(src, x, y, margin);
    const Decision orth_dst = orthogonality_decision(dst, tx, ty, margin);
    const Decision acute_src = acute_decision(src, x, y, margin);
    const Decision acute_dst = acute_decision(dst, tx, ty, margin);
    if (orth_src == Decision::kAmbiguous || orth_dst == Decision::kAmbiguous ||
        acute_src == Decision::kAmbiguous || acute_dst == Decision::kAmbiguous) {
      ++report.boundary_excluded;
    } else {
      if (orth_src != orth_dst) ++report.disagreements;
      if (acute_src != acute_dst) ++report.acute_disagreements;
      if (orth_src == Decision::kYes) ++report.orthogonal_pairs;
    }

    for (const Vector* v : {&x, &y}) {
      const Vector& tv = v == &x ? tx : ty;
      const double nv = src.norm(*v);
      report.max_norm_error = std::max(report.max_norm_error, std::abs(dst.norm(tv) - nv) / nv);
      const Vector back = map.apply_inverse(tv);
      report.max_inverse_error =
          std::max(report.max_inverse_error, max_abs_diff(back, *v) / euclidean_norm(*v));
    }

    double c = 0.0;
    while (std::abs(c) < 1e-3) c = rng.uniform(-10.0, 10.0);
    const Vector tcx = map.apply(c * x);
    report.max_homog_error = std::max(
        report.max_homog_error,
        max_abs_diff(tcx, c * tx) / (std::abs(c) * std::max(euclidean_norm(tx), 1e-300)));

    Vector delta = rng.gaussian_vector(src.dim());
    delta *= 1e-6 * euclidean_norm(x) / euclidean_norm(delta);
    const double step = src.norm(delta);
    const double modulus = dst.norm(map.apply(x + delta) - tx) / step;
    if (!std::isfinite(modulus)) finite = false;
    report.continuity_modulus = std::max(report.continuity_modulus, modulus);
  }

  report.pass = n_samples > 0 && report.disagreements == 0 && report.acute_disagreements == 0 &&
                report.max_norm_error <= kNormErrorTolerance &&
                report.max_homog_error <= kHomogeneityTolerance &&
                report.max_inverse_error <= kInverseTolerance && finite;
  return report;
}

std::string to_json(const VerificationReport& r) {
  return JsonObject()
      .add("tool_version", kToolVersion)
      .add("samples", static_cast<std::uint64_t>(r.samples))
      .add("disagreements", static_cast<std::uint64_t>(r.disagreements))
      .add("acute_disagreements", static_cast<std::uint64_t>(r.acute_disagreements))
      .add("boundary_excluded", static_cast<std::uint64_t>(r.boundary_excluded))
      .add("orthogonal_pairs", static_cast<std::uint64_t>(r.orthogonal_pairs))
      .add("max_norm_error", r.max_norm_error)
      .add("max_homog_error", r.max_homog_error)
      .add("max_inverse_error", r.max_inverse_error)
      .add("continuity_modulus", r.continuity_modulus)
      .add("margin", r.margin)
      .add("seed", r.seed)
      .add("pass", r.pass)
      .str();
}

}  // namespace bjorth

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bjorth/space.hpp"
#include "bjorth/tolerances.hpp"
#include "bjorth/vector.hpp"

namespace bjorth {

// ---------------------------------------------------------------------------
// Radon symmetry

/// First angle after theta (within a half turn) at which y(theta) stops being
/// strictly acute to y(theta'), i.e. the direction orthogonal to y(theta).
double orthogonal_partner_angle(const NormedSpace& plane, double theta);

struct RadonDefectRow {
  double theta;
  double theta_star;
  double forward_residual;  // orthogonality gap of y(theta) -> y(theta*)
  double reverse_deficit;   // 1 - min_t ||y(theta*) + t y(theta)|| / ||y(theta*)||
};

struct RadonDefectReport {
  double defect = 0.0;
  std::optional<std::pair<double, double>> witness;  // (theta, theta*) when defect > margin
  std::vector<RadonDefectRow> rows;
  double margin = kDefaultMargin;

  bool radon() const noexcept { return defect <= margin; }
};

/// Scans `grid` uniform angles of [0, pi): pairs each y(theta) with its
/// orthogonal direction and measures how far the reversed pair is from
/// orthogonal. The witness is the first maximal row in grid order.
/// Errors: kNotAPlane, kGridTooCoarse (grid < 16).
RadonDefectReport radon_defect(const NormedSpace& plane, std::size_t grid,
                               double margin = kDefaultMargin);

std::string to_csv(const RadonDefectReport& report);
std::string to_json(const RadonDefectReport& report);

// ---------------------------------------------------------------------------
// Smoothness

struct SmoothnessReport {
  bool smooth = true;
  double worst_gap = 0.0;
  std::optional<Vector> worst_at;
  std::size_t samples = 0;
  std::size_t non_singleton = 0;
};

inline constexpr double kSmoothnessGapTolerance = 1e-4;

/// Compares left and right difference quotients of the norm at sampled unit
/// vectors along random directions. The gap at each probe is the smallest one
/// over a step ladder 1e-6, 1e-8, 1e-10: a kink keeps a constant gap while a
/// smooth point with steep curvature loses it as the step shrinks. Smooth iff
/// the worst gap is <= 1e-4 and every support set is a singleton. `forced`
/// vectors are probed in addition to the random ones.
SmoothnessReport smoothness_probe(const NormedSpace& space, std::size_t samples,
                                  std::uint64_t seed = 0,
                                  const std::vector<Vector>& forced = {});

// ---------------------------------------------------------------------------
// Euclidean sections

/// ||u+v||^2 + ||u-v||^2 - 2||u||^2 - 2||v||^2. Zero for all pairs exactly in
/// inner-product spaces.
double parallelogram_defect(const NormedSpace& space, const Vector& u, const Vector& v);

/// Two vectors spanning a 2-D subspace. Throws kDegenerateSection when either
/// is zero or the Gram determinant of their normalized coordinates is <= 1e-6.
struct SectionCandidate {
  Vector u;
  Vector v;

  SectionCandidate(Vector u, Vector v);
};

/// Every coordinate-aligned section span{e_i, e_j}, followed by seeded random
/// sections until there are `total` candidates (or all coordinate ones, if more).
std::vector<SectionCandidate> section_candidates(const NormedSpace& space, std::size_t total,
                                                 std::uint64_t seed);

struct SectionSearchResult {
  std::vector<std::size_t> flagged;  // indices into the candidate list
  std::vector<double> worst_defect;  // per candidate, normalized
};

/// A candidate is flagged Euclidean iff
/// |parallelogram_defect(a u + b v, c u + d v)| <= tol (||p||^2 + ||q||^2)
/// for all `pair_samples` seeded coefficient quadruples. Candidate k draws its
/// coefficients from substream k, so raising pair_samples only adds evidence.
SectionSearchResult euclidean_section_search(const NormedSpace& space,
                                             const std::vector<SectionCandidate>& candidates,
                                             std::size_t pair_samples, double tol,
                                             std::uint64_t seed);

std::string to_json(const SectionSearchResult& result, std::size_t candidates,
                    std::size_t pair_samples, double tol, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Acute angles in l-infinity sums

struct SumAcuteReport {
  std::size_t samples = 0;
  std::size_t compared = 0;
  std::size_t disagreements = 0;
  std::size_t excluded_boundary = 0;
  std::size_t excluded_tie = 0;
  std::size_t case_counts[3] = {0, 0, 0};  // (i) ||x1|| > ||y1||, (ii) tie, (iii)
  std::uint64_t seed = 0;
  double margin = kDefaultMargin;

  double excluded_fraction() const noexcept {
    return samples == 0 ? 0.0
                        : static_cast<double>(excluded_boundary + excluded_tie) /
                              static_cast<double>(samples);
  }
  bool pass() const noexcept { return disagreements == 0 && compared > 0; }
};

enum class SumCase { kFirstLarger, kTie, kSecondLarger, kNearTie };

struct SumAcutePrediction {
  SumCase which;
  std::optional<bool> acute;  // nullopt: excluded (near tie or boundary band)
};

/// Trichotomy prediction for (x1, y1) acute to (x2, y2) in X (+)_inf Y:
///   (i)   ||x1|| > ||y1|| and x1 acute to x2,
///   (ii)  ||x1|| = ||y1|| and (x1 acute to x2 or y1 acute to y2),
///   (iii) ||x1|| < ||y1|| and y1 acute to y2.
/// Ties are relative gaps <= tau_tie; gaps in (tau_tie, 10 tau_tie] are near
/// ties and excluded. Part decisions use the support test; a part whose
/// largest directional bound lies in [-kOracleResolutionBand, -margin) is
/// inside the exclusion band.
SumAcutePrediction sum_acute_prediction(const NormedSpace& x_space, const NormedSpace& y_space,
                                        const Vector& x1, const Vector& y1, const Vector& x2,
                                        const Vector& y2, double margin);

/// Compares the trichotomy against one_sided_acute_oracle on the sum over
/// seeded samples (every fourth one an exact tie). Near-ties with relative
/// gap in (tau_tie, 10 tau_tie] and part decisions within the oracle
/// resolution band are excluded and counted.
SumAcuteReport sum_acute_equivalence_check(const NormedSpace& x_space,
                                           const NormedSpace& y_space, std::size_t n_samples,
                                           double margin, std::uint64_t seed);

std::string to_json(const SumAcuteReport& report);

// ---------------------------------------------------------------------------
// Orthographs

/// Vertices are sampled one-dimensional subspaces (one representative
/// vector each); an edge joins mutually orthogonal vertices.
struct Orthograph {
  std::vector<Vector> vertices;
  std::vector<std::vector<bool>> adjacency;

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t degree(std::size_t i) const;
};

Orthograph sample_orthograph(const NormedSpace& space, const std::vector<Vector>& directions,
                             double margin = kDefaultMargin);

/// Directions x(theta) for the given angles. Throws kNotAPlane.
Orthograph sample_orthograph(const NormedSpace& plane, const std::vector<double>& angles,
                             double margin = kDefaultMargin);

/// n uniform angles of [0, pi) together with the orthogonal partner of each,
/// merged modulo pi when closer than 1e-9 rad.
Orthograph refined_orthograph(const NormedSpace& plane, std::size_t n,
                              double margin = kDefaultMargin);

std::vector<double> uniform_angles(std::size_t n);

/// One "i j" line per edge, i < j.
std::string to_edge_list(const Orthograph& graph);

}  // namespace bjorth

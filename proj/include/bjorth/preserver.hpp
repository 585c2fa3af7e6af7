#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bjorth/space.hpp"
#include "bjorth/tolerances.hpp"
#include "bjorth/vector.hpp"

namespace bjorth {

/// Angle of the direction orthogonal to y(theta) in a smooth Radon plane:
/// the theta' in [pi/2, pi] with f(y(theta')) = 0 for the unique support
/// functional f at y(theta). Found by bisection to one ULP; 0 and pi/2 map
/// exactly to pi/2 and pi.
///
/// Errors: kNotRadonPlane (not a conjugate Day-James plane or the Euclidean
/// plane), kInvalidArgument (theta outside [0, pi/2]), kNotSmooth, kNoBracket,
/// kNonConvergence (final residual above `tol`).
double solve_eta(const NormedSpace& plane, double theta, double tol = 1e-12);

/// Tabulated eta on a grid of [0, pi/2]. Values are the bisection roots at
/// the nodes; between nodes eta is re-solved by bisection bracketed by the two
/// neighbouring values.
class EtaTable {
 public:
  static constexpr std::size_t kMinGridSize = 64;

  /// grid_size + 1 uniform nodes. Errors: kGridTooCoarse below 64 intervals,
  /// kMonotonicityViolation, plus anything solve_eta raises.
  static EtaTable build(const NormedSpace& plane, std::size_t grid_size);

  /// Reads `theta,eta,residual` CSV and re-checks every table invariant
  /// against `plane`.
  static EtaTable from_csv(const NormedSpace& plane, std::string_view csv);

  std::string to_csv() const;

  const NormedSpace& plane() const noexcept { return plane_; }
  std::span<const double> grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> residuals() const noexcept { return residuals_; }
  std::size_t intervals() const noexcept { return grid_.size() - 1; }

  /// eta(theta) for theta in [0, pi/2].
  double eval(double theta) const;

  /// For a direction w strictly inside the second quadrant, the t in
  /// [0, pi/2] whose y(t) is orthogonal to w, i.e. eta(t) = arg w.
  double preimage(const Vector& w) const;

  /// Copy with values i and j exchanged and no validation. Only for fault
  /// injection in verification tests.
  EtaTable with_swapped_entries(std::size_t i, std::size_t j) const;

 private:
  EtaTable(NormedSpace plane, std::vector<double> grid, std::vector<double> values,
           std::vector<double> residuals);
  void validate() const;
  std::size_t cell_of(double theta) const;

  NormedSpace plane_;
  std::vector<double> grid_;
  std::vector<double> values_;
  std::vector<double> residuals_;
};

class PreserverMap;

/// T~ : l_2^2 -> plane. T(x(theta)) = y(theta) on [0, pi/2],
/// y(eta(theta - pi/2)) on [pi/2, pi], extended oddly and then positively
/// homogeneously.
struct RadonPlaneMap {
  std::shared_ptr<const EtaTable> eta;
};

/// R(x, y, ...) = (S x, T y, ...) between l-infinity sums.
struct SumMap {
  std::vector<PreserverMap> parts;
};

struct IdentityMap {
  NormedSpace space;
};

/// A norm-preserving homogeneous bicontinuous orthogonality preserver.
class PreserverMap {
 public:
  static PreserverMap radon_plane(EtaTable table);
  static PreserverMap identity(NormedSpace space);
  static PreserverMap sum(std::vector<PreserverMap> parts);

  const NormedSpace& source() const noexcept { return source_; }
  const NormedSpace& target() const noexcept { return target_; }

  const RadonPlaneMap* as_radon_plane() const noexcept {
    return std::get_if<RadonPlaneMap>(&rep_);
  }
  const SumMap* as_sum() const noexcept { return std::get_if<SumMap>(&rep_); }
  const IdentityMap* as_identity() const noexcept { return std::get_if<IdentityMap>(&rep_); }

  Vector apply(const Vector& v) const;
  Vector apply_inverse(const Vector& w) const;

 private:
  using Rep = std::variant<RadonPlaneMap, SumMap, IdentityMap>;
  PreserverMap(Rep rep, NormedSpace source, NormedSpace target);

  Rep rep_;
  NormedSpace source_;
  NormedSpace target_;
};

/// Tabulates eta on grid_size + 1 nodes and wraps it as a map from the
/// Euclidean plane onto `plane`.
PreserverMap build_preserver(const NormedSpace& plane, std::size_t grid_size = 1024);

/// Errors: kDimensionMismatch.
Vector apply_preserver(const PreserverMap& map, const Vector& v);
Vector apply_inverse(const PreserverMap& map, const Vector& w);

/// Errors: kEmptyParts for fewer than two parts.
PreserverMap compose_inf_sum(std::vector<PreserverMap> parts);

struct VerificationReport {
  std::size_t samples = 0;
  std::size_t disagreements = 0;        // orthogonality, either direction
  std::size_t acute_disagreements = 0;  // acute-angle relation
  std::size_t boundary_excluded = 0;
  std::size_t orthogonal_pairs = 0;     // compared pairs orthogonal in the source
  double max_norm_error = 0.0;
  double max_homog_error = 0.0;
  double max_inverse_error = 0.0;
  double continuity_modulus = 0.0;
  std::uint64_t seed = 0;
  double margin = kDefaultMargin;
  bool pass = false;
};

inline constexpr double kNormErrorTolerance = 1e-9;
inline constexpr double kHomogeneityTolerance = 1e-12;
inline constexpr double kInverseTolerance = 1e-8;

/// Seeded sampling check of the preserver properties. Sample i draws from
/// substream i and is one of: a random pair, a pair orthogonal in the source,
/// or a pair orthogonal in the target pulled back through the inverse.
/// Pairs whose directional bounds fall within kBoundaryBandFactor * margin of
/// a decision threshold (source or image) are excluded and counted.
VerificationReport verify_preserver(const PreserverMap& map, std::size_t n_samples,
                                    double margin, std::uint64_t seed);

std::string to_json(const VerificationReport& report);

}  // namespace bjorth

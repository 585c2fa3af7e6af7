#pragma once

namespace bjorth {

// Zero-vector test: a vector whose norm is at most this is treated as 0.
inline constexpr double kTauZero = 1e-12;
// Certification slack for support functionals: f(x) = ||x|| and f(v) <= ||v||.
inline constexpr double kTauSup = 1e-9;
// Relative tie band for max-type norms (LInf coordinates, l-infinity sum parts).
inline constexpr double kTauTie = 1e-9;
// Default decision margin for angle classification (relative to ||y||).
inline constexpr double kDefaultMargin = 1e-9;
// Width of the exclusion band around a decision threshold, as a multiple of
// the margin.
inline constexpr double kBoundaryBandFactor = 10.0;

// Line-minimization oracles compare a minimum value against ||x||. Their
// deficit shrinks like the square (or cube, near Day-James axes) of the
// directional bound, so cross-checks against the support-functional test run
// the oracle at a near-roundoff margin and exclude samples whose directional
// bound is below kOracleResolutionBand.
inline constexpr double kOracleMargin = 1e-13;
inline constexpr double kOracleResolutionBand = 1e-3;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kHalfPi = kPi / 2.0;

}  // namespace bjorth

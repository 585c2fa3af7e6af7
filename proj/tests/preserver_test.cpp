#include <gtest/gtest.h>

#include <cmath>

#include "bjorth/errors.hpp"
#include "bjorth/orthogonality.hpp"
#include "bjorth/preserver.hpp"
#include "support.hpp"

using namespace bjorth;

namespace {

const NormedSpace kE = NormedSpace::euclidean_plane();
const NormedSpace kDj = NormedSpace::day_james(3, 1.5);

// Closed form for a conjugate Day-James plane: on the first quadrant the
// support functional at x(theta) is proportional to (cos^{p-1}, sin^{p-1}).
double eta_closed_form(double p, double theta) {
  return std::atan2(std::pow(std::cos(theta), p - 1), -std::pow(std::sin(theta), p - 1));
}

const PreserverMap& dj_map() {
  static const PreserverMap map = build_preserver(kDj, 1024);
  return map;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(SolveEta, Endpoints) {
  EXPECT_EQ(solve_eta(kDj, 0.0), kHalfPi);
  EXPECT_EQ(solve_eta(kDj, kHalfPi), kPi);
}

TEST(SolveEta, FrozenValues) {
  EXPECT_NEAR(solve_eta(kDj, kPi / 4), 3 * kPi / 4, 1e-12);
  // pi - atan(3), from the closed form.
  EXPECT_NEAR(solve_eta(kDj, kPi / 6), 1.8925468811915387, 1e-12);
  EXPECT_NEAR(solve_eta(kE, kPi / 4), 3 * kPi / 4, 1e-15);
}

TEST(SolveEta, MatchesClosedForm) {
  for (double p : {1.5, 2.0, 3.0, 4.0, 7.0}) {
    const auto plane = NormedSpace::day_james(p, p / (p - 1));
    for (int k = 1; k < 200; ++k) {
      const double theta = kHalfPi * k / 200.0;
      EXPECT_NEAR(solve_eta(plane, theta), eta_closed_form(p, theta), 1e-12) << p << " " << theta;
    }
  }
}

TEST(SolveEta, PairIsOrthogonalByLineOracle) {
  const double theta = kPi / 4;
  const Vector y = unit_vector_at_angle(kDj, theta);
  const Vector z = unit_vector_at_angle(kDj, solve_eta(kDj, theta));
  EXPECT_LT(oracle_deficit(kDj, y, z, false), 1e-14);
  EXPECT_LT(oracle_deficit(kDj, z, y, false), 1e-14);
}

TEST(SolveEta, Errors) {
  EXPECT_EQ(code_of([] { solve_eta(NormedSpace::lp(2, 3), 0.3); }), ErrorCode::kNotRadonPlane);
  EXPECT_EQ(code_of([] { solve_eta(NormedSpace::day_james(3, 2), 0.3); }),
            ErrorCode::kNotRadonPlane);
  EXPECT_EQ(code_of([] { solve_eta(kDj, -0.1); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { solve_eta(kDj, 2.0); }), ErrorCode::kInvalidArgument);
}

TEST(EtaTable, Invariants) {
  const EtaTable t = EtaTable::build(kDj, 1024);
  ASSERT_EQ(t.grid().size(), 1025u);
  EXPECT_NEAR(t.values().front(), kHalfPi, 1e-10);
  EXPECT_NEAR(t.values().back(), kPi, 1e-10);
  for (std::size_t k = 1; k < t.values().size(); ++k) {
    ASSERT_GT(t.values()[k], t.values()[k - 1]);
    ASSERT_GT(t.grid()[k], t.grid()[k - 1]);
  }
  for (std::size_t k = 0; k < t.grid().size(); ++k) {
    const Vector y = unit_vector_at_angle(kDj, t.grid()[k]);
    const Vector z = unit_vector_at_angle(kDj, t.values()[k]);
    ASSERT_TRUE(is_bj_orthogonal(kDj, y, z, 1e-8));
    ASSERT_TRUE(is_mutually_orthogonal(kDj, y, z, 1e-8));
    ASSERT_LE(t.residuals()[k], 1e-8);
  }
}

TEST(EtaTable, GridTooCoarse) {
  EXPECT_EQ(code_of([] { EtaTable::build(kDj, 16); }), ErrorCode::kGridTooCoarse);
  EXPECT_NO_THROW(EtaTable::build(kDj, 64));
}

TEST(EtaTable, OffGridEvaluationIsSolvedNotInterpolated) {
  const EtaTable t = EtaTable::build(kDj, 64);
  for (int k = 0; k < 500; ++k) {
    const double theta = kHalfPi * (k + 0.37) / 500.0;
    EXPECT_NEAR(t.eval(theta), eta_closed_form(3, theta), 1e-13);
  }
}

TEST(EtaTable, CsvRoundTripAndValidation) {
  const EtaTable t = EtaTable::build(kDj, 64);
  const std::string csv = t.to_csv();
  EXPECT_EQ(csv.rfind("theta,eta,residual\n", 0), 0u);
  const EtaTable back = EtaTable::from_csv(kDj, csv);
  ASSERT_EQ(back.values().size(), t.values().size());
  for (std::size_t k = 0; k < t.values().size(); ++k) {
    EXPECT_EQ(back.values()[k], t.values()[k]);
    EXPECT_EQ(back.grid()[k], t.grid()[k]);
  }
  EXPECT_EQ(back.to_csv(), csv);

  // Swap rows 10 and 11 of the CSV: values no longer increase.
  const EtaTable bad = t.with_swapped_entries(10, 11);
  EXPECT_EQ(code_of([&] { EtaTable::from_csv(kDj, bad.to_csv()); }),
            ErrorCode::kMonotonicityViolation);
  EXPECT_EQ(code_of([] { EtaTable::from_csv(kDj, "a,b,c\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { EtaTable::from_csv(kDj, "theta,eta,residual\n0,x,0\n"); }),
            ErrorCode::kParseError);
}

TEST(Preserver, BasicExamples) {
  const auto& m = dj_map();
  EXPECT_EQ(m.source(), kE);
  EXPECT_EQ(m.target(), kDj);
  EXPECT_EQ(apply_preserver(m, {0, 0}), (Vector{0, 0}));
  EXPECT_EQ(apply_inverse(m, {0, 0}), (Vector{0, 0}));
  EXPECT_NEAR(kDj.norm(apply_preserver(m, {3, 4})), 5.0, 5e-9);
  const Vector v{-2.5, 0.75};
  EXPECT_EQ(apply_preserver(m, -v), -apply_preserver(m, v));
  EXPECT_EQ(code_of([&] { apply_preserver(m, {1, 2, 3}); }), ErrorCode::kDimensionMismatch);
}

TEST(Preserver, RealizesTheAngleMap) {
  const auto& m = dj_map();
  for (double theta : {0.1, 0.7, 1.3}) {
    // First quadrant maps radially; second quadrant through eta.
    const Vector a = m.apply({std::cos(theta), std::sin(theta)});
    const Vector ya = unit_vector_at_angle(kDj, theta);
    EXPECT_LT(max_abs_diff(a, ya), 1e-15);
    const Vector b = m.apply({std::cos(theta + kHalfPi), std::sin(theta + kHalfPi)});
    const Vector yb = unit_vector_at_angle(kDj, eta_closed_form(3, theta));
    EXPECT_LT(max_abs_diff(b, yb), 1e-12);
  }
}

TEST(Preserver, EuclideanTargetIsIdentity) {
  const PreserverMap m = build_preserver(kE, 64);
  bjtest::Gen gen(9);
  for (int i = 0; i < 1000; ++i) {
    const Vector v = gen.vector(2);
    EXPECT_LT(max_abs_diff(m.apply(v), v), 1e-9 * euclidean_norm(v));
  }
}

TEST(Preserver, RoundTrips) {
  const auto& m = dj_map();
  bjtest::Gen gen(10);
  for (int i = 0; i < 1000; ++i) {
    const Vector v = gen.vector(2);
    EXPECT_LT(max_abs_diff(m.apply_inverse(m.apply(v)), v), 1e-8 * euclidean_norm(v));
    Vector w = gen.vector(2);
    w *= 1.0 / kDj.norm(w);
    EXPECT_LT(max_abs_diff(m.apply(m.apply_inverse(w)), w), 1e-8);
  }
}

TEST(Preserver, OddAndHomogeneous) {
  const auto& m = dj_map();
  bjtest::Gen gen(11);
  for (int i = 0; i < 1000; ++i) {
    const Vector v = gen.vector(2);
    const double c = gen.uniform(-10, 10);
    const Vector lhs = m.apply(c * v);
    const Vector rhs = c * m.apply(v);
    EXPECT_LE(max_abs_diff(lhs, rhs), 1e-12 * std::max(1.0, euclidean_norm(rhs)));
    EXPECT_EQ(m.apply(-v), -m.apply(v));
  }
}

TEST(Preserver, NormPreservedOnTheCircle) {
  const auto& m = dj_map();
  for (int k = 0; k < 3600; ++k) {
    const double a = 2 * kPi * k / 3600.0;
    EXPECT_NEAR(kDj.norm(m.apply({std::cos(a), std::sin(a)})), 1.0, 1e-9);
  }
}

TEST(Preserver, SumMaps) {
  const auto id = compose_inf_sum({PreserverMap::identity(kE), PreserverMap::identity(NormedSpace::linf(1))});
  EXPECT_EQ(id.apply({1, 2, 3}), (Vector{1, 2, 3}));
  EXPECT_EQ(code_of([] { compose_inf_sum({PreserverMap::identity(kE)}); }), ErrorCode::kEmptyParts);

  const auto lifted = compose_inf_sum({dj_map(), PreserverMap::identity(NormedSpace::linf(2))});
  EXPECT_EQ(lifted.source().dim(), 4u);
  bjtest::Gen gen(12);
  for (int i = 0; i < 500; ++i) {
    const Vector v = gen.vector(4);
    const Vector w = lifted.apply(v);
    EXPECT_NEAR(lifted.target().norm(w), lifted.source().norm(v), 1e-9 * lifted.source().norm(v));
    EXPECT_EQ(w.slice(2, 2), v.slice(2, 2));
    EXPECT_LT(max_abs_diff(lifted.apply_inverse(w), v), 1e-8 * euclidean_norm(v));
  }
}

TEST(Verify, IdentityPasses) {
  const auto r = verify_preserver(PreserverMap::identity(kE), 2000, kDefaultMargin, 1);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.disagreements, 0u);
  EXPECT_EQ(r.samples, 2000u);
}

TEST(Verify, DayJamesMapPasses) {
  const auto r = verify_preserver(dj_map(), 3000, kDefaultMargin, 2);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.disagreements, 0u);
  EXPECT_EQ(r.acute_disagreements, 0u);
  EXPECT_GT(r.orthogonal_pairs, 500u);
  EXPECT_LE(r.max_norm_error, 1e-9);
  EXPECT_LE(r.max_homog_error, 1e-12);
  EXPECT_LE(r.max_inverse_error, 1e-8);
  EXPECT_GT(r.continuity_modulus, 0.0);
}

TEST(Verify, SwappedEntriesFail) {
  const EtaTable t = EtaTable::build(kDj, 1024);
  for (auto [i, j] : {std::pair<std::size_t, std::size_t>{100, 101}, {3, 900}, {511, 513}}) {
    const auto bad = PreserverMap::radon_plane(t.with_swapped_entries(i, j));
    const auto r = verify_preserver(bad, 10000, kDefaultMargin, 7);
    EXPECT_FALSE(r.pass) << i << "," << j;
    EXPECT_GE(r.disagreements, 1u) << i << "," << j;
  }
}

TEST(Verify, ReportsAreDeterministic) {
  const auto a = to_json(verify_preserver(dj_map(), 500, kDefaultMargin, 3));
  const auto b = to_json(verify_preserver(dj_map(), 500, kDefaultMargin, 3));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"seed\": 3"), std::string::npos);
  EXPECT_NE(a.find("\"pass\": true"), std::string::npos);
}

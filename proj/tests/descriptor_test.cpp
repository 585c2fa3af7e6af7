#include <gtest/gtest.h>

#include "bjorth/descriptor.hpp"
#include "bjorth/errors.hpp"
#include "support.hpp"

using namespace bjorth;

namespace {

ErrorCode parse_error_code(std::string_view text) {
  try {
    validate_space(parse_compact(text));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted " << text;
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(Descriptor, CompactForms) {
  EXPECT_EQ(validate_space(parse_compact("lp:2:3")), NormedSpace::lp(2, 3));
  EXPECT_EQ(validate_space(parse_compact("linf:4")), NormedSpace::linf(4));
  const auto dj = validate_space(parse_compact("dayjames:3:1.5"));
  EXPECT_EQ(dj, NormedSpace::day_james(3, 1.5));
  EXPECT_TRUE(dj.radon_candidate());
  const auto sum = validate_space(parse_compact("sum(lp:2:2,linf:3)"));
  EXPECT_EQ(sum.dim(), 5u);
  EXPECT_EQ(validate_space(parse_compact("sum(dayjames:3:1.5,sum(linf:1,lp:3:4))")).dim(), 6u);
}

TEST(Descriptor, CompactErrors) {
  EXPECT_EQ(parse_error_code("lp:2:0.5"), ErrorCode::kInvalidExponent);
  EXPECT_EQ(parse_error_code("lp:0:2"), ErrorCode::kBadDimension);
  EXPECT_EQ(parse_error_code("sum(linf:2)"), ErrorCode::kEmptySum);
  EXPECT_EQ(parse_error_code("lq:2:2"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error_code("lp:2"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error_code("lp:2:3x"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error_code("sum(lp:2:2,linf:1"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error_code(""), ErrorCode::kParseError);
}

TEST(Descriptor, ParseErrorsReportPosition) {
  try {
    parse_compact("sum(lp:2:2,linf:x)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("position 16"), std::string::npos) << e.what();
  }
}

TEST(Descriptor, JsonForms) {
  EXPECT_EQ(validate_space(parse_json(R"({"type":"lp","dim":2,"p":3.0})")), NormedSpace::lp(2, 3));
  EXPECT_EQ(validate_space(parse_json(R"({"type":"linf","dim":4})")), NormedSpace::linf(4));
  EXPECT_EQ(validate_space(parse_json(R"({"type":"day_james","p":3.0,"q":1.5})")),
            NormedSpace::day_james(3, 1.5));
  const auto sum = validate_space(parse_json(
      R"({"type":"inf_sum","parts":[{"type":"lp","dim":2,"p":2},{"type":"linf","dim":3}]})"));
  EXPECT_EQ(sum, NormedSpace::inf_sum({NormedSpace::lp(2, 2), NormedSpace::linf(3)}));
}

TEST(Descriptor, JsonErrors) {
  auto code = [](std::string_view text) {
    try {
      validate_space(parse_json(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code("{not json"), ErrorCode::kParseError);
  EXPECT_EQ(code(R"({"type":"lp","dim":2})"), ErrorCode::kParseError);
  EXPECT_EQ(code(R"({"type":"cube","dim":2})"), ErrorCode::kParseError);
  EXPECT_EQ(code(R"({"type":"lp","dim":-1,"p":2})"), ErrorCode::kBadDimension);
  EXPECT_EQ(code(R"({"type":"inf_sum","parts":[]})"), ErrorCode::kEmptySum);
  EXPECT_EQ(code(R"({"type":"day_james","p":1,"q":2})"), ErrorCode::kInvalidExponent);
}

TEST(DescriptorProperty, RoundTrips) {
  bjtest::Gen gen(55);
  for (int i = 0; i < 500; ++i) {
    const auto s = gen.space();
    EXPECT_EQ(validate_space(parse_compact(to_compact(s))), s) << to_compact(s);
    EXPECT_EQ(validate_space(parse_json(to_json(s))), s) << to_json(s);
  }
}

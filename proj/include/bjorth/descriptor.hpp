#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bjorth/space.hpp"

namespace bjorth {

/// Unchecked description of a space, as read from a compact string or a JSON
/// document. Fields not used by `type` are ignored.
struct SpaceDescriptor {
  std::string type;  // "lp", "linf", "day_james" or "inf_sum"
  std::optional<long long> dim;
  std::optional<double> p;
  std::optional<double> q;
  std::vector<SpaceDescriptor> parts;
};

/// Checks a descriptor and builds the space. Errors: kInvalidExponent,
/// kEmptySum, kBadDimension, kParseError (unknown type or missing field).
NormedSpace validate_space(const SpaceDescriptor& desc);

/// Compact form: `lp:2:3`, `linf:4`, `dayjames:3:1.5`,
/// `sum(dayjames:3:1.5,linf:2)`. Parse errors report the character offset.
SpaceDescriptor parse_compact(std::string_view text);

/// JSON form: {"type":"lp","dim":2,"p":3.0} | {"type":"linf","dim":4} |
/// {"type":"day_james","p":3.0,"q":1.5} | {"type":"inf_sum","parts":[...]}.
SpaceDescriptor parse_json(std::string_view text);

std::string to_compact(const NormedSpace& space);
std::string to_json(const NormedSpace& space);

}  // namespace bjorth

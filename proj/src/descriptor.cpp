#include "bjorth/descriptor.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include <json.hpp>

#include "bjorth/errors.hpp"

namespace bjorth {

namespace {

std::string fmt_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

[[noreturn]] void parse_fail(std::size_t pos, const std::string& msg) {
  throw Error(ErrorCode::kParseError, "at position " + std::to_string(pos) + ": " + msg);
}

class CompactParser {
 public:
  explicit CompactParser(std::string_view text) : text_(text) {}

  SpaceDescriptor parse() {
    SpaceDescriptor d = space();
    if (pos_ != text_.size()) parse_fail(pos_, "trailing characters");
    return d;
  }

 private:
  SpaceDescriptor space() {
    const std::size_t start = pos_;
    const std::string word = identifier();
    SpaceDescriptor d;
    if (word == "lp") {
      d.type = "lp";
      expect(':');
      d.dim = integer();
      expect(':');
      d.p = real();
    } else if (word == "linf") {
      d.type = "linf";
      expect(':');
      d.dim = integer();
    } else if (word == "dayjames") {
      d.type = "day_james";
      expect(':');
      d.p = real();
      expect(':');
      d.q = real();
    } else if (word == "sum") {
      d.type = "inf_sum";
      expect('(');
      d.parts.push_back(space());
      while (peek() == ',') {
        ++pos_;
        d.parts.push_back(space());
      }
      expect(')');
    } else {
      parse_fail(start, "unknown space '" + word + "'");
    }
    return d;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) parse_fail(start, "expected a space name");
    return std::string(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) parse_fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  long long integer() {
    long long value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) parse_fail(pos_, "expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  double real() {
    double value = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) parse_fail(pos_, "expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

SpaceDescriptor from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw Error(ErrorCode::kParseError, "space object needs a string \"type\"");
  }
  SpaceDescriptor d;
  d.type = j["type"].get<std::string>();
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer()) {
      throw Error(ErrorCode::kParseError, "\"dim\" must be an integer");
    }
    d.dim = j["dim"].get<long long>();
  }
  for (const char* key : {"p", "q"}) {
    if (j.contains(key)) {
      if (!j[key].is_number()) {
        throw Error(ErrorCode::kParseError, std::string("\"") + key + "\" must be a number");
      }
      (key[0] == 'p' ? d.p : d.q) = j[key].get<double>();
    }
  }
  if (j.contains("parts")) {
    if (!j["parts"].is_array()) throw Error(ErrorCode::kParseError, "\"parts\" must be an array");
    for (const auto& part : j["parts"]) d.parts.push_back(from_json(part));
  }
  return d;
}

template <typename T>
T required(const std::optional<T>& field, const std::string& type, const char* name) {
  if (!field) {
    throw Error(ErrorCode::kParseError, type + " space is missing \"" + name + "\"");
  }
  return *field;
}

std::size_t checked_dim(long long dim) {
  if (dim < 1) {
    throw Error(ErrorCode::kBadDimension, "dimension must be >= 1, got " + std::to_string(dim));
  }
  return static_cast<std::size_t>(dim);
}

nlohmann::ordered_json json_of(const NormedSpace& space) {
  nlohmann::ordered_json j;
  if (const auto* s = space.as_lp()) {
    j["type"] = "lp";
    j["dim"] = s->dim;
    j["p"] = s->p;
  } else if (const auto* s = space.as_linf()) {
    j["type"] = "linf";
    j["dim"] = s->dim;
  } else if (const auto* s = space.as_day_james()) {
    j["type"] = "day_james";
    j["p"] = s->p;
    j["q"] = s->q;
  } else {
    j["type"] = "inf_sum";
    j["parts"] = nlohmann::ordered_json::array();
    for (const auto& part : space.as_inf_sum()->parts) j["parts"].push_back(json_of(part));
  }
  return j;
}

}  // namespace

NormedSpace validate_space(const SpaceDescriptor& d) {
  if (d.type == "lp") {
    return NormedSpace::lp(checked_dim(required(d.dim, d.type, "dim")),
                           required(d.p, d.type, "p"));
  }
  if (d.type == "linf") {
    return NormedSpace::linf(checked_dim(required(d.dim, d.type, "dim")));
  }
  if (d.type == "day_james") {
    return NormedSpace::day_james(required(d.p, d.type, "p"), required(d.q, d.type, "q"));
  }
  if (d.type == "inf_sum") {
    std::vector<NormedSpace> parts;
    for (const auto& part : d.parts) parts.push_back(validate_space(part));
    return NormedSpace::inf_sum(std::move(parts));
  }
  throw Error(ErrorCode::kParseError, "unknown space type '" + d.type + "'");
}

SpaceDescriptor parse_compact(std::string_view text) { return CompactParser(text).parse(); }

SpaceDescriptor parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                "at position " + std::to_string(e.byte) + ": invalid JSON");
  }
  return from_json(j);
}

std::string to_compact(const NormedSpace& space) {
  if (const auto* s = space.as_lp()) {
    return "lp:" + std::to_string(s->dim) + ":" + fmt_real(s->p);
  }
  if (const auto* s = space.as_linf()) return "linf:" + std::to_string(s->dim);
  if (const auto* s = space.as_day_james()) {
    return "dayjames:" + fmt_real(s->p) + ":" + fmt_real(s->q);
  }
  std::string out = "sum(";
  const auto& parts = space.as_inf_sum()->parts;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += to_compact(parts[i]);
  }
  return out + ")";
}

std::string to_json(const NormedSpace& space) { return json_of(space).dump(); }

}  // namespace bjorth

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bjorth {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// %.17g, which round-trips every double. Non-finite values become "null"
/// in JSON output and "nan"/"inf" in CSV.
std::string format_real(double x);

/// Flat JSON object with keys in insertion order. Numbers are written with
/// 17 significant digits so artifacts are byte-reproducible.
class JsonObject {
 public:
  JsonObject& add(std::string_view key, double value);
  JsonObject& add(std::string_view key, std::uint64_t value);
  JsonObject& add(std::string_view key, int value) {
    return add(key, static_cast<std::uint64_t>(value));
  }
  JsonObject& add(std::string_view key, bool value);
  JsonObject& add(std::string_view key, std::string_view value);
  JsonObject& add(std::string_view key, const char* value) {
    return add(key, std::string_view(value));
  }
  /// `json` is inserted verbatim.
  JsonObject& add_raw(std::string_view key, std::string json);

  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string json_quote(std::string_view s);

/// CSV with a header row; every cell is a real formatted by format_real.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows);

}  // namespace bjorth

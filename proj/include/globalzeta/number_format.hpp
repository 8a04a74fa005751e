#pragma once

#include <array>
#include <charconv>
#include <string>

namespace gz {

/// 17 significant digits (printf "%.17g"), enough to round-trip any double.
/// Negative zero prints as "0".
inline std::string format_real(double value) {
  if (value == 0.0) value = 0.0;
  std::array<char, 64> buffer{};
  const auto [ptr, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, std::chars_format::general, 17);
  return std::string(buffer.data(), ec == std::errc{} ? ptr : buffer.data());
}

}  // namespace gz

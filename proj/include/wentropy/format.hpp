#pragma once

// Locale-independent fixed-point formatting for table output.

#include <charconv>
#include <string>
#include <system_error>

namespace wentropy {

inline std::string format_fixed(double value, int precision = 10) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, precision);
  if (res.ec != std::errc{}) return "nan";
  return {buf, res.ptr};
}

}  // namespace wentropy

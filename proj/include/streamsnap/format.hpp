#pragma once

#include <charconv>
#include <string>

namespace streamsnap {

// Shortest decimal form that round-trips the exact double value; keeps all
// serialized output byte-stable across runs.
inline std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace streamsnap

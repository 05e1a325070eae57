#pragma once

#include <charconv>
#include <string>

namespace sl2 {

/// Shortest round-trip decimal form, locale-independent, so repeated runs
/// emit byte-identical files.
inline std::string fmt_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace sl2

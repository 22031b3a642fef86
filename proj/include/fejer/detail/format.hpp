#pragma once

#include <charconv>
#include <string>

namespace fejer::detail {

/// Shortest decimal text that reads back to exactly `v`.
inline std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

}  // namespace fejer::detail

#include "tquery/scalar.hpp"

#include <charconv>
#include <cstdio>

namespace tquery {

std::string float_repr(double d) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  std::string s(buf, end);
  if (ec != std::errc{}) {
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    s = buf;
  }
  for (char c : s) {
    if (c == '.' || c == 'e' || c == 'E' || c == 'n' || c == 'i') return s;
  }
  return s + ".0";
}

std::string Scalar::to_text() const {
  switch (kind()) {
    case Kind::Null:
      return "null";
    case Kind::Bool:
      return as_bool() ? "true" : "false";
    case Kind::Int:
      return std::to_string(as_int());
    case Kind::Float:
      return float_repr(as_float());
    case Kind::String:
      return as_string();
  }
  return {};
}

}  // namespace tquery

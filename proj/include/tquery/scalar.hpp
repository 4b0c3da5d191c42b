#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace tquery {

/// The null value. A distinguished scalar, not the absence of one; it never
/// compares equal to false, 0, or the empty string.
struct NullValue {
  bool operator==(const NullValue&) const = default;
};

/// Root values of trees: null, boolean, 64-bit integer, double, or text.
/// Equality is strict per alternative — an integer never equals a float,
/// a boolean never equals an integer.
class Scalar {
 public:
  enum class Kind { Null, Bool, Int, Float, String };

  Scalar() : value_(NullValue{}) {}
  Scalar(bool b) : value_(b) {}
  Scalar(int v) : value_(static_cast<std::int64_t>(v)) {}
  Scalar(std::int64_t v) : value_(v) {}
  Scalar(double v) : value_(v) {}
  Scalar(const char* s) : value_(std::string(s)) {}
  Scalar(std::string s) : value_(std::move(s)) {}

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  bool is_null() const { return kind() == Kind::Null; }
  bool is_bool() const { return kind() == Kind::Bool; }
  bool is_int() const { return kind() == Kind::Int; }
  bool is_float() const { return kind() == Kind::Float; }
  bool is_string() const { return kind() == Kind::String; }

  bool as_bool() const { return std::get<bool>(value_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(value_); }
  double as_float() const { return std::get<double>(value_); }
  const std::string& as_string() const { return std::get<std::string>(value_); }

  bool operator==(const Scalar&) const = default;

  /// Display form: null, true/false, decimal numbers, unquoted text.
  std::string to_text() const;

 private:
  std::variant<NullValue, bool, std::int64_t, double, std::string> value_;
};

/// Shortest decimal form of d that parses back to the same double, always
/// carrying a '.' or exponent so it cannot be mistaken for an integer.
std::string float_repr(double d);

}  // namespace tquery

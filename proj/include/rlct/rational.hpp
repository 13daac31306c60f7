#ifndef RLCT_RATIONAL_HPP
#define RLCT_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "rlct/errors.hpp"

namespace rlct {

/// Exact rational number, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q" or "p". Throws ParseError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written with "/1".
std::string to_string(const Rational& r);

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);
bool is_integer(const Rational& r);

/// Nearest double, correctly rounded (ties to even).
double to_double(const Rational& r);

/// Exact rational value of a finite double.
Rational from_double(double x);

/// A threshold that may be +infinity (e.g. rlct of a function without real
/// zeros). Serialized as "infinity".
class Threshold {
 public:
  Threshold() = default;  // infinite
  Threshold(Rational value) : value_(std::move(value)) {}

  static Threshold infinity() { return Threshold{}; }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const Threshold& a, const Threshold& b) = default;
  friend bool operator<(const Threshold& a, const Threshold& b);
  friend bool operator<=(const Threshold& a, const Threshold& b) { return !(b < a); }

 private:
  std::optional<Rational> value_;
};

std::string to_string(const Threshold& t);
Threshold parse_threshold(std::string_view text);

}  // namespace rlct

#endif  // RLCT_RATIONAL_HPP

#include "rlct/rational.hpp"

#include <cctype>
#include <cmath>

namespace rlct {

namespace mp = boost::multiprecision;

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw ParseError("malformed rational \"" + std::string(whole) + "\"");
  }
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("malformed rational \"" + std::string(whole) + "\"");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  BigInt num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("denominator must be unsigned in \"" + std::string(text) + "\"");
  }
  BigInt den = parse_integer(den_text, text);
  if (den == 0) {
    throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

BigInt floor_of(const Rational& r) {
  BigInt q = mp::numerator(r) / mp::denominator(r);  // truncates toward zero
  if (r < 0 && q * mp::denominator(r) != mp::numerator(r)) {
    q -= 1;
  }
  return q;
}

BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

bool is_integer(const Rational& r) { return mp::denominator(r) == 1; }

double to_double(const Rational& r) {
  if (r == 0) {
    return 0.0;
  }
  const bool negative = r < 0;
  const BigInt a = mp::abs(mp::numerator(r));
  const BigInt b = mp::denominator(r);

  const auto shifted_quotient = [&](long shift, BigInt& rem) {
    BigInt num = shift >= 0 ? BigInt(a << shift) : a;
    BigInt den = shift >= 0 ? b : BigInt(b << -shift);
    BigInt q;
    mp::divide_qr(num, den, q, rem);
    return q;
  };

  // Choose shift so the quotient has exactly 54 bits: 53 mantissa + 1 round bit.
  long shift = 53 - (static_cast<long>(mp::msb(a)) - static_cast<long>(mp::msb(b)));
  BigInt rem;
  BigInt q = shifted_quotient(shift, rem);
  const BigInt lower = BigInt(1) << 53;
  if (q < lower) {
    ++shift;
    q = shifted_quotient(shift, rem);
  }
  BigInt mantissa = q >> 1;
  const bool round_bit = mp::bit_test(q, 0);
  const bool sticky = rem != 0;
  if (round_bit && (sticky || mp::bit_test(mantissa, 0))) {
    mantissa += 1;
  }
  const double value = std::ldexp(mantissa.convert_to<double>(), static_cast<int>(1 - shift));
  return negative ? -value : value;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("cannot convert non-finite double to Rational");
  }
  if (x == 0.0) {
    return Rational(0);
  }
  int exponent = 0;
  const double frac = std::frexp(x, &exponent);  // x = frac * 2^exponent, 0.5 <= |frac| < 1
  const auto mantissa = static_cast<std::int64_t>(std::ldexp(frac, 53));
  exponent -= 53;
  Rational result(mantissa);
  if (exponent >= 0) {
    result *= Rational(BigInt(1) << exponent);
  } else {
    result /= Rational(BigInt(1) << -exponent);
  }
  return result;
}

const Rational& Threshold::value() const {
  if (!value_) {
    throw std::logic_error("Threshold::value() called on an infinite threshold");
  }
  return *value_;
}

bool operator<(const Threshold& a, const Threshold& b) {
  if (a.is_infinite()) {
    return false;
  }
  if (b.is_infinite()) {
    return true;
  }
  return a.value() < b.value();
}

std::string to_string(const Threshold& t) {
  return t.is_infinite() ? std::string("infinity") : to_string(t.value());
}

Threshold parse_threshold(std::string_view text) {
  if (text == "infinity") {
    return Threshold::infinity();
  }
  return Threshold(parse_rational(text));
}

}  // namespace rlct

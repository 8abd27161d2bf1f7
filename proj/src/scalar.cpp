#include "qdeform/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "qdeform/error.hpp"

namespace qdeform {

namespace {

using Int = Scalar::Int;
using Rat = Scalar::Rat;

int sign_of(const Int& x) { return x.sign(); }
int sign_of(const Rat& x) { return x.sign(); }

}  // namespace

Mode Scalar::mode() const {
  switch (v_.index()) {
    case 0: return Mode::ExactInt;
    case 1: return Mode::ExactRat;
    default: return Mode::Float;
  }
}

bool Scalar::is_integer() const {
  switch (mode()) {
    case Mode::ExactInt: return true;
    case Mode::ExactRat: return denominator(as_rat()) == 1;
    case Mode::Float: {
      double d = as_float();
      return std::isfinite(d) && d == std::trunc(d);
    }
  }
  return false;
}

bool Scalar::is_zero() const {
  switch (mode()) {
    case Mode::ExactInt: return as_int().is_zero();
    case Mode::ExactRat: return numerator(as_rat()).is_zero();
    case Mode::Float: return as_float() == 0.0;
  }
  return false;
}

int Scalar::sign() const {
  switch (mode()) {
    case Mode::ExactInt: return sign_of(as_int());
    case Mode::ExactRat: return sign_of(as_rat());
    case Mode::Float: {
      double d = as_float();
      return d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    }
  }
  return 0;
}

Scalar::Rat Scalar::to_rational() const {
  switch (mode()) {
    case Mode::ExactInt: return Rat(as_int());
    case Mode::ExactRat: return as_rat();
    default: throw DomainError("to_rational: value is not exact");
  }
}

double Scalar::to_double() const {
  switch (mode()) {
    case Mode::ExactInt: return rational_to_double(Rat(as_int()));
    case Mode::ExactRat: return rational_to_double(as_rat());
    case Mode::Float: return as_float();
  }
  return 0.0;
}

std::optional<std::int64_t> Scalar::to_int64() const {
  if (!is_integer()) return std::nullopt;
  Int n;
  switch (mode()) {
    case Mode::ExactInt: n = as_int(); break;
    case Mode::ExactRat: n = numerator(as_rat()); break;
    case Mode::Float: {
      double d = as_float();
      if (std::abs(d) > 9.2e18) return std::nullopt;
      return static_cast<std::int64_t>(d);
    }
  }
  if (n < std::numeric_limits<std::int64_t>::min() ||
      n > std::numeric_limits<std::int64_t>::max())
    return std::nullopt;
  return n.convert_to<std::int64_t>();
}

std::string Scalar::str() const {
  switch (mode()) {
    case Mode::ExactInt:
      return as_int().str();
    case Mode::ExactRat: {
      const Rat& r = as_rat();
      if (denominator(r) == 1) return numerator(r).str();
      return numerator(r).str() + "/" + denominator(r).str();
    }
    case Mode::Float:
      return format_double(as_float());
  }
  return {};
}

Scalar Scalar::abs() const {
  return sign() < 0 ? -(*this) : *this;
}

namespace {

// Applies `op` after promoting both operands to their weakest common mode.
template <typename IntOp, typename RatOp, typename FloatOp>
Scalar binary(const Scalar& a, const Scalar& b, IntOp iop, RatOp rop,
              FloatOp fop) {
  Mode ma = a.mode(), mb = b.mode();
  if (ma == Mode::Float || mb == Mode::Float)
    return Scalar(fop(a.to_double(), b.to_double()));
  if (ma == Mode::ExactRat || mb == Mode::ExactRat)
    return Scalar(rop(a.to_rational(), b.to_rational()));
  return Scalar(iop(a.as_int(), b.as_int()));
}

}  // namespace

Scalar operator-(const Scalar& a) {
  switch (a.mode()) {
    case Mode::ExactInt: return Scalar(Int(-a.as_int()));
    case Mode::ExactRat: return Scalar(Rat(-a.as_rat()));
    case Mode::Float: return Scalar(-a.as_float());
  }
  return Scalar();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return binary(
      a, b, [](const Int& x, const Int& y) { return Int(x + y); },
      [](const Rat& x, const Rat& y) { return Rat(x + y); },
      [](double x, double y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return binary(
      a, b, [](const Int& x, const Int& y) { return Int(x - y); },
      [](const Rat& x, const Rat& y) { return Rat(x - y); },
      [](double x, double y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return binary(
      a, b, [](const Int& x, const Int& y) { return Int(x * y); },
      [](const Rat& x, const Rat& y) { return Rat(x * y); },
      [](double x, double y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_exact() && b.is_zero())
    throw DomainError("division by zero");
  if (a.mode() == Mode::Float || b.mode() == Mode::Float)
    return Scalar(a.to_double() / b.to_double());
  return Scalar(Rat(a.to_rational() / b.to_rational()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mode() == Mode::Float || b.mode() == Mode::Float)
    return a.to_double() == b.to_double();
  return a.to_rational() == b.to_rational();
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.mode() == Mode::Float || b.mode() == Mode::Float)
    return a.to_double() < b.to_double();
  return a.to_rational() < b.to_rational();
}

bool operator<=(const Scalar& a, const Scalar& b) {
  return a < b || a == b;
}

std::pair<Scalar, Scalar> promote(const Scalar& a, const Scalar& b) {
  Mode ma = a.mode(), mb = b.mode();
  if (ma == mb) return {a, b};
  if (ma == Mode::Float || mb == Mode::Float)
    return {Scalar(a.to_double()), Scalar(b.to_double())};
  return {Scalar(a.to_rational()), Scalar(b.to_rational())};
}

bool approx_equal(const Scalar& a, const Scalar& b, const Tolerance& tol) {
  if (a.is_exact() && b.is_exact()) return a.to_rational() == b.to_rational();
  double x = a.to_double(), y = b.to_double();
  if (std::isnan(x) || std::isnan(y)) return false;
  if (x == y) return true;  // covers equal infinities
  double diff = std::abs(x - y);
  return diff <= tol.abs_eps ||
         diff <= tol.rel_eps * std::max(std::abs(x), std::abs(y));
}

Scalar int_pow(const Scalar& base, unsigned long long n) {
  Scalar result(1);
  Scalar acc = base;
  while (n > 0) {
    if (n & 1) result = result * acc;
    n >>= 1;
    if (n) acc = acc * acc;
  }
  return result;
}

Scalar int_pow_signed(const Scalar& base, long long n) {
  if (n >= 0) return int_pow(base, static_cast<unsigned long long>(n));
  if (base.is_exact() && base.is_zero())
    throw DomainError("zero to a negative power");
  return Scalar(1) / int_pow(base, static_cast<unsigned long long>(-n));
}

double rational_to_double(const Scalar::Rat& r) {
  const Int& num = numerator(r);
  const Int& den = denominator(r);
  if (num.is_zero()) return 0.0;
  bool neg = num < 0;
  Int a = neg ? Int(-num) : num;
  Int b = den;

  // Scale so the integer quotient a/b carries 55 significant bits: 53 for
  // the mantissa plus two to decide rounding from the remainder.
  long ea = static_cast<long>(msb(a));
  long eb = static_cast<long>(msb(b));
  long shift = 55 - (ea - eb);
  if (shift > 0)
    a <<= shift;
  else if (shift < 0)
    b <<= -shift;

  Int q, rem;
  divide_qr(a, b, q, rem);
  long qbits = static_cast<long>(msb(q)) + 1;  // 55 or 56

  long drop = qbits - 53;
  Int kept = q >> drop;
  Int dropped = q - (kept << drop);
  Int half = Int(1) << (drop - 1);

  // Round to nearest, ties to even.
  if (dropped > half || (dropped == half && (!rem.is_zero() || bit_test(kept, 0))))
    ++kept;

  long exp2 = -shift + drop;
  if (bit_test(kept, 53)) {  // rounding overflowed into a 54th bit
    kept >>= 1;
    ++exp2;
  }

  double m = kept.convert_to<double>();  // exact: < 2^54
  double result = std::ldexp(m, static_cast<int>(std::clamp(exp2, -4000L, 4000L)));
  return neg ? -result : result;
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Scalar Scalar::parse(std::string_view text) {
  auto fail = [&](const char* what) -> Scalar {
    throw ParseError(std::string("invalid number '") + std::string(text) +
                         "': " + what,
                     0, text.size(), {"number"});
  };
  if (text.empty()) return fail("empty");

  std::string s(text);
  // Fraction form: <int>/<int>.
  if (auto slash = s.find('/'); slash != std::string::npos) {
    try {
      Int num(s.substr(0, slash));
      Int den(s.substr(slash + 1));
      if (den.is_zero()) return fail("zero denominator");
      return Scalar(Rat(num, den));
    } catch (const std::exception&) {
      return fail("malformed fraction");
    }
  }

  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_dot) ++frac_digits;
      seen_digit = true;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) return fail("no digits");
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    auto first = s.data() + i;
    auto res = std::from_chars(first, s.data() + s.size(), exp10);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
      return fail("malformed exponent");
    i = s.size();
  }
  if (i != s.size()) return fail("trailing characters");

  Int mantissa(digits.empty() ? "0" : digits);
  if (neg) mantissa = -mantissa;
  long net = exp10 - frac_digits;
  if (net >= 0) {
    Int value = mantissa * pow(Int(10), static_cast<unsigned>(net));
    return Scalar(value);
  }
  Rat value(mantissa, pow(Int(10), static_cast<unsigned>(-net)));
  if (denominator(value) == 1) return Scalar(Int(numerator(value)));
  return Scalar(value);
}

}  // namespace qdeform

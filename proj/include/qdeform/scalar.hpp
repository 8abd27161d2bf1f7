#ifndef QDEFORM_SCALAR_HPP
#define QDEFORM_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace qdeform {

enum class Mode { ExactInt, ExactRat, Float };

// Three-tier numeric value: arbitrary-precision integer, exact rational
// (always lowest terms, positive denominator), or IEEE double.  Exact modes
// never lose precision; mixing in a Float operand demotes the computation to
// double arithmetic.
class Scalar {
 public:
  using Int = boost::multiprecision::cpp_int;
  using Rat = boost::multiprecision::cpp_rational;

  Scalar() : v_(Int(0)) {}
  Scalar(int x) : v_(Int(x)) {}
  Scalar(long x) : v_(Int(x)) {}
  Scalar(long long x) : v_(Int(x)) {}
  Scalar(Int x) : v_(std::move(x)) {}
  Scalar(Rat x) : v_(std::move(x)) {}
  Scalar(double x) : v_(x) {}

  // Accepts integers ("42"), fractions ("-127/128"), and decimal literals
  // with optional exponent ("1.5", "2e-3"); the first two parse exactly,
  // decimals parse to exact rationals.  Throws ParseError on anything else.
  static Scalar parse(std::string_view text);

  Mode mode() const;
  bool is_exact() const { return mode() != Mode::Float; }
  bool is_integer() const;
  bool is_zero() const;
  int sign() const;  // -1, 0, +1 (Float NaN compares as 0)

  const Int& as_int() const { return std::get<Int>(v_); }
  const Rat& as_rat() const { return std::get<Rat>(v_); }
  double as_float() const { return std::get<double>(v_); }

  // Exact value as a rational; precondition: is_exact().
  Rat to_rational() const;
  // Nearest double (round half to even for exact values).
  double to_double() const;
  // Exact integral value if it fits in a signed 64-bit; nullopt otherwise.
  std::optional<std::int64_t> to_int64() const;

  // "1048575", "-127/128" (denominator 1 prints as an integer), or the
  // shortest round-trip decimal for Float values.
  std::string str() const;

  Scalar abs() const;

  friend Scalar operator-(const Scalar& a);
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  // Exact division promotes integers to rationals; division by exact zero
  // throws DomainError.
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  // Value equality after promotion to the weakest common mode.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator<=(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

 private:
  std::variant<Int, Rat, double> v_;
};

struct Tolerance {
  double abs_eps = 1e-12;
  double rel_eps = 1e-12;
};

// Both results share the weakest common mode: ExactInt < ExactRat < Float.
std::pair<Scalar, Scalar> promote(const Scalar& a, const Scalar& b);

// Exact operands compare exactly; any Float operand switches to
// |a-b| <= abs_eps OR |a-b| <= rel_eps * max(|a|, |b|).
bool approx_equal(const Scalar& a, const Scalar& b, const Tolerance& tol = {});

// base^n by repeated squaring, n >= 0; exact modes stay exact.
Scalar int_pow(const Scalar& base, unsigned long long n);

// Signed integer power; negative exponents promote to rationals (or divide
// doubles).  Exact zero base with negative exponent throws DomainError.
Scalar int_pow_signed(const Scalar& base, long long n);

// Correctly rounded (nearest, ties to even) conversion.
double rational_to_double(const Scalar::Rat& r);

// Shortest decimal that round-trips; "0" for both zeroes.
std::string format_double(double v);

}  // namespace qdeform

#endif

#include "qdeform/qnumbers.hpp"

#include <cmath>
#include <cstdlib>

#include "qdeform/error.hpp"

namespace qdeform {

namespace {

// Digit-count guard for exact geometric growth; beyond this the exact value
// is refused rather than silently demoted to float.
constexpr double kExactDigitCap = 2e6;

double digits_estimate(const Scalar& base, long long n) {
  Scalar::Rat r = base.to_rational();
  Scalar::Int m = std::max(abs(numerator(r)), denominator(r));
  if (m <= 1) return 0.0;
  double bits = static_cast<double>(msb(m)) + 1.0;
  return std::abs(static_cast<double>(n)) * bits * 0.30103;
}

// (base^x - 1) / divisor with the sign-of-base case split shared by
// to_qnumber and heine.  base_minus_one is passed separately so the float
// path can use log1p when the base sits near 1.
Scalar geometric_form(const Scalar& x, const Scalar& base,
                      const Scalar& base_minus_one, const Scalar& divisor,
                      const char* what) {
  int bs = base.sign();
  if (bs == 0) {
    // 0^x: defined for x >= 0 only (0^0 = 1 keeps the zeroth value at 0).
    if (x.sign() < 0)
      throw DomainError(std::string(what) + ": zero base with negative argument");
    if (x.is_zero()) return Scalar(0);
    return -(Scalar(1) / divisor);
  }
  if (auto n = x.to_int64()) {
    if (base.is_exact() && divisor.is_exact()) {
      if (digits_estimate(base, *n) > kExactDigitCap)
        throw ResourceError(std::string(what) + ": exact value exceeds the digit cap");
      return (int_pow_signed(base, *n) - Scalar(1)) / divisor;
    }
    double r = std::pow(base.to_double(), static_cast<double>(*n));
    return Scalar((r - 1.0) / divisor.to_double());
  }
  if (bs < 0)
    throw DomainError(std::string(what) +
                      ": non-integer argument over a negative base");
  double lb = std::log1p(base_minus_one.to_double());
  return Scalar(std::expm1(x.to_double() * lb) / divisor.to_double());
}

}  // namespace

QNumber to_qnumber(const Scalar& x, const DeformParam& p, const Scalar& g) {
  if (g.is_zero())
    throw DomainError("generator 0 produces a trivial structure");
  if (p.effectively_classical())
    return QNumber{x, g, p, x * g};
  Scalar bm1 = p.one_minus_q() * g;
  Scalar base = Scalar(1) + bm1;
  Scalar value = geometric_form(x, base, bm1, p.one_minus_q(), "deformed number");
  return QNumber{x, g, p, value};
}

Scalar from_qnumber(const Scalar& v, const DeformParam& p, const Scalar& g) {
  if (g.is_zero())
    throw DomainError("generator 0 produces a trivial structure");
  if (p.effectively_classical()) return v / g;
  Scalar bm1 = p.one_minus_q() * g;
  Scalar base = Scalar(1) + bm1;
  if (base.sign() <= 0)
    throw DomainError("deformed-number inverse requires a positive base (q < 2 for g = 1)");
  if (base == Scalar(1))
    throw DomainError("deformed-number inverse undefined for base 1");
  double arg = (p.one_minus_q() * v).to_double();
  if (1.0 + arg <= 0.0)
    throw DomainError("value at or below -1/(1-q) has no pre-image");
  return Scalar(std::log1p(arg) / std::log1p(bm1.to_double()));
}

std::vector<Scalar> nat_sequence(int count, const DeformParam& p,
                                 const Scalar& g) {
  std::vector<Scalar> out;
  if (count <= 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  Scalar v(0);
  out.push_back(v);
  for (int i = 1; i < count; ++i) {
    v = q_sum(v, g, p);
    out.push_back(v);
  }
  return out;
}

std::vector<Scalar> int_sequence(long long lo, long long hi,
                                 const DeformParam& p, const Scalar& g) {
  if (lo > hi) throw DomainError("int_sequence: lo > hi");
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long long n = lo; n <= hi; ++n)
    out.push_back(to_qnumber(Scalar(n), p, g).value);
  return out;
}

Scalar heine(const Scalar& n, const Scalar& H) {
  if (H == Scalar(1)) return n;
  Scalar hm1 = H - Scalar(1);
  return geometric_form(n, H, hm1, hm1, "Heine number");
}

Scalar successor(const Scalar& v, const DeformParam& p) {
  return q_sum(v, Scalar(1), p);
}

LimitResult limit_of(const DeformParam& p, bool integer_arguments) {
  if (p.effectively_classical()) return {LimitKind::Identity, std::nullopt};
  double q = p.q_value();
  if (q < 1.0) return {LimitKind::Divergent, std::nullopt};
  if (q <= 2.0) return {LimitKind::Finite, 1.0 / (q - 1.0)};
  if (integer_arguments && q < 3.0) return {LimitKind::Finite, 1.0 / (q - 1.0)};
  return {LimitKind::Unsupported, std::nullopt};
}

double q_coordinate(double value, const DeformParam& p) {
  double q = p.q_value();
  if (p.effectively_classical() || q >= 2.0)
    throw DomainError("q-coordinate requires q < 2, q != 1");
  double omq = p.one_minus_q_value();
  double u = omq * value;
  if (1.0 + u <= 0.0)
    throw DomainError("value outside the q-coordinate domain");
  return std::log1p(u) / std::log1p(omq);
}

double q_value_of(double coordinate, const DeformParam& p) {
  double q = p.q_value();
  if (p.effectively_classical() || q >= 2.0)
    throw DomainError("q-coordinate requires q < 2, q != 1");
  double omq = p.one_minus_q_value();
  return std::expm1(coordinate * std::log1p(omq)) / omq;
}

}  // namespace qdeform

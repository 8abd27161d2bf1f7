#include "qdeform/core_ops.hpp"

#include <cmath>
#include <optional>

#include "qdeform/error.hpp"
#include "root_detail.hpp"

namespace qdeform {

namespace {

using Rat = Scalar::Rat;
using Int = Scalar::Int;

// x^r for exact x > 0 and rational r, when the result is itself rational.
// Caps keep pathological exponents from grinding through huge roots.
std::optional<Scalar> try_exact_pow(const Scalar& x, const Rat& r) {
  if (!x.is_exact()) return std::nullopt;
  const Int& num = numerator(r);
  const Int& den = denominator(r);
  if (abs(num) > 512 || den > 64) return std::nullopt;
  Rat base = x.to_rational();
  std::optional<Rat> root;
  if (den == 1)
    root = base;
  else
    root = detail::try_nth_root(base, den.convert_to<unsigned>());
  if (!root) return std::nullopt;
  return int_pow_signed(Scalar(*root), num.convert_to<long long>());
}

// t^{1/(1-q)} for t > 0, exact when the root comes out rational.
Scalar bracket_root(const Scalar& t, const DeformParam& p) {
  if (t.is_exact() && p.one_minus_q().is_exact()) {
    Rat inv_exp = Rat(1) / p.one_minus_q().to_rational();
    if (auto exact = try_exact_pow(t, inv_exp)) return *exact;
  }
  return Scalar(std::exp(std::log(t.to_double()) / p.one_minus_q_value()));
}

}  // namespace

Scalar q_sum(const Scalar& x, const Scalar& y, const DeformParam& p) {
  if (p.effectively_classical()) return x + y;
  return x + y + p.one_minus_q() * x * y;
}

Scalar q_opposite(const Scalar& y, const DeformParam& p) {
  if (p.effectively_classical()) return -y;
  Scalar denom = Scalar(1) + p.one_minus_q() * y;
  if (denom.is_zero())
    throw DomainError("no opposite exists at y = -1/(1-q)");
  return -y / denom;
}

Scalar q_log(const Scalar& x, const DeformParam& p) {
  if (x.sign() <= 0) throw DomainError("q-logarithm requires x > 0");
  if (x == Scalar(1)) return Scalar(0);
  if (p.effectively_classical()) return Scalar(std::log(x.to_double()));
  if (x.is_exact() && p.one_minus_q().is_exact()) {
    if (auto px = try_exact_pow(x, p.one_minus_q().to_rational()))
      return (*px - Scalar(1)) / p.one_minus_q();
  }
  double omq = p.one_minus_q_value();
  return Scalar(std::expm1(omq * std::log(x.to_double())) / omq);
}

Scalar q_exp(const Scalar& x, const DeformParam& p) {
  if (x.is_zero()) return Scalar(1);
  if (p.effectively_classical()) return Scalar(std::exp(x.to_double()));
  Scalar base = Scalar(1) + p.one_minus_q() * x;
  double omq = p.one_minus_q_value();
  if (base.sign() <= 0) {
    if (omq > 0) return Scalar(0);  // cutoff
    throw DomainError("q-exponential undefined: non-positive base with negative exponent");
  }
  if (base.is_exact() && p.one_minus_q().is_exact()) {
    Rat inv_exp = Rat(1) / p.one_minus_q().to_rational();
    if (auto exact = try_exact_pow(base, inv_exp)) return *exact;
  }
  return Scalar(std::exp(std::log1p(omq * x.to_double()) / omq));
}

Scalar q_product(const Scalar& x, const Scalar& y, const DeformParam& p) {
  if (x.sign() <= 0 || y.sign() <= 0)
    throw DomainError("q-product requires positive operands");
  if (p.effectively_classical()) return x * y;
  if (x == Scalar(1)) return y;
  if (y == Scalar(1)) return x;

  double omq = p.one_minus_q_value();
  if (x.is_exact() && y.is_exact() && p.one_minus_q().is_exact()) {
    Rat e = p.one_minus_q().to_rational();
    auto px = try_exact_pow(x, e);
    auto py = try_exact_pow(y, e);
    if (px && py) {
      Scalar t = *px + *py - Scalar(1);
      if (t.sign() <= 0) {
        if (omq > 0) return Scalar(0);  // cutoff
        throw DomainError("q-product bracket cutoff with negative exponent");
      }
      return bracket_root(t, p);
    }
  }

  double u = std::expm1(omq * std::log(x.to_double()));
  double v = std::expm1(omq * std::log(y.to_double()));
  double s = u + v;
  if (1.0 + s <= 0.0) {
    if (omq > 0) return Scalar(0.0);  // cutoff
    throw DomainError("q-product bracket cutoff with negative exponent");
  }
  return Scalar(std::exp(std::log1p(s) / omq));
}

Scalar q_inverse(const Scalar& y, const DeformParam& p) {
  if (y.sign() <= 0) throw DomainError("q-inverse requires y > 0");
  if (p.effectively_classical()) return Scalar(1) / y;
  if (y == Scalar(1)) return Scalar(1);

  if (y.is_exact() && p.one_minus_q().is_exact()) {
    if (auto py = try_exact_pow(y, p.one_minus_q().to_rational())) {
      Scalar t = Scalar(2) - *py;
      if (t.sign() <= 0)
        throw DomainError("no inverse exists: 2 - y^(1-q) <= 0");
      return bracket_root(t, p);
    }
  }

  double omq = p.one_minus_q_value();
  double t = 2.0 - std::exp(omq * std::log(y.to_double()));
  if (t <= 0.0) throw DomainError("no inverse exists: 2 - y^(1-q) <= 0");
  return Scalar(std::exp(std::log(t) / omq));
}

}  // namespace qdeform

#include "qdeform/diamond.hpp"

#include <cmath>

#include "qdeform/error.hpp"
#include "qdeform/qnumbers.hpp"

namespace qdeform {

namespace {

void require_regime(const DeformParam& p) {
  if (p.q_value() >= 2.0)
    throw UnsupportedError("diamond product is not defined for q >= 2");
}

void require_in_domain(const Scalar& v, const DeformParam& p) {
  if (1.0 + p.one_minus_q_value() * v.to_double() <= 0.0)
    throw DomainError("diamond operand at or below -1/(1-q)");
}

}  // namespace

DiamondDomain::DiamondDomain(const DeformParam& p) : param_(p) {
  if (p.effectively_classical())
    throw UnsupportedError("diamond domain is an interval only for q != 1");
  require_regime(p);
  bound_ = -1.0 / p.one_minus_q_value();
}

Scalar diamond(const Scalar& x, const Scalar& y, const DeformParam& p) {
  if (p.effectively_classical()) return x * y;
  require_regime(p);
  require_in_domain(x, p);
  require_in_domain(y, p);
  if (x.is_zero() || y.is_zero()) return Scalar(0);
  if (x == Scalar(1)) return y;
  if (y == Scalar(1)) return x;
  double t = q_coordinate(x.to_double(), p) * q_coordinate(y.to_double(), p);
  return Scalar(q_value_of(t, p));
}

Scalar diamond_inverse(const Scalar& x, const DeformParam& p) {
  if (p.effectively_classical()) {
    if (x.is_zero()) throw DomainError("zero has no multiplicative inverse");
    return Scalar(1) / x;
  }
  require_regime(p);
  require_in_domain(x, p);
  if (x.is_zero())
    throw DomainError("zero has no inverse under the diamond product");
  if (x == Scalar(1)) return Scalar(1);
  return Scalar(q_value_of(1.0 / q_coordinate(x.to_double(), p), p));
}

}  // namespace qdeform

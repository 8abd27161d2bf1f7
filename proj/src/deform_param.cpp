#include "qdeform/deform_param.hpp"

#include <cmath>

#include "qdeform/error.hpp"

namespace qdeform {

namespace {

Scalar canonicalize(const Scalar& q) {
  if (q.mode() != Mode::Float) return q;
  double d = q.as_float();
  if (!std::isfinite(d)) throw DomainError("deformation parameter must be finite");
  if (d == std::trunc(d) && std::abs(d) < 9.0e15)
    return Scalar(static_cast<long long>(d));
  // Every double is a dyadic rational; adopt it as exact only when the
  // denominator is small enough that the value was plausibly meant exactly.
  Scalar::Rat r(d);
  if (denominator(r) <= (Scalar::Int(1) << 32)) return Scalar(r);
  return q;
}

}  // namespace

DeformParam::DeformParam(const Scalar& q)
    : q_(canonicalize(q)),
      one_minus_q_(Scalar(1) - q_),
      q_double_(q_.to_double()),
      classical_(q_.is_exact() ? q_ == Scalar(1) : q_.as_float() == 1.0) {
  if (!std::isfinite(q_double_))
    throw DomainError("deformation parameter must be finite");
}

DeformParam::DeformParam(double q) : DeformParam(Scalar(q)) {}

std::optional<std::int64_t> DeformParam::one_minus_q_int() const {
  if (!one_minus_q_.is_exact()) return std::nullopt;
  if (!one_minus_q_.is_integer()) return std::nullopt;
  return one_minus_q_.to_int64();
}

std::optional<std::int64_t> DeformParam::inv_one_minus_q_int() const {
  if (!one_minus_q_.is_exact()) return std::nullopt;
  Scalar::Rat r = one_minus_q_.to_rational();
  if (numerator(r) == 1) return Scalar(Scalar::Int(denominator(r))).to_int64();
  if (numerator(r) == -1)
    return Scalar(Scalar::Int(-denominator(r))).to_int64();
  return std::nullopt;
}

}  // namespace qdeform

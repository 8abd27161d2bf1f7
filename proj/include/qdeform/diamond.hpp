#ifndef QDEFORM_DIAMOND_HPP
#define QDEFORM_DIAMOND_HPP

#include "qdeform/deform_param.hpp"
#include "qdeform/scalar.hpp"

namespace qdeform {

// Operand interval of the diamond product for a given q < 2, q != 1: the
// set where 1 + (1-q) x > 0, i.e. x > -1/(1-q) for q < 1 and x < 1/(q-1)
// for 1 < q < 2.  On it the coordinate map
//   phi(x) = ln(1 + (1-q) x) / ln(2-q)
// is a bijection onto the reals.
struct DiamondDomain {
  explicit DiamondDomain(const DeformParam& p);

  const DeformParam& param() const { return param_; }
  // -1/(1-q): a lower bound for q < 1, an upper bound for 1 < q < 2.
  double bound() const { return bound_; }
  bool contains(double x) const {
    return 1.0 + param_.one_minus_q_value() * x > 0.0;
  }

 private:
  DeformParam param_;
  double bound_;
};

// The multiplication transported from the reals by phi:
//   x (*) y = phi^{-1}(phi(x) * phi(y)).
// Distributes over the deformed sum on the whole interval.  q = 1 routes to
// the plain product; q >= 2 is rejected as unsupported.
Scalar diamond(const Scalar& x, const Scalar& y, const DeformParam& p);

// phi^{-1}(1 / phi(x)); the diamond-multiplicative inverse.  x = 0 (where
// phi vanishes) has none.
Scalar diamond_inverse(const Scalar& x, const DeformParam& p);

}  // namespace qdeform

#endif

#ifndef QDEFORM_CORE_OPS_HPP
#define QDEFORM_CORE_OPS_HPP

#include "qdeform/deform_param.hpp"
#include "qdeform/scalar.hpp"

namespace qdeform {

// x + y + (1-q) x y.  Exact whenever x, y and 1-q are exact.
Scalar q_sum(const Scalar& x, const Scalar& y, const DeformParam& p);

// The additive opposite under the deformed sum: -y / (1 + (1-q) y).
// Throws DomainError at y = -1/(1-q), where no opposite exists.
Scalar q_opposite(const Scalar& y, const DeformParam& p);

// [x^{1-q} + y^{1-q} - 1]_+^{1/(1-q)} on positive operands.  A non-positive
// bracket returns 0 when the outer exponent is positive and throws
// DomainError when it is negative (zero to a negative power).
Scalar q_product(const Scalar& x, const Scalar& y, const DeformParam& p);

// The multiplicative inverse under the deformed product:
// (2 - y^{1-q})^{1/(1-q)}, defined for y > 0 with 2 - y^{1-q} > 0.
Scalar q_inverse(const Scalar& y, const DeformParam& p);

// (x^{1-q} - 1)/(1-q) for x > 0; natural log in the classical regime.
Scalar q_log(const Scalar& x, const DeformParam& p);

// [1 + (1-q) x]_+^{1/(1-q)}; ordinary exp in the classical regime.  Cutoff
// and error behavior mirror q_product's bracket rules.
Scalar q_exp(const Scalar& x, const DeformParam& p);

}  // namespace qdeform

#endif

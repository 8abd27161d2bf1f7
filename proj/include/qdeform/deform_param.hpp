#ifndef QDEFORM_DEFORM_PARAM_HPP
#define QDEFORM_DEFORM_PARAM_HPP

#include <cstdint>
#include <optional>

#include "qdeform/scalar.hpp"

namespace qdeform {

// The deformation parameter q.  q = 1 exactly is the classical regime where
// every deformed operation collapses to its ordinary counterpart; that case
// is carried as a flag so no formula ever divides by 1 - q.
//
// Doubles whose value is an integer or a small dyadic fraction (1.5, -0.25,
// ...) are stored exactly so the algebra over them stays exact; anything
// else is kept in float mode.
class DeformParam {
 public:
  explicit DeformParam(const Scalar& q);
  explicit DeformParam(double q);

  const Scalar& q() const { return q_; }
  double q_value() const { return q_double_; }

  // True iff q == 1 exactly.
  bool classical() const { return classical_; }
  // Routes |1 - q| < 1e-12 to the classical formulas as well: the deformed
  // expressions have a removable singularity there.
  bool effectively_classical() const {
    return classical_ || std::abs(1.0 - q_double_) < 1e-12;
  }

  const Scalar& one_minus_q() const { return one_minus_q_; }
  double one_minus_q_value() const { return 1.0 - q_double_; }

  // 1 - q when it is an exact integer (possibly zero).
  std::optional<std::int64_t> one_minus_q_int() const;
  // m such that 1 - q == 1/m exactly, when such an integer exists.
  std::optional<std::int64_t> inv_one_minus_q_int() const;

 private:
  Scalar q_;
  Scalar one_minus_q_;
  double q_double_;
  bool classical_;
};

}  // namespace qdeform

#endif

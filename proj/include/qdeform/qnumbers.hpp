#ifndef QDEFORM_QNUMBERS_HPP
#define QDEFORM_QNUMBERS_HPP

#include <optional>
#include <vector>

#include "qdeform/core_ops.hpp"
#include "qdeform/deform_param.hpp"
#include "qdeform/scalar.hpp"

namespace qdeform {

// A deformed number: the image of pre_image under
//   x -> ([1 + (1-q) g]^x - 1) / (1-q),
// which for integer x equals the x-fold deformed sum of the generator.
struct QNumber {
  Scalar pre_image;
  Scalar generator;
  DeformParam param;
  Scalar value;
};

// Closed-form construction.  Exact whenever x is an integer and 1-q and g
// are exact.  Non-integer x over a non-positive base is rejected (the value
// would be complex); base 0 (e.g. q = 2 with g = 1) accepts only x >= 0.
QNumber to_qnumber(const Scalar& x, const DeformParam& p,
                   const Scalar& g = Scalar(1));

// Inverse of to_qnumber for q < 2 (g = 1 reading: base 2-q positive, != 1).
// Requires 1 + (1-q) v > 0.  Always float apart from the classical identity.
Scalar from_qnumber(const Scalar& v, const DeformParam& p,
                    const Scalar& g = Scalar(1));

// [0_q, 1_q, ..., (count-1)_q] built by iterating the deformed sum with the
// generator; the closed form is deliberately not used here so it can serve
// as an independent check.
std::vector<Scalar> nat_sequence(int count, const DeformParam& p,
                                 const Scalar& g = Scalar(1));

// [lo_q, ..., hi_q] via the closed form; exact rationals where possible.
std::vector<Scalar> int_sequence(long long lo, long long hi,
                                 const DeformParam& p,
                                 const Scalar& g = Scalar(1));

// The classical q-analogue (H^n - 1)/(H - 1); returns n at H = 1.  Matches
// to_qnumber under the substitution q = 2 - H.
Scalar heine(const Scalar& n, const Scalar& H);

// v -> v (+)_q 1.
Scalar successor(const Scalar& v, const DeformParam& p);

enum class LimitKind { Divergent, Identity, Finite, Unsupported };

struct LimitResult {
  LimitKind kind;
  std::optional<double> value;  // set for Finite
};

// Large-argument behavior of x -> x_q.  Restricting to integer arguments
// extends the finite limit 1/(q-1) from q <= 2 up to q < 3, where the base
// 2-q is negative but powers of it still alternate toward zero.
LimitResult limit_of(const DeformParam& p, bool integer_arguments);

// The conjugation underlying the q-number construction at g = 1:
//   coordinate(v) = ln(1 + (1-q) v) / ln(2-q)
// maps a deformed value back to its pre-image; q_value_of is its inverse.
// Both require q < 2, q != 1.
double q_coordinate(double value, const DeformParam& p);
double q_value_of(double coordinate, const DeformParam& p);

}  // namespace qdeform

#endif

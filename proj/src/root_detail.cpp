#include "root_detail.hpp"

namespace qdeform::detail {

using Int = Scalar::Int;
using Rat = Scalar::Rat;

Int floor_nth_root(const Int& a, unsigned n) {
  if (a.is_zero() || a == 1 || n == 1) return a;
  unsigned long bits = msb(a) + 1;
  Int x = Int(1) << (bits / n + 1);  // upper bound for the root
  while (true) {
    Int xn1 = pow(x, n - 1);
    Int next = ((n - 1) * x + a / xn1) / n;
    if (next >= x) break;
    x = next;
  }
  while (pow(x, n) > a) --x;
  return x;
}

std::optional<Rat> try_nth_root(const Rat& t, unsigned n) {
  if (t.sign() < 0) return std::nullopt;
  Int rn = floor_nth_root(numerator(t), n);
  if (pow(rn, n) != numerator(t)) return std::nullopt;
  Int rd = floor_nth_root(denominator(t), n);
  if (pow(rd, n) != denominator(t)) return std::nullopt;
  return Rat(rn, rd);
}

}  // namespace qdeform::detail

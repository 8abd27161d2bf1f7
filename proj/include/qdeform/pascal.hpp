#ifndef QDEFORM_PASCAL_HPP
#define QDEFORM_PASCAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdeform/deform_param.hpp"
#include "qdeform/scalar.hpp"

namespace qdeform {

enum class TriangleMode { Exact, Float };

// A deformed Pascal triangle: edges carry the generator, every interior
// entry is the deformed sum of its two parents.  With g = 1 the entry at
// (n, k) equals the deformed image of the binomial coefficient C(n, k).
struct Triangle {
  DeformParam param;
  Scalar generator;
  TriangleMode mode;
  std::vector<std::vector<Scalar>> rows;  // row n has n+1 entries
};

// Builds by the recurrence alone.  Exact mode requires a non-zero integer
// 1-q and an integer generator; anything else runs in float.  Before an
// exact build the largest entry's decimal size is estimated and compared
// against digit_cap; ResourceError if it would exceed it.
Triangle build_triangle(int rows, const DeformParam& p,
                        const Scalar& g = Scalar(1),
                        std::int64_t digit_cap = 1'000'000);

// Closed-form oracle for g = 1 entries: the deformed image of C(n, k),
// with the binomial computed in exact integers.
Scalar entry_closed(int n, int k, const DeformParam& p);

// Exact binomial coefficient.
Scalar::Int binomial(int n, int k);

enum class Pattern {
  Increasing,        // q <= 1: entries grow without bound
  Asymptotic,        // 1 < q < 2: interior entries approach 1/(q-1) from below
  Fixed,             // q = 2: every entry is 1
  SubUnitBounded,    // 2 < q < 3: entries stay inside (0, 1]
  SelfSimilarBinary, // q = 3: binomials mod 2
  Unsupported        // q > 3
};

struct PatternClass {
  Pattern label;
  std::optional<double> limit_value;
};

PatternClass classify(const DeformParam& p);

// Kebab-case label: "increasing", "asymptotic", "fixed",
// "sub-unit-bounded", "self-similar-binary", "unsupported".
std::string pattern_name(Pattern label);

enum class TriangleFormat { Text, Json, Csv };

// Text renders a centered pyramid with float entries truncated (not
// rounded) to `decimals` places and trailing zeros stripped.  Json emits
// {"q","g","mode","rows"} with every value as a decimal string; Csv emits
// one comma-separated line per row.  Json and Csv keep full precision.
std::string render(const Triangle& t, TriangleFormat fmt, int decimals = 3);

// "1.96875" -> "1.968" at 3 decimals; integral values lose the point.
std::string format_truncated(double v, int decimals);

}  // namespace qdeform

#endif

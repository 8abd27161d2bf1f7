#ifndef QDEFORM_ALT_ALGEBRAS_HPP
#define QDEFORM_ALT_ALGEBRAS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qdeform/deform_param.hpp"
#include "qdeform/scalar.hpp"

namespace qdeform {

// The eight rival deformed operations: an a-family and a k-family, each
// with a low/high variant of sum and product.
//   +_a  = deformed sum at q = 1-a          +^a  = its high companion
//   x_a  = deformed product at q = 1-a      x^a  = its high companion
//   [+]_k = deformed product at q = 1-k     [+]^k = literal k-sum
//   [x]_k = deformed sum at q = 1-k         [x]^k = literal k-product
// Note the role exchange in the k-family: its low sum is a product in
// disguise and its low product is a sum.
enum class AltFamily { A, K };
enum class AltVariant { Low, High };
enum class AltKind { Sum, Product };

struct AltOpId {
  AltFamily family;
  AltVariant variant;
  AltKind kind;
};

// Stable ASCII spelling used in reports: "+_a", "+^a", "x_a", "x^a",
// "[+]_k", "[+]^k", "[x]_k", "[x]^k".
std::string alt_op_name(AltOpId id);

Scalar alt_binary(AltOpId id, const Scalar& x, const Scalar& y, double param);

// Deformed numbers generated by the non-aliased sums.
enum class AltNumberId { AHigh, KHigh, KLow };

// Closed forms:
//   AHigh: [a ln x + g^a]^{1/a}        (folds of +^a)
//   KHigh: (x^k (1 + k g) - 1) / k     (folds of [+]^k)
//   KLow:  [x g^k - (x - 1)]^{1/k}     (folds of [+]_k)
Scalar alt_number(AltNumberId id, const Scalar& x, const Scalar& g,
                  double param);

enum class Law { Distributivity, Associativity, Commutativity, NeutralExists };

struct Counterexample {
  double x = 0, y = 0, z = 0;
  double lhs = 0, rhs = 0;
};

struct LawReport {
  Law law;
  std::string mul_name;
  std::string add_name;
  double param = 0;
  bool holds = false;
  // Present whenever holds is false; for NeutralExists reports the tuple
  // records the best candidate found (y = candidate neutral).
  std::optional<Counterexample> counterexample;
  double max_residual = 0;
  int samples = 0;
  int skipped = 0;

  nlohmann::ordered_json to_json() const;
  std::string to_json_line() const;
};

struct SampleSpec {
  double lo = 1.05;
  double hi = 3.0;
  int count = 300;
  std::uint64_t seed = 42;
  double tolerance = 1e-10;
};

using BinaryOpFn = std::function<Scalar(const Scalar&, const Scalar&)>;

// Samples mul(z, add(x, y)) against add(mul(z, x), mul(z, y)) on uniform
// triples from [lo, hi].  Domain failures are skipped and counted; fewer
// than 80% in-domain samples is treated as a misconfigured range.  The
// first over-tolerance triple becomes the counterexample; results are
// deterministic for a given seed.
LawReport check_distributivity(const BinaryOpFn& mul, std::string mul_name,
                               const BinaryOpFn& add, std::string add_name,
                               double param, const SampleSpec& spec);

LawReport check_associativity(const BinaryOpFn& op, std::string name,
                              double param, const SampleSpec& spec);

LawReport check_commutativity(const BinaryOpFn& op, std::string name,
                              double param, const SampleSpec& spec);

// Searches for a common neutral element t with add(x, t) = x across sampled
// x: a candidate grid over [-hi, hi] (always including 0) is scored by its
// worst residual and the best candidate is refined locally.
LawReport check_neutral(const BinaryOpFn& add, std::string add_name,
                        double param, const SampleSpec& spec);

// Convenience handles over the q-algebra and the rival families, suitable
// for the checkers above.
BinaryOpFn q_sum_op(const DeformParam& p);
BinaryOpFn q_product_op(const DeformParam& p);
BinaryOpFn diamond_op(const DeformParam& p);
BinaryOpFn alt_op(AltOpId id, double param);

}  // namespace qdeform

#endif

#ifndef QDEFORM_EVAL_HPP
#define QDEFORM_EVAL_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "qdeform/deform_param.hpp"
#include "qdeform/expr.hpp"
#include "qdeform/scalar.hpp"

namespace qdeform {

// Settings shared by expression evaluation and the command-line front end.
struct CliConfig {
  std::optional<DeformParam> param;      // --q
  Scalar generator = Scalar(1);          // --g
  std::optional<Scalar> heine_base;      // --H
  int rows = 7;                          // --rows
  std::string format = "text";           // --format
  int precision = 3;                     // --precision
  bool exact = false;                    // --exact
  Tolerance tolerance;                   // QDEFORM_TOLERANCE override
  std::uint64_t seed = 42;               // --seed
  int samples = 1000;                    // --samples
};

// Walks the tree: q+/q- map to the deformed sum (with opposite), q*/q/ to
// the deformed product (with inverse), d* to the diamond product, qnum to
// the deformed-number map, heine to the q-analogue with base --H.  Domain
// failures are rethrown as EvalError carrying the offending node's span.
Scalar evaluate(const ExprAst& ast, const CliConfig& cfg);

}  // namespace qdeform

#endif

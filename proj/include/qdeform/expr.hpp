#ifndef QDEFORM_EXPR_HPP
#define QDEFORM_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qdeform/error.hpp"
#include "qdeform/scalar.hpp"

namespace qdeform {

// Grammar (left-associative, term binds tighter than expr):
//   expr   := term { ("q+" | "q-") term }
//   term   := factor { ("q*" | "q/" | "d*") factor }
//   factor := NUMBER | "-" factor | "(" expr ")" | FN "(" expr ")"
//   FN     := "qexp" | "qln" | "qnum" | "heine"
// The circled-operator glyphs are accepted as aliases for the ASCII
// spellings.  Every node records its half-open byte span in the source.

enum class ExprOp { QAdd, QSub, QMul, QDiv, DMul };
enum class ExprFn { QExp, QLn, QNum, Heine };

struct ExprAst {
  enum class Kind { Literal, Variable, Neg, Binary, Call };

  Kind kind;
  SourceSpan span;
  Scalar literal;        // Literal
  std::string lexeme;    // Literal source text; Variable name
  ExprOp op = ExprOp::QAdd;   // Binary
  ExprFn fn = ExprFn::QExp;   // Call
  std::vector<std::unique_ptr<ExprAst>> children;
};

using ExprPtr = std::unique_ptr<ExprAst>;

// Throws ParseError (offset, length, expected tokens) on malformed input;
// never crashes on arbitrary bytes.
ExprPtr parse(std::string_view source);

// Canonical, reparseable rendering (fully parenthesized).
std::string to_source(const ExprAst& ast);

// Structural equality ignoring spans and literal spelling.
bool same_shape(const ExprAst& a, const ExprAst& b);

std::string op_token(ExprOp op);
std::string fn_token(ExprFn fn);

}  // namespace qdeform

#endif

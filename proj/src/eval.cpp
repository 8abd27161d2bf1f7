#include "qdeform/eval.hpp"

#include "qdeform/core_ops.hpp"
#include "qdeform/diamond.hpp"
#include "qdeform/error.hpp"
#include "qdeform/qnumbers.hpp"

namespace qdeform {

namespace {

Scalar eval_node(const ExprAst& ast, const CliConfig& cfg) {
  try {
    switch (ast.kind) {
      case ExprAst::Kind::Literal:
        return ast.literal;
      case ExprAst::Kind::Variable:
        throw EvalError("unbound variable '" + ast.lexeme + "'", ast.span);
      case ExprAst::Kind::Neg:
        return -eval_node(*ast.children[0], cfg);
      case ExprAst::Kind::Binary: {
        Scalar lhs = eval_node(*ast.children[0], cfg);
        Scalar rhs = eval_node(*ast.children[1], cfg);
        if (!cfg.param) throw EvalError("no deformation parameter set", ast.span);
        const DeformParam& p = *cfg.param;
        switch (ast.op) {
          case ExprOp::QAdd: return q_sum(lhs, rhs, p);
          case ExprOp::QSub: return q_sum(lhs, q_opposite(rhs, p), p);
          case ExprOp::QMul: return q_product(lhs, rhs, p);
          case ExprOp::QDiv: return q_product(lhs, q_inverse(rhs, p), p);
          case ExprOp::DMul: return diamond(lhs, rhs, p);
        }
        throw EvalError("unknown operator", ast.span);
      }
      case ExprAst::Kind::Call: {
        Scalar arg = eval_node(*ast.children[0], cfg);
        switch (ast.fn) {
          case ExprFn::QExp:
            if (!cfg.param) throw EvalError("no deformation parameter set", ast.span);
            return q_exp(arg, *cfg.param);
          case ExprFn::QLn:
            if (!cfg.param) throw EvalError("no deformation parameter set", ast.span);
            return q_log(arg, *cfg.param);
          case ExprFn::QNum:
            if (!cfg.param) throw EvalError("no deformation parameter set", ast.span);
            return to_qnumber(arg, *cfg.param, cfg.generator).value;
          case ExprFn::Heine:
            if (!cfg.heine_base)
              throw EvalError("heine() requires --H", ast.span);
            return heine(arg, *cfg.heine_base);
        }
        throw EvalError("unknown function", ast.span);
      }
    }
    throw EvalError("malformed expression tree", ast.span);
  } catch (const EvalError&) {
    throw;
  } catch (const Error& e) {
    throw EvalError(e.what(), ast.span);
  }
}

}  // namespace

Scalar evaluate(const ExprAst& ast, const CliConfig& cfg) {
  return eval_node(ast, cfg);
}

}  // namespace qdeform

#include "qdeform/expr.hpp"

#include <cctype>
#include <optional>
#include <utility>

namespace qdeform {

namespace {

enum class Tok {
  Number,
  Ident,
  QAdd,
  QSub,
  QMul,
  QDiv,
  DMul,
  Minus,
  LParen,
  RParen,
  End
};

struct Token {
  Tok kind;
  std::size_t begin;
  std::size_t end;
  std::string text;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::QAdd: return "'q+'";
    case Tok::QSub: return "'q-'";
    case Tok::QMul: return "'q*'";
    case Tok::QDiv: return "'q/'";
    case Tok::DMul: return "'d*'";
    case Tok::Minus: return "'-'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, start, start, ""};

    unsigned char c = static_cast<unsigned char>(src_[pos_]);

    // Unicode aliases for the deformed operators.
    if (auto alias = match_alias()) return *alias;

    if (c == 'q' && pos_ + 1 < src_.size()) {
      char op = src_[pos_ + 1];
      if (op == '+' || op == '-' || op == '*' || op == '/') {
        pos_ += 2;
        Tok kind = op == '+' ? Tok::QAdd
                   : op == '-' ? Tok::QSub
                   : op == '*' ? Tok::QMul
                               : Tok::QDiv;
        return {kind, start, pos_, std::string(src_.substr(start, 2))};
      }
    }
    if (c == 'd' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
      pos_ += 2;
      return {Tok::DMul, start, pos_, "d*"};
    }
    if (c == '-') {
      ++pos_;
      return {Tok::Minus, start, pos_, "-"};
    }
    if (c == '(') {
      ++pos_;
      return {Tok::LParen, start, pos_, "("};
    }
    if (c == ')') {
      ++pos_;
      return {Tok::RParen, start, pos_, ")"};
    }
    if (std::isdigit(c) || (c == '.' && pos_ + 1 < src_.size() &&
                            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      return lex_number();
    }
    if (std::isalpha(c) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      return {Tok::Ident, start, pos_, std::string(src_.substr(start, pos_ - start))};
    }
    throw ParseError("unexpected character", start, 1,
                     {"number", "'('", "'-'", "function name"});
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  std::optional<Token> match_alias() {
    struct Alias {
      const char* bytes;
      Tok kind;
      const char* ascii;
    };
    static const Alias aliases[] = {
        {"\xe2\x8a\x95", Tok::QAdd, "q+"},  // circled plus
        {"\xe2\x8a\x96", Tok::QSub, "q-"},  // circled minus
        {"\xe2\x8a\x97", Tok::QMul, "q*"},  // circled times
        {"\xe2\x8a\x98", Tok::QDiv, "q/"},  // circled slash
        {"\xe2\x97\x87", Tok::DMul, "d*"},  // white diamond
        {"\xe2\x8b\x84", Tok::DMul, "d*"},  // diamond operator
    };
    for (const auto& a : aliases) {
      std::string_view pat(a.bytes);
      if (src_.substr(pos_, pat.size()) == pat) {
        std::size_t start = pos_;
        pos_ += pat.size();
        return Token{a.kind, start, pos_, a.ascii};
      }
    }
    return std::nullopt;
  }

  Token lex_number() {
    std::size_t start = pos_;
    bool seen_dot = false;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '.' && !seen_dot) {
        seen_dot = true;
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_])))
          ++pos_;
      } else {
        pos_ = mark;  // bare 'e' belongs to whatever follows
      }
    }
    return {Tok::Number, start, pos_, std::string(src_.substr(start, pos_ - start))};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  ExprPtr parse_full() {
    ExprPtr e = parse_expr();
    if (cur_.kind != Tok::End)
      throw ParseError("trailing input", cur_.begin, cur_.end - cur_.begin,
                       {"'q+'", "'q-'", "'q*'", "'q/'", "'d*'", "end of input"});
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  [[noreturn]] void fail_expected(std::vector<std::string> expected) {
    throw ParseError("expected " + join(expected), cur_.begin,
                     std::max<std::size_t>(cur_.end - cur_.begin, 1),
                     std::move(expected));
  }

  static std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += i + 1 == parts.size() ? " or " : ", ";
      out += parts[i];
    }
    return out;
  }

  Token expect(Tok kind) {
    if (cur_.kind != kind) fail_expected({tok_name(kind)});
    Token t = cur_;
    advance();
    return t;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (cur_.kind == Tok::QAdd || cur_.kind == Tok::QSub) {
      ExprOp op = cur_.kind == Tok::QAdd ? ExprOp::QAdd : ExprOp::QSub;
      advance();
      ExprPtr rhs = parse_term();
      lhs = make_binary(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (cur_.kind == Tok::QMul || cur_.kind == Tok::QDiv ||
           cur_.kind == Tok::DMul) {
      ExprOp op = cur_.kind == Tok::QMul   ? ExprOp::QMul
                  : cur_.kind == Tok::QDiv ? ExprOp::QDiv
                                           : ExprOp::DMul;
      advance();
      ExprPtr rhs = parse_factor();
      lhs = make_binary(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprPtr parse_factor() {
    switch (cur_.kind) {
      case Tok::Number: {
        auto node = std::make_unique<ExprAst>();
        node->kind = ExprAst::Kind::Literal;
        node->span = {cur_.begin, cur_.end};
        node->lexeme = cur_.text;
        node->literal = Scalar::parse(cur_.text);
        advance();
        return node;
      }
      case Tok::Minus: {
        std::size_t begin = cur_.begin;
        advance();
        ExprPtr child = parse_factor();
        auto node = std::make_unique<ExprAst>();
        node->kind = ExprAst::Kind::Neg;
        node->span = {begin, child->span.end};
        node->children.push_back(std::move(child));
        return node;
      }
      case Tok::LParen: {
        advance();
        ExprPtr inner = parse_expr();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Ident: {
        static const std::pair<const char*, ExprFn> fns[] = {
            {"qexp", ExprFn::QExp},
            {"qln", ExprFn::QLn},
            {"qnum", ExprFn::QNum},
            {"heine", ExprFn::Heine},
        };
        for (const auto& [name, fn] : fns) {
          if (cur_.text == name) {
            std::size_t begin = cur_.begin;
            advance();
            expect(Tok::LParen);
            ExprPtr arg = parse_expr();
            Token close = expect(Tok::RParen);
            auto node = std::make_unique<ExprAst>();
            node->kind = ExprAst::Kind::Call;
            node->fn = fn;
            node->span = {begin, close.end};
            node->children.push_back(std::move(arg));
            return node;
          }
        }
        throw ParseError("unknown function '" + cur_.text + "'", cur_.begin,
                         cur_.end - cur_.begin,
                         {"'qexp'", "'qln'", "'qnum'", "'heine'"});
      }
      default:
        fail_expected({"number", "'-'", "'('", "function name"});
    }
  }

  ExprPtr make_binary(ExprOp op, ExprPtr lhs, ExprPtr rhs) {
    auto node = std::make_unique<ExprAst>();
    node->kind = ExprAst::Kind::Binary;
    node->op = op;
    node->span = {lhs->span.begin, rhs->span.end};
    node->children.push_back(std::move(lhs));
    node->children.push_back(std::move(rhs));
    return node;
  }

  Lexer lexer_;
  Token cur_{Tok::End, 0, 0, ""};
};

}  // namespace

ExprPtr parse(std::string_view source) { return Parser(source).parse_full(); }

std::string op_token(ExprOp op) {
  switch (op) {
    case ExprOp::QAdd: return "q+";
    case ExprOp::QSub: return "q-";
    case ExprOp::QMul: return "q*";
    case ExprOp::QDiv: return "q/";
    case ExprOp::DMul: return "d*";
  }
  return "?";
}

std::string fn_token(ExprFn fn) {
  switch (fn) {
    case ExprFn::QExp: return "qexp";
    case ExprFn::QLn: return "qln";
    case ExprFn::QNum: return "qnum";
    case ExprFn::Heine: return "heine";
  }
  return "?";
}

std::string to_source(const ExprAst& ast) {
  switch (ast.kind) {
    case ExprAst::Kind::Literal:
      return ast.lexeme.empty() ? ast.literal.str() : ast.lexeme;
    case ExprAst::Kind::Variable:
      return ast.lexeme;
    case ExprAst::Kind::Neg:
      return "-" + to_source(*ast.children[0]);
    case ExprAst::Kind::Binary:
      return "(" + to_source(*ast.children[0]) + " " + op_token(ast.op) + " " +
             to_source(*ast.children[1]) + ")";
    case ExprAst::Kind::Call:
      return fn_token(ast.fn) + "(" + to_source(*ast.children[0]) + ")";
  }
  return {};
}

bool same_shape(const ExprAst& a, const ExprAst& b) {
  if (a.kind != b.kind) return false;
  if (a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case ExprAst::Kind::Literal:
      if (!(a.literal == b.literal)) return false;
      break;
    case ExprAst::Kind::Variable:
      if (a.lexeme != b.lexeme) return false;
      break;
    case ExprAst::Kind::Binary:
      if (a.op != b.op) return false;
      break;
    case ExprAst::Kind::Call:
      if (a.fn != b.fn) return false;
      break;
    case ExprAst::Kind::Neg:
      break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_shape(*a.children[i], *b.children[i])) return false;
  return true;
}

}  // namespace qdeform

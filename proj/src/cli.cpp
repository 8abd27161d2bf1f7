#include "qdeform/cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qdeform/alt_algebras.hpp"
#include "qdeform/error.hpp"
#include "qdeform/eval.hpp"
#include "qdeform/pascal.hpp"
#include "qdeform/qnumbers.hpp"

namespace qdeform {

namespace {

TriangleFormat parse_format(const std::string& f) {
  if (f == "text") return TriangleFormat::Text;
  if (f == "json") return TriangleFormat::Json;
  if (f == "csv") return TriangleFormat::Csv;
  throw DomainError("unknown format '" + f + "' (expected text, json or csv)");
}

void apply_env_tolerance(CliConfig& cfg) {
  if (const char* env = std::getenv("QDEFORM_TOLERANCE")) {
    char* end = nullptr;
    double eps = std::strtod(env, &end);
    if (end != env && eps > 0.0 && eps < 1.0) {
      cfg.tolerance.abs_eps = eps;
      cfg.tolerance.rel_eps = eps;
    }
  }
}

int cmd_eval(const std::string& expr_text, const CliConfig& cfg,
             std::ostream& out) {
  ExprPtr ast = parse(expr_text);
  Scalar result = evaluate(*ast, cfg);
  out << result.str() << "\n";
  return 0;
}

int cmd_triangle(const DeformParam& p, const CliConfig& cfg,
                 std::ostream& out) {
  Triangle t = build_triangle(cfg.rows, p, cfg.generator);
  out << render(t, parse_format(cfg.format), cfg.precision);
  return 0;
}

int cmd_numbers(const DeformParam& p, long long from, long long to,
                const CliConfig& cfg, std::ostream& out) {
  auto values = int_sequence(from, to, p, cfg.generator);
  TriangleFormat fmt = parse_format(cfg.format);
  if (fmt == TriangleFormat::Json) {
    nlohmann::ordered_json j;
    j["q"] = format_double(p.q_value());
    j["g"] = cfg.generator.str();
    j["from"] = from;
    j["to"] = to;
    std::vector<std::string> strs;
    strs.reserve(values.size());
    for (const auto& v : values) strs.push_back(v.str());
    j["values"] = strs;
    out << j.dump() << "\n";
    return 0;
  }
  const char sep = fmt == TriangleFormat::Csv ? ',' : ' ';
  long long n = from;
  for (const auto& v : values) out << n++ << sep << v.str() << "\n";
  return 0;
}

int cmd_classify(const DeformParam& p, std::ostream& out) {
  PatternClass pc = classify(p);
  out << pattern_name(pc.label);
  if (pc.limit_value) out << " (limit " << format_double(*pc.limit_value) << ")";
  out << "\n";
  return 0;
}

void emit(std::ostream& out, const LawReport& report) {
  out << report.to_json_line() << "\n";
}

void check_q_family(double q, const SampleSpec& spec, std::ostream& out) {
  DeformParam p(q);
  emit(out, check_commutativity(q_sum_op(p), "q+", q, spec));
  emit(out, check_associativity(q_sum_op(p), "q+", q, spec));
  emit(out, check_neutral(q_sum_op(p), "q+", q, spec));
  emit(out, check_commutativity(q_product_op(p), "q*", q, spec));
  emit(out, check_associativity(q_product_op(p), "q*", q, spec));
  emit(out, check_distributivity(q_product_op(p), "q*", q_sum_op(p), "q+", q, spec));
  if (q < 2.0 && !p.effectively_classical()) {
    // The diamond domain is capped above by 1/(q-1) for 1 < q < 2.
    SampleSpec dspec = spec;
    dspec.lo = 0.05;
    if (q > 1.0) dspec.hi = std::min(dspec.hi, 0.95 / (q - 1.0));
    emit(out, check_distributivity(diamond_op(p), "d*", q_sum_op(p), "q+", q, dspec));
  }
}

void check_a_family(double a, const SampleSpec& spec, std::ostream& out) {
  auto low_sum = alt_op({AltFamily::A, AltVariant::Low, AltKind::Sum}, a);
  auto high_sum = alt_op({AltFamily::A, AltVariant::High, AltKind::Sum}, a);
  auto low_prod = alt_op({AltFamily::A, AltVariant::Low, AltKind::Product}, a);
  auto high_prod = alt_op({AltFamily::A, AltVariant::High, AltKind::Product}, a);
  emit(out, check_distributivity(low_prod, "x_a", high_sum, "+^a", a, spec));
  emit(out, check_distributivity(high_prod, "x^a", low_sum, "+_a", a, spec));
  emit(out, check_neutral(high_sum, "+^a", a, spec));
  emit(out, check_neutral(low_sum, "+_a", a, spec));
}

void check_k_family(double k, const SampleSpec& spec, std::ostream& out) {
  auto low_sum = alt_op({AltFamily::K, AltVariant::Low, AltKind::Sum}, k);
  auto high_sum = alt_op({AltFamily::K, AltVariant::High, AltKind::Sum}, k);
  auto low_prod = alt_op({AltFamily::K, AltVariant::Low, AltKind::Product}, k);
  auto high_prod = alt_op({AltFamily::K, AltVariant::High, AltKind::Product}, k);
  emit(out, check_distributivity(low_prod, "[x]_k", high_sum, "[+]^k", k, spec));
  emit(out, check_distributivity(high_prod, "[x]^k", high_sum, "[+]^k", k, spec));
  emit(out, check_distributivity(high_prod, "[x]^k", low_sum, "[+]_k", k, spec));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"deformed arithmetic toolkit"};
  app.require_subcommand(1);

  CliConfig cfg;
  apply_env_tolerance(cfg);

  std::string q_text, g_text = "1", h_text;
  std::string expr_text;
  long long from = 0, to = 0;
  std::string family = "all";
  double law_param = 0.5;

  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--q", q_text, "deformation parameter");
    sub->add_option("--g", g_text, "generator (default 1)");
    if (with_format)
      sub->add_option("--format", cfg.format, "text, json or csv");
  };

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a deformed expression");
  eval_cmd->add_option("expr", expr_text, "expression, e.g. \"1 q+ 1\"")->required();
  add_common(eval_cmd, false);
  eval_cmd->add_option("--H", h_text, "Heine base for heine()");
  eval_cmd->add_flag("--exact", cfg.exact, "require exact (integer 1-q) arithmetic");
  eval_cmd->add_option("--precision", cfg.precision, "display decimals");

  CLI::App* tri_cmd = app.add_subcommand("triangle", "build a deformed Pascal triangle");
  tri_cmd->add_option("--rows", cfg.rows, "number of rows")->required();
  add_common(tri_cmd, true);
  tri_cmd->add_option("--precision", cfg.precision, "text-format decimals (truncated)");

  CLI::App* num_cmd = app.add_subcommand("numbers", "emit a deformed-number table");
  num_cmd->add_option("--from", from, "first index")->required();
  num_cmd->add_option("--to", to, "last index")->required();
  add_common(num_cmd, true);

  CLI::App* cls_cmd = app.add_subcommand("classify", "name the triangle pattern for q");
  add_common(cls_cmd, false);

  CLI::App* chk_cmd = app.add_subcommand("check", "run the algebraic law checker");
  chk_cmd->add_option("--family", family, "qab, a, k or all");
  chk_cmd->add_option("--param", law_param, "deformation parameter for the family");
  chk_cmd->add_option("--samples", cfg.samples, "sample count per law");
  chk_cmd->add_option("--seed", cfg.seed, "sampling seed");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qdeform");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!q_text.empty()) cfg.param = DeformParam(Scalar::parse(q_text));
    cfg.generator = Scalar::parse(g_text);
    if (!h_text.empty()) cfg.heine_base = Scalar::parse(h_text);
    if (cfg.exact) {
      if (!cfg.param) throw DomainError("--exact requires --q");
      auto m = cfg.param->one_minus_q_int();
      if (!m || *m == 0) {
        err << "error: --exact requires 1-q to be a non-zero integer\n";
        return 2;
      }
    }

    if (eval_cmd->parsed()) {
      if (!cfg.param) throw DomainError("eval requires --q");
      return cmd_eval(expr_text, cfg, out);
    }
    if (tri_cmd->parsed()) {
      if (!cfg.param) throw DomainError("triangle requires --q");
      return cmd_triangle(*cfg.param, cfg, out);
    }
    if (num_cmd->parsed()) {
      if (!cfg.param) throw DomainError("numbers requires --q");
      if (from > to) {
        err << "error: --from must not exceed --to\n";
        return 2;
      }
      return cmd_numbers(*cfg.param, from, to, cfg, out);
    }
    if (cls_cmd->parsed()) {
      if (!cfg.param) throw DomainError("classify requires --q");
      return cmd_classify(*cfg.param, out);
    }
    if (chk_cmd->parsed()) {
      SampleSpec spec;
      spec.count = cfg.samples;
      spec.seed = cfg.seed;
      if (family != "qab" && family != "a" && family != "k" && family != "all") {
        err << "error: unknown family '" << family << "'\n";
        return 2;
      }
      if (family == "qab" || family == "all") check_q_family(law_param, spec, out);
      if (family == "a" || family == "all") check_a_family(law_param, spec, out);
      if (family == "k" || family == "all") check_k_family(law_param, spec, out);
      return 0;
    }
    err << "error: no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (offset " << e.offset << ")\n";
    return 2;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << " (span " << e.span.begin << ".." << e.span.end
        << ")\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qdeform

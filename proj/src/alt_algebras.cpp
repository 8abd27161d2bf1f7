#include "qdeform/alt_algebras.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdeform/core_ops.hpp"
#include "qdeform/diamond.hpp"
#include "qdeform/error.hpp"

namespace qdeform {

namespace {

// x^e with real-exponent semantics: negative bases only under integer
// exponents, zero only under positive ones.
double real_pow(double x, double e, const char* what) {
  if (x > 0.0) return std::exp(e * std::log(x));
  if (x == 0.0) {
    if (e > 0.0) return 0.0;
    throw DomainError(std::string(what) + ": zero base with non-positive exponent");
  }
  if (e == std::trunc(e)) {
    double mag = std::exp(e * std::log(-x));
    return std::fmod(e, 2.0) == 0.0 ? mag : -mag;
  }
  throw DomainError(std::string(what) + ": negative base with fractional exponent");
}

void require_param(double param, const char* what) {
  if (param == 0.0 || !std::isfinite(param))
    throw DomainError(std::string(what) + ": parameter must be non-zero and finite");
}

double high_a_sum(double x, double y, double a) {
  double xa = real_pow(x, a, "a-sum");
  double ya = real_pow(y, a, "a-sum");
  double inner = a * std::log(std::exp(xa / a) + std::exp(ya / a));
  return real_pow(inner, 1.0 / a, "a-sum");
}

double high_a_product(double x, double y, double a) {
  double ux = 1.0 + a * x, uy = 1.0 + a * y;
  if (ux <= 0.0 || uy <= 0.0)
    throw DomainError("a-product: 1 + a x must be positive");
  return std::expm1(std::log(ux) * std::log(uy) / a) / a;
}

double high_k_sum(double x, double y, double k) {
  double ux = 1.0 + k * x, uy = 1.0 + k * y;
  double rx = real_pow(ux, 1.0 / k, "k-sum");
  double ry = real_pow(uy, 1.0 / k, "k-sum");
  return (real_pow(rx + ry, k, "k-sum") - 1.0) / k;
}

double high_k_product(double x, double y, double k) {
  double inner = (real_pow(x * y, k, "k-product") - real_pow(x, k, "k-product") -
                  real_pow(y, k, "k-product") + (k + 1.0)) /
                 k;
  return real_pow(inner, 1.0 / k, "k-product");
}

}  // namespace

std::string alt_op_name(AltOpId id) {
  const bool low = id.variant == AltVariant::Low;
  if (id.family == AltFamily::A) {
    if (id.kind == AltKind::Sum) return low ? "+_a" : "+^a";
    return low ? "x_a" : "x^a";
  }
  if (id.kind == AltKind::Sum) return low ? "[+]_k" : "[+]^k";
  return low ? "[x]_k" : "[x]^k";
}

Scalar alt_binary(AltOpId id, const Scalar& x, const Scalar& y, double param) {
  require_param(param, "deformed operation");
  const DeformParam aliased(1.0 - param);
  if (id.family == AltFamily::A) {
    if (id.variant == AltVariant::Low)
      return id.kind == AltKind::Sum ? q_sum(x, y, aliased)
                                     : q_product(x, y, aliased);
    return id.kind == AltKind::Sum
               ? Scalar(high_a_sum(x.to_double(), y.to_double(), param))
               : Scalar(high_a_product(x.to_double(), y.to_double(), param));
  }
  // k-family: the low sum is the deformed product and the low product is
  // the deformed sum, both at q = 1-k.
  if (id.variant == AltVariant::Low)
    return id.kind == AltKind::Sum ? q_product(x, y, aliased)
                                   : q_sum(x, y, aliased);
  return id.kind == AltKind::Sum
             ? Scalar(high_k_sum(x.to_double(), y.to_double(), param))
             : Scalar(high_k_product(x.to_double(), y.to_double(), param));
}

Scalar alt_number(AltNumberId id, const Scalar& x, const Scalar& g,
                  double param) {
  require_param(param, "deformed number");
  double xd = x.to_double(), gd = g.to_double(), p = param;
  switch (id) {
    case AltNumberId::AHigh: {
      if (xd <= 0.0) throw DomainError("a-number requires x > 0");
      double inner = p * std::log(xd) + real_pow(gd, p, "a-number");
      return Scalar(real_pow(inner, 1.0 / p, "a-number"));
    }
    case AltNumberId::KHigh:
      return Scalar((real_pow(xd, p, "k-number") * (1.0 + p * gd) - 1.0) / p);
    case AltNumberId::KLow: {
      double inner = xd * real_pow(gd, p, "k-number") - (xd - 1.0);
      return Scalar(real_pow(inner, 1.0 / p, "k-number"));
    }
  }
  throw DomainError("unknown deformed-number id");
}

namespace {

double uniform(std::uint64_t& state, double lo, double hi) {
  // splitmix64; deterministic across platforms.
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  double u = static_cast<double>(z >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double rel_residual(double lhs, double rhs) {
  if (lhs == rhs) return 0.0;
  double denom = std::max(std::abs(lhs), std::abs(rhs));
  if (denom == 0.0) return 0.0;
  return std::abs(lhs - rhs) / denom;
}

void require_hit_rate(const LawReport& r) {
  if (r.samples + r.skipped > 0 &&
      r.samples * 5 < (r.samples + r.skipped) * 4)
    throw DomainError("law check: sample ranges fall outside the operation domains");
}

template <typename Eval>
LawReport run_samples(Law law, std::string mul_name, std::string add_name,
                      double param, const SampleSpec& spec, int arity,
                      Eval eval) {
  LawReport report;
  report.law = law;
  report.mul_name = std::move(mul_name);
  report.add_name = std::move(add_name);
  report.param = param;
  std::uint64_t state = spec.seed;
  for (int i = 0; i < spec.count; ++i) {
    double x = uniform(state, spec.lo, spec.hi);
    double y = uniform(state, spec.lo, spec.hi);
    double z = arity >= 3 ? uniform(state, spec.lo, spec.hi) : 0.0;
    double lhs, rhs;
    try {
      auto sides = eval(x, y, z);
      lhs = sides.first;
      rhs = sides.second;
    } catch (const DomainError&) {
      ++report.skipped;
      continue;
    }
    ++report.samples;
    double res = rel_residual(lhs, rhs);
    report.max_residual = std::max(report.max_residual, res);
    if (res > spec.tolerance && !report.counterexample)
      report.counterexample = Counterexample{x, y, z, lhs, rhs};
  }
  require_hit_rate(report);
  report.holds = !report.counterexample.has_value();
  return report;
}

}  // namespace

LawReport check_distributivity(const BinaryOpFn& mul, std::string mul_name,
                               const BinaryOpFn& add, std::string add_name,
                               double param, const SampleSpec& spec) {
  return run_samples(
      Law::Distributivity, std::move(mul_name), std::move(add_name), param,
      spec, 3, [&](double x, double y, double z) {
        Scalar sx(x), sy(y), sz(z);
        double lhs = mul(sz, add(sx, sy)).to_double();
        double rhs = add(mul(sz, sx), mul(sz, sy)).to_double();
        return std::pair(lhs, rhs);
      });
}

LawReport check_associativity(const BinaryOpFn& op, std::string name,
                              double param, const SampleSpec& spec) {
  return run_samples(Law::Associativity, name, name, param, spec, 3,
                     [&](double x, double y, double z) {
                       Scalar sx(x), sy(y), sz(z);
                       double lhs = op(op(sx, sy), sz).to_double();
                       double rhs = op(sx, op(sy, sz)).to_double();
                       return std::pair(lhs, rhs);
                     });
}

LawReport check_commutativity(const BinaryOpFn& op, std::string name,
                              double param, const SampleSpec& spec) {
  return run_samples(Law::Commutativity, name, name, param, spec, 2,
                     [&](double x, double y, double) {
                       Scalar sx(x), sy(y);
                       return std::pair(op(sx, sy).to_double(),
                                        op(sy, sx).to_double());
                     });
}

LawReport check_neutral(const BinaryOpFn& add, std::string add_name,
                        double param, const SampleSpec& spec) {
  LawReport report;
  report.law = Law::NeutralExists;
  report.add_name = std::move(add_name);
  report.param = param;

  std::uint64_t state = spec.seed;
  const int probe_count = std::min(spec.count, 48);
  std::vector<double> probes;
  probes.reserve(static_cast<std::size_t>(probe_count));
  for (int i = 0; i < probe_count; ++i)
    probes.push_back(uniform(state, spec.lo, spec.hi));

  // Worst residual of add(x, t) = x over the probe set; +inf when t is
  // outside the operation's domain for some probe.
  auto score = [&](double t) {
    double worst = 0.0;
    for (double x : probes) {
      try {
        double v = add(Scalar(x), Scalar(t)).to_double();
        worst = std::max(worst, rel_residual(v, x));
      } catch (const DomainError&) {
        return std::numeric_limits<double>::infinity();
      }
    }
    return worst;
  };

  const int grid = 481;
  double best_t = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    double t = -spec.hi + (2.0 * spec.hi) * i / (grid - 1);
    if (i == grid / 2) t = 0.0;  // make sure the classical neutral is probed
    double s = score(t);
    if (s < best) {
      best = s;
      best_t = t;
    }
  }
  // Local ternary refinement around the best grid point.
  double a = best_t - 2.0 * spec.hi / (grid - 1);
  double b = best_t + 2.0 * spec.hi / (grid - 1);
  for (int it = 0; it < 80; ++it) {
    double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
    if (score(m1) <= score(m2))
      b = m2;
    else
      a = m1;
  }
  double refined = (a + b) / 2.0;
  if (score(refined) < best) {
    best = score(refined);
    best_t = refined;
  }

  report.samples = probe_count;
  report.max_residual = best;
  report.holds = best <= spec.tolerance;
  double worst_x = probes.empty() ? 0.0 : probes.front();
  double worst_res = -1.0;
  for (double x : probes) {
    try {
      double v = add(Scalar(x), Scalar(best_t)).to_double();
      double r = rel_residual(v, x);
      if (r > worst_res) {
        worst_res = r;
        worst_x = x;
      }
    } catch (const DomainError&) {
    }
  }
  double lhs = 0.0;
  try {
    lhs = add(Scalar(worst_x), Scalar(best_t)).to_double();
  } catch (const DomainError&) {
  }
  report.counterexample = Counterexample{worst_x, best_t, 0.0, lhs, worst_x};
  return report;
}

namespace {

const char* law_name(Law law) {
  switch (law) {
    case Law::Distributivity: return "distributivity";
    case Law::Associativity: return "associativity";
    case Law::Commutativity: return "commutativity";
    case Law::NeutralExists: return "neutral-exists";
  }
  return "?";
}

}  // namespace

nlohmann::ordered_json LawReport::to_json() const {
  nlohmann::ordered_json j;
  j["law"] = law_name(law);
  j["mul"] = mul_name;
  j["add"] = add_name;
  j["param"] = format_double(param);
  j["holds"] = holds;
  if (counterexample) {
    j["counterexample"] = {{"x", format_double(counterexample->x)},
                           {"y", format_double(counterexample->y)},
                           {"z", format_double(counterexample->z)},
                           {"lhs", format_double(counterexample->lhs)},
                           {"rhs", format_double(counterexample->rhs)}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["max_residual"] = format_double(max_residual);
  j["samples"] = samples;
  j["skipped"] = skipped;
  return j;
}

std::string LawReport::to_json_line() const { return to_json().dump(); }

BinaryOpFn q_sum_op(const DeformParam& p) {
  return [p](const Scalar& x, const Scalar& y) { return q_sum(x, y, p); };
}

BinaryOpFn q_product_op(const DeformParam& p) {
  return [p](const Scalar& x, const Scalar& y) { return q_product(x, y, p); };
}

BinaryOpFn diamond_op(const DeformParam& p) {
  return [p](const Scalar& x, const Scalar& y) { return diamond(x, y, p); };
}

BinaryOpFn alt_op(AltOpId id, double param) {
  return [id, param](const Scalar& x, const Scalar& y) {
    return alt_binary(id, x, y, param);
  };
}

}  // namespace qdeform

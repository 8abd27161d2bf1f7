#include "qdeform/pascal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qdeform/core_ops.hpp"
#include "qdeform/error.hpp"
#include "qdeform/qnumbers.hpp"

namespace qdeform {

Scalar::Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Scalar::Int result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

namespace {

bool exact_eligible(const DeformParam& p, const Scalar& g) {
  auto m = p.one_minus_q_int();
  return m && *m != 0 && g.is_exact() && g.is_integer();
}

void check_digit_cap(int rows, const DeformParam& p, const Scalar& g,
                     std::int64_t digit_cap) {
  Scalar base = Scalar(1) + p.one_minus_q() * g;
  Scalar::Rat br = base.to_rational();
  Scalar::Int mag = std::max(abs(numerator(br)), denominator(br));
  if (mag <= 1) return;  // entries stay bounded
  double log10_base = (static_cast<double>(msb(mag)) + 1.0) * 0.30103;
  double max_pre = binomial(rows - 1, (rows - 1) / 2).convert_to<double>();
  if (max_pre * log10_base > static_cast<double>(digit_cap))
    throw ResourceError("exact triangle would exceed the digit cap");
}

}  // namespace

Triangle build_triangle(int rows, const DeformParam& p, const Scalar& g,
                        std::int64_t digit_cap) {
  if (rows < 1) throw DomainError("triangle needs at least one row");
  const bool exact = exact_eligible(p, g);
  if (exact) check_digit_cap(rows, p, g, digit_cap);

  Scalar edge = exact ? g : Scalar(g.to_double());
  Triangle t{p, g, exact ? TriangleMode::Exact : TriangleMode::Float, {}};
  t.rows.reserve(static_cast<std::size_t>(rows));
  t.rows.push_back({edge});
  for (int n = 1; n < rows; ++n) {
    const auto& prev = t.rows.back();
    std::vector<Scalar> row;
    row.reserve(static_cast<std::size_t>(n) + 1);
    row.push_back(edge);
    for (int k = 1; k < n; ++k)
      row.push_back(q_sum(prev[k - 1], prev[k], p));
    row.push_back(edge);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Scalar entry_closed(int n, int k, const DeformParam& p) {
  if (k < 0 || k > n) throw DomainError("entry_closed: need 0 <= k <= n");
  return to_qnumber(Scalar(binomial(n, k)), p).value;
}

PatternClass classify(const DeformParam& p) {
  double q = p.q_value();
  if (q <= 1.0) return {Pattern::Increasing, std::nullopt};
  if (q < 2.0) return {Pattern::Asymptotic, 1.0 / (q - 1.0)};
  if (p.q() == Scalar(2)) return {Pattern::Fixed, 1.0};
  if (q < 3.0) return {Pattern::SubUnitBounded, 1.0 / (q - 1.0)};
  if (p.q() == Scalar(3)) return {Pattern::SelfSimilarBinary, std::nullopt};
  return {Pattern::Unsupported, std::nullopt};
}

std::string pattern_name(Pattern label) {
  switch (label) {
    case Pattern::Increasing: return "increasing";
    case Pattern::Asymptotic: return "asymptotic";
    case Pattern::Fixed: return "fixed";
    case Pattern::SubUnitBounded: return "sub-unit-bounded";
    case Pattern::SelfSimilarBinary: return "self-similar-binary";
    case Pattern::Unsupported: return "unsupported";
  }
  return "?";
}

std::string format_truncated(double v, int decimals) {
  if (!std::isfinite(v)) return format_double(v);
  if (decimals < 0) decimals = 0;
  // Doubles are dyadic rationals, so the truncation can be done exactly;
  // printing and cutting digits would round near decimal boundaries.
  Scalar::Rat r(v);
  Scalar::Int scale = pow(Scalar::Int(10), static_cast<unsigned>(decimals));
  Scalar::Int scaled = (numerator(r) * scale) / denominator(r);  // toward zero
  bool neg = scaled < 0;
  std::string digits = (neg ? Scalar::Int(-scaled) : scaled).str();
  std::string s;
  if (decimals == 0) {
    s = digits;
  } else {
    if (digits.size() <= static_cast<std::size_t>(decimals))
      digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    s = digits.substr(0, digits.size() - decimals) + "." +
        digits.substr(digits.size() - decimals);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  if (s == "0") return s;
  return neg ? "-" + s : s;
}

namespace {

std::string cell_string(const Scalar& v, TriangleMode mode, TriangleFormat fmt,
                        int decimals) {
  if (mode == TriangleMode::Exact) return v.str();
  if (fmt == TriangleFormat::Text) return format_truncated(v.to_double(), decimals);
  return format_double(v.to_double());
}

}  // namespace

std::string render(const Triangle& t, TriangleFormat fmt, int decimals) {
  std::vector<std::vector<std::string>> cells;
  cells.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    line.reserve(row.size());
    for (const auto& v : row) line.push_back(cell_string(v, t.mode, fmt, decimals));
    cells.push_back(std::move(line));
  }

  switch (fmt) {
    case TriangleFormat::Csv: {
      std::ostringstream out;
      for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) out << ',';
          out << row[i];
        }
        out << '\n';
      }
      return out.str();
    }
    case TriangleFormat::Json: {
      nlohmann::ordered_json j;
      j["q"] = format_double(t.param.q_value());
      j["g"] = t.generator.str();
      j["mode"] = t.mode == TriangleMode::Exact ? "exact" : "float";
      j["rows"] = cells;
      return j.dump() + "\n";
    }
    case TriangleFormat::Text: {
      std::vector<std::string> lines;
      lines.reserve(cells.size());
      std::size_t widest = 0;
      for (const auto& row : cells) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) line += "  ";
          line += row[i];
        }
        widest = std::max(widest, line.size());
        lines.push_back(std::move(line));
      }
      std::ostringstream out;
      for (auto& line : lines) {
        out << std::string((widest - line.size()) / 2, ' ') << line << '\n';
      }
      return out.str();
    }
  }
  return {};
}

}  // namespace qdeform

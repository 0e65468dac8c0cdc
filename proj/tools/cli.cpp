#include "cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "eulerquad/eulerquad.hpp"

namespace eulerquad::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Table, Json, Csv };

using Cell = std::variant<std::string, double, std::int64_t, bool>;

std::string shortest(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string render(const Cell& cell, bool full_precision) {
  struct Visitor {
    bool full;
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(double v) const {
      if (full) return shortest(v);
      std::ostringstream os;
      os << std::setprecision(6) << v;
      return os.str();
    }
  };
  return std::visit(Visitor{full_precision}, cell);
}

/// Per-n table: aligned text for humans, or CSV with a fixed header.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void print_text(std::ostream& os) const {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], render(row[c], false).size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        os << std::left << std::setw(static_cast<int>(width[c])) << cells[c] << (c + 1 < cells.size() ? "  " : "");
      }
      os << '\n';
    };
    line(header);
    for (const auto& row : rows) {
      std::vector<std::string> cells;
      for (const auto& cell : row) cells.push_back(render(cell, false));
      line(cells);
    }
  }

  void print_csv(std::ostream& os) const {
    for (std::size_t c = 0; c < header.size(); ++c) os << header[c] << (c + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << render(row[c], true) << (c + 1 < row.size() ? "," : "\n");
    }
  }
};

void summary(std::ostream& os, const std::string& key, const Cell& value) {
  os << key << ": " << render(value, false) << '\n';
}

struct Options {
  std::string format = "table";
  std::string out_path;

  std::string f;
  double a = 0.0;
  double b = 1.0;
  std::int64_t n = 10;
  std::string rule = "left";
  double tol = 1e-6;
  std::int64_t n0 = 10;
  std::int64_t max_n = 10'000'000;
  std::vector<std::int64_t> n_list{10, 100, 1000};
  std::optional<double> M;
  int order = 1;
  double taylor_tol = 1e-12;
  std::string split = "sqrt2m1";
  std::string end = "left";
  std::vector<double> eps_list;
  double inner_tol = 1e-4;
  bool compare = false;
};

Expr parse_expression(const std::string& text, const char* flag) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    const ParseDiagnostic& d = e.diagnostic();
    std::ostringstream msg;
    msg << flag << ": " << d.message << "\n  " << text << "\n  " << std::string(d.begin, ' ')
        << std::string(std::max<std::size_t>(1, d.end - d.begin), '^');
    throw UsageError(msg.str());
  }
}

void require_interval(double a, double b) {
  if (!(a < b)) throw UsageError("a must be < b");
}

void require_counts(const std::vector<std::int64_t>& ns) {
  if (ns.empty()) throw UsageError("--n-list must not be empty");
  for (const auto n : ns) {
    if (n < 1) throw UsageError("n must be >= 1");
  }
}

PartitionRule require_rule(const std::string& text) {
  if (auto rule = parse_rule(text)) return *rule;
  throw UsageError("--rule must be left, right or midpoint");
}

QSqrt2 parse_split(const std::string& text) {
  if (text == "sqrt2m1") return QSqrt2::sqrt2_minus_1();
  try {
    return QSqrt2(Rational::parse(text));
  } catch (const PreconditionError&) {
    throw UsageError("--split must be sqrt2m1 or a rational p/q");
  }
}

void emit_sum(const Options& o, Format fmt, std::ostream& os) {
  const Expr f = parse_expression(o.f, "--f");
  require_interval(o.a, o.b);
  if (o.n < 1) throw UsageError("n must be >= 1");
  const auto rule = require_rule(o.rule);
  const auto r = euler_sum(f, GridSpec(o.a, o.b, o.n), rule);
  if (fmt == Format::Json) {
    os << to_json(r).dump(2) << '\n';
    return;
  }
  Table t{{"a", "b", "n", "rule", "value"}, {{r.grid.a(), r.grid.b(), r.grid.n(), std::string(to_string(rule)), r.value}}};
  fmt == Format::Csv ? t.print_csv(os) : t.print_text(os);
}

void emit_integrate(const Options& o, Format fmt, std::ostream& os) {
  const Expr f = parse_expression(o.f, "--f");
  require_interval(o.a, o.b);
  if (!(o.tol > 0.0)) throw UsageError("tolerance must be > 0");
  if (o.n0 < 1) throw UsageError("n0 must be >= 1");
  if (o.n0 > o.max_n) throw UsageError("n0 must be <= max-n");
  const auto rule = require_rule(o.rule);
  const auto r = integrate(f, o.a, o.b, rule, o.tol, o.n0, o.max_n);
  if (fmt == Format::Json) {
    os << to_json(r).dump(2) << '\n';
    return;
  }
  Table t{{"n", "value"}, {}};
  for (const auto& s : r.samples) t.rows.push_back({s.n, s.value});
  if (fmt == Format::Csv) return t.print_csv(os);
  t.print_text(os);
  summary(os, "estimate", r.estimate);
  summary(os, "converged", r.converged);
  summary(os, "stop_reason", std::string(to_string(r.stop_reason)));
}

void emit_ftc(const Options& o, Format fmt, std::ostream& os) {
  const Expr F = parse_expression(o.f, "--F");
  require_interval(o.a, o.b);
  require_counts(o.n_list);
  if (o.M && !(*o.M >= 0.0)) throw UsageError("--M must be >= 0");
  const auto v = verify_ftc(F, o.a, o.b, o.n_list, o.M);
  if (fmt == Format::Json) {
    os << to_json(v).dump(2) << '\n';
    return;
  }
  Table t{{"n", "In", "abs_error", "bound"}, {}};
  for (const auto& row : v.rows) t.rows.push_back({row.n, row.sum, row.abs_error, row.bound});
  if (fmt == Format::Csv) return t.print_csv(os);
  t.print_text(os);
  summary(os, "exact", v.exact);
  summary(os, v.M_estimated ? "M (estimated)" : "M", v.M_used);
  summary(os, "all_within_bound", v.all_within_bound);
}

void emit_taylor(const Options& o, Format fmt, std::ostream& os) {
  const Expr f = parse_expression(o.f, "--f");
  require_interval(o.a, o.b);
  if (o.order < 0) throw UsageError("--order must be >= 0");
  if (!(o.taylor_tol > 0.0)) throw UsageError("tolerance must be > 0");
  const auto t = lagrange_remainder(f, o.a, o.b, o.order, o.taylor_tol);
  if (fmt == Format::Json) {
    os << to_json(t).dump(2) << '\n';
    return;
  }
  const Cell c = t.lagrange_c ? Cell(*t.lagrange_c) : Cell(std::string("none"));
  if (fmt == Format::Csv) {
    Table{{"a", "b", "order", "remainder", "c", "residual"},
          {{t.a, t.b, static_cast<std::int64_t>(t.order), t.remainder, c, t.residual}}}
        .print_csv(os);
    return;
  }
  Table coeffs{{"j", "coefficient"}, {}};
  for (std::size_t j = 0; j < t.coefficients.size(); ++j) {
    coeffs.rows.push_back({static_cast<std::int64_t>(j), t.coefficients[j]});
  }
  coeffs.print_text(os);
  summary(os, "remainder", t.remainder);
  summary(os, "c", c);
  summary(os, "residual", t.residual);
}

void emit_counterexample(const Options& o, Format fmt, std::ostream& os) {
  const QSqrt2 split = parse_split(o.split);
  if (!(QSqrt2() < split && split < QSqrt2(Rational(1)))) throw UsageError("split must lie strictly inside (0, 1)");
  require_counts(o.n_list);
  const auto rep = additivity_demo(split, o.n_list);
  if (fmt == Format::Json) {
    os << to_json(rep).dump(2) << '\n';
    return;
  }
  Table t{{"n", "full", "left", "right", "defect"}, {}};
  for (const auto& row : rep.rows) {
    t.rows.push_back({row.n, row.full.to_string(), row.left.to_string(), row.right.to_string(), row.defect.to_string()});
  }
  if (fmt == Format::Csv) return t.print_csv(os);
  summary(os, "split", rep.split.to_string());
  t.print_text(os);
}

void emit_improper(const Options& o, Format fmt, std::ostream& os) {
  const Expr f = parse_expression(o.f, "--f");
  require_interval(o.a, o.b);
  const auto end = parse_singular_end(o.end);
  if (!end) throw UsageError("--end must be left or right");
  if (o.compare && *end != SingularEnd::Left) throw UsageError("--compare needs --end left");
  if (!(o.inner_tol > 0.0)) throw UsageError("tolerance must be > 0");
  ImproperConfig config;
  config.inner_tolerance = o.inner_tol;
  if (!o.eps_list.empty()) config.epsilons = o.eps_list;
  double previous = o.b - o.a;
  for (const double eps : config.epsilons) {
    if (!(eps > 0.0 && eps < previous)) throw UsageError("--eps-list must be positive, strictly decreasing and below b - a");
    previous = eps;
  }

  if (o.compare) {
    const auto r = direct_vs_improper(f, o.a, o.b, config);
    if (fmt == Format::Json) {
      os << to_json(r).dump(2) << '\n';
      return;
    }
    Table direct{{"n", "value", "bound"}, {}};
    for (const auto& row : r.direct) direct.rows.push_back({row.n, row.value, row.bound ? Cell(*row.bound) : Cell(std::string("n/a"))});
    if (fmt == Format::Csv) return direct.print_csv(os);
    direct.print_text(os);
    summary(os, "M", r.M ? Cell(*r.M) : Cell(std::string("unavailable (f' unbounded or undefined)")));
    summary(os, "extrapolated", r.improper.extrapolated);
    summary(os, "difference", r.difference);
    return;
  }

  const auto r = improper_integrate(f, o.a, o.b, *end, config);
  if (fmt == Format::Json) {
    os << to_json(r).dump(2) << '\n';
    return;
  }
  Table t{{"epsilon", "value", "inner_converged"}, {}};
  for (const auto& row : r.rows) t.rows.push_back({row.epsilon, row.value, row.inner_converged});
  if (fmt == Format::Csv) return t.print_csv(os);
  t.print_text(os);
  summary(os, "extrapolated", r.extrapolated);
  summary(os, "converged", r.converged);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler-sum quadrature, FTC and Taylor-Lagrange checks"};
  app.name("eulerquad");
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", o.out_path, "Write the result to this file instead of stdout");

  auto* sum = app.add_subcommand("sum", "n-th Euler sum of f on [a, b]");
  sum->add_option("--f", o.f, "Integrand f(x)")->required();
  sum->add_option("--a", o.a)->required();
  sum->add_option("--b", o.b)->required();
  sum->add_option("--n", o.n, "Number of subintervals")->required();
  sum->add_option("--rule", o.rule, "left | right | midpoint")->capture_default_str();

  auto* integ = app.add_subcommand("integrate", "Limit of Euler sums by successive doubling of n");
  integ->add_option("--f", o.f, "Integrand f(x)")->required();
  integ->add_option("--a", o.a)->required();
  integ->add_option("--b", o.b)->required();
  integ->add_option("--tol", o.tol, "Stop when |I_2n - I_n| <= tol")->capture_default_str();
  integ->add_option("--n0", o.n0)->capture_default_str();
  integ->add_option("--max-n", o.max_n)->capture_default_str();
  integ->add_option("--rule", o.rule, "left | right | midpoint")->capture_default_str();

  auto* ftc = app.add_subcommand("ftc", "Compare Euler sums of F' with F(b) - F(a) and M(b-a)^2/(2n)");
  ftc->add_option("--F", o.f, "Antiderivative F(x)")->required();
  ftc->add_option("--a", o.a)->required();
  ftc->add_option("--b", o.b)->required();
  ftc->add_option("--n-list", o.n_list, "Comma-separated subdivision counts")->delimiter(',')->capture_default_str();
  ftc->add_option("--M", o.M, "Known bound on |F''| (estimated by sampling when omitted)");

  auto* taylor = app.add_subcommand("taylor", "Taylor expansion with Lagrange remainder and its point c");
  taylor->add_option("--f", o.f, "Function f(x)")->required();
  taylor->add_option("--a", o.a)->required();
  taylor->add_option("--b", o.b)->required();
  taylor->add_option("--order", o.order)->capture_default_str();
  taylor->add_option("--tol", o.taylor_tol)->capture_default_str();

  auto* counter = app.add_subcommand("counterexample", "Exact indicator-of-rationals sums around a split point");
  counter->add_option("--split", o.split, "sqrt2m1 or a rational p/q in (0, 1)")->capture_default_str();
  counter->add_option("--n-list", o.n_list, "Comma-separated subdivision counts")->delimiter(',')->capture_default_str();

  auto* improper = app.add_subcommand("improper", "eps-limit of integrals over [a+eps, b] or [a, b-eps]");
  improper->add_option("--f", o.f, "Integrand f(x)")->required();
  improper->add_option("--a", o.a)->required();
  improper->add_option("--b", o.b)->required();
  improper->add_option("--end", o.end, "Singular end: left | right")->capture_default_str();
  improper->add_option("--eps-list", o.eps_list, "Comma-separated decreasing eps values")->delimiter(',');
  improper->add_option("--tol", o.inner_tol, "Inner tolerance of each eps row")->capture_default_str();
  improper->add_flag("--compare", o.compare, "Also report direct Euler sums on [a, b]");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const Format fmt = o.format == "json" ? Format::Json : o.format == "csv" ? Format::Csv : Format::Table;
  std::ostringstream buffer;
  buffer.precision(17);
  try {
    if (*sum) emit_sum(o, fmt, buffer);
    if (*integ) emit_integrate(o, fmt, buffer);
    if (*ftc) emit_ftc(o, fmt, buffer);
    if (*taylor) emit_taylor(o, fmt, buffer);
    if (*counter) emit_counterexample(o, fmt, buffer);
    if (*improper) emit_improper(o, fmt, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  }

  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!(file << buffer.str()) || !file.flush()) {
      err << "error: cannot write " << o.out_path << '\n';
      return kComputationError;
    }
    return kOk;
  }
  out << buffer.str();
  return kOk;
}

}  // namespace eulerquad::cli

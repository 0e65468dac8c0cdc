#include "eulerquad/improper.hpp"

#include <cmath>

#include "eulerquad/errors.hpp"

namespace eulerquad {

std::string_view to_string(SingularEnd end) noexcept { return end == SingularEnd::Left ? "left" : "right"; }

std::optional<SingularEnd> parse_singular_end(std::string_view text) noexcept {
  if (text == "left") return SingularEnd::Left;
  if (text == "right") return SingularEnd::Right;
  return std::nullopt;
}

std::vector<double> ImproperConfig::default_epsilons() {
  std::vector<double> eps;
  for (int i = 1; i <= 8; ++i) eps.push_back(std::pow(10.0, -i));
  return eps;
}

std::vector<std::int64_t> default_direct_ns() { return {10, 100, 1'000, 10'000, 100'000, 1'000'000}; }

namespace {

void validate(const ImproperConfig& config, double a, double b) {
  if (!(a < b)) throw PreconditionError("a must be < b");
  if (config.epsilons.empty()) throw PreconditionError("epsilon sequence must not be empty");
  double previous = b - a;
  for (const double eps : config.epsilons) {
    if (!(eps > 0.0)) throw PreconditionError("epsilons must be positive");
    if (!(eps < previous)) {
      throw PreconditionError("epsilons must be strictly decreasing and below b - a");
    }
    previous = eps;
  }
  if (!(config.inner_tolerance > 0.0)) throw PreconditionError("inner tolerance must be > 0");
  if (!(config.stall_tolerance > 0.0)) throw PreconditionError("stall tolerance must be > 0");
}

}  // namespace

ImproperReport improper_integrate(const Expr& f, double a, double b, SingularEnd singular_end,
                                  const ImproperConfig& config, Execution exec) {
  validate(config, a, b);
  ImproperReport report;
  report.a = a;
  report.b = b;
  report.singular_end = singular_end;

  bool all_converged = true;
  std::optional<double> last_converged;
  for (const double eps : config.epsilons) {
    const double lo = singular_end == SingularEnd::Left ? a + eps : a;
    const double hi = singular_end == SingularEnd::Right ? b - eps : b;
    const ConvergenceReport inner =
        integrate(f, lo, hi, config.rule, config.inner_tolerance, config.n0, config.max_n, exec);
    report.rows.push_back({eps, inner.estimate, inner.converged});
    all_converged = all_converged && inner.converged;
    if (inner.converged) last_converged = inner.estimate;
  }

  report.extrapolated = last_converged.value_or(report.rows.back().value);
  const std::size_t m = report.rows.size();
  const bool stalled =
      m < 2 || std::abs(report.rows[m - 1].value - report.rows[m - 2].value) <= config.stall_tolerance;
  report.converged = all_converged && stalled;
  return report;
}

DirectVsImproper direct_vs_improper(const Expr& f, double a, double b, const ImproperConfig& config,
                                    std::span<const std::int64_t> direct_ns, Execution exec) {
  const std::vector<std::int64_t> fallback = default_direct_ns();
  if (direct_ns.empty()) direct_ns = fallback;

  DirectVsImproper out;
  out.improper = improper_integrate(f, a, b, SingularEnd::Left, config, exec);

  try {
    out.M = sup_abs(differentiate(f), a, b, kFtcSupSamples);
  } catch (const EvalError&) {
    out.M.reset();
  }

  for (const std::int64_t n : direct_ns) {
    const double value = euler_sum(f, GridSpec(a, b, n), PartitionRule::Left, exec).value;
    std::optional<double> bound;
    if (out.M) bound = a_priori_bound(*out.M, a, b, n);
    out.direct.push_back({n, value, bound});
  }
  out.difference = out.direct.back().value - out.improper.extrapolated;
  return out;
}

}  // namespace eulerquad

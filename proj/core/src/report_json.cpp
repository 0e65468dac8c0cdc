#include "eulerquad/report_json.hpp"

#include <string>

namespace eulerquad {

using nlohmann::json;

json to_json(const EulerSumResult& r) {
  return json{{"a", r.grid.a()},
              {"b", r.grid.b()},
              {"n", r.grid.n()},
              {"rule", std::string(to_string(r.rule))},
              {"value", r.value}};
}

json to_json(const ConvergenceReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) samples.push_back({{"n", s.n}, {"value", s.value}});
  return json{{"tolerance", r.tolerance},
              {"samples", std::move(samples)},
              {"estimate", r.estimate},
              {"converged", r.converged},
              {"stop_reason", std::string(to_string(r.stop_reason))}};
}

json to_json(const FtcVerdict& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n}, {"In", row.sum}, {"abs_error", row.abs_error}, {"bound", row.bound}});
  }
  return json{{"exact", r.exact}, {"M", r.M_used}, {"rows", std::move(rows)}, {"all_within_bound", r.all_within_bound}};
}

json to_json(const TaylorExpansion& r) {
  return json{{"a", r.a},
              {"b", r.b},
              {"order", r.order},
              {"coefficients", r.coefficients},
              {"remainder", r.remainder},
              {"c", r.lagrange_c ? json(*r.lagrange_c) : json(nullptr)},
              {"residual", r.residual}};
}

json to_json(const AdditivityReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"full", row.full.to_string()},
                    {"left", row.left.to_string()},
                    {"right", row.right.to_string()},
                    {"defect", row.defect.to_string()}});
  }
  return json{{"split", r.split.to_string()}, {"rows", std::move(rows)}};
}

json to_json(const ImproperReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"epsilon", row.epsilon}, {"value", row.value}, {"inner_converged", row.inner_converged}});
  }
  return json{{"a", r.a},
              {"b", r.b},
              {"singular_end", std::string(to_string(r.singular_end))},
              {"rows", std::move(rows)},
              {"extrapolated", r.extrapolated},
              {"converged", r.converged}};
}

json to_json(const DirectVsImproper& r) {
  json direct = json::array();
  for (const auto& row : r.direct) {
    direct.push_back({{"n", row.n}, {"value", row.value}, {"bound", row.bound ? json(*row.bound) : json(nullptr)}});
  }
  return json{{"direct", std::move(direct)},
              {"M", r.M ? json(*r.M) : json(nullptr)},
              {"improper", to_json(r.improper)},
              {"difference", r.difference}};
}

}  // namespace eulerquad

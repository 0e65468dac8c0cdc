#pragma once

#include <nlohmann/json.hpp>

#include "eulerquad/improper.hpp"
#include "eulerquad/indicator.hpp"
#include "eulerquad/quadrature.hpp"
#include "eulerquad/taylor.hpp"

namespace eulerquad {

// Machine-readable report schemas. Reals are emitted as JSON numbers, which
// nlohmann::json prints in shortest round-trip form; exact Q(sqrt 2) values
// are emitted as strings.

/// {a, b, n, rule, value}
nlohmann::json to_json(const EulerSumResult& r);
/// {tolerance, samples:[{n, value}], estimate, converged, stop_reason}
nlohmann::json to_json(const ConvergenceReport& r);
/// {exact, M, rows:[{n, In, abs_error, bound}], all_within_bound}
nlohmann::json to_json(const FtcVerdict& r);
/// {a, b, order, coefficients:[...], remainder, c, residual}; c is null when
/// no Lagrange point was located.
nlohmann::json to_json(const TaylorExpansion& r);
/// {split, rows:[{n, full, left, right, defect}]}
nlohmann::json to_json(const AdditivityReport& r);
/// {a, b, singular_end, rows:[{epsilon, value, inner_converged}], extrapolated, converged}
nlohmann::json to_json(const ImproperReport& r);
/// {direct:[{n, value, bound}], M, improper:{...}, difference}; M and bound
/// are null when sup |f'| is unavailable.
nlohmann::json to_json(const DirectVsImproper& r);

}  // namespace eulerquad

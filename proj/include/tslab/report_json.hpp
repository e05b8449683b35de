#pragma once

#include <json.hpp>

#include "tslab/nonlinearity.hpp"
#include "tslab/solver.hpp"
#include "tslab/spectrum.hpp"
#include "tslab/titchmarsh.hpp"

namespace tslab {

/// Finite values as numbers, sentinels as the strings "+inf" / "-inf".
nlohmann::json to_json(const ExtReal& v);
nlohmann::json to_json(const BoundProfile& p);

/// {side, max_discrepancy_cells, pass, per_x_profiles: {x, lhs, rhs, rhs_swapped}}
nlohmann::json to_json(const SideReport& s);
/// {sides: [a, b], pass}
nlohmann::json to_json(const CheckReport& r);

/// {variant, params}
nlohmann::json to_json(const Nonlinearity& nl);
/// {variant, params, n, kappa: "p/q", admissible, failed}
nlohmann::json verdict_json(const Nonlinearity& nl, int n, const Verdict& v);

nlohmann::json to_json(const SpectrumReport& r);

/// Model metadata, snapshot times and invariant trace of a run.
nlohmann::json record_metadata(const SimRecord& rec);

std::string kappa_string(const Rational& k);

}  // namespace tslab

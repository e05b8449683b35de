#include "tslab/report_json.hpp"

#include <cmath>
#include <variant>

namespace tslab {

using nlohmann::json;

namespace {

json finite_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  return v;
}

}  // namespace

json to_json(const ExtReal& v) {
  if (v.is_finite()) return v.value();
  return v.to_string();
}

json to_json(const BoundProfile& p) {
  json out = json::array();
  for (const ExtReal& v : p.values) out.push_back(to_json(v));
  return out;
}

json to_json(const SideReport& s) {
  json xs = json::array();
  for (std::size_t i = 0; i < s.lhs.size(); ++i) xs.push_back(s.lhs.xgrid.coordinate(i));
  return {{"side", std::string(1, s.side)},
          {"max_discrepancy_cells", finite_or_inf(s.max_discrepancy_cells)},
          {"pass", s.pass},
          {"per_x_profiles",
           {{"x", xs}, {"lhs", to_json(s.lhs)}, {"rhs", to_json(s.rhs)}, {"rhs_swapped", to_json(s.rhs_swapped)}}}};
}

json to_json(const CheckReport& r) { return {{"sides", {to_json(r.a), to_json(r.b)}}, {"pass", r.pass}}; }

std::string kappa_string(const Rational& k) { return std::to_string(k.numerator()) + "/" + std::to_string(k.denominator()); }

json to_json(const Nonlinearity& nl) {
  json params;
  if (const auto* p = std::get_if<PolynomialAlpha>(&nl.variant())) {
    params = {{"coeffs", p->alpha.coeffs()}};
  } else if (const auto* r = std::get_if<RootAlpha>(&nl.variant())) {
    params = {{"A", r->A.coeffs()}, {"N", r->N}};
  } else if (const auto* q = std::get_if<RationalAlpha>(&nl.variant())) {
    params = {{"A", q->A.coeffs()}, {"B", q->B.coeffs()}};
  } else {
    const auto& c = std::get<CustomAlpha>(nl.variant());
    params = {{"kappa", kappa_string(c.kappa)}, {"certificate", c.certificate.has_value()}};
  }
  return {{"variant", nl.variant_name()}, {"params", params}};
}

json verdict_json(const Nonlinearity& nl, int n, const Verdict& v) {
  json out = to_json(nl);
  out["n"] = n;
  out["kappa"] = kappa_string(v.kappa);
  out["admissible"] = v.admissible;
  out["failed"] = v.failed;
  return out;
}

json to_json(const SpectrumReport& r) {
  json out = {{"concentration", r.concentration},
              {"band_center_bin", r.band_center_bin},
              {"band_center_omega", r.band_center_omega},
              {"band_halfwidth_bins", r.band_halfwidth_bins},
              {"delta", r.delta},
              {"peak_dispersion", r.peak_dispersion},
              {"peak_bin_per_x", r.peak_bin_per_x},
              {"verdict", to_string(r.verdict)}};
  out["modulus_drift"] = r.modulus_drift ? json(*r.modulus_drift) : json(nullptr);
  return out;
}

json record_metadata(const SimRecord& rec) {
  const ModelSpec& m = rec.model;
  return {{"kind", m.kind == ModelKind::nls ? "nls" : "nlkg"},
          {"m", m.m},
          {"alpha", to_json(m.alpha)},
          {"x0", m.xgrid.origin()},
          {"L", m.xgrid.length()},
          {"nx", m.xgrid.count()},
          {"dt", m.dt},
          {"t_end", m.t_end},
          {"snapshot_every", rec.snapshot_every},
          {"snapshot_count", rec.times.size()},
          {"times", rec.times},
          {"invariant", m.kind == ModelKind::nls ? "mass" : "energy"},
          {"invariant_trace", rec.invariant_trace}};
}

}  // namespace tslab

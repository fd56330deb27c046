#pragma once

#include <json.hpp>

#include "wrc/curve.hpp"
#include "wrc/invariants.hpp"
#include "wrc/resolution.hpp"

namespace wrc {

using json = nlohmann::json;

json to_json(const BettiTable& t);
BettiTable betti_from_json(const json& j);

/// Series as its exact shape plus expanded coefficients to the given order.
/// Coefficients are exact strings: [[zdeg, wdeg, "p/q"], ...].
json to_json(const RationalSeries& s, int order);
/// Reads back the coefficient list into a BiPoly.
BiPoly series_coefficients_from_json(const json& j);

json to_json(const CurveData& c);

json to_json(const std::vector<LatticePoint>& pts);
std::vector<LatticePoint> lattice_from_json(const json& j);
std::string lattice_to_csv(const std::vector<LatticePoint>& pts);
std::vector<LatticePoint> lattice_from_csv(const std::string& text);

json to_json(const Resolution& res);
/// Twists and entry polynomials (parsed over `ambient`) round-trip.
Resolution resolution_from_json(const json& j, VarSetPtr ambient);

json to_json(const IdealBasis& basis);

} // namespace wrc

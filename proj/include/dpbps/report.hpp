#pragma once

#include <string>

#include <json.hpp>

#include "dpbps/invariants.hpp"
#include "dpbps/walls.hpp"

namespace dpbps {

/// Keys: surface, class, w, pa, beta_sq, eta, kind, poincare, quotient,
/// palindromic, n, m, refined, checks.
nlohmann::ordered_json report_to_json(const InvariantReport& rep);
/// Inverse of report_to_json; the profile is recomputed from the class.
/// Throws Parse on malformed input.
InvariantReport report_from_json(const nlohmann::json& j);

std::string csv_header();
std::string report_to_csv(const InvariantReport& rep);

/// Human-readable multi-line rendering.
std::string report_to_text(const InvariantReport& rep);

nlohmann::ordered_json decomposition_to_json(const Surface& s, const Decomposition& d);

}  // namespace dpbps

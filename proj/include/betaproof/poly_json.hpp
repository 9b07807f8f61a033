#pragma once

#include "betaproof/bipoly.hpp"
#include "betaproof/poly.hpp"

#include <json.hpp>

namespace betaproof {

// {"var": "x", "coeffs": ["num/den", ...]}, index k is the x^k coefficient.
nlohmann::json to_json(const Poly& p, char var = 'x');
Poly poly_from_json(const nlohmann::json& j);

// {"terms": [[i, j, "num/den"], ...]} for the monomials x^i y^j.
nlohmann::json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

}  // namespace betaproof

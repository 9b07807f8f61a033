#include "betaproof/poly_json.hpp"

#include <stdexcept>
#include <string>

namespace betaproof {

nlohmann::json to_json(const Poly& p, char var) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return {{"var", std::string(1, var)}, {"coeffs", coeffs}};
}

Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
        throw std::invalid_argument("poly_from_json: expected {\"var\", \"coeffs\"} object");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
        if (c.is_string()) coeffs.push_back(Rational::parse(c.get<std::string>()));
        else if (c.is_number_integer()) coeffs.emplace_back(c.get<long>());
        else throw std::invalid_argument("poly_from_json: coefficient must be a string or integer");
    }
    return Poly(std::move(coeffs));
}

nlohmann::json to_json(const BiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, c.str()});
    return {{"terms", terms}};
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw std::invalid_argument("bipoly_from_json: expected {\"terms\"} object");
    BiPoly out;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("bipoly_from_json: term must be [i, j, coeff]");
        const auto i = t[0].get<unsigned>();
        const auto k = t[1].get<unsigned>();
        const Rational c = t[2].is_string() ? Rational::parse(t[2].get<std::string>()) : Rational(t[2].get<long>());
        out += BiPoly::term(c, i, k);
    }
    return out;
}

}  // namespace betaproof

#pragma once

#include "betaproof/bipoly.hpp"
#include "betaproof/poly.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace betaproof {

/// Named polynomials transcribed from the published argument: p0..p4 (PN
/// certificates), q0..q5 (coefficients of Q in y), Q itself, the degree-12
/// numerator used for the f-hat derivative, and the sextic numerators of the
/// second-order Yang forms.
class Catalogue {
public:
    static Catalogue from_json_text(std::string_view text);
    static Catalogue from_file(const std::filesystem::path& path);

    [[nodiscard]] const Poly& poly(const std::string& name) const;
    [[nodiscard]] const BiPoly& bipoly(const std::string& name) const;
    [[nodiscard]] const std::map<std::string, Poly>& polys() const { return polys_; }
    [[nodiscard]] const std::map<std::string, BiPoly>& bipolys() const { return bipolys_; }

private:
    std::map<std::string, Poly> polys_;
    std::map<std::string, BiPoly> bipolys_;
};

/// The catalogue compiled into the library from data/catalogue.json.
const Catalogue& builtin_catalogue();

/// FNV-1a 64 over the canonical JSON serialization.
std::uint64_t fingerprint(const Poly& p);
std::uint64_t fingerprint(const BiPoly& p);

}  // namespace betaproof

#include "betaproof/catalogue.hpp"

#include "betaproof/poly_json.hpp"
#include "catalogue_data.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace betaproof {

Catalogue Catalogue::from_json_text(std::string_view text) {
    const auto doc = nlohmann::json::parse(text);
    Catalogue cat;
    for (const auto& [name, value] : doc.at("polys").items()) cat.polys_.emplace(name, poly_from_json(value));
    if (doc.contains("bipolys"))
        for (const auto& [name, value] : doc.at("bipolys").items()) cat.bipolys_.emplace(name, bipoly_from_json(value));
    return cat;
}

Catalogue Catalogue::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalogue " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

const Poly& Catalogue::poly(const std::string& name) const {
    auto it = polys_.find(name);
    if (it == polys_.end()) throw std::out_of_range("catalogue has no polynomial '" + name + "'");
    return it->second;
}

const BiPoly& Catalogue::bipoly(const std::string& name) const {
    auto it = bipolys_.find(name);
    if (it == bipolys_.end()) throw std::out_of_range("catalogue has no bivariate polynomial '" + name + "'");
    return it->second;
}

const Catalogue& builtin_catalogue() {
    static const Catalogue cat = Catalogue::from_json_text(detail::kCatalogueJson);
    return cat;
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::uint64_t fingerprint(const Poly& p) { return fnv1a(to_json(p).dump()); }
std::uint64_t fingerprint(const BiPoly& p) { return fnv1a(to_json(p).dump()); }

}  // namespace betaproof

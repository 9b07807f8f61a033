#include "betaproof/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace betaproof {

BiPoly::BiPoly(Terms terms) {
    for (auto& [e, c] : terms)
        if (!c.is_zero()) terms_.emplace(e, c);
}

BiPoly::BiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{0, 0}, c);
}

BiPoly BiPoly::term(const Rational& c, unsigned i, unsigned j) {
    BiPoly p;
    p.add_term({i, j}, c);
    return p;
}

BiPoly BiPoly::in_x(const Poly& p) {
    BiPoly out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) out.add_term({static_cast<unsigned>(k), 0}, p.coeffs()[k]);
    return out;
}

BiPoly BiPoly::in_y(const Poly& p) {
    BiPoly out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) out.add_term({0, static_cast<unsigned>(k)}, p.coeffs()[k]);
    return out;
}

void BiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational BiPoly::coeff(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::degree_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first));
    return d;
}

int BiPoly::degree_y() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.second));
    return d;
}

Poly BiPoly::coeff_of_y(unsigned k) const {
    std::vector<Rational> v;
    for (const auto& [e, c] : terms_) {
        if (e.second != k) continue;
        if (v.size() <= e.first) v.resize(e.first + 1);
        v[e.first] = c;
    }
    return Poly(std::move(v));
}

Poly BiPoly::at_x(const Rational& x) const {
    const int dy = degree_y();
    std::vector<Rational> v(static_cast<std::size_t>(dy + 1));
    for (int k = 0; k <= dy; ++k) v[static_cast<std::size_t>(k)] = coeff_of_y(static_cast<unsigned>(k)).eval(x);
    return Poly(std::move(v));
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const { return at_x(x).eval(y); }

Poly BiPoly::as_poly_in_x() const {
    if (degree_y() > 0) throw std::logic_error("BiPoly::as_poly_in_x: polynomial depends on y");
    return coeff_of_y(0);
}

Poly BiPoly::as_poly_in_y() const {
    if (degree_x() > 0) throw std::logic_error("BiPoly::as_poly_in_y: polynomial depends on x");
    return at_x(Rational(0));
}

BiPoly BiPoly::partial_x() const {
    BiPoly out;
    for (const auto& [e, c] : terms_)
        if (e.first > 0) out.add_term({e.first - 1, e.second}, c * Rational(static_cast<long>(e.first)));
    return out;
}

BiPoly BiPoly::partial_y() const {
    BiPoly out;
    for (const auto& [e, c] : terms_)
        if (e.second > 0) out.add_term({e.first, e.second - 1}, c * Rational(static_cast<long>(e.second)));
    return out;
}

BiPoly BiPoly::compose(const BiPoly& sx, const BiPoly& sy) const {
    std::vector<BiPoly> px{BiPoly(1)};
    std::vector<BiPoly> py{BiPoly(1)};
    for (int k = 1; k <= degree_x(); ++k) px.push_back(px.back() * sx);
    for (int k = 1; k <= degree_y(); ++k) py.push_back(py.back() * sy);
    BiPoly out;
    for (const auto& [e, c] : terms_) out += BiPoly(c) * px[e.first] * py[e.second];
    return out;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational mag = abs(c);
        const bool unit = mag == Rational(1);
        if (!unit || (e.first == 0 && e.second == 0)) os << mag;
        if (e.first > 0) os << (unit ? "" : "*") << "x" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second > 0)
            os << ((unit && e.first == 0) ? "" : "*") << "y" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
    }
    return os.str();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
}

BiPoly operator-(const BiPoly& a) {
    BiPoly out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
}

BiPoly pow(const BiPoly& p, unsigned exponent) {
    BiPoly result(1);
    BiPoly base = p;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

}  // namespace betaproof

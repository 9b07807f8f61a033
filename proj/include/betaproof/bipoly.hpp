#pragma once

#include "betaproof/poly.hpp"
#include "betaproof/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace betaproof {

/// Sparse bivariate polynomial in (x, y). Keys are (x-degree, y-degree); zero
/// coefficients are never stored.
class BiPoly {
public:
    using Exponents = std::pair<unsigned, unsigned>;
    using Terms = std::map<Exponents, Rational>;

    BiPoly() = default;
    explicit BiPoly(Terms terms);
    BiPoly(const Rational& c);  // NOLINT: constants promote implicitly
    BiPoly(long c) : BiPoly(Rational(c)) {}
    BiPoly(int c) : BiPoly(Rational(c)) {}

    static BiPoly x() { return term(Rational(1), 1, 0); }
    static BiPoly y() { return term(Rational(1), 0, 1); }
    static BiPoly term(const Rational& c, unsigned i, unsigned j);
    static BiPoly in_x(const Poly& p);
    static BiPoly in_y(const Poly& p);

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coeff(unsigned i, unsigned j) const;
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree_x() const;
    [[nodiscard]] int degree_y() const;

    /// Horner in y over the coefficient polynomials in x.
    [[nodiscard]] Rational eval(const Rational& x, const Rational& y) const;
    /// Coefficient of y^k as a polynomial in x.
    [[nodiscard]] Poly coeff_of_y(unsigned k) const;
    /// The polynomial in y obtained by fixing x.
    [[nodiscard]] Poly at_x(const Rational& x) const;
    /// Drops to univariate when the polynomial has no y terms; throws otherwise.
    [[nodiscard]] Poly as_poly_in_x() const;
    [[nodiscard]] Poly as_poly_in_y() const;

    [[nodiscard]] BiPoly partial_x() const;
    [[nodiscard]] BiPoly partial_y() const;
    /// Simultaneous substitution x -> sx(x, y), y -> sy(x, y).
    [[nodiscard]] BiPoly compose(const BiPoly& sx, const BiPoly& sy) const;

    [[nodiscard]] std::string str() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a);
    friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

private:
    void add_term(const Exponents& e, const Rational& c);
    Terms terms_;
};

BiPoly pow(const BiPoly& p, unsigned exponent);

inline Rational bipoly_eval(const BiPoly& q, const Rational& x, const Rational& y) { return q.eval(x, y); }

}  // namespace betaproof

#pragma once

#include "betaproof/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace betaproof {

/// Univariate polynomial with exact rational coefficients; coeffs()[k] multiplies x^k.
///
/// The coefficient vector is always trimmed, so the zero polynomial has no
/// coefficients and degree() == -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

    static Poly constant(const Rational& c) { return Poly({c}); }
    static Poly monomial(const Rational& c, unsigned k);
    /// The identity polynomial x.
    static Poly x() { return monomial(Rational(1), 1); }

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] Rational coeff(unsigned k) const;
    [[nodiscard]] Rational leading() const;

    /// Horner evaluation.
    [[nodiscard]] Rational eval(const Rational& x) const;
    [[nodiscard]] Poly derivative() const;
    /// p(inner(x)).
    [[nodiscard]] Poly compose(const Poly& inner) const;

    [[nodiscard]] std::string str(char var = 'x') const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Poly pow(const Poly& p, unsigned exponent);

/// Free-function spelling used by callers that mirror the module's operation list.
inline Rational poly_eval(const Poly& p, const Rational& x) { return p.eval(x); }
inline Poly poly_derivative(const Poly& p) { return p.derivative(); }

}  // namespace betaproof

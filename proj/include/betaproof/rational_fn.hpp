#pragma once

#include "betaproof/bipoly.hpp"

namespace betaproof {

/// Quotient of bivariate polynomials. Arithmetic cross-multiplies and never
/// cancels common factors, so two forms of the same function can have very
/// different numerators; compare them with equivalent().
class RationalFn {
public:
    RationalFn() : num_(0), den_(1) {}
    RationalFn(BiPoly num, BiPoly den);
    RationalFn(const BiPoly& p) : num_(p), den_(1) {}  // NOLINT: polynomials promote implicitly
    RationalFn(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    RationalFn(long c) : num_(c), den_(1) {}  // NOLINT
    RationalFn(int c) : num_(c), den_(1) {}  // NOLINT

    [[nodiscard]] const BiPoly& num() const { return num_; }
    [[nodiscard]] const BiPoly& den() const { return den_; }

    /// Throws std::domain_error when the denominator vanishes at (x, y).
    [[nodiscard]] Rational eval(const Rational& x, const Rational& y = Rational(0)) const;
    [[nodiscard]] RationalFn partial_x() const;
    [[nodiscard]] RationalFn partial_y() const;
    [[nodiscard]] RationalFn compose(const BiPoly& sx, const BiPoly& sy) const;

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a);

private:
    BiPoly num_;
    BiPoly den_;
};

/// num_f * den_g - num_g * den_f expands to zero.
bool equivalent(const RationalFn& f, const RationalFn& g);
inline bool rationalfn_equal(const RationalFn& f, const RationalFn& g) { return equivalent(f, g); }

/// The expanded cross-multiplied difference; zero iff the forms are equivalent.
BiPoly cross_difference(const RationalFn& f, const RationalFn& g);

}  // namespace betaproof

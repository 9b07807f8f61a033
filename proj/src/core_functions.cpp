#include "betaproof/core_functions.hpp"

#include "betaproof/hp_eval.hpp"
#include "betaproof/special.hpp"

namespace betaproof::proof {

namespace {

void require_nonneg(const HPFloat& x, const HPFloat& y, const char* what) {
    if (x.sign() < 0 || y.sign() < 0) throw std::domain_error(std::string(what) + ": arguments must be nonnegative");
}

void require_unit_box(const HPFloat& x, const HPFloat& y, const char* what) {
    if (!(x > 0L && x <= 1L && y > 0L && y <= 1L))
        throw std::domain_error(std::string(what) + ": arguments must lie in (0, 1]");
}

// 1 + x + y - 2xy
HPFloat mixed(const HPFloat& x, const HPFloat& y) { return x + y + 1L - x * y * 2L; }

HPFloat psi_shifted(const HPFloat& x) { return special::psi(x + 1L); }

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }
BiPoly C(long c) { return BiPoly(c); }
BiPoly mixed_poly() { return C(1) + X() + Y() - C(2) * X() * Y(); }

}  // namespace

bool Trapezoid::contains(const Rational& x, const Rational& y) {
    return x.sign() > 0 && x < Rational(1, 5) && x < y && y < Rational(1) - x;
}

bool Trapezoid::contains(const HPFloat& x, const HPFloat& y) {
    const HPFloat fifth = HPFloat(1L, x.bits()) / 5L;
    return x > 0L && x < fifth && x < y && y < 1L - x;
}

Trapezoid::Edge Trapezoid::edge(const Rational& x, const Rational& y) {
    const Rational fifth(1, 5);
    const bool in_closure = x.sign() >= 0 && x <= fifth && x <= y && y <= Rational(1) - x;
    if (!in_closure) return Edge::None;
    if (x + y == Rational(1)) return Edge::AntiDiagonal;
    if (x.is_zero()) return Edge::LeftSide;
    if (x == y) return Edge::Diagonal;
    if (x == fifth) return Edge::RightSide;
    return Edge::None;
}

std::string to_string(Trapezoid::Edge e) {
    switch (e) {
        case Trapezoid::Edge::None: return "interior-or-outside";
        case Trapezoid::Edge::AntiDiagonal: return "x+y=1";
        case Trapezoid::Edge::LeftSide: return "x=0";
        case Trapezoid::Edge::Diagonal: return "y=x";
        case Trapezoid::Edge::RightSide: return "x=1/5";
    }
    return "interior-or-outside";
}

HPFloat F(const HPFloat& x, const HPFloat& y) {
    require_nonneg(x, y, "F");
    const HPFloat s = x + y;
    const HPFloat lg = special::log_gamma(x + 1L) + special::log_gamma(y + 1L) - special::log_gamma(s + 1L);
    return lg - log(1L - x * y * 2L / (s + 1L));
}

HPFloat dFdx(const HPFloat& x, const HPFloat& y) {
    require_nonneg(x, y, "dFdx");
    const HPFloat s1 = x + y + 1L;
    return psi_shifted(x) - special::psi(s1) + y * (y + 1L) * 2L / (s1 * mixed(x, y));
}

HPFloat dFdy(const HPFloat& x, const HPFloat& y) { return dFdx(y, x); }

HPFloat G(const HPFloat& x, const HPFloat& y) {
    require_nonneg(x, y, "G");
    return psi_shifted(x) - psi_shifted(y) - (x - y) * 2L / mixed(x, y);
}

HPFloat dGdx(const HPFloat& x, const HPFloat& y) {
    require_nonneg(x, y, "dGdx");
    const HPFloat m = mixed(x, y);
    return special::psi1(x + 1L) - (y * 2L + 1L - y * y * 2L) * 2L / (m * m);
}

HPFloat dGdy(const HPFloat& x, const HPFloat& y) {
    require_nonneg(x, y, "dGdy");
    const HPFloat m = mixed(x, y);
    return (x * 2L + 1L - x * x * 2L) * 2L / (m * m) - special::psi1(y + 1L);
}

namespace {

void require_f_domain(const HPFloat& x) {
    if (x.sign() < 0) throw std::domain_error("f: x must be nonnegative");
    if (!(x * 2L + 1L - x * x * 2L > 0L)) throw std::domain_error("f: need 1 + 2x - 2x^2 > 0");
}

}  // namespace

HPFloat f(const HPFloat& x) {
    require_f_domain(x);
    const HPFloat d = x * 2L + 1L;
    return special::log_gamma(x + 1L) * 2L - special::log_gamma(d) - log(1L - x * x * 2L / d);
}

HPFloat fhat(const HPFloat& x) {
    require_f_domain(x);
    const HPFloat d = x * 2L + 1L;
    return psi_shifted(x) - special::psi(d) + x * (x + 1L) * 2L / (d * (d - x * x * 2L));
}

HPFloat g(const HPFloat& x) {
    if (x.sign() < 0) throw std::domain_error("g: x must be nonnegative");
    return special::psi1(x + 1L) + eval(forms::g_rational(), x);
}

namespace forms {

RationalFn F_x_rational() {
    return {C(2) * Y() * (C(1) + Y()), (C(1) + X() + Y()) * mixed_poly()};
}

RationalFn F_y_rational() {
    return {C(2) * X() * (C(1) + X()), (C(1) + X() + Y()) * mixed_poly()};
}

RationalFn G_rational() { return {C(-2) * (X() - Y()), mixed_poly()}; }

RationalFn g_rational() {
    const BiPoly q = C(17) + C(16) * X() - C(25) * X() * X();
    return {-(C(913) + C(350) * X() - C(1250) * X() * X()), C(2) * q * q};
}

RationalFn fhat_rational() {
    return {C(2) * X() * (C(1) + X()), (C(1) + C(2) * X()) * (C(1) + C(2) * X() - C(2) * X() * X())};
}

}  // namespace forms

HPFloat new_bound(const HPFloat& x, const HPFloat& y) {
    const HPFloat s = x + y;
    const HPFloat p = x * y;
    return s / p * (1L - p * 2L / (s + 1L));
}

HPFloat ivady_lower(const HPFloat& x, const HPFloat& y) {
    const HPFloat p = x * y;
    return (x + y - p) / p;
}

HPFloat ivady_upper(const HPFloat& x, const HPFloat& y) {
    const HPFloat p = x * y;
    return (x + y) / (p * (p + 1L));
}

namespace {

HPFloat alzer_bound(const HPFloat& x, const HPFloat& y, const HPFloat& c) {
    const HPFloat ratio = (1L - x) * (1L - y) / ((x + 1L) * (y + 1L));
    return (1L - c * ratio) / (x * y);
}

}  // namespace

HPFloat alzer_lower(const HPFloat& x, const HPFloat& y, const HPFloat& alpha) { return alzer_bound(x, y, alpha); }

HPFloat alzer_upper(const HPFloat& x, const HPFloat& y) { return alzer_bound(x, y, HPFloat(1L, x.bits())); }

HPFloat theorem_margin(const HPFloat& x, const HPFloat& y) {
    require_unit_box(x, y, "theorem_margin");
    return special::beta(x, y) - new_bound(x, y);
}

HPFloat theorem_log_margin(const HPFloat& x, const HPFloat& y) {
    require_unit_box(x, y, "theorem_log_margin");
    return F(x, y);
}

RemarkReport remark_sandwich(const HPFloat& x_in, const HPFloat& y_in, const Precision& prec) {
    const HPFloat x = x_in.with_bits(prec.bits());
    const HPFloat y = y_in.with_bits(prec.bits());
    require_unit_box(x, y, "remark_sandwich");
    const HPFloat budget = error_budget(prec);
    RemarkReport r{special::beta(x, y), ivady_lower(x, y), new_bound(x, y), x + y >= 1L,
                   HPFloat(prec.bits()), HPFloat(prec.bits()), false, false};
    const HPFloat& larger = r.upper_region ? r.ivady_lower : r.new_bound;
    const HPFloat& smaller = r.upper_region ? r.new_bound : r.ivady_lower;
    r.outer_margin = r.beta - larger;
    r.inner_margin = larger - smaller;
    r.outer_equality = abs(r.outer_margin) <= budget;
    const bool inner_ok = r.inner_margin >= -budget;
    // B may meet Ivady's bound only in the upper region; the new bound is strict.
    r.holds = inner_ok && (r.upper_region ? r.outer_margin >= -budget : r.outer_margin > budget);
    return r;
}

}  // namespace betaproof::proof

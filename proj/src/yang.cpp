#include "betaproof/yang.hpp"

#include "betaproof/catalogue.hpp"
#include "betaproof/hp_eval.hpp"
#include "betaproof/special.hpp"

#include <algorithm>
#include <stdexcept>

namespace betaproof::yang {

Rational value(Param p) { return p == Param::TwoFifths ? Rational(2, 5) : Rational(4, 5); }

std::string to_string(Param p) { return p == Param::TwoFifths ? "2/5" : "4/5"; }

std::string to_string(Order o) { return o == Order::First ? "Lx" : "Lxx"; }

std::string to_string(SandwichStatus s) {
    switch (s) {
        case SandwichStatus::Holds: return "holds";
        case SandwichStatus::Inconclusive: return "inconclusive";
        case SandwichStatus::Violated: return "violated";
    }
    return "violated";
}

YangL::YangL(const Rational& a) : a_(a) {
    if (!(a > Rational(1, 15))) throw std::domain_error("YangL: parameter must exceed 1/15");
    const Rational a2 = a * a;
    const Rational w = Rational(90) * a2 + Rational(2);
    const BiPoly base = BiPoly::x() * BiPoly::x() + BiPoly::x();
    terms_.push_back({Rational(1) / w, base + BiPoly((Rational(3) * a + Rational(1)) / Rational(3))});
    terms_.push_back({Rational(45) * a2 / w, base + BiPoly((Rational(15) * a - Rational(1)) / (Rational(45) * a))});
}

RationalFn YangL::derivative_x() const {
    RationalFn out(0);
    for (const auto& t : terms_) out = out + RationalFn(BiPoly(t.coef) * t.argument.partial_x(), t.argument);
    return out;
}

HPFloat YangL::eval(const HPFloat& x) const {
    HPFloat out(x.bits());
    const HPFloat zero(x.bits());
    for (const auto& t : terms_) out += HPFloat(t.coef, x.bits()) * log(betaproof::eval(t.argument, x, zero));
    return out;
}

namespace {

BiPoly px(std::initializer_list<Rational> c) { return BiPoly::in_x(Poly(c)); }

// Quadratic factors of the printed denominators, indexed by parameter.
struct Factors {
    BiPoly first_num;  // the quadratic multiplying 3(1+2x)
    BiPoly den_a;
    BiPoly den_b;
    const char* sextic;
};

Factors factors(Param p) {
    if (p == Param::TwoFifths) return {px({61, 90, 90}), px({11, 15, 15}), px({5, 18, 18}), "yang_lxx_num_2_5"};
    return {px({199, 180, 180}), px({17, 15, 15}), px({11, 36, 36}), "yang_lxx_num_4_5"};
}

}  // namespace

RationalFn printed_form(Order order, Param param) {
    const Factors f = factors(param);
    if (order == Order::First) return {BiPoly(3) * px({1, 2}) * f.first_num, BiPoly(2) * f.den_a * f.den_b};
    const BiPoly sextic = BiPoly::in_x(builtin_catalogue().poly(f.sextic));
    return {BiPoly(-3) * sextic, BiPoly(2) * f.den_a * f.den_a * f.den_b * f.den_b};
}

RationalFn derived_form(Order order, const Rational& a) {
    const RationalFn first = YangL(a).derivative_x();
    return order == Order::First ? first : first.partial_x();
}

Rational lx(const Rational& x, Param param) {
    if (x.sign() < 0) throw std::domain_error("yang::lx: x must be nonnegative");
    return printed_form(Order::First, param).eval(x);
}

HPFloat lx(const HPFloat& x, Param param) {
    if (x.sign() < 0) throw std::domain_error("yang::lx: x must be nonnegative");
    return eval(printed_form(Order::First, param), x);
}

Rational lxx(const Rational& x, Param param) {
    if (x.sign() < 0) throw std::domain_error("yang::lxx: x must be nonnegative");
    return printed_form(Order::Second, param).eval(x);
}

HPFloat lxx(const HPFloat& x, Param param) {
    if (x.sign() < 0) throw std::domain_error("yang::lxx: x must be nonnegative");
    return eval(printed_form(Order::Second, param), x);
}

namespace {

struct RealCoefficients {
    HPFloat c1, c2, k1, k2;
};

RealCoefficients real_coefficients(const HPFloat& a) {
    if (!(a > HPFloat(1L, a.bits()) / 15L)) throw std::domain_error("yang: parameter must exceed 1/15");
    const HPFloat a2 = a * a;
    const HPFloat w = a2 * 90L + 2L;
    return {1L / w, a2 * 45L / w, (a * 3L + 1L) / 3L, (a * 15L - 1L) / (a * 45L)};
}

}  // namespace

HPFloat lx(const HPFloat& x, const HPFloat& a) {
    const auto [c1, c2, k1, k2] = real_coefficients(a);
    const HPFloat base = x * x + x;
    const HPFloat d = x * 2L + 1L;
    return c1 * d / (base + k1) + c2 * d / (base + k2);
}

HPFloat lxx(const HPFloat& x, const HPFloat& a) {
    const auto [c1, c2, k1, k2] = real_coefficients(a);
    const HPFloat base = x * x + x;
    const HPFloat d2 = (x * 2L + 1L) * (x * 2L + 1L);
    auto term = [&](const HPFloat& u) { return 2L / u - d2 / (u * u); };
    return c1 * term(base + k1) + c2 * term(base + k2);
}

std::vector<ClosedFormCheck> check_closed_forms() {
    std::vector<ClosedFormCheck> out;
    for (Order order : {Order::First, Order::Second}) {
        for (Param param : {Param::TwoFifths, Param::FourFifths}) {
            const BiPoly diff = cross_difference(printed_form(order, param), derived_form(order, value(param)));
            out.push_back({order, param, diff.is_zero(), diff.str()});
        }
    }
    return out;
}

bool verify_closed_forms() {
    const auto checks = check_closed_forms();
    return std::all_of(checks.begin(), checks.end(), [](const ClosedFormCheck& c) { return c.matches; });
}

SandwichReport sandwich(const HPFloat& x_in, const Precision& prec) {
    const HPFloat x = x_in.with_bits(prec.bits());
    if (!(x > 0L)) throw std::domain_error("sandwich: x must be positive");
    const HPFloat x1 = x + 1L;
    SandwichReport r{lx(x, Param::FourFifths),   special::psi1(x1), lx(x, Param::TwoFifths),
                     lxx(x, Param::TwoFifths),   special::psi2(x1), lxx(x, Param::FourFifths),
                     HPFloat(prec.bits()),       SandwichStatus::Violated};
    r.min_margin = min(min(r.trigamma - r.lx_four_fifths, r.lx_two_fifths - r.trigamma),
                       min(r.tetragamma - r.lxx_two_fifths, r.lxx_four_fifths - r.tetragamma));
    if (!(r.min_margin > 0L)) r.status = SandwichStatus::Violated;
    else if (r.min_margin > error_budget(prec)) r.status = SandwichStatus::Holds;
    else r.status = SandwichStatus::Inconclusive;
    return r;
}

bool sandwich_check(const HPFloat& x, const Precision& prec) {
    return sandwich(x, prec).status == SandwichStatus::Holds;
}

namespace {

void check_alzer_domain(bool x_positive, bool s_in_range) {
    if (!x_positive) throw std::domain_error("alzer_psi_diff_lower: x must be positive");
    if (!s_in_range) throw std::domain_error("alzer_psi_diff_lower: s must lie in (0,1)");
}

}  // namespace

Rational alzer_psi_diff_lower(const Rational& x, const Rational& s, unsigned n) {
    check_alzer_domain(x.sign() > 0, s.sign() > 0 && s < Rational(1));
    const long nn = static_cast<long>(n);
    Rational sum = Rational(1) / (x + s + Rational(nn));
    for (long i = 0; i < nn; ++i) sum += Rational(1) / ((x + Rational(i + 1)) * (x + Rational(i) + s));
    return (Rational(1) - s) * sum;
}

HPFloat alzer_psi_diff_lower(const HPFloat& x, const HPFloat& s, unsigned n) {
    check_alzer_domain(x > 0L, s > 0L && s < 1L);
    const long nn = static_cast<long>(n);
    HPFloat sum = 1L / (x + s + nn);
    for (long i = 0; i < nn; ++i) sum += 1L / ((x + (i + 1)) * (x + i + s));
    return (1L - s) * sum;
}

RationalFn alzer_psi_diff_lower_form(unsigned n) {
    const BiPoly s = BiPoly::x();
    const BiPoly arg = BiPoly::y();
    const long nn = static_cast<long>(n);
    RationalFn sum(BiPoly(1), arg + s + BiPoly(nn));
    for (long i = 0; i < nn; ++i) sum = sum + RationalFn(BiPoly(1), (arg + BiPoly(i + 1)) * (arg + BiPoly(i) + s));
    return RationalFn(BiPoly(1) - s) * sum;
}

}  // namespace betaproof::yang

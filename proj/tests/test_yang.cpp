#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betaproof/hp_eval.hpp"
#include "betaproof/special.hpp"
#include "betaproof/yang.hpp"

#include <cmath>
#include <random>

using namespace betaproof;
using namespace betaproof::yang;

namespace {

const Precision kPrec{50};
const mpfr_prec_t kBits = kPrec.bits();

HPFloat hp(double v) { return HPFloat(v, kBits); }
HPFloat hp(const Rational& r) { return HPFloat(r, kBits); }
bool close(const HPFloat& a, const HPFloat& b, int exponent) { return abs(a - b) < pow10(exponent, kBits); }

}  // namespace

TEST_CASE("Lx at substituted points") {
    // 3(1+2x)(61+90x+90x^2) / (2(11+15x+15x^2)(5+18x+18x^2)) by hand at x = 0 and x = 1
    CHECK(lx(Rational(0), Param::TwoFifths) == Rational(3 * 61, 2 * 11 * 5));
    CHECK(lx(Rational(0), Param::TwoFifths) == Rational(183, 110));
    CHECK(lx(Rational(1), Param::TwoFifths) == Rational(3 * 3 * 241, 2 * 41 * 41));
    CHECK(lx(Rational(1), Param::TwoFifths) == Rational(2169, 3362));
    CHECK(lx(Rational(1), Param::FourFifths) == Rational(5031, 7802));
    CHECK_THROWS_AS(lx(Rational(-1), Param::TwoFifths), std::domain_error);
}

TEST_CASE("Lxx at substituted points") {
    CHECK(lxx(Rational(0), Param::TwoFifths) == Rational(-3 * 4993, 2 * 121 * 25));
    CHECK(lxx(Rational(0), Param::TwoFifths) == Rational(-14979, 6050));
    CHECK(lxx(Rational(0), Param::FourFifths) == Rational(-3 * 46537, 2 * 289 * 121));
    CHECK(lxx(Rational(0), Param::FourFifths) == Rational(-139611, 69938));
    for (const Rational& x : {Rational(1, 10), Rational(1), Rational(5)}) {
        CHECK(lxx(x, Param::TwoFifths).sign() < 0);
        CHECK(lxx(x, Param::FourFifths).sign() < 0);
        CHECK(lx(x, Param::TwoFifths).sign() > 0);
        CHECK(lx(x, Param::FourFifths).sign() > 0);
    }
}

TEST_CASE("printed closed forms match symbolic differentiation") {
    const auto checks = check_closed_forms();
    REQUIRE(checks.size() == 4);
    for (const auto& c : checks) {
        INFO(to_string(c.order) << "(x," << to_string(c.param) << ") difference " << c.difference);
        CHECK(c.matches);
    }
    CHECK(verify_closed_forms());
    CHECK(rationalfn_equal(printed_form(Order::First, Param::TwoFifths), derived_form(Order::First, Rational(2, 5))));
    CHECK(rationalfn_equal(printed_form(Order::Second, Param::FourFifths),
                           derived_form(Order::Second, Rational(4, 5))));
    // a perturbed parameter no longer matches
    CHECK_FALSE(
        rationalfn_equal(printed_form(Order::First, Param::TwoFifths), derived_form(Order::First, Rational(3, 7))));
}

TEST_CASE("YangL domain") {
    CHECK_THROWS_AS(YangL(Rational(1, 15)), std::domain_error);
    // just above 1/15 both log arguments are positive polynomials; the derivative exists
    const YangL l(Rational(1, 15) + Rational(1, 1000));
    const RationalFn d = l.derivative_x();
    CHECK_NOTHROW((void)d.eval(Rational(0)));
    CHECK_NOTHROW((void)d.eval(Rational(3)));
}

TEST_CASE("YangL value differentiates to Lx") {
    const YangL l(Rational(2, 5));
    const HPFloat h = hp(1e-12);
    for (double xv : {0.1, 0.7, 2.0}) {
        const HPFloat x = hp(xv);
        const HPFloat fd = (l.eval(x + h) - l.eval(x - h)) / (h * 2L);
        CHECK(close(fd, lx(x, Param::TwoFifths), -18));
    }
}

TEST_CASE("real-parameter forms agree with the printed ones") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.0, 20.0);
    for (int i = 0; i < 200; ++i) {
        const HPFloat x = hp(u(rng));
        CHECK(close(lx(x, hp(Rational(2, 5))), lx(x, Param::TwoFifths), -40));
        CHECK(close(lx(x, hp(Rational(4, 5))), lx(x, Param::FourFifths), -40));
        CHECK(close(lxx(x, hp(Rational(2, 5))), lxx(x, Param::TwoFifths), -40));
        CHECK(close(lxx(x, hp(Rational(4, 5))), lxx(x, Param::FourFifths), -40));
    }
    const HPFloat a3 = special::solve_a3(kPrec);
    CHECK(close(lxx(hp(0.0), a3), special::psi2(hp(1.0)), -12));
}

TEST_CASE("sandwich at x = 1") {
    const auto r = sandwich(hp(1.0), kPrec);
    const HPFloat p = pi(kBits);
    CHECK(close(r.trigamma, p * p / 6L - 1L, -40));
    CHECK(r.lx_four_fifths == hp(Rational(5031, 7802)));
    CHECK(r.lx_two_fifths == hp(Rational(2169, 3362)));
    CHECK(r.lx_four_fifths < r.trigamma);
    CHECK(r.trigamma < r.lx_two_fifths);
    CHECK(r.status == SandwichStatus::Holds);
}

TEST_CASE("sandwich near zero and at large argument") {
    CHECK(sandwich_check(hp(1e-3), kPrec));
    CHECK(sandwich_check(hp(50.0), kPrec));
    CHECK_THROWS_AS(sandwich(hp(0.0), kPrec), std::domain_error);
}

TEST_CASE("sandwich on a log-spaced grid") {
    for (int i = 0; i < 1000; ++i) {
        const double x = std::pow(10.0, -4.0 + 6.0 * i / 999.0);
        const auto r = sandwich(hp(x), kPrec);
        INFO("x = " << x << " margin " << r.min_margin.str(5));
        CHECK(r.status == SandwichStatus::Holds);
    }
}

TEST_CASE("sandwich constants respect the ordering in a") {
    const auto c = special::compute_constants(kPrec);
    for (double xv : {0.01, 0.3, 1.0, 4.0}) {
        const HPFloat x = hp(xv);
        const HPFloat x1 = x + 1L;
        CHECK(lx(x, Param::FourFifths) < lx(x, c.a1));
        CHECK(lx(x, c.a1) < special::psi1(x1));
        CHECK(special::psi1(x1) < lx(x, c.a2));
        CHECK(lx(x, c.a2) < lx(x, Param::TwoFifths));
        CHECK(lxx(x, Param::TwoFifths) < lxx(x, c.a3));
        CHECK(lxx(x, c.a3) < special::psi2(x1));
        CHECK(special::psi2(x1) < lxx(x, c.a1));
        CHECK(lxx(x, c.a1) < lxx(x, Param::FourFifths));
    }
}

TEST_CASE("monotonicity in a, checked numerically") {
    for (double xv : {0.05, 0.5, 2.0, 10.0}) {
        const HPFloat x = hp(xv);
        HPFloat prev_first = lx(x, hp(0.07));
        HPFloat prev_second = lxx(x, hp(0.07));
        for (int k = 8; k <= 100; ++k) {
            const HPFloat a = hp(k / 100.0);
            const HPFloat first = lx(x, a);
            const HPFloat second = lxx(x, a);
            CHECK(first < prev_first);
            CHECK(second > prev_second);
            prev_first = first;
            prev_second = second;
        }
    }
}

TEST_CASE("alzer lower bound") {
    const Rational x(1, 2), s(1, 2);
    CHECK(yang::alzer_psi_diff_lower(x, s, 0) == (Rational(1) - s) / (x + s));
    // (1/2)[1/4 + 1/((3/2)(1)) + 1/((5/2)(2)) + 1/((7/2)(3))] summed by hand
    const Rational expected = Rational(1, 2) * (Rational(1, 4) + Rational(2, 3) + Rational(1, 5) + Rational(2, 21));
    CHECK(expected == Rational(509, 840));
    CHECK(yang::alzer_psi_diff_lower(x, s, 3) == expected);
    const HPFloat diff = special::psi(hp(1.5)) - special::psi(hp(1.0));
    CHECK(diff > hp(expected));
    CHECK_THROWS_AS(yang::alzer_psi_diff_lower(x, Rational(1), 3), std::domain_error);
    CHECK_THROWS_AS(yang::alzer_psi_diff_lower(Rational(0), s, 3), std::domain_error);
}

TEST_CASE("alzer form with n = 3 is the bracketed sum used for dF/dy") {
    const BiPoly X = BiPoly::x(), Y = BiPoly::y(), one(1);
    RationalFn bracket(one, X + Y + BiPoly(3));
    bracket = bracket + RationalFn(one, (Y + BiPoly(1)) * (Y + X));
    bracket = bracket + RationalFn(one, (Y + BiPoly(2)) * (Y + BiPoly(1) + X));
    bracket = bracket + RationalFn(one, (Y + BiPoly(3)) * (Y + BiPoly(2) + X));
    const RationalFn expected = RationalFn(one - X) * bracket;
    CHECK(rationalfn_equal(yang::alzer_psi_diff_lower_form(3), expected));
    CHECK(yang::alzer_psi_diff_lower_form(3).eval(Rational(1, 2), Rational(1, 2)) == Rational(509, 840));
}

TEST_CASE("alzer bound properties") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ux(0.01, 5.0), us(0.01, 0.99);
    for (int i = 0; i < 1000; ++i) {
        const HPFloat x = hp(ux(rng)), s = hp(us(rng));
        const HPFloat diff = special::psi(x + 1L) - special::psi(x + s);
        HPFloat prev(kBits);
        for (unsigned n : {0u, 1u, 3u, 7u}) {
            const HPFloat lower = yang::alzer_psi_diff_lower(x, s, n);
            CHECK(diff - lower > 0L);
            if (n > 0) CHECK(lower >= prev);
            prev = lower;
        }
    }
}

#include "betaproof/catalogue.hpp"
#include "betaproof/core_functions.hpp"
#include "betaproof/replay.hpp"
#include "betaproof/yang.hpp"

namespace betaproof::proof {

namespace {

using yang::Order;
using yang::Param;

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }
BiPoly C(long c) { return BiPoly(c); }
BiPoly Cq(long n, long d) { return BiPoly(Rational(n, d)); }
BiPoly in_x(const Poly& p) { return BiPoly::in_x(p); }
const Poly& cat(const char* name) { return builtin_catalogue().poly(name); }
BiPoly mixed() { return C(1) + X() + Y() - C(2) * X() * Y(); }
BiPoly quad(long a, long b, long c) { return C(a) + C(b) * X() + C(c) * X() * X(); }

RationalFn printed(Order o, Param p) { return yang::printed_form(o, p); }

// Restriction of a bivariate form: x -> sx, y -> sy, giving a form in x.
RationalFn along(const RationalFn& f, const BiPoly& sx, const BiPoly& sy) { return f.compose(sx, sy); }

void certify_below(StepBuilder& b, const char* name, const Rational& point) {
    try {
        const auto r = sign::positive_below(cat(name), point);
        b.note(std::string(name) + "_value", r.certificate->value.str());
        b.exact(std::string(name) + "_positive_on_(0," + point.str() + "]", r.certified);
    } catch (const sign::SignError& e) {
        b.exact(name, false, e.what());
    }
}

void positive_on(StepBuilder& b, const std::string& key, const BiPoly& p, const Rational& lo, const Rational& hi) {
    b.exact(key, sign::positive_on_interval(p.as_poly_in_x(), lo, hi), "[" + lo.str() + ", " + hi.str() + "]");
}

std::vector<ProofStep> subcase_a(const Precision& prec) {
    std::vector<ProofStep> out;
    const BiPoly x = X(), y = Y();
    const BiPoly m = mixed();
    const BiPoly q17 = quad(17, 16, -25);
    {
        StepBuilder b("case2.A1", "d2G/dxdy = 12(y-x)/(1+x+y-2xy)^3 > 0 for y > x, 1+x+y-2xy > 0 on [0,1]^2",
                      Method::ExactIdentity);
        const RationalFn gx = forms::G_rational().partial_x();
        b.exact("dG/dx_rational", rationalfn_equal(gx, RationalFn(C(-2) * (C(1) + C(2) * y - C(2) * y * y), m * m)));
        b.exact("mixed_partial", rationalfn_equal(gx.partial_y(), RationalFn(C(12) * (y - x), m * m * m)));
        b.exact("mixed_partial_symmetric",
                rationalfn_equal(forms::G_rational().partial_y().partial_x(), gx.partial_y()));
        // bilinear, so its minimum over the box is at a corner
        bool corners = true;
        for (long cx : {0L, 1L})
            for (long cy : {0L, 1L}) corners = corners && m.eval(Rational(cx), Rational(cy)).sign() > 0;
        b.exact("denominator_positive_at_corners", corners);
        b.exact("antisymmetric_at_diagonal", along(forms::G_rational(), x, x).num().is_zero());
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.A-g", "dG/dx at y = x + 9/25 equals psi'(x+1) - (913+350x-1250x^2)/(2(17+16x-25x^2)^2)",
                      Method::ExactIdentity);
        b.depends("case2.A1");
        const RationalFn restricted = along(forms::G_rational().partial_x(), x, x + Cq(9, 25));
        b.exact("restriction", rationalfn_equal(restricted, forms::g_rational()));
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.A2.identity",
                      "L_x(x,4/5) - (913+350x-1250x^2)/(2(17+16x-25x^2)^2) equals the displayed p0 quotient",
                      Method::ExactIdentity);
        b.depends("lemma22.closed-forms");
        const BiPoly num = in_x(cat("p0")) + C(307230) * pow(x, 5) + C(823500) * pow(x, 6) + C(675000) * pow(x, 7);
        const BiPoly den = C(2) * quad(17, 15, 15) * q17 * q17 * quad(11, 36, 36);
        b.exact("displayed_quotient",
                rationalfn_equal(printed(Order::First, Param::FourFifths) + forms::g_rational(), RationalFn(num, den)));
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.A2.sign", "g(x) > 0 on (0, 3/20]", Method::SignEngine);
        b.depends("case2.A2.identity").depends("example.p0").depends("lemma22.sandwich");
        certify_below(b, "p0", Rational(3, 20));
        b.exact("tail_coefficients_positive", true, "307230, 823500, 675000");
        positive_on(b, "17+16x-25x^2_positive", q17, Rational(0), Rational(3, 20));
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.A3.identity",
                      "g'(x) rational part and L_xx(x,4/5) + (11633-21600x-13125x^2+31250x^3)/(17+16x-25x^2)^3 "
                      "equal the displayed p1 quotient",
                      Method::ExactIdentity);
        b.depends("lemma22.closed-forms").depends("case2.A-g");
        const RationalFn rational_part(C(11633) - C(21600) * x - C(13125) * x * x + C(31250) * pow(x, 3),
                                       q17 * q17 * q17);
        b.exact("g_prime_rational", rationalfn_equal(forms::g_rational().partial_x(), rational_part));
        const BiPoly num = -(C(127679911) * (C(10) * x - C(1)) + x * in_x(cat("p1")));
        const BiPoly den = C(2) * pow(quad(17, 15, 15), 2) * pow(q17, 3) * pow(quad(11, 36, 36), 2);
        b.exact("displayed_quotient",
                rationalfn_equal(printed(Order::Second, Param::FourFifths) + rational_part, RationalFn(num, den)));
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.A3.sign", "g'(x) < 0 on (1/10, 1/5)", Method::SignEngine);
        b.depends("case2.A3.identity").depends("example.p1").depends("lemma22.sandwich");
        certify_below(b, "p1", Rational(1, 5));
        const Poly lin{-1, 10};
        b.exact("10x-1_positive_above_1/10", lin.eval(Rational(1, 10)).is_zero() && lin.leading().sign() > 0);
        positive_on(b, "17+16x-25x^2_positive", q17, Rational(1, 10), Rational(1, 5));
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.A4", "g(1/5) = 0.001914... > 0", Method::HighPrecision, prec);
        b.depends("case2.A3.sign");
        const HPFloat v = g(HPFloat(Rational(1, 5), prec));
        b.printed("g(1/5)", v, "0.001914").positive("g(1/5)_margin", v);
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.A5.identity",
                      "d2/dy2 of 2y/(1+y) is -4/(1+y)^3, and -4/(1+y)^3 - L_yy(y,2/5) equals the displayed p2 quotient",
                      Method::ExactIdentity);
        b.depends("lemma22.closed-forms");
        const RationalFn g0 = along(forms::G_rational(), C(0), x);  // G(0, y) rational part, y renamed x
        const BiPoly one_x = C(1) + x;
        const RationalFn minus4(C(-4), pow(one_x, 3));
        b.exact("second_derivative", rationalfn_equal(g0.partial_x().partial_x(), minus4));
        const BiPoly den = C(2) * pow(one_x, 3) * pow(quad(11, 15, 15), 2) * pow(quad(5, 18, 18), 2);
        b.exact("displayed_quotient", rationalfn_equal(minus4 - printed(Order::Second, Param::TwoFifths),
                                                       RationalFn(-in_x(cat("p2")), den)));
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.A5.sign", "G(0,y) is strictly concave on [0,1]", Method::SignEngine);
        b.depends("case2.A5.identity").depends("example.p2");
        certify_below(b, "p2", Rational(1));
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.A5.endpoints", "G(0,0) = 0 and G(0,1) = psi(1) - psi(2) + 1 = 0", Method::HighPrecision,
                      prec);
        const HPFloat zero(0L, prec), one(1L, prec);
        b.vanishes("G(0,0)", G(zero, zero)).vanishes("G(0,1)", G(zero, one));
        out.push_back(b.build());
    }
    return out;
}

std::vector<ProofStep> subcases_bc(const Precision& prec) {
    std::vector<ProofStep> out;
    const BiPoly x = X();
    const BiPoly q8 = quad(8, 34, -25);
    const RationalFn gy = forms::G_rational().partial_y();
    {
        StepBuilder b("case2.B1.identity",
                      "dG/dy at x = y - 9/25 has rational part (13+2150y-1250y^2)/(2(8+34y-25y^2)^2), and that minus "
                      "L_y(y,2/5) equals the displayed 5275352 + (25y-9)[...] quotient",
                      Method::ExactIdentity);
        b.depends("lemma22.closed-forms").depends("case2.A1");
        const RationalFn restricted = along(gy, x - Cq(9, 25), x);
        const RationalFn displayed_rational(quad(13, 2150, -1250), C(2) * q8 * q8);
        b.exact("restriction", rationalfn_equal(restricted, displayed_rational));
        const BiPoly bracket = C(4404553) + C(18643550) * x + C(55576875) * x * x + C(88996875) * pow(x, 3) +
                               C(9375000) * pow(x, 4) + C(843750) * pow(x, 4) * (C(1) - x) * (C(57) + C(50) * x);
        const BiPoly num = C(5275352) + (C(25) * x - C(9)) * bracket;
        const BiPoly den = C(6250) * quad(11, 15, 15) * quad(5, 18, 18) * q8 * q8;
        b.exact("displayed_quotient", rationalfn_equal(displayed_rational - printed(Order::First, Param::TwoFifths),
                                                       RationalFn(num, den)));
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.B1.sign", "dG/dy > 0 for 9/25 < y < x + 9/25 (bracket PN, positive on (0, 1])",
                      Method::SignEngine);
        b.depends("case2.B1.identity");
        const Poly bracket = (C(4404553) + C(18643550) * x + C(55576875) * x * x + C(88996875) * pow(x, 3) +
                              C(9375000) * pow(x, 4) + C(843750) * pow(x, 4) * (C(1) - x) * (C(57) + C(50) * x))
                                 .as_poly_in_x();
        try {
            const auto r = sign::positive_below(bracket, Rational(1));
            b.note("bracket_pattern", sign::to_string(r.pattern.kind)).note("bracket_at_1", r.certificate->value.str());
            b.exact("bracket_positive_on_(0,1]", r.certified);
        } catch (const sign::SignError& e) {
            b.exact("bracket", false, e.what());
        }
        const Poly lin{-9, 25};
        b.exact("25y-9_positive_above_9/25", lin.eval(Rational(9, 25)).is_zero() && lin.leading().sign() > 0);
        positive_on(b, "8+34y-25y^2_positive", q8, Rational(9, 25), Rational(1));
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.B2.identity",
                      "d2/dx2 G(x,9/25) has rational part 25564/(34+7x)^3, and L_xx(x,4/5) + 25564/(34+7x)^3 equals "
                      "the displayed p3 quotient",
                      Method::ExactIdentity);
        b.depends("lemma22.closed-forms");
        const RationalFn restricted = along(forms::G_rational(), x, Cq(9, 25));
        const BiPoly l = C(34) + C(7) * x;
        const RationalFn rational_part(C(25564), pow(l, 3));
        b.exact("second_derivative", rationalfn_equal(restricted.partial_x().partial_x(), rational_part));
        const BiPoly num = -(in_x(cat("p3")) + C(200037600) * pow(x, 9));
        const BiPoly den = C(2) * pow(l, 3) * pow(quad(17, 15, 15), 2) * pow(quad(11, 36, 36), 2);
        b.exact("displayed_quotient",
                rationalfn_equal(printed(Order::Second, Param::FourFifths) + rational_part, RationalFn(num, den)));
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.B2.sign", "G(x,9/25) is strictly concave on (0, 1/5)", Method::SignEngine);
        b.depends("case2.B2.identity").depends("example.p3");
        certify_below(b, "p3", Rational(1));
        b.exact("34+7x_positive", sign::positive_on_interval(Poly{34, 7}, Rational(0), Rational(1, 5)));
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.B3", "G(0,9/25) = 0.0554... and G(1/5,9/25) = 0.04015..., both positive",
                      Method::HighPrecision, prec);
        b.depends("case2.B2.sign");
        const HPFloat y(Rational(9, 25), prec);
        const HPFloat g0 = G(HPFloat(0L, prec), y);
        const HPFloat g5 = G(HPFloat(Rational(1, 5), prec), y);
        b.printed("G(0,9/25)", g0, "0.0554").printed("G(1/5,9/25)", g5, "0.04015");
        b.positive("min", min(g0, g5));
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.C1.identity",
                      "dG/dy at x = 0 has rational part 2/(1+y)^2, and 2/(1+y)^2 - L_y(y,2/5) equals the displayed p4 "
                      "quotient",
                      Method::ExactIdentity);
        b.depends("lemma22.closed-forms");
        const RationalFn restricted = along(gy, C(0), x);
        const BiPoly one_x = C(1) + x;
        const RationalFn rational_part(C(2), one_x * one_x);
        b.exact("restriction", rationalfn_equal(restricted, rational_part));
        const BiPoly den = C(2) * one_x * one_x * quad(11, 15, 15) * quad(5, 18, 18);
        b.exact("displayed_quotient", rationalfn_equal(rational_part - printed(Order::First, Param::TwoFifths),
                                                       RationalFn(in_x(cat("p4")), den)));
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.C1.sign", "dG/dy > 0 for 0 < x < y <= 9/25, hence G(x,y) > G(x,x) = 0",
                      Method::SignEngine);
        b.depends("case2.C1.identity").depends("example.p4").depends("case2.A1");
        certify_below(b, "p4", Rational(9, 25));
        out.push_back(b.build());
    }
    return out;
}

std::vector<ProofStep> audits_and_boundary(const Precision& prec) {
    std::vector<ProofStep> out;
    const auto hp = [&](const Rational& r) { return HPFloat(r, prec); };
    {
        StepBuilder b("case2.G-audit", "sampled: G(x,y) > 0 on a grid inside D (spacing 1/50)", Method::HighPrecision,
                      prec);
        b.depends("case2.A4").depends("case2.A5.endpoints").depends("case2.B3").depends("case2.C1.sign");
        HPFloat worst(1L, prec.bits());
        std::size_t count = 0;
        for (long i = 1; i < 10; ++i) {
            const Rational x(i, 50);
            for (long k = 1;; ++k) {
                const Rational y = x + Rational(k, 50);
                if (!Trapezoid::contains(x, y) || !(y < Rational(49, 50) - x)) break;
                worst = min(worst, G(hp(x), hp(y)));
                ++count;
            }
        }
        b.note("sampling", true).note("points", count).positive("min_G", worst);
        out.push_back(b.build());
    }
    {
        StepBuilder b("boundary.i.identity",
                      "(x+y)/(xy)(1 - xy/(x+y)) - (x+y)/(xy)(1 - 2xy/(x+y+1)) = (x+y-1)/(x+y+1)",
                      Method::ExactIdentity);
        const BiPoly x = X(), y = Y(), s = x + y, p = x * y;
        const RationalFn ivady = RationalFn(s, p) * (RationalFn(1) - RationalFn(p, s));
        const RationalFn bound = RationalFn(s, p) * (RationalFn(1) - RationalFn(C(2) * p, s + C(1)));
        b.exact("difference", rationalfn_equal(ivady - bound, RationalFn(s - C(1), s + C(1))));
        out.push_back(b.build());
    }
    {
        StepBuilder b("boundary.i", "F(x,1-x) > 0: B exceeds the coinciding bounds on x + y = 1",
                      Method::HighPrecision, prec);
        b.depends("boundary.i.identity");
        HPFloat worst_f(1L, prec.bits()), worst_outer(1L, prec.bits());
        bool holds = true;
        for (const Rational& xr : {Rational(1, 100), Rational(1, 20), Rational(1, 10), Rational(3, 20), Rational(1, 5)}) {
            const Rational yr = Rational(1) - xr;
            const auto r = remark_sandwich(hp(xr), hp(yr), prec);
            holds = holds && r.holds;
            worst_outer = min(worst_outer, r.outer_margin);
            worst_f = min(worst_f, F(hp(xr), hp(yr)));
        }
        b.exact("remark_ordering", holds).positive("min_B_minus_bound", worst_outer).positive("min_F", worst_f);
        out.push_back(b.build());
    }
    {
        StepBuilder b("boundary.ii", "F(0,y) = 0", Method::HighPrecision, prec);
        HPFloat worst(prec.bits());
        for (const Rational& yr : {Rational(1, 10), Rational(1, 2), Rational(9, 10), Rational(1)})
            worst = max(worst, abs(F(hp(Rational(0)), hp(yr))));
        b.vanishes("max_abs_F(0,y)", worst);
        out.push_back(b.build());
    }
    {
        StepBuilder b("boundary.iii", "F(x,x) = f(x) > 0 for 0 < x <= 1/5", Method::HighPrecision, prec);
        b.depends("lemma23.f-positive");
        HPFloat worst_gap(prec.bits()), worst_f(1L, prec.bits());
        for (const Rational& xr : {Rational(1, 100), Rational(1, 20), Rational(1, 10), Rational(1, 5)}) {
            const HPFloat x = hp(xr);
            const HPFloat fx = f(x);
            worst_gap = max(worst_gap, abs(F(x, x) - fx));
            worst_f = min(worst_f, fx);
        }
        b.vanishes("max_abs_F(x,x)-f(x)", worst_gap).positive("min_f", worst_f);
        out.push_back(b.build());
    }
    {
        StepBuilder b("boundary.iv", "F(1/5,y) > 0 for 1/5 <= y <= 4/5", Method::HighPrecision, prec);
        b.depends("case1.conclusion");
        HPFloat worst(1L, prec.bits());
        for (const Rational& yr : {Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)})
            worst = min(worst, F(hp(Rational(1, 5)), hp(yr)));
        b.positive("min_F", worst);
        out.push_back(b.build());
    }
    {
        StepBuilder b("case2.conclusion", "sampled: F(x,y) > 0 on a grid inside D; F vanishes only at x = 0",
                      Method::HighPrecision, prec);
        for (const char* id : {"case2.G-audit", "boundary.i", "boundary.ii", "boundary.iii", "boundary.iv"})
            b.depends(id);
        HPFloat worst(1L, prec.bits());
        for (long i = 1; i < 10; ++i) {
            const Rational x(i, 50);
            for (long k = 1;; ++k) {
                const Rational y = x + Rational(k, 50);
                if (!Trapezoid::contains(x, y)) break;
                worst = min(worst, F(hp(x), hp(y)));
            }
        }
        b.note("sampling", true).positive("min_F", worst);
        out.push_back(b.build());
    }
    return out;
}

}  // namespace

std::vector<ProofStep> replay_case2(const ReplayOptions& opts) {
    std::vector<ProofStep> out = subcase_a(opts.prec);
    for (auto& s : subcases_bc(opts.prec)) out.push_back(std::move(s));
    for (auto& s : audits_and_boundary(opts.prec)) out.push_back(std::move(s));
    return out;
}

}  // namespace betaproof::proof

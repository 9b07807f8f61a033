#include "betaproof/catalogue.hpp"
#include "betaproof/core_functions.hpp"
#include "betaproof/replay.hpp"
#include "betaproof/yang.hpp"

#include <array>

namespace betaproof::proof {

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }
BiPoly C(long c) { return BiPoly(c); }
BiPoly Cq(long n, long d) { return BiPoly(Rational(n, d)); }
const BiPoly& Q() { return builtin_catalogue().bipoly("Q"); }

std::vector<Poly> q_family() {
    std::vector<Poly> qs;
    for (int j = 1; j <= 5; ++j) qs.push_back(builtin_catalogue().poly("q" + std::to_string(j)));
    return qs;
}

ProofStep identity_step() {
    StepBuilder b("case1.identity",
                  "the n = 3 lower bound for dF/dy equals x Q(x,y) / ((1+x+y-2xy) prod_j (y+j)(x+y+j))",
                  Method::ExactIdentity);
    const BiPoly x = X(), y = Y();
    const RationalFn lhs =
        yang::alzer_psi_diff_lower_form(3) - RationalFn(C(1), x + y) + forms::F_y_rational();
    BiPoly den = C(1) + x + y - C(2) * x * y;
    for (long j = 1; j <= 3; ++j) den *= (y + C(j)) * (x + y + C(j));
    b.exact("displayed_quotient", rationalfn_equal(lhs, RationalFn(x * Q(), den)));
    return b.build();
}

ProofStep structure_step(const Rational& width) {
    StepBuilder b("case1.Q-structure",
                  "Q(x,.) has coefficients -q0, q1..q5, -(1-2x) and is PN in y (or nonnegative) for x in (0, 1/2]",
                  Method::SignEngine);
    b.depends("example.q-signs").depends("example.root-ordering");
    const BiPoly& q = Q();
    bool layout = q.coeff_of_y(0) == -builtin_catalogue().poly("q0") && q.coeff_of_y(6) == Poly{-1, 2} &&
                  q.degree_y() == 6;
    for (unsigned k = 1; k <= 5; ++k)
        layout = layout && q.coeff_of_y(k) == builtin_catalogue().poly("q" + std::to_string(k));
    b.exact("coefficient_layout", layout);
    // -(1-2x) <= 0 on (0, 1/2]: linear, nonpositive at both ends
    const Poly top{-1, 2};
    b.exact("top_coefficient_nonpositive", top.eval(Rational(0)).sign() < 0 && top.eval(Rational(1, 2)).sign() <= 0);
    // With q0 < 0 and x1 < ... < x5, the negative q_k form a tail k0..5, so the
    // coefficient signs read + ... + - ... -.
    try {
        const auto qs = q_family();
        b.exact("roots_increasing", sign::verify_root_ordering(qs, Rational(0), Rational(1, 2), width));
        b.exact("q0_negative", sign::negative_below(builtin_catalogue().poly("q0"), Rational(1, 2)).certified);
    } catch (const sign::SignError& e) {
        b.exact("ordering", false, e.what());
    }
    return b.build();
}

ProofStep audit_step(const Rational& step, const Rational& width) {
    StepBuilder b("case1.Q-audit",
                  "sampled: on x = 1/5 + k*step in (1/5, 1/2], Q(x,.) is PN or nonnegative and positive on (0, 1-x]",
                  Method::SignEngine);
    b.depends("case1.Q-structure").note("sampling", true).note("step", step.str());
    std::vector<sign::Interval> enc;
    try {
        enc = sign::root_enclosures(q_family(), Rational(0), Rational(1, 2), width);
    } catch (const sign::SignError& e) {
        b.exact("enclosures", false, e.what());
        return b.build();
    }
    std::size_t samples = 0, pn = 0, nonneg = 0, certified = 0, predicted = 0;
    std::string first_bad;
    for (Rational x = Rational(1, 5) + step; x <= Rational(1, 2); x += step) {
        ++samples;
        const Poly qy = Q().at_x(x);
        const auto kind = sign::classify(qy).kind;
        bool ok = false;
        if (kind == sign::SignKind::PN) {
            ++pn;
            ok = sign::positive_below(qy, Rational(1) - x).certified;
        } else if (kind == sign::SignKind::AllNonneg) {
            ++nonneg;
            ok = qy.coeff(0).sign() > 0;
        }
        // the sign of q_k(x) predicted from the enclosure of x_k, where decidable
        bool prediction_ok = true;
        for (std::size_t k = 0; k < enc.size(); ++k) {
            const int actual = qy.coeff(static_cast<unsigned>(k + 1)).sign();
            if (x < enc[k].lo) prediction_ok = prediction_ok && actual < 0;
            else if (x > enc[k].hi) prediction_ok = prediction_ok && actual > 0;
        }
        if (prediction_ok) ++predicted;
        if (ok) ++certified;
        if ((!ok || !prediction_ok) && first_bad.empty()) first_bad = x.str();
    }
    b.note("samples", samples).note("pn", pn).note("nonnegative", nonneg).note("sign_predictions_matched", predicted);
    b.exact("all_certified", certified == samples && samples > 0, first_bad);
    b.exact("root_ordering_predicts_signs", predicted == samples, first_bad);
    return b.build();
}

BiPoly boundary_factor_inner() {
    const BiPoly x = X();
    return C(7137) + (C(1) - x) * (C(24365) + C(375) * x * x) + C(5300) * x * x;
}

ProofStep boundary_identity_step() {
    StepBuilder b("case1.boundary-identity",
                  "Q(x,1-x) = 4/625 (1-x) [252 + (5x-1)(7137 + (1-x)(24365+375x^2) + 5300x^2)]",
                  Method::ExactIdentity);
    const BiPoly x = X();
    const BiPoly restricted = Q().compose(x, C(1) - x);
    const BiPoly factored =
        Cq(4, 625) * (C(1) - x) * (C(252) + (C(5) * x - C(1)) * boundary_factor_inner());
    b.exact("factored_form", restricted == factored);
    b.note("leading_constant", "4/625");
    return b.build();
}

ProofStep boundary_positive_step() {
    StepBuilder b("case1.boundary-positive", "the factored form of Q(x,1-x) is positive on [1/5, 1/2]",
                  Method::ExactPolynomial);
    b.depends("case1.boundary-identity");
    const Rational lo(1, 5), hi(1, 2);
    const Poly inner = boundary_factor_inner().as_poly_in_x();
    b.exact("inner_positive", sign::positive_on_interval(inner, lo, hi), "7137 + (1-x)(24365+375x^2) + 5300x^2");
    b.exact("one_minus_x_positive", sign::positive_on_interval(Poly{1, -1}, lo, hi));
    const Poly lin{-1, 5};
    b.exact("5x-1_nonnegative", lin.eval(lo).sign() >= 0 && lin.eval(hi).sign() >= 0);
    b.exact("bracket_at_least_252", true, "252 + nonnegative * positive");
    return b.build();
}

ProofStep conclusion_step(const Precision& prec) {
    StepBuilder b("case1.conclusion", "F(x,y) >= F(x,x) = f(x) > 0 for 1/5 <= x <= 1/2, x <= y <= 1-x",
                  Method::HighPrecision, prec);
    b.depends("case1.identity").depends("case1.Q-structure").depends("case1.boundary-positive");
    b.depends("lemma23.f-positive");
    HPFloat min_dfdy(1L, prec.bits()), min_gain(1L, prec.bits()), min_f(1L, prec.bits()), worst_diag(prec.bits());
    for (const Rational& xr : {Rational(1, 5), Rational(3, 10), Rational(2, 5), Rational(1, 2)}) {
        const HPFloat x(xr, prec);
        const HPFloat fx = f(x);
        min_f = min(min_f, fx);
        worst_diag = max(worst_diag, abs(F(x, x) - fx));
        const Rational span = Rational(1) - xr - xr;
        for (int k = 0; k <= 4; ++k) {
            const HPFloat y(xr + span * Rational(k, 4), prec);
            min_dfdy = min(min_dfdy, dFdy(x, y));
            if (k > 0 && span.sign() > 0) min_gain = min(min_gain, F(x, y) - fx);
        }
    }
    b.positive("min_dFdy", min_dfdy).positive("min_f", min_f).vanishes("F(x,x)-f(x)", worst_diag);
    b.positive("min_F_minus_f_off_diagonal", min_gain);
    return b.build();
}

}  // namespace

std::vector<ProofStep> replay_case1(const ReplayOptions& opts) {
    return {identity_step(),
            structure_step(opts.width),
            audit_step(opts.audit_step, opts.width),
            boundary_identity_step(),
            boundary_positive_step(),
            conclusion_step(opts.prec)};
}

}  // namespace betaproof::proof

#include "betaproof/catalogue.hpp"
#include "betaproof/core_functions.hpp"
#include "betaproof/hp_eval.hpp"
#include "betaproof/replay.hpp"
#include "betaproof/special.hpp"
#include "betaproof/yang.hpp"

#include <array>
#include <cmath>

namespace betaproof::proof {

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly C(long c) { return BiPoly(c); }
BiPoly in_x(const Poly& p) { return BiPoly::in_x(p); }
const Poly& cat(const char* name) { return builtin_catalogue().poly(name); }

struct Certified {
    const char* name;
    Rational point;
    Rational printed;
};

nlohmann::json report_evidence(const sign::SignReport& r) {
    nlohmann::json j;
    j["pattern"] = sign::to_string(r.pattern.kind);
    if (r.pattern.split_index) j["split_index"] = *r.pattern.split_index;
    if (r.certificate) {
        j["point"] = r.certificate->point.str();
        j["value"] = r.certificate->value.str();
    }
    return j;
}

ProofStep closed_forms_step() {
    StepBuilder b("lemma22.closed-forms", "the four printed derivatives of L(x, a) at a = 2/5, 4/5 are exact",
                  Method::ExactIdentity);
    for (const auto& c : yang::check_closed_forms())
        b.exact(yang::to_string(c.order) + "(x," + yang::to_string(c.param) + ")", c.matches);
    return b.build();
}

ProofStep sandwich_step(const Precision& prec) {
    StepBuilder b("lemma22.sandwich",
                  "L_x(x,4/5) < psi'(x+1) < L_x(x,2/5) and L_xx(x,2/5) < psi''(x+1) < L_xx(x,4/5) at sample points",
                  Method::HighPrecision, prec);
    b.depends("lemma22.closed-forms");
    HPFloat worst(1L, prec.bits());
    std::string worst_at;
    constexpr int kPoints = 25;
    for (int i = 0; i < kPoints; ++i) {
        // log-spaced over [1e-3, 2], the range of arguments the argument uses
        const double xv = 1e-3 * std::pow(2000.0, static_cast<double>(i) / (kPoints - 1));
        const auto r = yang::sandwich(HPFloat(xv, prec), prec);
        if (r.min_margin < worst) {
            worst = r.min_margin;
            worst_at = std::to_string(xv);
        }
    }
    b.note("points", kPoints).note("worst_x", worst_at).positive("min_margin", worst);
    return b.build();
}

ProofStep certificate_step(const Certified& c) {
    const Poly& p = cat(c.name);
    StepBuilder b(std::string("example.") + c.name, std::string(c.name) + " is PN and positive on (0, " +
                                                          c.point.str() + "]",
                  Method::SignEngine);
    try {
        const auto r = sign::positive_below(p, c.point);
        b.note("report", report_evidence(r));
        b.exact("value_matches_printed", r.certificate->value == c.printed, c.printed.str());
        b.exact("certified", r.certified);
    } catch (const sign::SignError& e) {
        b.exact("criterion", false, e.what());
    }
    return b.build();
}

ProofStep q_signs_step() {
    StepBuilder b("example.q-signs", "q0 < 0 on (0, 1/2]; each q_j (1 <= j <= 5) is NP with q_j(1/2) > 0",
                  Method::SignEngine);
    const Rational half(1, 2);
    const std::array<Rational, 6> printed{Rational(-81, 8), Rational(771, 8), Rational(1029, 8),
                                          Rational(549, 8), Rational(33, 2),  Rational(3, 2)};
    try {
        const auto r0 = sign::negative_below(cat("q0"), half);
        b.note("q0", report_evidence(r0)).exact("q0_negative", r0.certified);
        for (unsigned j = 0; j <= 5; ++j) {
            const std::string name = "q" + std::to_string(j);
            const Poly& q = builtin_catalogue().poly(name);
            b.exact(name + "_at_half", q.eval(half) == printed[j], printed[j].str());
            if (j == 0) continue;
            const auto r = sign::positive_above(q, half);
            b.exact(name + "_NP_positive_at_half", r.certified);
            b.exact(name + "_negative_at_zero", q.eval(Rational(0)).sign() < 0);
        }
    } catch (const sign::SignError& e) {
        b.exact("criterion", false, e.what());
    }
    return b.build();
}

ProofStep root_ordering_step(const Rational& width) {
    StepBuilder b("example.root-ordering", "the positive roots satisfy x1 < x2 < x3 < x4 < x5 with printed prefixes",
                  Method::SignEngine);
    b.depends("example.q-signs");
    static constexpr std::array<const char*, 5> kPrinted{"0.03733", "0.2114", "0.3085", "0.3822", "0.4439"};
    std::vector<Poly> qs;
    for (int j = 1; j <= 5; ++j) qs.push_back(builtin_catalogue().poly("q" + std::to_string(j)));
    b.note("width", width.str());
    try {
        const auto enc = sign::root_enclosures(qs, Rational(0), Rational(1, 2), width);
        for (std::size_t j = 0; j < enc.size(); ++j) {
            const std::string key = "x" + std::to_string(j + 1);
            b.note(key, {{"lo", enc[j].lo.decimal(12)}, {"hi", enc[j].hi.decimal(12)}});
            b.exact(key + "_prefix", sign::matches_prefix(enc[j], kPrinted[j]), kPrinted[j]);
        }
        b.exact("increasing", sign::verify_root_ordering(qs, Rational(0), Rational(1, 2), width));
    } catch (const sign::SignError& e) {
        b.exact("enclosures", false, e.what());
    }
    return b.build();
}

}  // namespace

std::vector<ProofStep> replay_lemmas(const ReplayOptions& opts) {
    std::vector<ProofStep> out;
    out.push_back(closed_forms_step());
    out.push_back(sandwich_step(opts.prec));
    const std::array<Certified, 5> certs{{
        {"p0", Rational(3, 20), Rational(75107551, 32000)},
        {"p1", Rational(1, 5), Rational::parse("64124455182553/15625")},
        {"p2", Rational(1), Rational(4298768)},
        {"p3", Rational(1), Rational::parse("68461255039")},
        {"p4", Rational(9, 25), Rational(21101408, 1953125)},
    }};
    for (const auto& c : certs) out.push_back(certificate_step(c));
    out.push_back(q_signs_step());
    out.push_back(root_ordering_step(opts.width));
    return out;
}

std::vector<ProofStep> replay_lemma23(const ReplayOptions& opts) {
    std::vector<ProofStep> out;
    const BiPoly x = X();
    const BiPoly one_2x = C(1) + C(2) * x;
    const BiPoly quad = C(1) + C(2) * x - C(2) * x * x;

    {
        StepBuilder b("lemma23.identity",
                      "L_x(x,4/5) - 2 L_x(2x,2/5) + 2(1+2x+2x^2+8x^3+4x^4)/((1+2x)^2(1+2x-2x^2)^2) equals the "
                      "displayed degree-12 quotient",
                      Method::ExactIdentity);
        b.depends("lemma22.closed-forms");
        // f'(x) = 2 fhat(x): derivative of -log(1 - 2x^2/(1+2x)) is twice the rational part of fhat
        const RationalFn log_term_derivative =
            RationalFn(C(2), one_2x) - RationalFn(C(2) - C(4) * x, quad);
        b.exact("f_derivative", rationalfn_equal(log_term_derivative, RationalFn(2) * forms::fhat_rational()));
        const RationalFn rational_tail(C(2) * (C(1) + C(2) * x + C(2) * x * x + C(8) * pow(x, 3) + C(4) * pow(x, 4)),
                                       one_2x * one_2x * quad * quad);
        b.exact("fhat_derivative", rationalfn_equal(forms::fhat_rational().partial_x(), rational_tail));

        const RationalFn lx45 = yang::printed_form(yang::Order::First, yang::Param::FourFifths);
        const RationalFn lx25_2x = yang::printed_form(yang::Order::First, yang::Param::TwoFifths).compose(C(2) * x, BiPoly::y());
        const RationalFn lhs = lx45 - RationalFn(2) * lx25_2x + rational_tail;
        const BiPoly den = C(2) * one_2x * one_2x * quad * quad * (C(17) + C(15) * x + C(15) * x * x) *
                           (C(11) + C(36) * x + C(36) * x * x) * (C(11) + C(30) * x + C(60) * x * x) *
                           (C(5) + C(36) * x + C(72) * x * x);
        b.exact("displayed_quotient", rationalfn_equal(lhs, RationalFn(in_x(cat("lemma23_numerator")), den)));
        out.push_back(b.build());
    }
    {
        StepBuilder b("lemma23.numerator-positive",
                      "the degree-12 numerator has positive coefficients, so the lower bound is positive for x > 0",
                      Method::ExactPolynomial);
        const Poly& n = cat("lemma23_numerator");
        bool all_positive = true;
        for (const auto& c : n.coeffs()) all_positive = all_positive && c.sign() > 0;
        b.note("degree", n.degree()).note("constant", n.coeff(0).str()).note("leading", n.leading().str());
        b.exact("all_coefficients_positive", all_positive);
        bool factors_positive = true;
        for (const Poly& q : {Poly{17, 15, 15}, Poly{11, 36, 36}, Poly{11, 30, 60}, Poly{5, 36, 72}})
            for (const auto& c : q.coeffs()) factors_positive = factors_positive && c.sign() > 0;
        b.exact("quadratic_factors_positive", factors_positive);
        // 1 + 2x - 2x^2 only appears squared; it is nonzero below (sqrt 3 + 1)/2
        b.exact("squared_factor_nonzero", sign::positive_on_interval(Poly{1, 2, -2}, Rational(0), Rational(13, 10)),
                "1+2x-2x^2 > 0 on [0, 13/10]");
        out.push_back(b.build());
    }
    {
        const Precision& prec = opts.prec;
        StepBuilder b("lemma23.f-positive", "f(x) > 0 at x = 1/10, 1/2, 1, 13/10; f(1/2) = log(pi/3)",
                      Method::HighPrecision, prec);
        b.depends("lemma23.identity").depends("lemma23.numerator-positive").depends("lemma22.sandwich");
        for (const auto& [label, r] : {std::pair{"f(1/10)", Rational(1, 10)}, std::pair{"f(1/2)", Rational(1, 2)},
                                       std::pair{"f(1)", Rational(1)}, std::pair{"f(13/10)", Rational(13, 10)}})
            b.positive(label, f(HPFloat(r, prec)));
        const HPFloat half(Rational(1, 2), prec);
        b.vanishes("f(1/2)-log(pi/3)", f(half) - log(pi(prec.bits()) / 3L));
        b.vanishes("fhat(0)", fhat(HPFloat(0L, prec)));
        out.push_back(b.build());
    }
    return out;
}

}  // namespace betaproof::proof

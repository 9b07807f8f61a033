#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betaproof/bipoly.hpp"
#include "betaproof/catalogue.hpp"
#include "betaproof/poly.hpp"
#include "betaproof/poly_json.hpp"
#include "betaproof/rational.hpp"
#include "betaproof/rational_fn.hpp"

#include <random>

using namespace betaproof;

namespace {

const Poly& cat(const char* name) { return builtin_catalogue().poly(name); }

Rational random_rational(std::mt19937& rng, int range = 100) {
    std::uniform_int_distribution<long> num(-range, range);
    std::uniform_int_distribution<long> den(1, 12);
    return Rational(num(rng), den(rng));
}

Poly random_poly(std::mt19937& rng, int max_degree = 6) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coef(-100, 100);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& v : c) v = Rational(coef(rng));
    return Poly(std::move(c));
}

BiPoly random_bipoly(std::mt19937& rng, int max_degree = 6) {
    std::uniform_int_distribution<unsigned> deg(0, static_cast<unsigned>(max_degree));
    std::uniform_int_distribution<long> coef(-100, 100);
    std::uniform_int_distribution<int> count(1, 8);
    BiPoly p;
    for (int k = count(rng); k > 0; --k) p += BiPoly::term(Rational(coef(rng)), deg(rng), deg(rng));
    return p;
}

}  // namespace

TEST_CASE("rational canonical form") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("1e-6") == Rational(1, 1000000));
    CHECK(Rational::parse("-2.5E1") == Rational(-25));
    CHECK(Rational::parse(" 10/4 ") == Rational(5, 2));
    CHECK(Rational(1, 3).decimal(5) == "0.33333");
    CHECK(Rational(-1, 3).decimal(2) == "-0.33");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("normalize is idempotent") {
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        const Rational r = random_rational(rng, 1000) * random_rational(rng, 1000);
        CHECK(normalize(normalize(r)) == normalize(r));
        CHECK(normalize(r) == r);
    }
}

TEST_CASE("poly_eval") {
    CHECK(poly_eval(cat("p0"), Rational(3, 20)) == Rational(75107551, 32000));
    CHECK(poly_eval(Poly(), Rational(7, 3)) == Rational(0));
    CHECK(poly_eval(cat("q4"), Rational(1, 2)) == Rational(33, 2));
}

TEST_CASE("poly_derivative") {
    CHECK(poly_derivative(Poly({0, 0, 1})) == Poly({0, 2}));
    CHECK(poly_derivative(Poly::constant(5)).is_zero());
    // power rule applied by hand to 37 + 90x - 93x^2 - 636x^3 - 810x^4 - 540x^5
    CHECK(poly_derivative(cat("p4")) == Poly({90, -186, -1908, -3240, -2700}));
}

TEST_CASE("poly degree and trimming") {
    CHECK(Poly({1, 2, 0, 0}).degree() == 1);
    CHECK(Poly({0}).is_zero());
    CHECK(Poly().degree() == -1);
    CHECK(Poly::x().compose(Poly({1, 1})) == Poly({1, 1}));
    CHECK(Poly({0, 0, 1}).compose(Poly({1, 1})) == Poly({1, 2, 1}));
    CHECK(Poly({1, -1}).str() == "1 - x");
}

TEST_CASE("rationalfn_equal on the displayed identities") {
    const BiPoly x = BiPoly::x();
    const BiPoly y = BiPoly::y();
    const BiPoly one(1);
    SUBCASE("first identity of the alpha > 5/2 chain") {
        const RationalFn lhs = RationalFn(x + y - x * y) -
                               (RationalFn(1) - RationalFn(BiPoly(Rational(5, 2)) * (one - x) * (one - y),
                                                           (one + x) * (one + y)));
        const RationalFn rhs((one - x) * (one - y) * (BiPoly(3) - BiPoly(2) * x - BiPoly(2) * y - BiPoly(2) * x * y),
                             BiPoly(2) * (one + x) * (one + y));
        CHECK(rationalfn_equal(lhs, rhs));
    }
    SUBCASE("cancellation") { CHECK(rationalfn_equal(RationalFn(x, x), RationalFn(1))); }
    SUBCASE("second identity") {
        const BiPoly s = x + y;
        CHECK(rationalfn_equal(RationalFn(BiPoly(3) - BiPoly(2) * x - BiPoly(2) * y - s * s),
                               RationalFn((one - x - y) * (BiPoly(3) + x + y))));
    }
    SUBCASE("a non-identity") { CHECK_FALSE(rationalfn_equal(RationalFn(x, y), RationalFn(y, x))); }
    CHECK_THROWS_AS(RationalFn(x, BiPoly()), std::domain_error);
}

TEST_CASE("bipoly_eval on Q") {
    const BiPoly& q = builtin_catalogue().bipoly("Q");
    // factored diagonal form 4/625 (1-x) [252 + (5x-1)(7137 + (1-x)(24365 + 375x^2) + 5300x^2)] at x = 1/2
    const Rational h(1, 2);
    const Rational factored =
        Rational(4, 625) * (Rational(1) - h) *
        (Rational(252) + (Rational(5) * h - Rational(1)) *
                             (Rational(7137) + (Rational(1) - h) * (Rational(24365) + Rational(375) * h * h) +
                              Rational(5300) * h * h));
    CHECK(bipoly_eval(q, h, h) == factored);
    CHECK(bipoly_eval(q, Rational(0), Rational(0)) == q.coeff(0, 0));
    // -q0(0) + q1(0) + ... + q5(0) - 1, term by term from the printed constants
    CHECK(bipoly_eval(q, Rational(0), Rational(1)) == Rational(11 + (-5 - 65 - 84 - 45 - 11) - 1));
}

TEST_CASE("bipoly evaluation agrees with Horner in y") {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        const BiPoly p = random_bipoly(rng);
        const Rational x = random_rational(rng, 5);
        const Rational y = random_rational(rng, 5);
        Rational direct(0);
        for (const auto& [e, c] : p.terms()) direct += c * pow(x, e.first) * pow(y, e.second);
        CHECK(p.eval(x, y) == direct);
        CHECK(p.at_x(x).eval(y) == direct);
    }
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 100; ++i) {
        const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());

        const BiPoly p = random_bipoly(rng), q = random_bipoly(rng), r = random_bipoly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        const Poly a = random_poly(rng), b = random_poly(rng);
        const Rational x = random_rational(rng, 20);
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
}

TEST_CASE("derivative linearity and product rule") {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        const Poly a = random_poly(rng), b = random_poly(rng);
        const Rational k = random_rational(rng);
        CHECK((a + k * b).derivative() == a.derivative() + k * b.derivative());
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        const BiPoly p = random_bipoly(rng), q = random_bipoly(rng);
        CHECK((p * q).partial_x() == p.partial_x() * q + p * q.partial_x());
        CHECK((p * q).partial_y() == p.partial_y() * q + p * q.partial_y());
    }
}

TEST_CASE("rationalfn equivalence relation on random equivalent pairs") {
    std::mt19937 rng(21);
    for (int i = 0; i < 40; ++i) {
        BiPoly den = random_bipoly(rng, 3);
        if (den.is_zero()) den = BiPoly(1);
        const RationalFn f(random_bipoly(rng, 3), den);
        BiPoly s1 = random_bipoly(rng, 2), s2 = random_bipoly(rng, 2);
        if (s1.is_zero()) s1 = BiPoly(3);
        if (s2.is_zero()) s2 = BiPoly::x();
        const RationalFn g = f * RationalFn(s1, s1);
        const RationalFn h = g * RationalFn(s2, s2);
        CHECK(rationalfn_equal(f, f));
        CHECK(rationalfn_equal(f, g));
        CHECK(rationalfn_equal(g, f));
        CHECK(rationalfn_equal(g, h));
        CHECK(rationalfn_equal(f, h));
    }
}

TEST_CASE("composition") {
    const BiPoly x = BiPoly::x(), y = BiPoly::y();
    const BiPoly p = x * x * y + BiPoly(3) * y;
    // x -> y - 1, y -> 2x
    const BiPoly c = p.compose(y - BiPoly(1), BiPoly(2) * x);
    for (long i = -2; i <= 2; ++i)
        for (long j = -2; j <= 2; ++j)
            CHECK(c.eval(Rational(i), Rational(j)) == p.eval(Rational(j - 1), Rational(2 * i)));
}

TEST_CASE("JSON serialization round-trips") {
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        Poly p = random_poly(rng) * Rational(1, 7);
        CHECK(poly_from_json(to_json(p)) == p);
        BiPoly q = random_bipoly(rng);
        CHECK(bipoly_from_json(to_json(q)) == q);
    }
    const auto j = to_json(Poly({Rational(1, 2), 0, -3}));
    CHECK(j.dump() == R"({"coeffs":["1/2","0","-3"],"var":"x"})");
    CHECK_THROWS(poly_from_json(nlohmann::json::parse(R"({"var":"x"})")));
    CHECK_THROWS(bipoly_from_json(nlohmann::json::parse(R"({"terms":[[1,2]]})")));
}

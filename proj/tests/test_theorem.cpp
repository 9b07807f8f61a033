#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betaproof/core_functions.hpp"
#include "betaproof/hp_eval.hpp"
#include "betaproof/special.hpp"
#include "betaproof/theorem.hpp"
#include "oracles/mpfr_ref.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

using namespace betaproof;
using namespace betaproof::proof;

namespace {

const Precision kPrec{50};
const mpfr_prec_t kBits = kPrec.bits();

HPFloat hp(double v) { return HPFloat(v, kBits); }
HPFloat hp(const Rational& r) { return HPFloat(r, kBits); }
bool close(const HPFloat& a, const HPFloat& b, int exponent) { return abs(a - b) < pow10(exponent, kBits); }

HPFloat oracle_margin(const HPFloat& x, const HPFloat& y) {
    return oracle::beta(x, y) - (x + y) / (x * y) * (1L - x * y * 2L / (x + y + 1L));
}

}  // namespace

TEST_CASE("theorem margin at hand-evaluated points") {
    CHECK(close(theorem_margin(hp(1.0), hp(1.0)), hp(Rational(1, 3)), -40));
    CHECK(close(theorem_margin(hp(0.5), hp(0.5)), pi(kBits) - 3L, -40));
    CHECK_THROWS_AS(theorem_margin(hp(0.0), hp(0.5)), std::domain_error);
    CHECK_THROWS_AS(theorem_margin(hp(0.5), hp(1.5)), std::domain_error);
    CHECK_THROWS_AS(theorem_log_margin(hp(-0.5), hp(0.5)), std::domain_error);
}

TEST_CASE("theorem margin against the MPFR oracle") {
    for (double x : {0.001, 0.1, 0.37, 0.8, 1.0})
        for (double y : {0.002, 0.25, 0.6, 1.0}) {
            CHECK(close(theorem_margin(hp(x), hp(y)), oracle_margin(hp(x), hp(y)), -35));
            CHECK(close(theorem_log_margin(hp(x), hp(y)), log(oracle::beta(hp(x), hp(y)) / new_bound(hp(x), hp(y))),
                        -35));
        }
}

TEST_CASE("log margin vanishes as x -> 0") {
    const HPFloat x = hp(1e-6);
    for (double y : {0.3, 0.7, 1.0}) {
        const HPFloat v = theorem_log_margin(x, hp(y));
        CHECK(v > 0L);
        CHECK(v < hp(1e-4));
    }
}

TEST_CASE("absolute margin tends to a nonzero limit as x -> 0") {
    // B(x,y) - bound -> psi(1) - psi(y) - 1/y + 2y/(1+y) for fixed y
    for (double yv : {0.3, 0.7}) {
        const HPFloat y = hp(yv);
        const HPFloat limit = oracle::digamma(hp(1.0)) - oracle::digamma(y) - 1L / y + y * 2L / (y + 1L);
        const HPFloat m = theorem_margin(hp(1e-9), y);
        CHECK(close(m, limit, -7));
        CHECK(m > hp(1e-2));
    }
    CHECK(theorem_margin(hp(1e-6), hp(1.0)) < hp(1e-4));
}

TEST_CASE("remark ordering") {
    SUBCASE("(1,1): Ivady equality") {
        const auto r = remark_sandwich(hp(1.0), hp(1.0));
        CHECK(r.upper_region);
        CHECK(r.outer_equality);
        CHECK(r.holds);
        CHECK(close(r.beta, hp(1.0), -40));
        CHECK(close(r.ivady_lower, hp(1.0), -40));
        CHECK(close(r.new_bound, hp(Rational(2, 3)), -40));
    }
    SUBCASE("(3/4,3/4): strict") {
        const auto r = remark_sandwich(hp(0.75), hp(0.75));
        CHECK(r.upper_region);
        CHECK(r.holds);
        CHECK_FALSE(r.outer_equality);
        CHECK(r.outer_margin > 0L);
        CHECK(close(r.inner_margin, hp(Rational(1, 5)), -40));  // (x+y-1)/(x+y+1)
    }
    SUBCASE("(1/4,1/4): the new bound is the larger one") {
        const auto r = remark_sandwich(hp(0.25), hp(0.25));
        CHECK_FALSE(r.upper_region);
        CHECK(r.holds);
        CHECK(r.new_bound > r.ivady_lower);
        CHECK(close(r.inner_margin, hp(Rational(1, 3)), -40));
    }
    SUBCASE("x + y = 1: bounds coincide") {
        const auto r = remark_sandwich(hp(0.25), hp(0.75));
        CHECK(abs(r.inner_margin) < pow10(-40, kBits));
        CHECK(r.outer_margin > 0L);
    }
}

TEST_CASE("remark on a grid") {
    for (int i = 1; i <= 20; ++i)
        for (int j = 1; j <= 20; ++j) {
            const auto r = remark_sandwich(hp(Rational(i, 20)), hp(Rational(j, 20)));
            INFO(i << "/20, " << j << "/20");
            CHECK(r.holds);
            // B(x,1) = 1/x = (x+1-x)/x, so the lower Ivady bound is attained on both unit edges
            CHECK(r.outer_equality == (i == 20 || j == 20));
        }
}

TEST_CASE("Ivady bounds are attained along the unit edges") {
    for (double x : {0.1, 0.5, 0.9}) {
        const HPFloat b = oracle::beta(hp(x), hp(1.0));
        CHECK(close(b, hp(1.0) / hp(x), -40));
        CHECK(close(ivady_lower(hp(x), hp(1.0)), b, -40));
        CHECK(close(ivady_upper(hp(x), hp(1.0)), b, -40));
        CHECK(close(ivady_lower(hp(1.0), hp(x)), b, -40));
    }
}

TEST_CASE("bounds of the comparison family") {
    const HPFloat x = hp(0.3), y = hp(0.6);
    const HPFloat alpha = special::compute_constants(kPrec).alpha;
    const HPFloat b = oracle::beta(x, y);
    CHECK(ivady_lower(x, y) < b);
    CHECK(b < ivady_upper(x, y));
    CHECK(alzer_lower(x, y, alpha) < b);
    CHECK(b < alzer_upper(x, y));
    // for x + y <= 1 the Ivady lower bound beats Alzer's
    CHECK(alzer_lower(x, y, alpha) < ivady_lower(x, y));
}

TEST_CASE("sweep on the 4 x 4 grid") {
    std::vector<SweepRow> rows;
    const auto s = sweep_theorem(4, kPrec, [&](const SweepRow& r) { rows.push_back(r); });
    REQUIRE(rows.size() == 16);
    CHECK(s.cells == 16);
    CHECK(s.min_margin_new > 0L);
    // argmin from the oracle
    int best_i = 0, best_j = 0;
    HPFloat best = hp(1e9);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            const HPFloat m = oracle_margin(hp(Rational(i, 4)), hp(Rational(j, 4)));
            if (m < best) {
                best = m;
                best_i = i;
                best_j = j;
            }
        }
    CHECK(s.argmin_x == Rational(best_i, 4));
    CHECK(s.argmin_y == Rational(best_j, 4));
    CHECK(close(s.min_margin_new, best, -35));
    const SweepRow& last = rows.back();
    CHECK(last.x == 1.0);
    CHECK(last.y == 1.0);
    CHECK(last.beta == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(last.margin_new == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(std::abs(last.margin_ivady) < 1e-15);
    CHECK(abs(s.min_margin_ivady_lower) < pow10(-40, kBits));
    CHECK(abs(s.min_margin_ivady_upper) < pow10(-40, kBits));
}

TEST_CASE("sweep on the 100 x 100 grid") {
    std::vector<SweepRow> rows;
    const auto s = sweep_theorem(100, kPrec, [&](const SweepRow& r) { rows.push_back(r); });
    REQUIRE(rows.size() == 10000);
    CHECK(s.min_margin_new > 0L);
    CHECK(s.min_margin_ivady_lower > -pow10(-40, kBits));
    CHECK(s.min_margin_ivady_upper > -pow10(-40, kBits));
    CHECK(s.min_margin_alzer_lower > -pow10(-40, kBits));
    CHECK(s.min_margin_alzer_upper > -pow10(-40, kBits));
    for (const auto& r : rows) CHECK(r.margin_new > 0.0);
    // along each fixed y the margin falls as x decreases towards 0; for small
    // y it peaks near x = 0.4, so the full range is checked only for y >= 3/10
    for (int j = 0; j < 100; ++j)
        for (int i = 1; i < (j + 1 >= 30 ? 100 : 39); ++i) {
            const auto& lo = rows[static_cast<std::size_t>((i - 1) * 100 + j)];
            const auto& hi = rows[static_cast<std::size_t>(i * 100 + j)];
            CHECK(lo.margin_new < hi.margin_new);
        }
    // the new bound is larger than Ivady's exactly when x + y < 1
    std::size_t expected = 0;
    for (int i = 1; i <= 100; ++i)
        for (int j = 1; j <= 100; ++j) expected += i + j < 100;
    CHECK(s.new_beats_ivady == expected);
}

TEST_CASE("threaded sweep is identical") {
    std::ostringstream a, b;
    const auto s1 = sweep_theorem(30, kPrec, [&](const SweepRow& r) { a << csv_line(r) << '\n'; }, 1);
    const auto s3 = sweep_theorem(30, kPrec, [&](const SweepRow& r) { b << csv_line(r) << '\n'; }, 3);
    CHECK(a.str() == b.str());
    CHECK(s1.min_margin_new == s3.min_margin_new);
    CHECK(s1.argmin_x == s3.argmin_x);
    CHECK(s1.argmin_y == s3.argmin_y);
}

TEST_CASE("sweep validation and csv shape") {
    CHECK_THROWS_WITH_AS(sweep_theorem(1), "grid_n must be ≥ 2", std::invalid_argument);
    const std::string header = kSweepCsvHeader;
    CHECK(header == "x,y,beta,new_bound,ivady_lower,alzer_lower,margin_new,margin_ivady");
    const std::string line = csv_line({0.5, 1, 2, 3, 4, 5, 6, 7});
    CHECK(std::count(line.begin(), line.end(), ',') == 7);
    CHECK(line.substr(0, 4) == "0.5,");
}

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "betaproof/catalogue.hpp"
#include "betaproof/cli/commands.hpp"
#include "betaproof/core_functions.hpp"
#include "betaproof/replay.hpp"
#include "betaproof/sign.hpp"
#include "betaproof/special.hpp"
#include "betaproof/theorem.hpp"
#include "betaproof/yang.hpp"
#include "oracles/mpfr_ref.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace betaproof;

namespace {

const Precision kPrec{};

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void info(const std::string& what) { notes.push_back(what); }
};

HPFloat hp(const Rational& r) { return HPFloat(r, kPrec); }
HPFloat hp(double v) { return HPFloat(v, kPrec); }

HPFloat budget() { return pow10(-(kPrec.digits - 20), kPrec.bits()); }

// |v - printed| <= one unit in the last printed place.
bool within_ulp(const HPFloat& v, const std::string& printed) {
    const auto dot = printed.find('.');
    const long places = dot == std::string::npos ? 0 : static_cast<long>(printed.size() - dot - 1);
    return abs(v - HPFloat(printed, kPrec.bits())) <= pow10(-places, kPrec.bits());
}

void printed_constant(Outcome& o, const std::string& name, const HPFloat& v, const std::string& printed) {
    o.check(special::matches_printed(v, printed) && within_ulp(v, printed),
            name + " = " + v.str(12) + " vs " + printed);
}

Outcome exact_values() {
    Outcome o;
    const auto& cat = builtin_catalogue();
    const std::vector<std::tuple<const char*, const char*, const char*>> table{
        {"p0", "3/20", "75107551/32000"}, {"p1", "1/5", "64124455182553/15625"},
        {"p2", "1", "4298768"},           {"p3", "1", "68461255039"},
        {"p4", "9/25", "21101408/1953125"}, {"q0", "1/2", "-81/8"},
        {"q1", "1/2", "771/8"},           {"q2", "1/2", "1029/8"},
        {"q3", "1/2", "549/8"},           {"q4", "1/2", "33/2"},
        {"q5", "1/2", "3/2"},
    };
    for (const auto& [name, at, expected] : table) {
        const Rational v = cat.poly(name).eval(Rational::parse(at));
        o.check(v == Rational::parse(expected), std::string(name) + "(" + at + ") = " + v.str());
    }
    o.info(std::to_string(table.size()) + " exact values");
    return o;
}

Outcome root_enclosures() {
    Outcome o;
    const std::array<const char*, 5> printed{"0.03733", "0.2114", "0.3085", "0.3822", "0.4439"};
    std::vector<Poly> qs;
    for (int j = 1; j <= 5; ++j) qs.push_back(builtin_catalogue().poly("q" + std::to_string(j)));
    const Rational lo(0), hi(1, 2), width(1, 1000000);
    const auto enc = sign::root_enclosures(qs, lo, hi, width);
    o.check(enc.size() == 5, "five enclosures");
    for (std::size_t j = 0; j < enc.size() && j < 5; ++j) {
        o.check(enc[j].width() <= width, "width of x" + std::to_string(j + 1));
        o.check(qs[j].eval(enc[j].lo).sign() * qs[j].eval(enc[j].hi).sign() < 0,
                "sign change across x" + std::to_string(j + 1));
        o.check(sign::matches_prefix(enc[j], printed[j]), std::string(printed[j]) + " inside its enclosure");
        if (j > 0) o.check(enc[j - 1].hi < enc[j].lo, "x" + std::to_string(j) + " < x" + std::to_string(j + 1));
    }
    bool ordered = false;
    try {
        ordered = sign::verify_root_ordering(qs, lo, hi, width);
    } catch (const sign::SignError& e) {
        o.info(e.what());
    }
    o.check(ordered, "verify_root_ordering");
    return o;
}

Outcome constants() {
    Outcome o;
    const auto c = special::compute_constants(kPrec);
    printed_constant(o, "alpha", c.alpha, special::printed::kAlpha);
    const HPFloat p = pi(kPrec.bits());
    o.check(abs(c.alpha - (HPFloat(2L, kPrec) * p * p / HPFloat(3L, kPrec) - HPFloat(4L, kPrec))) <= budget(),
            "alpha = 2 pi^2/3 - 4");
    printed_constant(o, "a1", c.a1, special::printed::kA1);
    printed_constant(o, "a2", c.a2, special::printed::kA2);
    const HPFloat a3 = special::solve_a3(kPrec);
    printed_constant(o, "a3 (bisection)", a3, special::printed::kA3);
    printed_constant(o, "max Delta", c.alzer_max, special::printed::kAlzerMax);
    return o;
}

Outcome proof_constants() {
    Outcome o;
    const HPFloat y(Rational(9, 25), kPrec);
    printed_constant(o, "g(1/5)", proof::g(hp(Rational(1, 5))), "0.001914");
    printed_constant(o, "G(0,9/25)", proof::G(HPFloat(0L, kPrec), y), "0.0554");
    printed_constant(o, "G(1/5,9/25)", proof::G(hp(Rational(1, 5)), y), "0.04015");
    return o;
}

Outcome identities() {
    Outcome o;
    const proof::ReplayOptions opts;
    std::size_t count = 0;
    for (const auto& group : {proof::replay_lemma23(opts), proof::replay_case1(opts), proof::replay_case2(opts)}) {
        for (const auto& s : group) {
            if (s.method != proof::Method::ExactIdentity) continue;
            ++count;
            o.check(s.status == proof::Status::Verified, s.id + ": " + s.diagnostic);
        }
    }
    o.check(count > 0, "identity steps present");
    const auto forms = yang::check_closed_forms();
    o.check(forms.size() == 4, "four printed L derivatives");
    o.check(yang::verify_closed_forms(), "closed forms of L_x and L_xx");
    o.info(std::to_string(count) + " identity steps, " + std::to_string(forms.size()) + " closed forms");
    return o;
}

Outcome sandwich() {
    Outcome o;
    const HPFloat tenfold = HPFloat(10L, kPrec) * budget();
    HPFloat worst(1L, kPrec);
    constexpr int kPoints = 1000;
    for (int i = 0; i < kPoints; ++i) {
        const double x = std::pow(10.0, -4.0 + 6.0 * i / (kPoints - 1));
        const auto r = yang::sandwich(hp(x), kPrec);
        worst = min(worst, r.min_margin);
        if (r.status != yang::SandwichStatus::Holds || !(r.min_margin > tenfold))
            o.check(false, "sandwich at x = " + std::to_string(x));
    }
    o.info("min margin " + worst.str(6));
    const HPFloat p = pi(kPrec.bits());
    const HPFloat t = special::psi1(HPFloat(2L, kPrec));
    o.check(abs(t - (p * p / HPFloat(6L, kPrec) - HPFloat(1L, kPrec))) <= budget(), "psi'(2) = pi^2/6 - 1");
    o.check(hp(Rational(5031, 7802)) < t && t < hp(Rational(2169, 3362)), "psi'(2) inside (5031/7802, 2169/3362)");
    return o;
}

Outcome theorem_audit() {
    Outcome o;
    const auto s = proof::sweep_theorem(1000, kPrec);
    o.check(s.min_margin_new > 0L, "min margin_new on the 1000 grid");
    o.info("grid 1000: min margin_new " + s.min_margin_new.str(6) + " at (" + s.argmin_x.str() + ", " +
           s.argmin_y.str() + ")");
    const HPFloat x = hp(Rational(1, 1000000));
    const HPFloat limit = hp(Rational(1, 10000));
    for (const auto& yv : {Rational(3, 10), Rational(7, 10), Rational(1)}) {
        const HPFloat m = proof::theorem_margin(x, hp(yv));
        const HPFloat lm = proof::theorem_log_margin(x, hp(yv));
        o.check(m < limit, "margin(1e-6, " + yv.str() + ") = " + m.str(6) + " < 1e-4");
        o.info("log margin(1e-6, " + yv.str() + ") = " + lm.str(6));
    }
    const HPFloat one(1L, kPrec);
    const HPFloat b = special::beta(one, one);
    o.check(abs(b - proof::ivady_lower(one, one)) <= budget() && abs(b - proof::ivady_upper(one, one)) <= budget(),
            "B(1,1) = ivady lower = ivady upper");
    return o;
}

Outcome properties() {
    Outcome o;
    std::mt19937 rng(20261019);
    std::uniform_real_distribution<double> unit(0.01, 1.0);
    const HPFloat tol25 = pow10(-25, kPrec.bits());
    const HPFloat one(1L, kPrec);
    for (int i = 0; i < 100; ++i) {
        const HPFloat x = hp(unit(rng) * 10), y = hp(unit(rng) * 10);
        o.check(abs(special::psi(x + one) - special::psi(x) - one / x) <= tol25, "psi(x+1) = psi(x) + 1/x");
        o.check(abs(special::beta(x, y + one) - special::beta(x, y) * y / (x + y)) <= tol25 * special::beta(x, y),
                "B(x,y+1) = B(x,y) y/(x+y)");
        o.check(abs(special::beta(x, y) - oracle::beta(x, y)) <= tol25 * oracle::beta(x, y), "B against MPFR");
    }

    const HPFloat h = pow10(-8, kPrec.bits());
    const HPFloat two_h = HPFloat(2L, kPrec) * h;
    const HPFloat fd_tol = pow10(-13, kPrec.bits());
    for (int i = 0; i < 100; ++i) {
        const HPFloat x = hp(unit(rng)), y = hp(unit(rng));
        o.check(abs(proof::F(x, y) - proof::F(y, x)) <= tol25, "F symmetric");
        o.check(abs(proof::G(x, y) + proof::G(y, x)) <= tol25, "G antisymmetric");
        const HPFloat fx = (proof::F(x + h, y) - proof::F(x - h, y)) / two_h;
        const HPFloat fy = (proof::F(x, y + h) - proof::F(x, y - h)) / two_h;
        o.check(abs(fx - proof::dFdx(x, y)) <= fd_tol, "dF/dx against central differences");
        o.check(abs(fy - proof::dFdy(x, y)) <= fd_tol, "dF/dy against central differences");
    }

    const auto& cat = builtin_catalogue();
    const std::vector<std::pair<const char*, Rational>> certified{{"p0", Rational(3, 20)},
                                                                  {"p1", Rational(1, 5)},
                                                                  {"p2", Rational(1)},
                                                                  {"p3", Rational(1)},
                                                                  {"p4", Rational(9, 25)}};
    std::uniform_int_distribution<long> num(1, 1000000);
    for (const auto& [name, x1] : certified) {
        const Poly& p = cat.poly(name);
        const auto r = sign::positive_below(p, x1);
        o.check(r.certified, std::string(name) + " certified on (0, " + x1.str() + "]");
        for (int i = 0; i < 100; ++i) {
            const Rational t = x1 * Rational(num(rng), 1000001);
            if (p.eval(t).sign() <= 0) o.check(false, std::string(name) + " positive at " + t.str());
        }
    }
    return o;
}

Outcome replay_command() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path();
    for (const char* precision : {"50", "30"}) {
        const std::string path = (dir / (std::string("acceptance_replay_") + precision + ".json")).string();
        const std::array<const char*, 6> argv{"betaproof", "replay", "--precision", precision, "--out", path.c_str()};
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        o.check(code == cli::kExitOk, std::string("replay at precision ") + precision + " exit " +
                                          std::to_string(code) + " " + err.str());
        std::string line = out.str();
        if (!line.empty() && line.back() == '\n') line.pop_back();
        o.info("precision " + std::string(precision) + ": " + line);
        std::filesystem::remove(path);
    }
    return o;
}

struct Criterion {
    int number;
    const char* title;
    double seconds_limit;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "exact polynomial values", 1, exact_values},
        {2, "root enclosures and ordering", 1, root_enclosures},
        {3, "constants to printed digits", 10, constants},
        {4, "proof constants to printed digits", 5, proof_constants},
        {5, "exact identity suite", 30, identities},
        {6, "sandwich property", 10, sandwich},
        {7, "theorem audit", 60, theorem_audit},
        {8, "property suites", 60, properties},
        {9, "replay command", 600, replay_command},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.check(secs < c.seconds_limit, "runtime under " + std::to_string(static_cast<int>(c.seconds_limit)) + " s");
        failed += o.pass ? 0 : 1;
        std::printf("%s criterion %d: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.number, c.title, secs);
        for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

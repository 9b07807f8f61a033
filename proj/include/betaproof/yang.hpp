#pragma once

#include "betaproof/hpfloat.hpp"
#include "betaproof/rational.hpp"
#include "betaproof/rational_fn.hpp"

#include <string>
#include <vector>

namespace betaproof::yang {

/// The two rational parameters for which closed forms are printed.
enum class Param { TwoFifths, FourFifths };
enum class Order { First, Second };

Rational value(Param p);
std::string to_string(Param p);
std::string to_string(Order o);

/// L(x, a) = 1/(90a^2+2) log(x^2+x+(3a+1)/3) + 45a^2/(90a^2+2) log(x^2+x+(15a-1)/(45a)),
/// held symbolically as a sum of coefficient * log(polynomial) for rational a > 1/15.
class YangL {
public:
    struct LogTerm {
        Rational coef;
        BiPoly argument;
    };

    explicit YangL(const Rational& a);

    [[nodiscard]] const Rational& a() const { return a_; }
    [[nodiscard]] const std::vector<LogTerm>& terms() const { return terms_; }
    /// d/dx by the log-derivative rule, as a rational function of x.
    [[nodiscard]] RationalFn derivative_x() const;
    [[nodiscard]] HPFloat eval(const HPFloat& x) const;

private:
    Rational a_;
    std::vector<LogTerm> terms_;
};

/// The closed forms exactly as printed.
RationalFn printed_form(Order order, Param param);
/// The same derivative obtained by differentiating YangL.
RationalFn derived_form(Order order, const Rational& a);

Rational lx(const Rational& x, Param param);
HPFloat lx(const HPFloat& x, Param param);
Rational lxx(const Rational& x, Param param);
HPFloat lxx(const HPFloat& x, Param param);

/// Derivatives for real a > 1/15 (used with the irrational a1, a2, a3).
HPFloat lx(const HPFloat& x, const HPFloat& a);
HPFloat lxx(const HPFloat& x, const HPFloat& a);

struct ClosedFormCheck {
    Order order;
    Param param;
    bool matches = false;
    /// Expanded cross-multiplied difference, "0" on a match.
    std::string difference;
};

std::vector<ClosedFormCheck> check_closed_forms();
bool verify_closed_forms();

enum class SandwichStatus { Holds, Inconclusive, Violated };
std::string to_string(SandwichStatus s);

/// Lx(x,4/5) < psi'(x+1) < Lx(x,2/5) and Lxx(x,2/5) < psi''(x+1) < Lxx(x,4/5).
struct SandwichReport {
    HPFloat lx_four_fifths, trigamma, lx_two_fifths;
    HPFloat lxx_two_fifths, tetragamma, lxx_four_fifths;
    HPFloat min_margin;
    SandwichStatus status = SandwichStatus::Violated;
};

SandwichReport sandwich(const HPFloat& x, const Precision& prec);
bool sandwich_check(const HPFloat& x, const Precision& prec);

/// (1-s) [1/(x+s+n) + sum_{i<n} 1/((x+i+1)(x+i+s))], a strict lower bound for
/// psi(x+1) - psi(x+s) when x > 0, s in (0,1).
Rational alzer_psi_diff_lower(const Rational& x, const Rational& s, unsigned n);
HPFloat alzer_psi_diff_lower(const HPFloat& x, const HPFloat& s, unsigned n);
/// The same bound as a rational function with s -> x and argument -> y.
RationalFn alzer_psi_diff_lower_form(unsigned n);

}  // namespace betaproof::yang

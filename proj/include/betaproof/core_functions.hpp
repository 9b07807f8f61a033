#pragma once

#include "betaproof/hpfloat.hpp"
#include "betaproof/rational.hpp"
#include "betaproof/rational_fn.hpp"

#include <stdexcept>

namespace betaproof::proof {

/// D = {(x, y) : x < y < 1 - x, 0 < x < 1/5}.
struct Trapezoid {
    enum class Edge { None, AntiDiagonal, LeftSide, Diagonal, RightSide };

    static bool contains(const Rational& x, const Rational& y);
    static bool contains(const HPFloat& x, const HPFloat& y);
    /// Which closed boundary segment (x + y = 1, x = 0, y = x, x = 1/5) the
    /// point lies on, or None. Points off the closure also give None.
    static Edge edge(const Rational& x, const Rational& y);
};

std::string to_string(Trapezoid::Edge e);

// Log-ratio function and its derivatives. All take x, y >= 0 and evaluate
// at the precision of x.

/// log[G(x+1) G(y+1) / G(x+y+1)] - log(1 - 2xy/(x+y+1)).
HPFloat F(const HPFloat& x, const HPFloat& y);
HPFloat dFdx(const HPFloat& x, const HPFloat& y);
HPFloat dFdy(const HPFloat& x, const HPFloat& y);
/// dF/dx - dF/dy.
HPFloat G(const HPFloat& x, const HPFloat& y);
HPFloat dGdx(const HPFloat& x, const HPFloat& y);
HPFloat dGdy(const HPFloat& x, const HPFloat& y);

/// F(x, x); requires 0 <= x and 1 + 2x - 2x^2 > 0.
HPFloat f(const HPFloat& x);
/// f'(x) / 2.
HPFloat fhat(const HPFloat& x);
/// dG/dx along y = x + 9/25.
HPFloat g(const HPFloat& x);

/// Rational parts of the functions above, as exact forms in (x, y).
namespace forms {
RationalFn F_x_rational();   // 2y(1+y) / ((1+x+y)(1+x+y-2xy))
RationalFn F_y_rational();   // 2x(1+x) / ((1+x+y)(1+x+y-2xy))
RationalFn G_rational();     // -2(x-y) / (1+x+y-2xy)
RationalFn g_rational();     // -(913+350x-1250x^2) / (2(17+16x-25x^2)^2)
RationalFn fhat_rational();  // 2x(1+x) / ((1+2x)(1+2x-2x^2))
}  // namespace forms

/// B(x, y) - (x+y)/(xy) (1 - 2xy/(x+y+1)) for x, y in (0, 1].
HPFloat theorem_margin(const HPFloat& x, const HPFloat& y);
/// log B(x, y) - log of the same bound; equals F(x, y).
HPFloat theorem_log_margin(const HPFloat& x, const HPFloat& y);

/// Lower bound (x+y)/(xy) (1 - 2xy/(x+y+1)).
HPFloat new_bound(const HPFloat& x, const HPFloat& y);
/// (x+y-xy)/(xy) and (x+y)/(xy(1+xy)).
HPFloat ivady_lower(const HPFloat& x, const HPFloat& y);
HPFloat ivady_upper(const HPFloat& x, const HPFloat& y);
/// (1/(xy)) [1 - c (1-x)(1-y)/((1+x)(1+y))] with c = alpha or beta = 1.
HPFloat alzer_lower(const HPFloat& x, const HPFloat& y, const HPFloat& alpha);
HPFloat alzer_upper(const HPFloat& x, const HPFloat& y);

struct RemarkReport {
    HPFloat beta;
    HPFloat ivady_lower;
    HPFloat new_bound;
    /// x + y >= 1: B >= ivady >= new. Otherwise B > new >= ivady.
    bool upper_region = false;
    /// B minus the larger of the two bounds.
    HPFloat outer_margin;
    /// Larger bound minus the smaller; (x+y-1)/(x+y+1) up to sign.
    HPFloat inner_margin;
    bool holds = false;
    /// B equals the larger bound to within the error budget.
    bool outer_equality = false;
};

RemarkReport remark_sandwich(const HPFloat& x, const HPFloat& y, const Precision& prec = {});

}  // namespace betaproof::proof

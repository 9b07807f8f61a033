#pragma once

#include "betaproof/hpfloat.hpp"
#include "betaproof/poly.hpp"
#include "betaproof/rational_fn.hpp"

namespace betaproof {

/// Horner evaluation of exact polynomials at floating arguments.
HPFloat eval(const Poly& p, const HPFloat& x);
HPFloat eval(const BiPoly& p, const HPFloat& x, const HPFloat& y);
HPFloat eval(const RationalFn& f, const HPFloat& x, const HPFloat& y);
inline HPFloat eval(const RationalFn& f, const HPFloat& x) { return eval(f, x, HPFloat(x.bits())); }

/// 10^-(digits - 20), the absolute error promised for special-function values.
HPFloat error_budget(const Precision& prec);

}  // namespace betaproof

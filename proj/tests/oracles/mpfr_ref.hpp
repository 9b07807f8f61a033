#pragma once

// MPFR's built-in special functions, used only as reference values in tests.

#include "betaproof/hpfloat.hpp"

namespace oracle {

using betaproof::HPFloat;

inline HPFloat lngamma(const HPFloat& x) {
    HPFloat out(x.bits());
    int sign = 0;
    mpfr_lgamma(out.get(), &sign, x.get(), MPFR_RNDN);
    return out;
}

inline HPFloat digamma(const HPFloat& x) {
    HPFloat out(x.bits());
    mpfr_digamma(out.get(), x.get(), MPFR_RNDN);
    return out;
}

inline HPFloat beta(const HPFloat& x, const HPFloat& y) {
    return betaproof::exp(lngamma(x) + lngamma(y) - lngamma(x + y));
}

/// log[G(x+1) G(y+1) / G(x+y+1)] - log(1 - 2xy/(x+y+1)), from MPFR's lgamma.
inline HPFloat log_ratio(const HPFloat& x, const HPFloat& y) {
    const HPFloat s = x + y;
    return lngamma(x + 1L) + lngamma(y + 1L) - lngamma(s + 1L) - betaproof::log(1L - x * y * 2L / (s + 1L));
}

}  // namespace oracle

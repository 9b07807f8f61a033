#pragma once

#include "betaproof/hpfloat.hpp"
#include "betaproof/rational.hpp"

#include <stdexcept>
#include <vector>

namespace betaproof::special {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// All functions evaluate at the precision of their argument(s). On (0, 10]
// the absolute error is far below 10^-30 at the default 50-digit precision:
// arguments are shifted by the recurrences until they reach roughly the
// decimal precision, where the asymptotic series is truncated once a term
// falls below 2^-bits of the running sum.

HPFloat log_gamma(const HPFloat& x);
HPFloat gamma(const HPFloat& x);
/// Euler beta B(x, y) = exp(log G(x) + log G(y) - log G(x + y)).
HPFloat beta(const HPFloat& x, const HPFloat& y);
HPFloat log_beta(const HPFloat& x, const HPFloat& y);
/// Digamma.
HPFloat psi(const HPFloat& x);
/// Trigamma.
HPFloat psi1(const HPFloat& x);
/// Tetragamma.
HPFloat psi2(const HPFloat& x);

/// Exact Bernoulli numbers B_0 .. B_{2n}, B_1 = -1/2.
const std::vector<Rational>& bernoulli_numbers(unsigned n);

/// 1/x^2 - G(x)^2 / G(2x).
HPFloat delta(const HPFloat& x);

struct DeltaMax {
    HPFloat location;
    HPFloat value;
};

/// Maximum of delta over x >= 1. Brackets by scanning 1.0, 1.1, ..., 3.0 and
/// then narrows with golden-section search to 1e-12 in the argument.
DeltaMax maximize_delta(const Precision& prec);

/// L_xx(0, a) for the two-logarithm Yang function, valid for a > 1/15.
HPFloat yang_lxx_at_zero(const HPFloat& a);

/// Unique a in (1/15, 2) with L_xx(0, a) = psi''(1), bisected to 1e-15.
HPFloat solve_a3(const Precision& prec);

struct Constants {
    HPFloat alpha;        // 2 pi^2 / 3 - 4
    Rational beta_const;  // 1
    HPFloat a1;           // (40 + 3 sqrt 205) / 105
    HPFloat a2;           // (45 - 4 pi^2 + 3 sqrt(4 pi^4 - 80 pi^2 + 405)) / (30 (pi^2 - 9))
    HPFloat a3;           // solve_a3
    HPFloat alzer_max;    // max of delta on x >= 1
    HPFloat alzer_argmax;
};

Constants compute_constants(const Precision& prec);

/// Decimal prefixes as they appear in print, for side-by-side comparison.
namespace printed {
inline constexpr const char* kAlpha = "2.57973";
inline constexpr const char* kA1 = "0.79003";
inline constexpr const char* kA2 = "0.47053";
inline constexpr const char* kA3 = "0.43218";
inline constexpr const char* kAlzerMax = "0.08731";
}  // namespace printed

/// True iff `value` agrees with the printed prefix to within one unit of its
/// last digit (the prefix is a truncation, so value lies in [prefix - ulp,
/// prefix + 2 ulp)).
bool matches_printed(const HPFloat& value, const std::string& prefix);

}  // namespace betaproof::special

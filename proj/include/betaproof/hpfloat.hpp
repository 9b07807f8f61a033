#pragma once

#include "betaproof/rational.hpp"

#include <mpfr.h>

#include <compare>
#include <string>

namespace betaproof {

/// Working precision, carried explicitly through every evaluation.
struct Precision {
    int digits = 50;

    /// Significand bits for `digits` decimal digits plus guard bits.
    [[nodiscard]] mpfr_prec_t bits() const;
    /// Absolute error budget promised for special-function values: 10^-(digits-20).
    [[nodiscard]] double error_budget_exponent() const { return -(digits - 20); }
};

/// Multiple-precision float with its own precision. Binary operations round to
/// the larger precision of the two operands.
class HPFloat {
public:
    explicit HPFloat(mpfr_prec_t bits = 64);
    HPFloat(double v, mpfr_prec_t bits);
    HPFloat(long v, mpfr_prec_t bits);
    HPFloat(int v, mpfr_prec_t bits) : HPFloat(static_cast<long>(v), bits) {}
    HPFloat(const Rational& r, mpfr_prec_t bits);
    HPFloat(const std::string& decimal, mpfr_prec_t bits);
    HPFloat(double v, const Precision& p) : HPFloat(v, p.bits()) {}
    HPFloat(long v, const Precision& p) : HPFloat(v, p.bits()) {}
    HPFloat(int v, const Precision& p) : HPFloat(static_cast<long>(v), p.bits()) {}
    HPFloat(const Rational& r, const Precision& p) : HPFloat(r, p.bits()) {}

    HPFloat(const HPFloat& o);
    HPFloat(HPFloat&& o) noexcept;
    HPFloat& operator=(const HPFloat& o);
    HPFloat& operator=(HPFloat&& o) noexcept;
    ~HPFloat();

    [[nodiscard]] mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    [[nodiscard]] mpfr_srcptr get() const { return v_; }
    [[nodiscard]] mpfr_ptr get() { return v_; }

    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Scientific notation with `digits` significant digits.
    [[nodiscard]] std::string str(int digits = 20) const;
    /// Fixed notation truncated toward zero after `frac_digits` digits.
    [[nodiscard]] std::string fixed(int frac_digits) const;
    [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
    [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
    /// The same value rounded to another precision.
    [[nodiscard]] HPFloat with_bits(mpfr_prec_t bits) const;

    HPFloat& operator+=(const HPFloat& o);
    HPFloat& operator-=(const HPFloat& o);
    HPFloat& operator*=(const HPFloat& o);
    HPFloat& operator/=(const HPFloat& o);
    HPFloat& operator+=(long o);
    HPFloat& operator-=(long o);
    HPFloat& operator*=(long o);
    HPFloat& operator/=(long o);

    friend HPFloat operator+(HPFloat a, const HPFloat& b) { return a += b; }
    friend HPFloat operator-(HPFloat a, const HPFloat& b) { return a -= b; }
    friend HPFloat operator*(HPFloat a, const HPFloat& b) { return a *= b; }
    friend HPFloat operator/(HPFloat a, const HPFloat& b) { return a /= b; }
    friend HPFloat operator+(HPFloat a, long b) { return a += b; }
    friend HPFloat operator-(HPFloat a, long b) { return a -= b; }
    friend HPFloat operator*(HPFloat a, long b) { return a *= b; }
    friend HPFloat operator/(HPFloat a, long b) { return a /= b; }
    friend HPFloat operator+(long a, HPFloat b) { return b += a; }
    friend HPFloat operator-(long a, const HPFloat& b);
    friend HPFloat operator*(long a, HPFloat b) { return b *= a; }
    friend HPFloat operator/(long a, const HPFloat& b);
    friend HPFloat operator-(const HPFloat& a);

    friend bool operator==(const HPFloat& a, const HPFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const HPFloat& a, const HPFloat& b);
    friend std::partial_ordering operator<=>(const HPFloat& a, long b);
    friend bool operator==(const HPFloat& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

private:
    mpfr_t v_;
};

HPFloat abs(const HPFloat& x);
HPFloat sqrt(const HPFloat& x);
HPFloat log(const HPFloat& x);
HPFloat exp(const HPFloat& x);
HPFloat pow(const HPFloat& x, const HPFloat& y);
HPFloat pi(mpfr_prec_t bits);
HPFloat min(const HPFloat& a, const HPFloat& b);
HPFloat max(const HPFloat& a, const HPFloat& b);
/// 10^e at the given precision.
HPFloat pow10(long e, mpfr_prec_t bits);

/// Exact rational approximation of the stored binary value.
Rational to_rational(const HPFloat& x);

}  // namespace betaproof

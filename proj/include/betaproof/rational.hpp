#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace betaproof {

/// Exact rational number in canonical form (denominator > 0, gcd = 1).
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT: implicit from integer literals
    Rational(int v) : value_(static_cast<long>(v)) {}
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    /// Parses "n", "n/d", a decimal "0.125" or scientific "1e-6" exactly.
    static Rational parse(std::string_view text);

    [[nodiscard]] const mpq_class& get() const { return value_; }
    [[nodiscard]] mpz_class num() const { return value_.get_num(); }
    [[nodiscard]] mpz_class den() const { return value_.get_den(); }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    /// "num/den", or just "num" when the denominator is one.
    [[nodiscard]] std::string str() const;
    /// Decimal expansion truncated toward zero after `digits` fractional digits.
    [[nodiscard]] std::string decimal(int digits) const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);
Rational midpoint(const Rational& a, const Rational& b);
/// Reduces to canonical form; Rational values are always canonical, so this is the identity.
Rational normalize(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace betaproof

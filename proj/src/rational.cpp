#include "betaproof/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace betaproof {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

namespace {

mpz_class parse_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("Rational::parse: bad integer");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("Rational::parse: bad integer '" + std::string(s) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

mpz_class pow10(unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
    }

    // decimal with optional exponent
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        exponent = parse_integer(text.substr(e + 1)).get_si();
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
        negative = mantissa[0] == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        digits = std::string(mantissa.substr(0, dot)) + std::string(mantissa.substr(dot + 1));
        frac_len = static_cast<long>(mantissa.size() - dot - 1);
    } else {
        digits = std::string(mantissa);
    }
    if (digits.empty()) throw std::invalid_argument("Rational::parse: no digits in '" + std::string(text) + "'");
    mpz_class num = parse_integer(digits);
    if (negative) num = -num;
    const long shift = exponent - frac_len;
    if (shift >= 0) return Rational(num * pow10(static_cast<unsigned>(shift)), mpz_class(1));
    return Rational(num, pow10(static_cast<unsigned>(-shift)));
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    mpz_class scaled = value_.get_num() * pow10(static_cast<unsigned>(digits));
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), value_.get_den().get_mpz_t());
    const bool negative = sign() < 0;
    std::string s = mpz_class(::abs(q)).get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return (negative && q != 0) ? "-" + s : s;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        b *= b;
        exponent >>= 1U;
    }
    return result;
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

Rational normalize(const Rational& r) {
    mpq_class q = r.get();
    q.canonicalize();
    return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace betaproof

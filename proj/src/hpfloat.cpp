#include "betaproof/hpfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace betaproof {

mpfr_prec_t Precision::bits() const {
    // log2(10) = 3.3219...; 32 guard bits absorb cancellation in argument shifts.
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

HPFloat::HPFloat(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

HPFloat::HPFloat(double v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

HPFloat::HPFloat(long v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

HPFloat::HPFloat(const Rational& r, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, r.get().get_mpq_t(), MPFR_RNDN);
}

HPFloat::HPFloat(const std::string& decimal, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("HPFloat: cannot parse '" + decimal + "'");
    }
}

HPFloat::HPFloat(const HPFloat& o) {
    mpfr_init2(v_, o.bits());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HPFloat::HPFloat(HPFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

HPFloat& HPFloat::operator=(const HPFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.bits());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

HPFloat& HPFloat::operator=(HPFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

HPFloat::~HPFloat() { mpfr_clear(v_); }

std::string HPFloat::str(int digits) const {
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    char* raw = nullptr;
    const std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
    mpfr_asprintf(&raw, fmt.c_str(), v_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

std::string HPFloat::fixed(int frac_digits) const {
    if (!is_finite()) return str();
    return to_rational(*this).decimal(frac_digits);
}

HPFloat HPFloat::with_bits(mpfr_prec_t bits) const {
    HPFloat out(bits);
    mpfr_set(out.v_, v_, MPFR_RNDN);
    return out;
}

namespace {

// Raises the precision of `dst` to match `src` before an in-place operation.
void widen(mpfr_ptr dst, mpfr_srcptr src) {
    if (mpfr_get_prec(src) > mpfr_get_prec(dst)) mpfr_prec_round(dst, mpfr_get_prec(src), MPFR_RNDN);
}

}  // namespace

HPFloat& HPFloat::operator+=(const HPFloat& o) {
    widen(v_, o.v_);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPFloat& HPFloat::operator-=(const HPFloat& o) {
    widen(v_, o.v_);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPFloat& HPFloat::operator*=(const HPFloat& o) {
    widen(v_, o.v_);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPFloat& HPFloat::operator/=(const HPFloat& o) {
    widen(v_, o.v_);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPFloat& HPFloat::operator+=(long o) {
    mpfr_add_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

HPFloat& HPFloat::operator-=(long o) {
    mpfr_sub_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

HPFloat& HPFloat::operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

HPFloat& HPFloat::operator/=(long o) {
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

HPFloat operator-(long a, const HPFloat& b) {
    HPFloat out(b.bits());
    mpfr_si_sub(out.v_, a, b.v_, MPFR_RNDN);
    return out;
}

HPFloat operator/(long a, const HPFloat& b) {
    HPFloat out(b.bits());
    mpfr_si_div(out.v_, a, b.v_, MPFR_RNDN);
    return out;
}

HPFloat operator-(const HPFloat& a) {
    HPFloat out(a.bits());
    mpfr_neg(out.v_, a.v_, MPFR_RNDN);
    return out;
}

std::partial_ordering operator<=>(const HPFloat& a, const HPFloat& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const HPFloat& a, long b) {
    if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

HPFloat abs(const HPFloat& x) {
    HPFloat out(x.bits());
    mpfr_abs(out.get(), x.get(), MPFR_RNDN);
    return out;
}

HPFloat sqrt(const HPFloat& x) {
    HPFloat out(x.bits());
    mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
    return out;
}

HPFloat log(const HPFloat& x) {
    HPFloat out(x.bits());
    mpfr_log(out.get(), x.get(), MPFR_RNDN);
    return out;
}

HPFloat exp(const HPFloat& x) {
    HPFloat out(x.bits());
    mpfr_exp(out.get(), x.get(), MPFR_RNDN);
    return out;
}

HPFloat pow(const HPFloat& x, const HPFloat& y) {
    HPFloat out(std::max(x.bits(), y.bits()));
    mpfr_pow(out.get(), x.get(), y.get(), MPFR_RNDN);
    return out;
}

HPFloat pi(mpfr_prec_t bits) {
    HPFloat out(bits);
    mpfr_const_pi(out.get(), MPFR_RNDN);
    return out;
}

HPFloat min(const HPFloat& a, const HPFloat& b) { return b < a ? b : a; }
HPFloat max(const HPFloat& a, const HPFloat& b) { return a < b ? b : a; }

HPFloat pow10(long e, mpfr_prec_t bits) {
    HPFloat out(bits);
    mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
    return out;
}

Rational to_rational(const HPFloat& x) {
    if (!x.is_finite()) throw std::domain_error("to_rational: non-finite value");
    mpz_class m;
    const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.get());
    mpz_class scale = 1;
    if (e >= 0) {
        mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        return Rational(m, scale);
    }
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return Rational(m, scale);
}

}  // namespace betaproof

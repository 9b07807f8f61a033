#include "betaproof/special.hpp"

#include <algorithm>
#include <cmath>

namespace betaproof::special {

namespace {

// Highest Bernoulli index pair kept in the table; the asymptotic series never
// needs more than a few dozen terms at the shift threshold below.
constexpr unsigned kMaxBernoulliPairs = 200;

std::vector<Rational> compute_bernoulli(unsigned pairs) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    const unsigned n = 2 * pairs;
    std::vector<Rational> b(n + 1);
    b[0] = Rational(1);
    for (unsigned m = 1; m <= n; ++m) {
        if (m > 1 && m % 2 == 1) continue;  // odd Bernoulli numbers beyond B_1 vanish
        mpz_class binom = 1;  // C(m+1, 0)
        Rational sum(0);
        for (unsigned j = 0; j < m; ++j) {
            if (!b[j].is_zero()) sum += Rational(binom, mpz_class(1)) * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b[m] = -sum / Rational(static_cast<long>(m + 1));
    }
    return b;
}

long decimal_digits(mpfr_prec_t bits) { return static_cast<long>(static_cast<double>(bits) * 0.30103); }

// Arguments are shifted up to at least this value before the asymptotic
// series is used. At z >= D (D = decimal digits) the series terms keep
// shrinking well past 10^-D, so truncation never limits accuracy.
long shift_threshold(mpfr_prec_t bits) { return std::max<long>(12, decimal_digits(bits)); }

struct Shifted {
    HPFloat z;
    long count;
};

Shifted shift(const HPFloat& x) {
    const long target = shift_threshold(x.bits());
    long n = 0;
    if (x < target) n = target - static_cast<long>(std::floor(x.to_double()));
    return {x + n, n};
}

void require_positive(const HPFloat& x, const char* what) {
    if (!(x > 0L)) throw DomainError(std::string(what) + ": argument must be positive");
}

// Adds sum_k coef(k) * B_2k * zpow(k) until terms drop below 2^-bits of the
// running total. `step` advances the power of z between terms.
template <class CoefFn>
HPFloat asymptotic_tail(const HPFloat& z, const HPFloat& first_power, const HPFloat& step, CoefFn coef) {
    const auto& bern = bernoulli_numbers(kMaxBernoulliPairs);
    const mpfr_prec_t bits = z.bits();
    HPFloat sum(bits);
    HPFloat zp = first_power;
    HPFloat previous(bits);
    for (unsigned k = 1; k <= kMaxBernoulliPairs; ++k) {
        HPFloat term = HPFloat(bern[2 * k] * coef(k), bits) * zp;
        HPFloat mag = abs(term);
        // past the smallest term the series diverges
        if (k > 1 && mag > previous) break;
        sum += term;
        HPFloat ref = abs(sum);
        mpfr_mul_2si(ref.get(), ref.get(), -static_cast<long>(bits), MPFR_RNDN);
        if (mag < ref || mag.sign() == 0) break;
        previous = mag;
        zp *= step;
    }
    return sum;
}

}  // namespace

const std::vector<Rational>& bernoulli_numbers(unsigned n) {
    static const std::vector<Rational> table = compute_bernoulli(kMaxBernoulliPairs);
    if (n > kMaxBernoulliPairs) throw std::out_of_range("bernoulli_numbers: table holds B_0..B_400");
    return table;
}

HPFloat log_gamma(const HPFloat& x) {
    require_positive(x, "log_gamma");
    const mpfr_prec_t bits = x.bits();
    auto [z, n] = shift(x);

    HPFloat product(1L, bits);
    for (long i = 0; i < n; ++i) product *= (x + i);

    // (z - 1/2) log z - z + log(2 pi)/2 + sum B_2k / (2k (2k-1) z^(2k-1))
    HPFloat two_pi = pi(bits) * 2L;
    HPFloat result = (z - HPFloat(0.5, bits)) * log(z) - z + log(two_pi) / 2L;
    const HPFloat inv_z = 1L / z;
    result += asymptotic_tail(z, inv_z, inv_z * inv_z, [](unsigned k) {
        const long m = 2L * k;
        return Rational(1, m * (m - 1));
    });
    return result - log(product);
}

HPFloat gamma(const HPFloat& x) { return exp(log_gamma(x)); }

HPFloat log_beta(const HPFloat& x, const HPFloat& y) {
    require_positive(x, "beta");
    require_positive(y, "beta");
    return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

HPFloat beta(const HPFloat& x, const HPFloat& y) { return exp(log_beta(x, y)); }

HPFloat psi(const HPFloat& x) {
    require_positive(x, "psi");
    const mpfr_prec_t bits = x.bits();
    auto [z, n] = shift(x);
    HPFloat shift_sum(bits);
    for (long i = 0; i < n; ++i) shift_sum += 1L / (x + i);

    // log z - 1/(2z) - sum B_2k / (2k z^2k)
    const HPFloat inv_z2 = 1L / (z * z);
    HPFloat result = log(z) - 1L / (z * 2L);
    result -= asymptotic_tail(z, inv_z2, inv_z2, [](unsigned k) { return Rational(1, 2L * k); });
    return result - shift_sum;
}

HPFloat psi1(const HPFloat& x) {
    require_positive(x, "psi1");
    const mpfr_prec_t bits = x.bits();
    auto [z, n] = shift(x);
    HPFloat shift_sum(bits);
    for (long i = 0; i < n; ++i) {
        HPFloat t = x + i;
        shift_sum += 1L / (t * t);
    }
    // 1/z + 1/(2z^2) + sum B_2k / z^(2k+1)
    const HPFloat inv_z = 1L / z;
    const HPFloat inv_z2 = inv_z * inv_z;
    HPFloat result = inv_z + inv_z2 / 2L;
    result += asymptotic_tail(z, inv_z2 * inv_z, inv_z2, [](unsigned) { return Rational(1); });
    return result + shift_sum;
}

HPFloat psi2(const HPFloat& x) {
    require_positive(x, "psi2");
    const mpfr_prec_t bits = x.bits();
    auto [z, n] = shift(x);
    HPFloat shift_sum(bits);
    for (long i = 0; i < n; ++i) {
        HPFloat t = x + i;
        shift_sum += 1L / (t * t * t);
    }
    // -1/z^2 - 1/z^3 - sum (2k+1) B_2k / z^(2k+2)
    const HPFloat inv_z = 1L / z;
    const HPFloat inv_z2 = inv_z * inv_z;
    HPFloat result = -inv_z2 - inv_z2 * inv_z;
    result -= asymptotic_tail(z, inv_z2 * inv_z2, inv_z2, [](unsigned k) { return Rational(2L * k + 1); });
    return result - shift_sum * 2L;
}

HPFloat delta(const HPFloat& x) {
    require_positive(x, "delta");
    return 1L / (x * x) - exp(log_gamma(x) * 2L - log_gamma(x * 2L));
}

DeltaMax maximize_delta(const Precision& prec) {
    const mpfr_prec_t bits = prec.bits();
    // coarse scan 1.0, 1.1, ..., 3.0
    int best = 0;
    HPFloat best_value = delta(HPFloat(1L, bits));
    for (int i = 1; i <= 20; ++i) {
        HPFloat v = delta(HPFloat(Rational(10 + i, 10), bits));
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    if (best == 0 || best == 20) throw std::runtime_error("maximize_delta: maximum not interior to the scan");

    HPFloat lo(Rational(10 + best - 1, 10), bits);
    HPFloat hi(Rational(10 + best + 1, 10), bits);
    const HPFloat inv_phi = (sqrt(HPFloat(5L, bits)) - 1L) / 2L;
    const HPFloat tol(1e-12, bits);
    HPFloat c = hi - (hi - lo) * inv_phi;
    HPFloat d = lo + (hi - lo) * inv_phi;
    HPFloat fc = delta(c);
    HPFloat fd = delta(d);
    while (hi - lo > tol) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - (hi - lo) * inv_phi;
            fc = delta(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + (hi - lo) * inv_phi;
            fd = delta(d);
        }
    }
    HPFloat location = (lo + hi) / 2L;
    HPFloat value = delta(location);
    return {location, value};
}

HPFloat yang_lxx_at_zero(const HPFloat& a) {
    const mpfr_prec_t bits = a.bits();
    const HPFloat fifteenth = HPFloat(1L, bits) / 15L;
    if (!(a > fifteenth)) throw DomainError("yang_lxx_at_zero: need a > 1/15");
    // L(x, a) = c1 log(x^2 + x + k1) + c2 log(x^2 + x + k2); at x = 0 the
    // second derivative of log(x^2 + x + k) is 2/k - 1/k^2.
    const HPFloat a2 = a * a;
    const HPFloat w = a2 * 90L + 2L;
    const HPFloat c1 = 1L / w;
    const HPFloat c2 = a2 * 45L / w;
    const HPFloat k1 = (a * 3L + 1L) / 3L;
    const HPFloat k2 = (a * 15L - 1L) / (a * 45L);
    auto second = [](const HPFloat& k) { return 2L / k - 1L / (k * k); };
    return c1 * second(k1) + c2 * second(k2);
}

HPFloat solve_a3(const Precision& prec) {
    const mpfr_prec_t bits = prec.bits();
    const HPFloat target = psi2(HPFloat(1L, bits));
    HPFloat lo = HPFloat(1L, bits) / 15L + HPFloat(1e-9, bits);
    HPFloat hi(2L, bits);
    auto f = [&](const HPFloat& a) { return yang_lxx_at_zero(a) - target; };
    const int slo = f(lo).sign();
    const int shi = f(hi).sign();
    if (slo * shi >= 0) throw std::runtime_error("solve_a3: no sign change on (1/15, 2)");
    const HPFloat tol(1e-15, bits);
    while (hi - lo > tol) {
        HPFloat mid = (lo + hi) / 2L;
        const int s = f(mid).sign();
        if (s == 0) return mid;
        if (s == slo) lo = mid;
        else hi = mid;
    }
    return (lo + hi) / 2L;
}

Constants compute_constants(const Precision& prec) {
    const mpfr_prec_t bits = prec.bits();
    const HPFloat p = pi(bits);
    const HPFloat p2 = p * p;
    Constants c{HPFloat(bits), Rational(1), HPFloat(bits), HPFloat(bits), HPFloat(bits), HPFloat(bits), HPFloat(bits)};
    c.alpha = p2 * 2L / 3L - 4L;
    c.a1 = (sqrt(HPFloat(205L, bits)) * 3L + 40L) / 105L;
    c.a2 = (45L - p2 * 4L + sqrt(p2 * p2 * 4L - p2 * 80L + 405L) * 3L) / ((p2 - 9L) * 30L);
    c.a3 = solve_a3(prec);
    auto dm = maximize_delta(prec);
    c.alzer_max = dm.value;
    c.alzer_argmax = dm.location;
    return c;
}

bool matches_printed(const HPFloat& value, const std::string& prefix) {
    const auto dot = prefix.find('.');
    const int frac = dot == std::string::npos ? 0 : static_cast<int>(prefix.size() - dot - 1);
    const Rational printed = Rational::parse(prefix);
    const Rational truncated = Rational::parse(to_rational(value).decimal(frac));
    Rational ulp(1);
    for (int i = 0; i < frac; ++i) ulp /= Rational(10);
    return abs(truncated - printed) <= ulp;
}

}  // namespace betaproof::special

#include "betaproof/hp_eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace betaproof {

HPFloat eval(const Poly& p, const HPFloat& x) {
    HPFloat acc(x.bits());
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += HPFloat(*it, x.bits());
    }
    return acc;
}

HPFloat eval(const BiPoly& p, const HPFloat& x, const HPFloat& y) {
    const mpfr_prec_t bits = std::max(x.bits(), y.bits());
    HPFloat acc(bits);
    for (int k = p.degree_y(); k >= 0; --k) {
        acc *= y;
        acc += eval(p.coeff_of_y(static_cast<unsigned>(k)), x);
    }
    return acc;
}

HPFloat eval(const RationalFn& f, const HPFloat& x, const HPFloat& y) {
    HPFloat d = eval(f.den(), x, y);
    if (d.sign() == 0) throw std::domain_error("RationalFn: denominator vanishes");
    return eval(f.num(), x, y) / d;
}

HPFloat error_budget(const Precision& prec) { return pow10(-(prec.digits - 20), prec.bits()); }

}  // namespace betaproof

#include "betaproof/rational_fn.hpp"

#include <stdexcept>

namespace betaproof {

RationalFn::RationalFn(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator polynomial");
}

Rational RationalFn::eval(const Rational& x, const Rational& y) const {
    const Rational d = den_.eval(x, y);
    if (d.is_zero()) throw std::domain_error("RationalFn::eval: denominator vanishes");
    return num_.eval(x, y) / d;
}

RationalFn RationalFn::partial_x() const {
    return {num_.partial_x() * den_ - num_ * den_.partial_x(), den_ * den_};
}

RationalFn RationalFn::partial_y() const {
    return {num_.partial_y() * den_ - num_ * den_.partial_y(), den_ * den_};
}

RationalFn RationalFn::compose(const BiPoly& sx, const BiPoly& sy) const {
    return {num_.compose(sx, sy), den_.compose(sx, sy)};
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.num_.is_zero()) throw std::domain_error("RationalFn: division by the zero function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFn operator-(const RationalFn& a) { return {-a.num_, a.den_}; }

BiPoly cross_difference(const RationalFn& f, const RationalFn& g) {
    return f.num() * g.den() - g.num() * f.den();
}

bool equivalent(const RationalFn& f, const RationalFn& g) { return cross_difference(f, g).is_zero(); }

}  // namespace betaproof

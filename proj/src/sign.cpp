#include "betaproof/sign.hpp"

namespace betaproof::sign {

std::string to_string(SignKind kind) {
    switch (kind) {
        case SignKind::PN: return "PN";
        case SignKind::NP: return "NP";
        case SignKind::AllNonneg: return "AllNonneg";
        case SignKind::AllNonpos: return "AllNonpos";
        case SignKind::Other: return "Other";
    }
    return "Other";
}

SignPattern classify(const Poly& p) {
    if (p.is_zero()) throw SignError("degenerate input");
    int previous = 0;
    int changes = 0;
    int first = 0;
    unsigned last_of_leading_block = 0;
    const auto& c = p.coeffs();
    for (unsigned k = 0; k < c.size(); ++k) {
        const int s = c[k].sign();
        if (s == 0) continue;
        if (first == 0) first = s;
        if (previous != 0 && s != previous) ++changes;
        if (changes == 0) last_of_leading_block = k;
        previous = s;
    }
    if (changes == 0) return {first > 0 ? SignKind::AllNonneg : SignKind::AllNonpos, std::nullopt};
    if (changes > 1) return {SignKind::Other, std::nullopt};
    return {first > 0 ? SignKind::PN : SignKind::NP, last_of_leading_block};
}

namespace {

void require_kind(const Poly& p, SignKind kind) {
    if (classify(p).kind != kind) throw SignError("criterion inapplicable");
}

// Certifies sign `want` of p at `point`; a zero value is a boundary root and
// never certifies.
SignReport certify(const Poly& p, const Rational& point, int want) {
    if (point.sign() <= 0) throw std::invalid_argument("sign certificate point must be positive");
    SignReport r;
    r.pattern = classify(p);
    const Rational v = p.eval(point);
    r.certificate = Certificate{point, v};
    r.boundary_root = v.is_zero();
    r.certified = v.sign() == want;
    return r;
}

}  // namespace

SignReport positive_below(const Poly& p, const Rational& x1) {
    require_kind(p, SignKind::PN);
    return certify(p, x1, +1);
}

SignReport negative_above(const Poly& p, const Rational& x2) {
    require_kind(p, SignKind::PN);
    return certify(p, x2, -1);
}

SignReport negative_below(const Poly& p, const Rational& x1) {
    require_kind(p, SignKind::NP);
    return certify(p, x1, -1);
}

SignReport positive_above(const Poly& p, const Rational& x2) {
    require_kind(p, SignKind::NP);
    return certify(p, x2, +1);
}

Interval isolate_crossing(const Poly& p, const Rational& lo, const Rational& hi, const Rational& width) {
    const auto kind = classify(p).kind;
    if (kind != SignKind::PN && kind != SignKind::NP) throw SignError("criterion inapplicable");
    if (width.sign() <= 0) throw std::invalid_argument("isolate_crossing: width must be positive");
    if (lo.sign() < 0 || !(lo < hi)) throw std::invalid_argument("isolate_crossing: need 0 <= lo < hi");

    Rational a = lo;
    Rational b = hi;
    const int sa = p.eval(a).sign();
    const int sb = p.eval(b).sign();
    if (sa * sb >= 0) throw SignError("no bracket");

    while (b - a > width) {
        const Rational m = midpoint(a, b);
        const int sm = p.eval(m).sign();
        if (sm == 0) {
            // Exact root hit. The crossing is unique, so any interval around m
            // inside (a, b) has strictly opposite endpoint signs.
            Rational half = width / Rational(2);
            if (half > m - a) half = (m - a) / Rational(2);
            if (half > b - m) half = (b - m) / Rational(2);
            return {m - half, m + half};
        }
        if (sm == sa) a = m;
        else b = m;
    }
    return {a, b};
}

std::vector<Interval> root_enclosures(std::span<const Poly> polys, const Rational& lo, const Rational& hi,
                                      const Rational& width) {
    std::vector<Interval> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        if (classify(p).kind != SignKind::NP) throw SignError("criterion inapplicable");
        out.push_back(isolate_crossing(p, lo, hi, width));
    }
    return out;
}

bool verify_root_ordering(std::span<const Poly> polys, const Rational& lo, const Rational& hi, const Rational& width) {
    const auto enc = root_enclosures(polys, lo, hi, width);
    bool increasing = true;
    for (std::size_t i = 1; i < enc.size(); ++i) {
        const bool disjoint = enc[i - 1].hi < enc[i].lo || enc[i].hi < enc[i - 1].lo;
        if (!disjoint) throw SignError("refine width");
        if (!(enc[i - 1].hi < enc[i].lo)) increasing = false;
    }
    return increasing;
}

bool matches_prefix(const Interval& enclosure, const std::string& prefix) {
    const auto dot = prefix.find('.');
    const int frac = dot == std::string::npos ? 0 : static_cast<int>(prefix.size() - dot - 1);
    const Rational printed = Rational::parse(prefix);
    return Rational::parse(enclosure.lo.decimal(frac)) == printed && Rational::parse(enclosure.hi.decimal(frac)) == printed;
}

PrefixStatus prefix_status(const Interval& enclosure, const std::string& prefix) {
    if (matches_prefix(enclosure, prefix)) return PrefixStatus::Inside;
    const auto dot = prefix.find('.');
    const int frac = dot == std::string::npos ? 0 : static_cast<int>(prefix.size() - dot - 1);
    Rational ulp(1);
    for (int i = 0; i < frac; ++i) ulp /= Rational(10);
    const Rational printed = Rational::parse(prefix);
    // truncation toward zero: negative prefixes cover (p - ulp, p]
    const Rational lo = printed.sign() < 0 ? printed - ulp : printed;
    const Rational hi = printed.sign() < 0 ? printed : printed + ulp;
    const bool disjoint = !(enclosure.lo < hi) || !(lo <= enclosure.hi);
    return disjoint ? PrefixStatus::Outside : PrefixStatus::Unresolved;
}

bool positive_on_interval(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero() || !(lo < hi)) return false;
    if (p.eval(lo).sign() <= 0 || p.eval(hi).sign() <= 0) return false;
    const auto n = static_cast<unsigned>(p.degree());
    // sum_k c_k (lo + hi t)^k (1 + t)^(n-k)
    const Poly numer{lo, hi};
    const Poly denom{Rational(1), Rational(1)};
    Poly transformed;
    for (unsigned k = 0; k <= n; ++k) transformed += p.coeff(k) * pow(numer, k) * pow(denom, n - k);
    for (const auto& c : transformed.coeffs())
        if (c.sign() < 0) return false;
    return true;
}

}  // namespace betaproof::sign

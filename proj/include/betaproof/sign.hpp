#pragma once

#include "betaproof/poly.hpp"
#include "betaproof/rational.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace betaproof::sign {

/// Raised when a criterion's preconditions fail. what() is one of
/// "degenerate input", "criterion inapplicable", "no bracket", "refine width".
class SignError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SignKind { PN, NP, AllNonneg, AllNonpos, Other };

std::string to_string(SignKind kind);

/// Coefficient sign pattern. For PN/NP, split_index is the index of the last
/// nonzero coefficient of the leading-sign block.
struct SignPattern {
    SignKind kind = SignKind::Other;
    std::optional<unsigned> split_index;

    friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

struct Interval {
    Rational lo;
    Rational hi;

    [[nodiscard]] Rational width() const { return hi - lo; }
    [[nodiscard]] bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

struct Certificate {
    Rational point;
    Rational value;  // exact evaluation at point
};

struct SignReport {
    SignPattern pattern;
    std::optional<Interval> crossing;
    std::optional<Certificate> certificate;
    bool certified = false;
    /// The polynomial vanishes exactly at the certificate point.
    bool boundary_root = false;
};

inline const Rational kDefaultWidth{1, 1000000};

/// Throws SignError("degenerate input") for the zero polynomial.
SignPattern classify(const Poly& p);

/// PN polynomial with p(x1) > 0 is positive on (0, x1]. Throws
/// SignError("criterion inapplicable") unless p is PN.
SignReport positive_below(const Poly& p, const Rational& x1);
/// PN polynomial with p(x2) < 0 is negative on [x2, inf).
SignReport negative_above(const Poly& p, const Rational& x2);
/// NP polynomial with p(x1) < 0 is negative on (0, x1].
SignReport negative_below(const Poly& p, const Rational& x1);
/// NP polynomial with p(x2) > 0 is positive on [x2, inf).
SignReport positive_above(const Poly& p, const Rational& x2);

/// Bisection on exact signs until hi - lo <= width. Requires a PN or NP
/// polynomial, 0 <= lo < hi and p(lo) * p(hi) < 0.
Interval isolate_crossing(const Poly& p, const Rational& lo, const Rational& hi, const Rational& width = kDefaultWidth);

/// Enclosures of the crossing roots of NP polynomials, in input order.
std::vector<Interval> root_enclosures(std::span<const Poly> polys, const Rational& lo, const Rational& hi,
                                      const Rational& width = kDefaultWidth);

/// True iff the crossing roots are strictly increasing in input order, with
/// pairwise-disjoint enclosures. Throws SignError("refine width") when two
/// neighbouring enclosures overlap.
bool verify_root_ordering(std::span<const Poly> polys, const Rational& lo, const Rational& hi,
                          const Rational& width = kDefaultWidth);

/// True iff every point of the enclosure truncates to the printed decimal
/// prefix, i.e. the enclosure lies inside [prefix, prefix + one unit in the
/// last printed digit).
bool matches_prefix(const Interval& enclosure, const std::string& prefix);

enum class PrefixStatus { Inside, Outside, Unresolved };

/// Inside: as matches_prefix. Outside: the enclosure misses [prefix, prefix +
/// ulp) entirely, so the printed digits are wrong. Unresolved: the enclosure
/// is too wide to decide.
PrefixStatus prefix_status(const Interval& enclosure, const std::string& prefix);

/// Sufficient test for p > 0 on [lo, hi]: after the substitution
/// x = (lo + hi t) / (1 + t) and clearing denominators, every coefficient in t
/// is nonnegative and both endpoint values are positive.
bool positive_on_interval(const Poly& p, const Rational& lo, const Rational& hi);

}  // namespace betaproof::sign

#pragma once

#include "betaproof/hpfloat.hpp"
#include "betaproof/proof_step.hpp"
#include "betaproof/sign.hpp"

#include <vector>

namespace betaproof::proof {

struct ReplayOptions {
    Precision prec{};
    /// Root enclosure width for the q_j ordering step.
    Rational width = sign::kDefaultWidth;
    /// Spacing of the sampled PN audit of Q(x, .) over (1/5, 1/2].
    Rational audit_step{1, 1000};
    /// Worker threads for replay_all; 1 runs everything inline.
    unsigned threads = 1;
};

/// Prerequisites: the Yang closed forms and sandwich, the p_k certificates and
/// the q_j root ordering.
std::vector<ProofStep> replay_lemmas(const ReplayOptions& opts = {});
/// Positivity of f on (0, (sqrt 3 + 1)/2): identity, numerator, spot values.
std::vector<ProofStep> replay_lemma23(const ReplayOptions& opts = {});
/// 1/5 <= x <= 1/2: dF/dy > 0 through Q(x, y).
std::vector<ProofStep> replay_case1(const ReplayOptions& opts = {});
/// 0 < x < 1/5: G > 0 on the trapezoid, then the boundary of the trapezoid.
std::vector<ProofStep> replay_case2(const ReplayOptions& opts = {});
/// All of the above plus a coarse grid audit of the theorem, in a fixed order.
std::vector<ProofStep> replay_all(const ReplayOptions& opts = {});

}  // namespace betaproof::proof

#include "betaproof/proof_step.hpp"

#include "betaproof/hp_eval.hpp"
#include "betaproof/special.hpp"

namespace betaproof::proof {

std::string to_string(Method m) {
    switch (m) {
        case Method::ExactPolynomial: return "exact-polynomial";
        case Method::ExactIdentity: return "exact-identity";
        case Method::HighPrecision: return "high-precision";
        case Method::SignEngine: return "sign-engine";
    }
    return "exact-identity";
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Verified: return "verified";
        case Status::Failed: return "failed";
        case Status::Inconclusive: return "inconclusive";
    }
    return "failed";
}

std::string decimal(const HPFloat& v, int digits) { return v.str(digits); }

nlohmann::json to_json(const ProofStep& step) {
    nlohmann::json j;
    j["id"] = step.id;
    j["claim"] = step.claim;
    j["method"] = to_string(step.method);
    j["status"] = to_string(step.status);
    j["evidence"] = step.evidence;
    if (!step.depends_on.empty()) j["depends_on"] = step.depends_on;
    if (!step.diagnostic.empty()) j["diagnostic"] = step.diagnostic;
    return j;
}

StepBuilder::StepBuilder(std::string id, std::string claim, Method method, Precision prec) : prec_(prec) {
    step_.id = std::move(id);
    step_.claim = std::move(claim);
    step_.method = method;
}

StepBuilder& StepBuilder::depends(std::string id) {
    step_.depends_on.push_back(std::move(id));
    return *this;
}

void StepBuilder::fail(const std::string& why) {
    failed_ = true;
    reasons_.push_back(why);
}

void StepBuilder::weak(const std::string& why) {
    weak_ = true;
    reasons_.push_back(why);
}

StepBuilder& StepBuilder::exact(const std::string& key, bool holds, const std::string& detail) {
    if (detail.empty()) step_.evidence[key] = holds;
    else step_.evidence[key] = {{"holds", holds}, {"detail", detail}};
    if (!holds) fail(key + " does not hold");
    return *this;
}

StepBuilder& StepBuilder::positive(const std::string& key, const HPFloat& margin) {
    step_.evidence[key] = decimal(margin);
    const HPFloat threshold = error_budget(prec_) * 10L;
    if (!(margin > 0L)) fail(key + " is not positive");
    else if (!(margin > threshold)) weak(key + " is within 10x the error budget");
    return *this;
}

StepBuilder& StepBuilder::vanishes(const std::string& key, const HPFloat& value) {
    step_.evidence[key] = decimal(value);
    if (!(abs(value) <= error_budget(prec_))) fail(key + " exceeds the error budget");
    return *this;
}

StepBuilder& StepBuilder::printed(const std::string& key, const HPFloat& value, const std::string& prefix) {
    const bool ok = special::matches_printed(value, prefix);
    step_.evidence[key] = {{"computed", decimal(value, 15)}, {"printed", prefix}, {"matches", ok}};
    if (!ok) fail(key + " disagrees with printed " + prefix);
    return *this;
}

StepBuilder& StepBuilder::note(const std::string& key, nlohmann::json value) {
    step_.evidence[key] = std::move(value);
    return *this;
}

ProofStep StepBuilder::build() const {
    ProofStep out = step_;
    out.status = failed_ ? Status::Failed : weak_ ? Status::Inconclusive : Status::Verified;
    for (const auto& r : reasons_) out.diagnostic += (out.diagnostic.empty() ? "" : "; ") + r;
    return out;
}

ReplaySummary summarize(const std::vector<ProofStep>& steps) {
    ReplaySummary s;
    for (const auto& step : steps) {
        switch (step.status) {
            case Status::Verified: ++s.verified; break;
            case Status::Failed: ++s.failed; break;
            case Status::Inconclusive: ++s.inconclusive; break;
        }
    }
    return s;
}

nlohmann::json report_json(const std::vector<ProofStep>& steps) {
    nlohmann::json j;
    j["steps"] = nlohmann::json::array();
    for (const auto& s : steps) j["steps"].push_back(to_json(s));
    const auto sum = summarize(steps);
    j["summary"] = {{"total", sum.total()},
                    {"verified", sum.verified},
                    {"failed", sum.failed},
                    {"inconclusive", sum.inconclusive}};
    return j;
}

}  // namespace betaproof::proof

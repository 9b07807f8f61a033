#pragma once

#include "betaproof/hpfloat.hpp"
#include "betaproof/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace betaproof::proof {

enum class Method { ExactPolynomial, ExactIdentity, HighPrecision, SignEngine };
enum class Status { Verified, Failed, Inconclusive };

std::string to_string(Method m);
std::string to_string(Status s);

/// One checkable claim of the replayed argument.
struct ProofStep {
    std::string id;
    std::string claim;
    Method method = Method::ExactIdentity;
    Status status = Status::Failed;
    nlohmann::json evidence = nlohmann::json::object();
    std::vector<std::string> depends_on;
    std::string diagnostic;  // empty unless the step did not verify
};

nlohmann::json to_json(const ProofStep& step);

/// Accumulates checks for a single step. Exact checks either pass or fail;
/// high-precision margins verify only above 10x the error budget.
class StepBuilder {
public:
    StepBuilder(std::string id, std::string claim, Method method, Precision prec = {});

    StepBuilder& depends(std::string id);
    /// Records an exact fact; a false value fails the step.
    StepBuilder& exact(const std::string& key, bool holds, const std::string& detail = {});
    /// Records margin > 0; verified only if margin > 10 * budget.
    StepBuilder& positive(const std::string& key, const HPFloat& margin);
    /// Records value == 0 up to the error budget.
    StepBuilder& vanishes(const std::string& key, const HPFloat& value);
    /// Records a value against its printed decimal prefix.
    StepBuilder& printed(const std::string& key, const HPFloat& value, const std::string& prefix);
    StepBuilder& note(const std::string& key, nlohmann::json value);

    [[nodiscard]] ProofStep build() const;

private:
    void fail(const std::string& why);
    void weak(const std::string& why);

    ProofStep step_;
    Precision prec_;
    bool failed_ = false;
    bool weak_ = false;
    std::vector<std::string> reasons_;
};

struct ReplaySummary {
    std::size_t verified = 0;
    std::size_t failed = 0;
    std::size_t inconclusive = 0;
    [[nodiscard]] std::size_t total() const { return verified + failed + inconclusive; }
};

ReplaySummary summarize(const std::vector<ProofStep>& steps);

/// {"steps": [...], "summary": {...}}. Contains no timestamps, so identical
/// inputs serialize to identical bytes.
nlohmann::json report_json(const std::vector<ProofStep>& steps);

/// Decimal text of an HPFloat for evidence fields.
std::string decimal(const HPFloat& v, int digits = 25);

}  // namespace betaproof::proof

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "regula/caps.hpp"

namespace regula {

enum class CheckStatus { pass, fail, out_of_scope, flagged };

std::string to_string(CheckStatus status);

/// Outcome of one registry claim (or one generated sub-check of it).
struct ClaimCheck {
    std::string id;
    std::string statement;
    nlohmann::json inputs;
    nlohmann::json expected;
    nlohmann::json computed;
    nlohmann::json details;  // bound values, extras, per-pair tallies
    CheckStatus status = CheckStatus::pass;
    std::string reason;  // set for out_of_scope and flagged rows
};

struct ReportSummary {
    std::size_t pass = 0, fail = 0, out_of_scope = 0, flagged = 0;
    std::size_t total() const { return pass + fail + out_of_scope + flagged; }
};

struct VerificationReport {
    std::string suite;
    std::string corpus;
    std::string tool_version;
    Caps caps;
    std::vector<ClaimCheck> checks;  // ordered by id
    std::vector<std::string> notes;

    ReportSummary summary() const;
    bool ok() const { return summary().fail == 0; }
};

/// The embedded registry document (data/claims.json).
const nlohmann::json& claim_registry();

std::vector<std::string> suite_names();

/// Runs every registry claim of the suite. Throws UnknownName for an unknown suite.
VerificationReport run_suite(const std::string& name, const Caps& caps = default_caps());

nlohmann::json to_json(const VerificationReport& report);
/// Header line plus one line per check.
std::string to_csv(const VerificationReport& report);

}  // namespace regula

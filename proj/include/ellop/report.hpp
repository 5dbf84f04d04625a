#pragma once

#include <map>
#include <string>
#include <vector>

namespace ellop {

struct CheckResult {
    std::string name;
    bool verdict = false;
    std::string witness;   // concrete failure data; empty on pass
    std::string artifact;  // serialized proof object; may be empty
};

// One verified subject. Every verdict carries either an artifact (the object
// that passed, serialized) or a witness for the failure.
struct VerificationReport {
    std::string subject;
    std::string curve;
    std::map<std::string, std::string> conventions;  // ordered, deterministic
    std::vector<CheckResult> checks;

    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.verdict) return false;
        return true;
    }
    void add(std::string name, bool verdict, std::string witness = "",
             std::string artifact = "") {
        checks.push_back({std::move(name), verdict, std::move(witness), std::move(artifact)});
    }
};

// Rendering lives in report.cpp (JSON via nlohmann, plain text for humans).
std::string render_text(const std::vector<VerificationReport>& reports);
std::string render_json(const std::vector<VerificationReport>& reports, bool with_timings,
                        const std::map<std::string, double>& timings = {});

// Conventions stamped on every report that depends on them.
std::map<std::string, std::string> standard_conventions();

}  // namespace ellop

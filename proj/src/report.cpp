#include "ellop/report.hpp"

#include <sstream>

#include "json.hpp"

namespace ellop {

std::string render_text(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    for (const auto& rep : reports) {
        os << "== " << rep.subject << "\n";
        os << "   curve: " << rep.curve << "\n";
        for (const auto& c : rep.checks) {
            os << "   [" << (c.verdict ? "PASS" : "FAIL") << "] " << c.name;
            if (!c.verdict && !c.witness.empty()) os << "\n          witness: " << c.witness;
            if (c.verdict && !c.artifact.empty()) os << "\n          artifact: " << c.artifact;
            os << "\n";
        }
    }
    std::size_t bad = 0, total = 0;
    for (const auto& rep : reports)
        for (const auto& c : rep.checks) {
            ++total;
            if (!c.verdict) ++bad;
        }
    os << "-- " << (total - bad) << "/" << total << " checks passed\n";
    return os.str();
}

std::string render_json(const std::vector<VerificationReport>& reports, bool with_timings,
                        const std::map<std::string, double>& timings) {
    nlohmann::ordered_json root;
    root["schema"] = "ellop-report/1";
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& rep : reports) {
        nlohmann::ordered_json jr;
        jr["subject"] = rep.subject;
        jr["curve"] = rep.curve;
        nlohmann::ordered_json conv;
        for (const auto& [k, v] : rep.conventions) conv[k] = v;
        jr["conventions"] = conv;
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : rep.checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["verdict"] = c.verdict;
            if (!c.witness.empty()) jc["witness"] = c.witness;
            if (!c.artifact.empty()) jc["artifact"] = c.artifact;
            checks.push_back(jc);
        }
        jr["checks"] = checks;
        list.push_back(jr);
    }
    root["reports"] = list;
    bool ok = true;
    for (const auto& rep : reports) ok = ok && rep.all_ok();
    root["all_ok"] = ok;
    if (with_timings) {
        nlohmann::ordered_json jt;
        for (const auto& [k, v] : timings) jt[k] = v;
        root["timings"] = jt;
    }
    return root.dump(2) + "\n";
}

}  // namespace ellop

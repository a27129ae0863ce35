#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ybnet/checks.hpp"
#include "ybnet/limits.hpp"
#include "ybnet/version.hpp"

namespace ybnet {

using json = nlohmann::json;

inline json to_json(const cplx& c) { return json::array({c.real(), c.imag()}); }

inline json to_json(const CheckReport& r) {
    json j;
    j["check"] = r.check_id;
    j["subject"] = r.subject;
    j["tag"] = r.tag;
    j["residual"] = r.residual;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    j["gated"] = r.gated;
    if (!r.details.empty()) j["details"] = r.details;
    if (!r.point.empty()) {
        json pt;
        for (const auto& [k, v] : r.point) pt[k] = to_json(v);
        j["point"] = pt;
    }
    return j;
}

inline json to_json(const ConvergenceReport& r) {
    json j;
    j["check"] = "limit";
    j["subject"] = r.edge;
    j["samples"] = json::array();
    for (const auto& [e, err] : r.samples) j["samples"].push_back(json::array({e, err}));
    j["estimated_order"] = r.estimated_order;
    j["extrapolated"] = r.extrapolated;
    j["monotone"] = r.monotone;
    j["degenerate_order"] = r.degenerate_order;
    j["pass"] = r.pass;
    if (!r.details.empty()) j["details"] = r.details;
    return j;
}

struct RunReport {
    json config;
    std::vector<json> results;
    int pass = 0, fail = 0, info = 0;

    void add(const CheckReport& r) {
        results.push_back(to_json(r));
        if (!r.gated) ++info;
        else if (r.pass) ++pass;
        else ++fail;
    }
    void add(const ConvergenceReport& r) {
        results.push_back(to_json(r));
        if (r.pass) ++pass;
        else ++fail;
    }
    /// checks whose expected outcome is failure (negative controls)
    void add_inverted(CheckReport r, double must_exceed) {
        r.details += (r.details.empty() ? "" : "; ") + std::string("expected residual > ") +
                     std::to_string(must_exceed);
        const bool ok = r.residual > must_exceed;
        r.pass = ok;
        r.tol = must_exceed;
        results.push_back(to_json(r));
        if (ok) ++pass;
        else ++fail;
    }

    json payload(const ShiftConvention& conv) const {
        json j;
        j["schema_version"] = 1;
        j["tool"] = {{"name", "ybnet"}, {"version", YBNET_VERSION}};
        j["config"] = config;
        j["conventions"] = {{"delta", conv.delta},
                            {"delta_finite", conv.delta_finite},
                            {"theta", "(z;p)(p/z;p)(p;p)"}};
        j["results"] = results;
        j["summary"] = {{"pass", pass}, {"fail", fail}, {"informational", info}};
        return j;
    }
};

inline std::string render_markdown(const json& payload) {
    std::string out = "# verification report\n\n";
    out += "summary: pass " + payload["summary"]["pass"].dump() + ", fail " +
           payload["summary"]["fail"].dump() + ", informational " +
           payload["summary"]["informational"].dump() + "\n\n";
    out += "| check | subject | residual | tol | status |\n|---|---|---|---|---|\n";
    for (const auto& r : payload["results"]) {
        std::string status = r.value("gated", true) ? (r["pass"].get<bool>() ? "pass" : "FAIL")
                                                    : "info";
        const double resid = r.contains("residual") ? r["residual"].get<double>()
                                                    : r["extrapolated"].get<double>();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", resid);
        out += "| " + r["check"].get<std::string>() + " | " + r["subject"].get<std::string>() +
               " | " + buf + " | " + (r.contains("tol") ? r["tol"].dump() : "-") + " | " + status +
               " |\n";
    }
    return out;
}

}  // namespace ybnet

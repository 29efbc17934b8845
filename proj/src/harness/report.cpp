#include "incpoly/harness/report.hpp"

#include <algorithm>

namespace incpoly::harness {

std::string artifact_version() { return INCPOLY_VERSION; }

bool within_tolerance(double margin, double tolerance) { return margin >= -tolerance; }

bool VerificationReport::all_hold() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.holds; });
}

Json to_json(const VerificationReport& r, bool timing)
{
    Json j = Json::object();
    j["version"] = r.version;
    j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
    j["holds"] = r.all_hold();
    Json checks = Json::array();
    for (const CheckResult& c : r.checks) {
        Json e = Json::object();
        e["id"] = c.id;
        e["holds"] = c.holds;
        e["margin"] = number_json(c.margin);
        e["tolerance"] = number_json(c.tolerance);
        if (timing)
            e["runtime_s"] = c.runtime_s;
        if (!c.detail.empty())
            e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["instance"] = r.instance ? to_json(*r.instance) : Json(nullptr);
    return j;
}

VerificationReport report_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("checks") || !j["checks"].is_array())
        throw ParseError("report: expected an object with a 'checks' array");
    VerificationReport r;
    if (j.contains("version") && j["version"].is_string())
        r.version = j["version"].get<std::string>();
    if (j.contains("seed") && !j["seed"].is_null()) {
        if (!j["seed"].is_number_unsigned())
            throw ParseError("report: 'seed' must be an unsigned integer");
        r.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("instance") && !j["instance"].is_null())
        r.instance = instance_from_json(j["instance"]);
    for (const Json& e : j["checks"]) {
        if (!e.is_object() || !e.contains("id") || !e["id"].is_string() || !e.contains("holds") || !e["holds"].is_boolean())
            throw ParseError("report: each check needs string 'id' and boolean 'holds'");
        CheckResult c;
        c.id = e["id"].get<std::string>();
        c.holds = e["holds"].get<bool>();
        c.margin = number_from_json(e.value("margin", Json(0.0)), "report: margin");
        c.tolerance = number_from_json(e.value("tolerance", Json(0.0)), "report: tolerance");
        if (e.contains("runtime_s"))
            c.runtime_s = number_from_json(e["runtime_s"], "report: runtime_s");
        if (e.contains("detail") && e["detail"].is_string())
            c.detail = e["detail"].get<std::string>();
        r.checks.push_back(std::move(c));
    }
    return r;
}

VerificationReport recheck(VerificationReport r)
{
    for (CheckResult& c : r.checks)
        c.holds = c.holds && within_tolerance(c.margin, c.tolerance);
    return r;
}

} // namespace incpoly::harness

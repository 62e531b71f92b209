#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace trinomia {

using Json = nlohmann::json;

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "inconclusive";
    }
}

// One verified fact. Exact values go into `values` as decimal strings;
// doubles are allowed only under keys ending in "_float".
struct CheckRecord {
    std::string name;
    Json params = Json::object();
    Verdict verdict = Verdict::Pass;
    Json values = Json::object();
    Json witness;  // null unless a failure carries one
};

struct Report {
    std::string suite;
    std::vector<CheckRecord> checks;
    long long wall_ms = 0;

    std::size_t count(Verdict v) const {
        std::size_t k = 0;
        for (const auto& c : checks)
            if (c.verdict == v) ++k;
        return k;
    }
    bool all_pass() const { return count(Verdict::Pass) == checks.size(); }
    int exit_code() const { return all_pass() ? 0 : 1; }
};

inline Json to_json(const CheckRecord& c) {
    Json j{{"name", c.name}, {"params", c.params}, {"verdict", verdict_str(c.verdict)},
           {"values", c.values}};
    if (!c.witness.is_null()) j["witness"] = c.witness;
    return j;
}

inline Json to_json(const Report& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return Json{{"suite", r.suite},
                {"checks", checks},
                {"summary",
                 {{"total", r.checks.size()},
                  {"pass", r.count(Verdict::Pass)},
                  {"fail", r.count(Verdict::Fail)},
                  {"inconclusive", r.count(Verdict::Inconclusive)}}},
                {"wall_ms", r.wall_ms}};
}

// Several suites rolled into one report; exit semantics unchanged.
inline Report merge_reports(const std::string& name, const std::vector<Report>& parts) {
    Report all;
    all.suite = name;
    for (const Report& p : parts) {
        for (const CheckRecord& c : p.checks) {
            CheckRecord copy = c;
            copy.name = p.suite + "/" + c.name;
            all.checks.push_back(std::move(copy));
        }
        all.wall_ms += p.wall_ms;
    }
    return all;
}

}  // namespace trinomia

#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "radii/json_out.hpp"
#include "radii/tolerances.hpp"

namespace radii {

inline constexpr const char* report_schema = "radii-report/1";

/// One verified inequality instance; `artifacts` embeds everything needed to
/// recompute lhs/rhs from scratch.
struct InstanceReport {
    std::int64_t instance_id = 0;
    std::uint64_t seed = 0;
    std::string theorem_tag;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    bool pass = false;
    bool equality_flag = false;
    jsonv artifacts;

    void finish() {
        slack = rhs - lhs;
        pass = slack >= -eps_feas;
        equality_flag = std::fabs(slack) <= eps_eq;
    }
};

inline jsonv to_json(const InstanceReport& r) {
    jsonv j;
    j["schema"] = report_schema;
    j["theorem_tag"] = r.theorem_tag;
    j["instance_id"] = r.instance_id;
    j["seed"] = r.seed;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    if (std::fabs(r.lhs) > 1e-12)
        j["ratio"] = r.rhs / r.lhs;
    else
        j["ratio"] = nullptr;
    j["pass"] = r.pass;
    j["equality_flag"] = r.equality_flag;
    j["artifacts"] = r.artifacts;
    return j;
}

inline InstanceReport instance_report_from_json(const jsonv& j) {
    InstanceReport r;
    r.instance_id = j.at("instance_id").get<std::int64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.theorem_tag = j.at("theorem_tag").get<std::string>();
    r.lhs = j.at("lhs").get<double>();
    r.rhs = j.at("rhs").get<double>();
    r.slack = j.at("slack").get<double>();
    r.pass = j.at("pass").get<bool>();
    r.equality_flag = j.at("equality_flag").get<bool>();
    r.artifacts = j.at("artifacts");
    return r;
}

/// Aggregate record of a conjecture exploration run.
struct ConjectureReport {
    std::string conjecture_tag;  // "lp_superadditivity" | "n_plus_one_sets"
    jsonv params;
    int trials = 0;
    double min_observed_slack = 0.0;
    std::int64_t argmin_instance = -1;
    jsonv violations = jsonv::array();           // re-checkable instances, expected empty
    jsonv extremal_candidates = jsonv::array();  // smallest-slack instances
    jsonv candidate_evaluations = jsonv::array();
    std::string notes;
};

inline jsonv to_json(const ConjectureReport& r) {
    jsonv j;
    j["schema"] = report_schema;
    j["conjecture_tag"] = r.conjecture_tag;
    j["params"] = r.params;
    j["trials"] = r.trials;
    j["min_observed_slack"] = r.min_observed_slack;
    j["argmin_instance"] = r.argmin_instance;
    j["violations"] = r.violations;
    j["extremal_candidates"] = r.extremal_candidates;
    j["candidate_evaluations"] = r.candidate_evaluations;
    j["notes"] = r.notes;
    return j;
}

}  // namespace radii

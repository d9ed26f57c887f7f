#include "gtj/format.hpp"

namespace gtj {

namespace {

std::string side_string(const GaussianRational& x) {
    return to_string(x.re) + "," + to_string(x.im);
}

Json counterexample_json(const std::optional<Counterexample>& cx) {
    if (!cx) {
        return nullptr;
    }
    Json j;
    j["indices"] = cx->indices;
    j["lhs"] = side_string(cx->lhs);
    j["rhs"] = side_string(cx->rhs);
    return j;
}

}  // namespace

Json report_to_json(const IdentityReport& rep) {
    Json j;
    j["identity"] = rep.identity;
    j["seed"] = Json::array({to_string(rep.seed.a), to_string(rep.seed.b), to_string(rep.seed.c)});
    j["status"] = rep.holds() ? "holds" : "fails";
    j["counterexample"] = counterexample_json(rep.counterexample);
    return j;
}

Json audit_to_json(const CorollaryAudit& audit) {
    Json j;
    j["entry"] = audit.name;
    j["printed_formula"] = audit.printed_formula;
    j["printed_status"] = audit.printed.holds() ? "holds" : "fails";
    j["printed_counterexample"] = counterexample_json(audit.printed.counterexample);
    j["derived_formula"] = audit.derived_formula;
    j["derived_status"] = audit.derived.holds() ? "holds" : "fails";
    j["derived_counterexample"] = counterexample_json(audit.derived.counterexample);
    return j;
}

}  // namespace gtj

#include "gtj/errata.hpp"

#include "gtj/identities.hpp"
#include "gtj/q_family.hpp"

namespace gtj {

std::vector<CorollaryAudit> errata_audit() {
    std::vector<CorollaryAudit> entries;
    for (Preset p : {Preset::Jg, Preset::Kg}) {
        for (auto& audit : audit_preset_corollaries(p)) {
            entries.push_back(std::move(audit));
        }
    }
    entries.push_back(audit_xi_coefficient());
    entries.push_back(audit_qstep_companion());
    return entries;
}

}  // namespace gtj

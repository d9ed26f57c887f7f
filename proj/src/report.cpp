#include "gtj/report.hpp"

namespace gtj {

IdentityReport sweep_identity(std::string name, const SeedTriple& seed,
                              std::vector<std::string> index_names,
                              std::vector<std::vector<std::int64_t>> tuples,
                              const IdentityEval& eval) {
    IdentityReport rep{std::move(name), seed, std::move(index_names), std::move(tuples),
                       std::nullopt};
    for (const auto& t : rep.indices) {
        auto [lhs, rhs] = eval(t);
        if (!(lhs == rhs)) {
            rep.counterexample = Counterexample{t, std::move(lhs), std::move(rhs)};
            break;
        }
    }
    return rep;
}

}  // namespace gtj

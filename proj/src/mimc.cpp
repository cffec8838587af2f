#include "fiat/mimc.hpp"

#include <vector>

#include "fiat/detail/mimc_params.hpp"

namespace fiat {

namespace {

const std::vector<Fe>& round_constants() {
    static const std::vector<Fe> rc = [] {
        std::vector<Fe> v;
        v.reserve(detail::kMimcRounds);
        for (const char* s : detail::kMimcRoundConstants) v.push_back(Fe::from_decimal(s));
        return v;
    }();
    return rc;
}

Fe pow7(const Fe& x) {
    Fe x2 = x * x;
    Fe x4 = x2 * x2;
    Fe x6 = x4 * x2;
    return x6 * x;
}

}  // namespace

Fe mimc_encrypt(const Fe& key, const Fe& x) {
    Fe acc = x;
    for (const Fe& c : round_constants()) acc = pow7(acc + key + c);
    return acc + key;
}

Fe mimc_prf(const Fe& key, const Fe& index) { return mimc_encrypt(key, index); }

}  // namespace fiat

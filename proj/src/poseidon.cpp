#include "fiat/poseidon.hpp"

#include "fiat/detail/poseidon_params.hpp"

namespace fiat {

namespace {

struct Tables {
    std::vector<Fe> rc;
    std::array<std::array<Fe, 3>, 3> mds;

    Tables() {
        rc.reserve((detail::kPoseidonFullRounds + detail::kPoseidonPartialRounds) * 3);
        for (const char* s : detail::kPoseidonRoundConstants) rc.push_back(Fe::from_decimal(s));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) mds[i][j] = Fe::from_decimal(detail::kPoseidonMds[i][j]);
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

Fe quintic(const Fe& x) {
    Fe x2 = x * x;
    Fe x4 = x2 * x2;
    return x4 * x;
}

}  // namespace

std::array<Fe, 3> poseidon_permute(const std::array<Fe, 3>& state) {
    const Tables& t = tables();
    const int rf = detail::kPoseidonFullRounds;
    const int rp = detail::kPoseidonPartialRounds;
    const int half = rf / 2;
    std::array<Fe, 3> s = state;
    size_t rc_at = 0;
    for (int round = 0; round < rf + rp; ++round) {
        for (int i = 0; i < 3; ++i) s[i] += t.rc[rc_at++];
        if (round < half || round >= half + rp) {
            for (int i = 0; i < 3; ++i) s[i] = quintic(s[i]);
        } else {
            s[0] = quintic(s[0]);
        }
        std::array<Fe, 3> mixed;
        for (int i = 0; i < 3; ++i) {
            mixed[i] = t.mds[i][0] * s[0] + t.mds[i][1] * s[1] + t.mds[i][2] * s[2];
        }
        s = mixed;
    }
    return s;
}

Fe poseidon_hash(const std::vector<Fe>& input) {
    std::array<Fe, 3> state = {Fe::from_u64(input.size()), Fe::zero(), Fe::zero()};
    size_t chunks = input.empty() ? 1 : (input.size() + 1) / 2;
    for (size_t c = 0; c < chunks; ++c) {
        size_t i0 = 2 * c, i1 = 2 * c + 1;
        if (i0 < input.size()) state[1] += input[i0];
        if (i1 < input.size()) state[2] += input[i1];
        state = poseidon_permute(state);
    }
    return state[0];
}

}  // namespace fiat

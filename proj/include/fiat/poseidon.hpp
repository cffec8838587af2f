#pragma once

#include <array>
#include <vector>

#include "fiat/field.hpp"

namespace fiat {

// The x^5 Poseidon permutation over BN254-Fr: width 3, 8 full + 57 partial
// rounds, Grain-generated constants (see tools/oracles/poseidon_ref.py).
std::array<Fe, 3> poseidon_permute(const std::array<Fe, 3>& state);

// Rate-2 sponge with the input length in the capacity slot; the final chunk
// is zero-padded and empty input absorbs a single zero chunk.
Fe poseidon_hash(const std::vector<Fe>& input);

}  // namespace fiat

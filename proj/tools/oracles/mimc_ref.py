#!/usr/bin/env python3
"""Reference MiMC-7 keystream implementation and constant generator.

The cipher is the classic MiMC block cipher over the BN254 scalar field with
the x^7 round function and 91 rounds.  Round constants: c_0 = 0, and
c_i = SHA-256("fiat.mimc.bn254.r<i>") reduced mod p for i = 1..90.

Emits include/fiat/detail/mimc_params.hpp and prints frozen test vectors.
Run from the repository root:  python3 tools/oracles/mimc_ref.py
"""

import hashlib

P = 21888242871839275222246405745257275088548364400416034343698204186575808495617
ROUNDS = 91


def round_constants():
    rc = [0]
    for i in range(1, ROUNDS):
        h = hashlib.sha256(b"fiat.mimc.bn254.r%d" % i).digest()
        rc.append(int.from_bytes(h, "big") % P)
    return rc


RC = round_constants()


def encrypt(key, x):
    for c in RC:
        x = pow((x + key + c) % P, 7, P)
    return (x + key) % P


def emit_header(path):
    lines = []
    lines.append("// MiMC-7 round constants over the BN254 scalar field (91 rounds;")
    lines.append("// c_0 = 0, c_i = SHA-256(\"fiat.mimc.bn254.r<i>\") mod p).  Generated by")
    lines.append("// tools/oracles/mimc_ref.py; do not edit.")
    lines.append("#pragma once")
    lines.append("")
    lines.append("namespace fiat::detail {")
    lines.append("")
    lines.append("inline constexpr int kMimcRounds = %d;" % ROUNDS)
    lines.append("")
    lines.append("inline constexpr const char* kMimcRoundConstants[%d] = {" % ROUNDS)
    for v in RC:
        lines.append('    "%d",' % v)
    lines.append("};")
    lines.append("")
    lines.append("}  // namespace fiat::detail")
    lines.append("")
    with open(path, "w") as f:
        f.write("\n".join(lines))


def main():
    emit_header("include/fiat/detail/mimc_params.hpp")
    print("--- frozen MiMC PRF vectors: prf(key, idx) = Enc_key(idx) ---")
    for key, idx in [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (12345, 678),
                     (P - 1, P - 1)]:
        print("prf(%d, %d) = %d" % (key, idx, encrypt(key, idx)))


if __name__ == "__main__":
    main()

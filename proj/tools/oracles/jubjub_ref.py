#!/usr/bin/env python3
"""Baby Jubjub sanity checks and ECDH reference vectors.

Verifies the curve parameters (EIP-2494) against the group law, and prints
independently computed scalar-multiplication / ECDH vectors for the C++ tests.
Run from the repository root:  python3 tools/oracles/jubjub_ref.py
"""

P = 21888242871839275222246405745257275088548364400416034343698204186575808495617
A = 168700
D = 168696
# Order of the prime-order subgroup (curve order = 8 * L).
L = 2736030358979909402780800718157159386076813972158567259200215660948447373041
# Generator of the prime-order subgroup ("Base8" in EIP-2494).
GX = 5299619240641551281634865583518297030282874472190772894086521144482721001553
GY = 16950150798460657717958625567821834550301663161624707787222815936182638968203


def inv(x):
    return pow(x, P - 2, P)


def on_curve(pt):
    x, y = pt
    return (A * x * x + y * y) % P == (1 + D * x * x * y * y) % P


def add(p1, p2):
    x1, y1 = p1
    x2, y2 = p2
    lam = D * x1 * x2 * y1 * y2 % P
    x3 = (x1 * y2 + y1 * x2) * inv((1 + lam) % P) % P
    y3 = (y1 * y2 - A * x1 * x2) * inv((1 - lam) % P) % P
    return (x3, y3)


def mul(k, pt):
    acc = (0, 1)
    while k:
        if k & 1:
            acc = add(acc, pt)
        pt = add(pt, pt)
        k >>= 1
    return acc


def main():
    g = (GX, GY)
    assert on_curve(g), "generator not on curve"
    assert mul(L, g) == (0, 1), "generator order is not L"
    assert mul(L // 7, g) != (0, 1)
    print("curve parameters verified (on-curve, order L)")

    print("--- frozen scalar-mult vectors ---")
    for k in (1, 2, 3, 0xDEADBEEF, L - 1):
        x, y = mul(k, g)
        print("mul(%d) = (%d, %d)" % (k, x, y))

    print("--- frozen ECDH vector ---")
    ska = 1234567890123456789012345678901234567890 % L
    skb = 9876543210987654321098765432109876543210 % L
    pka = mul(ska, g)
    pkb = mul(skb, g)
    sa = mul(ska, pkb)
    sb = mul(skb, pka)
    assert sa == sb
    print("ska = %d" % ska)
    print("skb = %d" % skb)
    print("pka = (%d, %d)" % pka)
    print("pkb = (%d, %d)" % pkb)
    print("shared.x = %d" % sa[0])


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
# Copyright 2026 The streamsel Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Reference oracle for the bn254 backend.

Computes optimal-ate pairings over alt_bn128 with a deliberately different
representation than the C++ code (polynomial basis Fq12 = Fq[w]/(w^12 - 18w^6 + 82),
affine Miller loop, final exponentiation by the full integer exponent) and
freezes golden vectors into tests/data/pairing_golden.json.

Also prints the Montgomery constants hardcoded in field.cpp, so they can be
re-derived at any time.
"""

import json
import os
import sys

Q = 21888242871839275222246405745257275088696311157297823662689037894645226208583
R = 21888242871839275222246405745257275088548364400416034343698204186575808495617
ATE_LOOP = 29793968203157093288  # 6x+2 for x = 4965661367192848881
LOG_ATE_LOOP = 63

G1 = (1, 2)
G2X = (
    10857046999023057135944570762232829481370756359578518086990519993285655852781,
    11559732032986387107991004021392285783925812861821192530917403151452391805634,
)
G2Y = (
    8495653923123431417604973247489272438418190587263600148770280649306958101930,
    4082367875863433681332203403145435568316851327593401208105741076214120093531,
)


def inv(a, m):
    return pow(a, m - 2, m)


# ---------------------------------------------------------------- Fq2 (for G2)
def f2_add(a, b):
    return ((a[0] + b[0]) % Q, (a[1] + b[1]) % Q)


def f2_sub(a, b):
    return ((a[0] - b[0]) % Q, (a[1] - b[1]) % Q)


def f2_mul(a, b):
    return (
        (a[0] * b[0] - a[1] * b[1]) % Q,
        (a[0] * b[1] + a[1] * b[0]) % Q,
    )


def f2_inv(a):
    n = inv(a[0] * a[0] + a[1] * a[1], Q)
    return ((a[0] * n) % Q, (-a[1] * n) % Q)


B2 = f2_mul((3, 0), f2_inv((9, 1)))  # twist curve coefficient 3/(9+i)


def g2_double(p):
    lam = f2_mul(f2_mul((3, 0), f2_mul(p[0], p[0])), f2_inv(f2_add(p[1], p[1])))
    x = f2_sub(f2_mul(lam, lam), f2_add(p[0], p[0]))
    y = f2_sub(f2_mul(lam, f2_sub(p[0], x)), p[1])
    return (x, y)


def g2_add(p, q):
    if p is None:
        return q
    if q is None:
        return p
    if p[0] == q[0]:
        if p[1] == q[1]:
            return g2_double(p)
        return None
    lam = f2_mul(f2_sub(q[1], p[1]), f2_inv(f2_sub(q[0], p[0])))
    x = f2_sub(f2_sub(f2_mul(lam, lam), p[0]), q[0])
    y = f2_sub(f2_mul(lam, f2_sub(p[0], x)), p[1])
    return (x, y)


def g2_mul(p, k):
    acc = None
    while k:
        if k & 1:
            acc = g2_add(acc, p)
        p = g2_add(p, p)
        k >>= 1
    return acc


def g1_double(p):
    lam = (3 * p[0] * p[0] * inv(2 * p[1], Q)) % Q
    x = (lam * lam - 2 * p[0]) % Q
    y = (lam * (p[0] - x) - p[1]) % Q
    return (x, y)


def g1_add(p, q):
    if p is None:
        return q
    if q is None:
        return p
    if p[0] == q[0]:
        if p[1] == q[1]:
            return g1_double(p)
        return None
    lam = ((q[1] - p[1]) * inv(q[0] - p[0], Q)) % Q
    x = (lam * lam - p[0] - q[0]) % Q
    y = (lam * (p[0] - x) - p[1]) % Q
    return (x, y)


def g1_mul(p, k):
    acc = None
    while k:
        if k & 1:
            acc = g1_add(acc, p)
        p = g1_add(p, p)
        k >>= 1
    return acc


# ------------------------------------------------- Fq12 in polynomial basis
# Fq12 = Fq[w] / (w^12 - 18 w^6 + 82), element = list of 12 Fq coefficients.
MOD_COEFFS = [82] + [0] * 5 + [-18] + [0] * 5  # w^12 = -82 + 18 w^6


def p12(*coeffs):
    c = list(coeffs) + [0] * (12 - len(coeffs))
    return [x % Q for x in c]


P12_ONE = p12(1)


def p12_add(a, b):
    return [(x + y) % Q for x, y in zip(a, b)]


def p12_sub(a, b):
    return [(x - y) % Q for x, y in zip(a, b)]


def p12_mul(a, b):
    t = [0] * 23
    for i in range(12):
        if a[i] == 0:
            continue
        for j in range(12):
            t[i + j] += a[i] * b[j]
    for d in range(22, 11, -1):
        if t[d] == 0:
            continue
        c = t[d]
        t[d] = 0
        for k in range(12):
            t[d - 12 + k] -= c * MOD_COEFFS[k]
    return [x % Q for x in t[:12]]


def p12_inv(a):
    # Extended Euclid over Fq[w] against the modulus polynomial.
    lm, hm = [1] + [0] * 12, [0] * 13
    low = list(a) + [0]
    high = [x % Q for x in MOD_COEFFS] + [1]

    def deg(p):
        for d in range(len(p) - 1, -1, -1):
            if p[d]:
                return d
        return 0

    while deg(low) > 0 or low[0] != 0:
        r = list(high)
        nm = list(hm)
        dl = deg(low)
        linv = inv(low[dl], Q)
        for i in range(deg(high) - dl, -1, -1):
            c = (r[dl + i] * linv) % Q
            for j in range(dl + 1):
                r[i + j] = (r[i + j] - c * low[j]) % Q
            for j in range(13 - i):
                nm[i + j] = (nm[i + j] - c * lm[j]) % Q
        if deg(r) == 0 and r[0] == 0:
            # low divides high exactly; low is the gcd (a unit times 1).
            c = inv(low[0], Q)
            return [(x * c) % Q for x in lm[:12]]
        high, hm, low, lm = low, lm, r, nm
    c = inv(low[0], Q)
    return [(x * c) % Q for x in lm[:12]]


def p12_pow(a, k):
    acc = P12_ONE
    while k:
        if k & 1:
            acc = p12_mul(acc, a)
        a = p12_mul(a, a)
        k >>= 1
    return acc


def embed_f2(c):
    """Map a+bi in Fq2 to the polynomial basis: i = w^6 - 9."""
    return p12((c[0] - 9 * c[1]) % Q, 0, 0, 0, 0, 0, c[1])


def twist(pt):
    """Embed a point of E'(Fq2) into E(Fq12): (x*w^2, y*w^3)."""
    x = p12_mul(embed_f2(pt[0]), p12(0, 0, 1))
    y = p12_mul(embed_f2(pt[1]), p12(0, 0, 0, 1))
    return (x, y)


def linefunc(p1, p2, t):
    x1, y1 = p1
    x2, y2 = p2
    xt, yt = t
    if x1 != x2:
        m = p12_mul(p12_sub(y2, y1), p12_inv(p12_sub(x2, x1)))
        return p12_add(p12_mul(m, p12_sub(xt, x1)), p12_sub(y1, yt))
    if y1 == y2:
        m = p12_mul(p12_mul(p12(3), p12_mul(x1, x1)), p12_inv(p12_add(y1, y1)))
        return p12_add(p12_mul(m, p12_sub(xt, x1)), p12_sub(y1, yt))
    return p12_sub(xt, x1)


def e12_add(p, q):
    if p is None:
        return q
    if q is None:
        return p
    x1, y1 = p
    x2, y2 = q
    if x1 == x2 and y1 == y2:
        m = p12_mul(p12_mul(p12(3), p12_mul(x1, x1)), p12_inv(p12_add(y1, y1)))
    elif x1 == x2:
        return None
    else:
        m = p12_mul(p12_sub(y2, y1), p12_inv(p12_sub(x2, x1)))
    x3 = p12_sub(p12_sub(p12_mul(m, m), x1), x2)
    y3 = p12_sub(p12_mul(m, p12_sub(x1, x3)), y1)
    return (x3, y3)


def miller(q_pt, p_pt):
    """Optimal-ate Miller loop; q_pt in E(Fq12) (twisted), p_pt in E(Fq) cast."""
    pc = (p12(p_pt[0]), p12(p_pt[1]))
    r_pt = q_pt
    f = P12_ONE
    for i in range(LOG_ATE_LOOP, -1, -1):
        f = p12_mul(p12_mul(f, f), linefunc(r_pt, r_pt, pc))
        r_pt = e12_add(r_pt, r_pt)
        if ATE_LOOP & (1 << i):
            f = p12_mul(f, linefunc(r_pt, q_pt, pc))
            r_pt = e12_add(r_pt, q_pt)
    q1 = (p12_pow(q_pt[0], Q), p12_pow(q_pt[1], Q))
    nq2 = (p12_pow(q1[0], Q), [(-c) % Q for c in p12_pow(q1[1], Q)])
    f = p12_mul(f, linefunc(r_pt, q1, pc))
    r_pt = e12_add(r_pt, q1)
    f = p12_mul(f, linefunc(r_pt, nq2, pc))
    return f


def pairing(p_pt, q_pt):
    f = miller(twist(q_pt), p_pt)
    return p12_pow(f, (Q**12 - 1) // R)


def montgomery_constants(m):
    rr = (1 << 256) % m
    r2 = (rr * rr) % m
    n0 = (-pow(m, -1, 1 << 64)) % (1 << 64)
    return {"one": rr, "r2": r2, "n0": n0}


def limbs(x):
    return [(x >> (64 * i)) & 0xFFFFFFFFFFFFFFFF for i in range(4)]


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "."

    # Sanity: curve and generator facts the C++ side also relies on.
    assert Q % 4 == 3
    assert (G1[1] ** 2 - G1[0] ** 3 - 3) % Q == 0
    assert f2_sub(f2_mul(G2Y, G2Y), f2_add(f2_mul(G2X, f2_mul(G2X, G2X)), B2)) == (0, 0)
    assert g1_mul(G1, R) is None
    assert g2_mul((G2X, G2Y), R) is None
    assert (Q**4 - Q**2 + 1) % R == 0

    def fq_consts(name, m):
        c = montgomery_constants(m)
        print(f"{name}: modulus limbs {limbs(m)}")
        print(f"{name}: R2 limbs      {limbs(c['r2'])}")
        print(f"{name}: one limbs     {limbs(c['one'])}")
        print(f"{name}: n0            {c['n0']:#x}")

    fq_consts("Fq", Q)
    fq_consts("Fr", R)
    print("sqrt exp (q+1)/4 limbs:", limbs((Q + 1) // 4))
    print("euler exp (q-1)/2 limbs:", limbs((Q - 1) // 2))
    print("frob exp (q-1)/6 limbs:", limbs((Q - 1) // 6))
    hard = (Q**4 - Q**2 + 1) // R
    print("hard-part exponent hex:", hex(hard))

    cases = []
    for a, b in [(1, 1), (2, 1), (1, 2), (3, 5), (11, 7)]:
        pa = g1_mul(G1, a)
        qb = g2_mul((G2X, G2Y), b)
        e = pairing(pa, qb)
        cases.append({"a": a, "b": b, "gt_poly": [str(c) for c in e]})

    # Oracle self-check: e(aG, bH) == e(G, H)^(ab).
    base = pairing(G1, (G2X, G2Y))
    for c in cases:
        assert [str(x) for x in p12_pow(base, c["a"] * c["b"])] == c["gt_poly"]
    assert p12_pow(base, R) == P12_ONE
    assert base != P12_ONE

    g1_mults = []
    for k in [1, 2, 3, 7, 123456789, R - 1]:
        x, y = g1_mul(G1, k)
        g1_mults.append({"k": str(k), "x": str(x), "y": str(y)})
    g2_mults = []
    for k in [1, 2, 5, 98765, R - 2]:
        (x0, x1), (y0, y1) = g2_mul((G2X, G2Y), k)
        g2_mults.append(
            {"k": str(k), "x0": str(x0), "x1": str(x1), "y0": str(y0), "y1": str(y1)}
        )

    golden = {"g1_mults": g1_mults, "g2_mults": g2_mults, "pairings": cases}
    path = os.path.join(out_dir, "pairing_golden.json")
    with open(path, "w") as fh:
        json.dump(golden, fh, indent=1)
    print("wrote", path)


if __name__ == "__main__":
    main()

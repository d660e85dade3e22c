#!/usr/bin/env python3
"""Independent brute-force oracle for the lattice-level facts.

Everything here is recomputed from first principles (integer matrices only)
so the C++ engine's unit tests can assert against literal constants that were
derived by a second implementation.
"""
import itertools
import numpy as np

# QUADRIC basis f1, f2, e1..e4: f1.f2 = 1, f^2 = 0, ei.ej = -delta
G = np.diag([0, 0, -1, -1, -1, -1])
G[0, 1] = G[1, 0] = 1
K = np.array([-2, -2, 1, 1, 1, 1])


def ip(a, b):
    return int(a @ G @ b)


def enumerate_classes(d2, dk):
    out = []
    for a in range(-1, 3):
        for b in range(-1, 3):
            for e in itertools.product(range(-2, 2), repeat=4):
                v = np.array((a, b) + e)
                if ip(v, v) == d2 and ip(v, K) == dk:
                    out.append(tuple(v))
    return out


lines = enumerate_classes(-1, -1)
conics = enumerate_classes(0, -2)
print("minus-one classes:", len(lines))
print("conic classes:", len(conics))
for D in lines:
    n = sum(1 for E in lines if E != D and ip(np.array(D), np.array(E)) == 1)
    assert n == 5, (D, n)
print("each (-1)-class meets exactly 5 others: ok")

pairs_raw = set()
for C in conics:
    C2 = tuple(-K - np.array(C))
    assert C2 in map(tuple, conics)
    pairs_raw.add(frozenset((C, tuple(C2))))
print("exceptional pairs:", len(pairs_raw))

# roots r: r^2 = -2, r.K = 0
roots = enumerate_classes(-2, 0)
print("roots:", len(roots))


def reflection(r):
    r = np.array(r)
    M = np.eye(6, dtype=int)
    for j in range(6):
        ej = np.eye(6, dtype=int)[:, j]
        M[:, j] = ej + ip(ej, r) * r
    return M


gens = [reflection(r) for r in roots]
seen = {np.eye(6, dtype=int).tobytes(): np.eye(6, dtype=int)}
frontier = list(seen.values())
while frontier:
    nxt = []
    for M in frontier:
        for g in gens:
            P = g @ M
            key = P.tobytes()
            if key not in seen:
                seen[key] = P
                nxt.append(P)
    frontier = nxt
W = list(seen.values())
print("Weyl group order:", len(W))

# form-independent pair ordering for the oracle: Case-5 style
e = np.eye(6, dtype=int)
f1, f2 = e[0], e[1]
E = [e[2], e[3], e[4], e[5]]
S = E[0] + E[1] + E[2] + E[3]
PAIRS = [
    (f1 + f2 - E[0] - E[1], f1 + f2 - E[2] - E[3]),
    (f1 + f2 - E[0] - E[2], f1 + f2 - E[1] - E[3]),
    (f1 + f2 - E[0] - E[3], f1 + f2 - E[1] - E[2]),
    (f1, f1 + 2 * f2 - S),
    (f2, 2 * f1 + f2 - S),
]


def pair_action(M, pairs):
    perm, swaps = [], []
    for (A, B) in pairs:
        iA, iB = tuple(M @ A), tuple(M @ B)
        hit = None
        for j, (C, D) in enumerate(pairs):
            if iA == tuple(C) and iB == tuple(D):
                hit, sw = j, 0
            elif iA == tuple(D) and iB == tuple(C):
                hit, sw = j, 1
        assert hit is not None
        perm.append(hit)
        swaps.append(sw)
    return tuple(perm), tuple(swaps)


acts = [pair_action(M, PAIRS) for M in W]
perms = {a[0] for a in acts}
print("image of pair permutation map:", len(perms))
kernel = [a[1] for a in acts if a[0] == (0, 1, 2, 3, 4)]
print("kernel order:", len(kernel))
evens = {v for v in itertools.product((0, 1), repeat=5) if sum(v) % 2 == 0}
print("kernel = even-weight vectors:", set(kernel) == evens)

# section: for each transposition find a reflection realizing it with no swaps
for i, j in itertools.combinations(range(5), 2):
    target = list(range(5))
    target[i], target[j] = j, i
    found = any(
        pair_action(reflection(r), PAIRS) == (tuple(target), (0,) * 5)
        for r in roots
    )
    print(f"transposition ({i+1}{j+1}) realized by a reflection:", found)

# sigma per form, in QUADRIC coordinates (permutation matrices)
def perm_matrix(images):
    M = np.zeros((6, 6), dtype=int)
    for src, dst in enumerate(images):
        M[dst, src] = 1
    return M


SIGMAS = {
    "q31-02": perm_matrix([1, 0, 3, 2, 5, 4]),
    "q31-21": perm_matrix([1, 0, 2, 3, 5, 4]),
    "q31-40": perm_matrix([1, 0, 2, 3, 4, 5]),
    "q22-02": perm_matrix([0, 1, 3, 2, 5, 4]),
    "q22-40": perm_matrix([0, 1, 2, 3, 4, 5]),
}

# form-specific pair orderings (paper order)
def pairs_for(form):
    p12 = (f1 + f2 - E[0] - E[1], f1 + f2 - E[2] - E[3])
    p13 = (f1 + f2 - E[0] - E[2], f1 + f2 - E[1] - E[3])
    p14 = (f1 + f2 - E[0] - E[3], f1 + f2 - E[1] - E[2])
    pf1 = (f1, f1 + 2 * f2 - S)
    pf2 = (f2, 2 * f1 + f2 - S)
    if form == "q22-02":
        return [p12, pf1, pf2, p13, p14]
    return [p12, p13, p14, pf1, pf2]


def cycles(perm):
    seen, out = set(), []
    for i in range(5):
        if i in seen:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(j + 1)
            j = perm[j]
        if len(c) > 1:
            out.append(tuple(c))
    return out


for form, sig in SIGMAS.items():
    pairs = pairs_for(form)
    cent = [M for M in W if (M @ sig == sig @ M).all()]
    ker_sigs = sorted(
        a[1]
        for a in (pair_action(M, pairs) for M in cent)
        if a[0] == (0, 1, 2, 3, 4)
    )
    img = {pair_action(M, pairs)[0] for M in cent}
    img_cyc = sorted(cycles(p) for p in img)
    print(f"{form}: |centralizer|={len(cent)} kernel_bound order={len(ker_sigs)}")
    print(f"  kernel sigs: {[''.join(map(str,v)) for v in ker_sigs]}")
    print(f"  image order={len(img)} elements={img_cyc}")
    sig_act = pair_action(sig, pairs)
    print(f"  sigma pair action: perm cycles={cycles(sig_act[0])} swaps={sig_act[1]}")

#!/usr/bin/env python3
"""Independent exact oracle for the frozen values used in the C++ tests.

Everything here is brute force over Fractions: facets from d-subsets of
vertices, inverses from adjugate/determinant, lattice points from a full
box scan, decompositions from itertools products. Nothing is shared with
the C++ implementation.
"""
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations, product
from math import gcd
from functools import reduce


def det(m):
    """Plain Gaussian elimination over Fractions."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = -result
        result *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return result


def minor(m, r, c):
    return [row[:c] + row[c + 1:] for k, row in enumerate(m) if k != r]


def adjugate_inverse(m):
    n = len(m)
    d = det(m)
    return [[Fraction((-1) ** (i + j)) * det(minor(m, j, i)) / d for j in range(n)] for i in range(n)]


def solve(m, rhs):
    inv = adjugate_inverse(m)
    return [sum(inv[i][j] * rhs[j] for j in range(len(rhs))) for i in range(len(rhs))]


def brute_facets(verts):
    d = len(verts[0])
    out = set()
    for sub in combinations(verts, d):
        # hyperplane a.x = b through sub: solve with homogeneous null vector
        rows = [[Fraction(1)] + [Fraction(-x) for x in v] for v in sub]  # b - a.x = 0
        # null vector via signed minors of d x (d+1)
        null = [Fraction((-1) ** k) * det([r[:k] + r[k + 1:] for r in rows]) for k in range(d + 1)]
        if all(x == 0 for x in null):
            continue
        b, a = null[0], null[1:]
        if all(x == 0 for x in a):
            continue
        vals = [sum(ai * xi for ai, xi in zip(a, v)) for v in verts]
        if all(x <= b for x in vals):
            pass
        elif all(x >= b for x in vals):
            a, b = [-x for x in a], -b
        else:
            continue
        den = reduce(lambda x, y: x * y.denominator // gcd(x, y.denominator), a + [b], 1)
        ai = [int(x * den) for x in a]
        g = reduce(gcd, [abs(x) for x in ai])
        out.add((tuple(x // g for x in ai), Fraction(b * den, g)))
    return sorted(out)


def lattice_points(facets, n, lo, hi):
    pts = []
    for x in product(*[range(l * n, h * n + 1) for l, h in zip(lo, hi)]):
        if all(sum(a * xi for a, xi in zip(nrm, x)) <= n * b for nrm, b in facets):
            pts.append(x)
    return pts


def omega(p, q):
    return [tuple(v) + (1,) for v in p] + [tuple(-x for x in v) + (-1,) for v in q]


def show(title, value):
    print(f"{title}: {value}", flush=True)


# Q_{K3} and Omega(Q_{K3})
q_k3 = [(1, 0), (0, 1), (1, 1)]
om_k3 = omega(q_k3, q_k3)
f = brute_facets(om_k3)
show("omega(Q_K3) facets", [(a, str(b)) for a, b in f])
show("omega(Q_K3) dual vertices", sorted(a for a, _ in f))
# a mixed facet: vertex matrix and inverse
for a, b in f:
    tight = [v for v in om_k3 if sum(x * y for x, y in zip(a, v)) == b]
    if any(v[-1] == 1 for v in tight) and any(v[-1] == -1 for v in tight):
        show("mixed facet of omega(Q_K3)", (a, sorted(tight)))
        m = [[Fraction(x) for x in v] for v in sorted(tight)]
        show("  inverse", [[str(x) for x in row] for row in adjugate_inverse(m)])
        break

# Q_{K4}: incidence rows of K4 with column 1 deleted
k4_edges = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
q_k4 = sorted({tuple(1 if c in e else 0 for c in (2, 3, 4)) for e in k4_edges})
om_k4 = omega(q_k4, q_k4)
f4 = brute_facets(om_k4)
show("omega(Q_K4) facet count", len(f4))
show("omega(Q_K4) all rhs one", all(b == 1 for _, b in f4))
# First mixed facet (by normal) and its lexicographically first non-singular
# 4-subset of vertices.
def first_mixed_square(facets, verts):
    for a, b in facets:
        tight = sorted(v for v in verts if sum(x * y for x, y in zip(a, v)) == b)
        if not (any(v[-1] == 1 for v in tight) and any(v[-1] == -1 for v in tight)):
            continue
        for sub in combinations(tight, len(verts[0])):
            m = [[Fraction(x) for x in v] for v in sub]
            if det(m) != 0:
                return a, list(sub), m
    return None


a4, sub4, m4 = first_mixed_square(sorted(f4), om_k4)
show("mixed facet of omega(Q_K4), 4 vertices", (a4, sub4))
show("  det", det(m4))
show("  inverse", [[str(x) for x in row] for row in adjugate_inverse(m4)])

# K4 odd cycles by brute force over vertex sequences
adj = {frozenset(e) for e in k4_edges}
cycles = set()
for k in range(3, 5):
    for seq in permutations(range(1, 5), k):
        if all(frozenset((seq[i], seq[(i + 1) % k])) in adj for i in range(k)):
            cycles.add(frozenset(frozenset((seq[i], seq[(i + 1) % k])) for i in range(k)))
show("K4 odd cycles", sum(1 for c in cycles if len(c) % 2 == 1))

# Reeve simplex spanning index
reeve = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)]
rf = brute_facets(reeve)
rpts = lattice_points(rf, 1, (0, 0, 0), (1, 1, 2))
show("Reeve lattice points", rpts)
diffs = [[Fraction(x - y) for x, y in zip(p, rpts[0])] for p in rpts[1:]]
minors = [abs(det(list(c))) for c in combinations(diffs, 3)]
show("Reeve gcd of 3x3 minors of differences", reduce(lambda x, y: gcd(int(x), int(y)), minors))

# Omega(conv{0,e1}) facets
seg = [(0,), (1,)]
show("omega(segment) facets", [(a, str(b)) for a, b in brute_facets(omega(seg, seg))])


def idp_witness(verts, nmax):
    fac = brute_facets(verts)
    d = len(verts[0])
    lo = [min(v[i] for v in verts) for i in range(d)]
    hi = [max(v[i] for v in verts) for i in range(d)]
    s1 = lattice_points(fac, 1, lo, hi)
    for n in range(2, nmax + 1):
        sums = {tuple(map(sum, zip(*c))) for c in combinations_with_replacement(s1, n)}
        target = lattice_points(fac, n, lo, hi)
        missing = sorted(set(target) - sums)
        if missing:
            return n, missing[0], len(target), len(sums)
    return None


def dumbbell_copy(k, l):
    # vertices 1..2k+1 cycle, 2k+2..2k+2l+2 cycle, bridge (2k+1, 2k+2); delete last column
    n = 2 * k + 2 * l + 2
    c1 = list(range(1, 2 * k + 2))
    c2 = list(range(2 * k + 2, n + 1))
    edges = [(c1[i], c1[(i + 1) % len(c1)]) for i in range(len(c1))]
    edges += [(c2[i], c2[(i + 1) % len(c2)]) for i in range(len(c2))]
    edges.append((2 * k + 1, 2 * k + 2))
    rows = sorted({tuple(1 if c in e else 0 for c in range(1, n)) for e in edges})
    return n, rows


for k, l in [(1, 1), (2, 1)]:
    n, q = dumbbell_copy(k, l)
    om = omega(q, q)
    fac = brute_facets(om)
    s1 = sorted(set(om) | {tuple([0] * n)})
    x = tuple([1] * (2 * k + 1) + [-1] * (2 * l) + [k - l])
    big_n = k + l + 1
    inside = all(sum(a * xi for a, xi in zip(nrm, x)) <= big_n * b for nrm, b in fac)
    # lattice points of omega: vertices plus origin (check by scan)
    lo = [min(v[i] for v in om) for i in range(n)]
    hi = [max(v[i] for v in om) for i in range(n)]
    pts = lattice_points(fac, 1, lo, hi)
    decomposable = any(tuple(map(sum, zip(*c))) == x for c in combinations_with_replacement(pts, big_n))
    show(f"dumbbell({k},{l}) n={n} x={x} N={big_n} in N*Omega", inside)
    show(f"dumbbell({k},{l}) omega lattice points == vertices+origin", sorted(pts) == s1)
    show(f"dumbbell({k},{l}) x decomposable", decomposable)

# two triangles joined by a 2-path: 123, 567, 3-4, 4-5 (n=7, non-bipartite: delete column 1)
tt_edges = [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7)]
q_tt = sorted({tuple(1 if c in e else 0 for c in range(2, 8)) for e in tt_edges})
show("two-triangle path: Q_G IDP witness (N, x, |N Q|, |sums|)", idp_witness(q_tt, 3))
show("two-triangle path: Omega IDP witness", idp_witness(omega(q_tt, q_tt), 3))
show("dumbbell(1,1): Q_G IDP up to N=3", idp_witness(dumbbell_copy(1, 1)[1], 3))
show("K3: Q_G IDP up to N=4", idp_witness(q_k3, 4))

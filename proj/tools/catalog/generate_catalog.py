#!/usr/bin/env python3
"""Regenerates the shipped group catalog under data/catalog/.

Most entries are closed-form generator sets. The exotic ones (M11 on 12
points, PSU3(3) on 36 points, PSp4(3) on 36 points, the maximal subgroups
of PSL2(11) inside M11) are found by small deterministic searches and
then frozen as data. Every entry is re-verified by the C++ loader against
the metadata written to index.json, so this script is only needed when
the catalog changes.

Conventions: points are 0-based in image arrays, permutations act on the
right, compose(p, q) applies p first.

    python3 tools/catalog/generate_catalog.py [--out data/catalog]
"""

import argparse
import itertools
import json
import math
import os
import random

from sympy.combinatorics import Permutation, PermutationGroup


# --- small permutation helpers on image tuples -----------------------------

def compose(p, q):
    return tuple(q[x] for x in p)


def inverse(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def identity(n):
    return tuple(range(n))


def from_cycles(n, cycles, one_based=False):
    img = list(range(n))
    off = 1 if one_based else 0
    for c in cycles:
        for i, x in enumerate(c):
            img[x - off] = c[(i + 1) % len(c)] - off
    return tuple(img)


def perm_order(p):
    seen = [False] * len(p)
    o = 1
    for i in range(len(p)):
        if not seen[i]:
            j, ln = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                ln += 1
            o = o * ln // math.gcd(o, ln)
    return o


def power(p, k):
    r = identity(len(p))
    for _ in range(k):
        r = compose(r, p)
    return r


def closure(gens, limit=None):
    n = len(gens[0])
    e = identity(n)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if limit is not None and len(seen) > limit:
                        return None
        frontier = nxt
    return seen


def sym_order(gens):
    return PermutationGroup([Permutation(list(g)) for g in gens]).order()


def coset_action(gens, sub_elems):
    """Right action of <gens> on the right cosets of the subgroup given by its
    full element set. Returns generator images on cosets (coset of the
    identity is point 0)."""
    sub = list(sub_elems)

    def key(g):
        return min(compose(h, g) for h in sub)

    n = len(gens[0])
    start = key(identity(n))
    index = {start: 0}
    reps = [identity(n)]
    i = 0
    while i < len(reps):
        r = reps[i]
        for g in gens:
            y = compose(r, g)
            k = key(y)
            if k not in index:
                index[k] = len(reps)
                reps.append(y)
        i += 1
    images = []
    for g in gens:
        images.append(tuple(index[key(compose(r, g))] for r in reps))
    return images


def is_transitive(gens):
    n = len(gens[0])
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def is_primitive(gens):
    return PermutationGroup([Permutation(list(g)) for g in gens]).is_primitive()


# --- builders ---------------------------------------------------------------

def sym_gens(m):
    if m == 1:
        return [identity(1)]
    if m == 2:
        return [(1, 0)]
    return [from_cycles(m, [(0, 1)]), from_cycles(m, [tuple(range(m))])]


def alt_gens(m):
    if m < 3:
        return [identity(m)]
    if m == 3:
        return [from_cycles(3, [(0, 1, 2)])]
    c = (0, 1, 2)
    if m % 2 == 1:
        long = tuple(range(m))
    else:
        long = tuple(range(1, m))
    return [from_cycles(m, [c]), from_cycles(m, [long])]


def subset_action(gens, m, ell):
    subsets = list(itertools.combinations(range(m), ell))
    idx = {s: i for i, s in enumerate(subsets)}
    out = []
    for g in gens:
        out.append(tuple(idx[tuple(sorted(g[x] for x in s))] for s in subsets))
    return out


def cyclic(n):
    return [from_cycles(n, [tuple(range(n))])] if n > 1 else [identity(1)]


def dihedral(n):
    refl = tuple((-i) % n for i in range(n))
    return [from_cycles(n, [tuple(range(n))]), refl]


def affine(p):
    # x -> x + 1, x -> g x with g a primitive root
    for g in range(2, p):
        if len({pow(g, k, p) for k in range(1, p)}) == p - 1:
            break
    return [tuple((x + 1) % p for x in range(p)), tuple((g * x) % p for x in range(p))]


def psl2_projective_line(p):
    # points 0..p-1 are field elements, p is infinity
    inf = p
    t = tuple(list((x + 1) % p for x in range(p)) + [inf])
    img = []
    for x in range(p):
        img.append(inf if x == 0 else (-pow(x, p - 2, p)) % p)
    img.append(0)
    s = tuple(img)
    return [t, s]


def wreath_product_action(base_gens, top_gens, delta, kappa):
    """Product action of base wr top on delta^kappa; point index is the
    mixed-radix number sum_i c_i delta^i."""
    pts = list(itertools.product(range(delta), repeat=kappa))
    pts = [tuple(reversed(p)) for p in pts]  # c_0 is the least significant digit

    def index(c):
        v = 0
        for i in reversed(range(kappa)):
            v = v * delta + c[i]
        return v

    order = sorted(pts, key=index)
    gens = []
    for i in range(kappa):
        for h in base_gens:
            gens.append(tuple(index(tuple(h[c[j]] if j == i else c[j] for j in range(kappa))) for c in order))
    for a in top_gens:
        def img(c):
            out = [0] * kappa
            for j in range(kappa):
                out[a[j]] = c[j]
            return tuple(out)
        gens.append(tuple(index(img(c)) for c in order))
    return gens


# --- exotic constructions ---------------------------------------------------

M11_CYCLES = ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"]
M12_CYCLES = M11_CYCLES + ["(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"]


def parse_cycles(n, s, one_based=True):
    cycles = []
    for part in s.replace(")(", ")|(").split("|"):
        part = part.strip().strip("()")
        if part:
            cycles.append(tuple(int(x) for x in part.split(",")))
    return from_cycles(n, cycles, one_based)


def find_subgroup(rng, elems, target_order, pred_pair, tries=200000):
    elems = list(elems)
    for _ in range(tries):
        x = rng.choice(elems)
        y = rng.choice(elems)
        if not pred_pair(x, y):
            continue
        h = closure([x, y], limit=target_order)
        if h is not None and len(h) == target_order:
            return [x, y], h
    raise RuntimeError("subgroup of order %d not found" % target_order)


def m11_data(rng):
    a = parse_cycles(11, M11_CYCLES[0])
    b = parse_cycles(11, M11_CYCLES[1])
    G = sorted(closure([a, b]))
    assert len(G) == 7920
    by_order = {}
    for g in G:
        by_order.setdefault(perm_order(g), []).append(g)

    # PSL2(11) <= M11: a (2,3)-generated subgroup of order 660
    l211_gens, l211 = find_subgroup(
        rng, G, 660,
        lambda x, y: perm_order(x) == 2 and perm_order(y) == 3 and perm_order(compose(x, y)) == 11)
    l211_sorted = sorted(l211)
    l_by_order = {}
    for g in l211_sorted:
        l_by_order.setdefault(perm_order(g), []).append(g)

    # 11:5 = normalizer of a Sylow 11 inside PSL2(11)
    c11 = l_by_order[11][0]
    c11_set = closure([c11])
    norm5 = next(y for y in l_by_order[5]
                 if compose(compose(inverse(y), c11), y) in c11_set)
    f55 = [c11, norm5]
    assert len(closure(f55)) == 55

    # 6:2 = dihedral of order 12
    s6 = l_by_order[6][0]
    s6_set = closure([s6])
    inv_s6 = inverse(s6)
    t = next(y for y in l_by_order[2] if compose(compose(y, s6), y) == inv_s6)
    d12 = [s6, t]
    assert len(closure(d12)) == 12

    # the two PSL2(11)-classes of Alt(5): distinguished by orbit lengths on 11 points
    def orbit_lengths(gens):
        seen, lens = set(), []
        for s in range(11):
            if s in seen:
                continue
            orb = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for g in gens:
                    if g[x] not in orb:
                        orb.add(g[x])
                        stack.append(g[x])
            seen |= orb
            lens.append(len(orb))
        return tuple(sorted(lens))

    a5 = {}
    elems = l211_sorted
    for _ in range(400000):
        x = rng.choice(l_by_order[2])
        y = rng.choice(l_by_order[3])
        if perm_order(compose(x, y)) != 5:
            continue
        h = closure([x, y], limit=60)
        if h is None or len(h) != 60:
            continue
        key = orbit_lengths([x, y])
        if key not in a5:
            a5[key] = [x, y]
        if len(a5) == 2:
            break
    assert len(a5) == 2, a5.keys()
    a5_keys = sorted(a5)

    # M9:2 = setwise stabilizer of {0, 1}
    m92 = [g for g in G if {g[0], g[1]} == {0, 1}]
    assert len(m92) == 144
    m92_gens = []
    cur = {identity(11)}
    for g in m92:
        if g not in cur:
            m92_gens.append(g)
            cur = closure(m92_gens)
        if len(cur) == 144:
            break

    subgroups = [
        {"name": "L2(11)", "order": 660, "generators": [list(g) for g in l211_gens]},
        {"name": "11:5", "order": 55, "generators": [list(g) for g in f55]},
        {"name": "6:2", "order": 12, "generators": [list(g) for g in d12]},
        {"name": "A5a", "order": 60, "generators": [list(g) for g in a5[a5_keys[0]]],
         "notes": "Alt(5) inside L2(11), orbit lengths %s on 11 points" % (a5_keys[0],)},
        {"name": "A5b", "order": 60, "generators": [list(g) for g in a5[a5_keys[1]]],
         "notes": "Alt(5) inside L2(11), orbit lengths %s on 11 points" % (a5_keys[1],)},
        {"name": "M9:2", "order": 144, "generators": [list(g) for g in m92_gens]},
    ]
    m11_12 = coset_action([a, b], l211)
    l211_11 = l211_gens
    return a, b, subgroups, m11_12, l211_11


def gf9():
    # elements a + b i, i^2 = -1, encoded as 3a + b... we keep pairs
    elems = [(a, b) for a in range(3) for b in range(3)]

    def add(x, y):
        return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3)

    def mul(x, y):
        return ((x[0] * y[0] - x[1] * y[1]) % 3, (x[0] * y[1] + x[1] * y[0]) % 3)

    def frob(x):
        return (x[0], (-x[1]) % 3)

    return elems, add, mul, frob


def psu33_data(rng):
    elems, add, mul, frob = gf9()
    zero, one = (0, 0), (1, 0)
    neg = lambda x: ((-x[0]) % 3, (-x[1]) % 3)

    def herm(u, v):
        # antidiagonal hermitian form u1 v3^3 + u2 v2^3 + u3 v1^3
        s = zero
        for i in range(3):
            s = add(s, mul(u[i], frob(v[2 - i])))
        return s

    def vecmat(v, M):
        return tuple(
            (lambda j: (lambda acc: acc)(
                __import__("functools").reduce(add, [mul(v[i], M[i][j]) for i in range(3)], zero)))(j)
            for j in range(3))

    def normalize(v):
        for x in v:
            if x != zero:
                inv = next(y for y in elems if mul(x, y) == one)
                return tuple(mul(c, inv) for c in v)
        return None

    points = sorted({normalize(v) for v in itertools.product(elems, repeat=3)
                     if any(c != zero for c in v) and herm(v, v) == zero})
    assert len(points) == 28
    pidx = {p: i for i, p in enumerate(points)}

    def is_unitary(M):
        basis = [tuple(one if i == j else zero for j in range(3)) for i in range(3)]
        for u in basis:
            for v in basis:
                if herm(vecmat(u, M), vecmat(v, M)) != herm(u, v):
                    return False
        return True

    def det(M):
        def m(x, y):
            return mul(x, y)
        t1 = m(M[0][0], add(m(M[1][1], M[2][2]), neg(m(M[1][2], M[2][1]))))
        t2 = m(M[0][1], add(m(M[1][0], M[2][2]), neg(m(M[1][2], M[2][0]))))
        t3 = m(M[0][2], add(m(M[1][0], M[2][1]), neg(m(M[1][1], M[2][0]))))
        return add(add(t1, neg(t2)), t3)

    # root elements: upper unitriangular unitary matrices and their transposes
    uppers = []
    for a in elems:
        for b in elems:
            M = ((one, a, b), (zero, one, neg(frob(a))), (zero, zero, one))
            if is_unitary(M) and M != ((one, zero, zero), (zero, one, zero), (zero, zero, one)):
                uppers.append(M)
    lowers = [tuple(tuple(M[j][i] for j in range(3)) for i in range(3)) for M in uppers]
    lowers = [M for M in lowers if is_unitary(M)]
    assert uppers and lowers

    def act(M):
        return tuple(pidx[normalize(vecmat(p, M))] for p in points)

    gens28 = None
    for x in uppers:
        for y in lowers:
            if det(x) != one or det(y) != one:
                continue
            g = [act(x), act(y)]
            if sym_order(g) == 6048:
                gens28 = g
                break
        if gens28:
            break
    assert gens28 is not None
    G = sorted(closure(gens28))
    assert len(G) == 6048
    by_order = {}
    for g in G:
        by_order.setdefault(perm_order(g), []).append(g)
    gens168, h = find_subgroup(
        rng, G, 168,
        lambda x, y: perm_order(x) == 2 and perm_order(y) == 3 and perm_order(compose(x, y)) == 7)
    gens36 = coset_action(gens28, h)
    return gens28, gens36, gens168


def psp43_data():
    # E6 Cartan matrix (Bourbaki labels 1..6, node 2 attached to node 4)
    edges = {(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)}
    C = [[0] * 6 for _ in range(6)]
    for i in range(6):
        C[i][i] = 2
    for (i, j) in edges:
        C[i - 1][j - 1] = C[j - 1][i - 1] = -1

    def refl(i, v):
        pair = sum(v[j] * C[j][i] for j in range(6))
        w = list(v)
        w[i] -= pair
        return tuple(w)

    simple = [tuple(1 if j == i else 0 for j in range(6)) for i in range(6)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(6):
                s = refl(i, r)
                if s not in roots:
                    roots.add(s)
                    nxt.append(s)
        frontier = nxt
    assert len(roots) == 72
    positive = sorted(r for r in roots if all(c >= 0 for c in r))
    assert len(positive) == 36
    pidx = {r: i for i, r in enumerate(positive)}

    def canon(r):
        return r if all(c >= 0 for c in r) else tuple(-c for c in r)

    refls = [tuple(pidx[canon(refl(i, r))] for r in positive) for i in range(6)]
    assert sym_order(refls) == 51840
    even = [compose(refls[0], refls[j]) for j in range(1, 6)]
    # trim to a small generating set
    gens = [even[0]]
    for g in even[1:]:
        if sym_order(gens) == 25920:
            break
        gens.append(g)
    assert sym_order(gens) == 25920
    return gens


# --- catalog assembly -------------------------------------------------------

def main():
    ap = argparse.ArgumentParser()
    here = os.path.dirname(os.path.abspath(__file__))
    ap.add_argument("--out", default=os.path.join(here, "..", "..", "data", "catalog"))
    args = ap.parse_args()
    out = os.path.abspath(args.out)
    os.makedirs(out, exist_ok=True)
    rng = random.Random(20240611)

    entries = []

    def add(name, gens, notes, subgroups=None, cycles=None, one_based=False):
        degree = len(gens[0])
        order = sym_order(gens)
        transitive = is_transitive(gens)
        primitive = transitive and (degree == 1 or is_primitive(gens))
        fname = name.replace("(", "").replace(")", "").replace(":", "_").replace(" ", "") + ".json"
        if one_based and subgroups:
            subgroups = [dict(s, generators=[[x + 1 for x in g] for g in s["generators"]])
                         for s in subgroups]
        doc = {
            "name": name,
            "degree": degree,
            "one_based": one_based,
            "generators": cycles if cycles is not None else [list(g) for g in gens],
            "subgroups": subgroups or [],
            "notes": notes,
        }
        with open(os.path.join(out, fname), "w") as f:
            json.dump(doc, f, indent=1)
            f.write("\n")
        entries.append({
            "name": name, "file": fname, "degree": degree, "order": order,
            "transitive": transitive, "primitive": primitive,
            "stabilizer_order": order // degree if transitive else None,
            "notes": notes,
        })
        print("%-14s degree %4d order %10d %s" % (name, degree, order,
                                                   "primitive" if primitive else ""))

    add("C1:1", [identity(1)], "trivial group on one point")
    for n in (2, 4, 5, 6, 8):
        add("C%d:%d" % (n, n), cyclic(n), "cyclic group in its regular action")
    for n in (4, 5, 6):
        add("D%d:%d" % (2 * n, n), dihedral(n), "dihedral group of order %d on the %d-gon" % (2 * n, n))
    for p in (5, 7, 11):
        add("AGL1(%d):%d" % (p, p), affine(p), "affine group x -> ax + b over GF(%d)" % p)
    for m in (3, 4, 5, 6, 7):
        add("S%d:%d" % (m, m), sym_gens(m), "symmetric group, natural action")
    for m in (4, 5, 6, 7, 8, 9, 12):
        add("A%d:%d" % (m, m), alt_gens(m), "alternating group, natural action")
    add("S12:12", sym_gens(12), "symmetric group, natural action (beyond the enumeration budget)")
    for (m, ell) in ((5, 2), (6, 2), (7, 2), (7, 3), (8, 2), (9, 2)):
        d = math.comb(m, ell)
        add("A%d:%d" % (m, d), subset_action(alt_gens(m), m, ell),
            "alternating group on the %d-subsets of %d points" % (ell, m))
    add("A5:6", psl2_projective_line(5), "PSL2(5) = Alt(5) on the projective line over GF(5)")
    add("L2(7):8", psl2_projective_line(7), "PSL2(7) on the projective line over GF(7)")
    add("L2(11):12", psl2_projective_line(11), "PSL2(11) on the projective line over GF(11)")

    a, b, m11_subgroups, m11_12, l211_11 = m11_data(rng)
    add("L2(11):11", l211_11, "PSL2(11) inside M11, acting on 11 points (cosets of Alt(5))")
    add("M11:11", [a, b], "Mathieu group M11, natural 4-transitive action",
        subgroups=m11_subgroups, cycles=M11_CYCLES, one_based=True)
    add("M11:12", m11_12, "Mathieu group M11 on the cosets of PSL2(11); elusive")
    m12 = [parse_cycles(12, c) for c in M12_CYCLES]
    add("M12:12", m12, "Mathieu group M12, natural 5-transitive action",
        cycles=M12_CYCLES, one_based=True)

    gens28, gens36, gens168 = psu33_data(rng)
    add("PSU3(3):28", gens28, "PSU3(3) on the 28 isotropic points of its hermitian form over GF(9)",
        subgroups=[{"name": "L2(7)", "order": 168, "generators": [list(g) for g in gens168]}])
    add("PSU3(3):36", gens36, "PSU3(3) on the cosets of a subgroup PSL2(7) of order 168")

    add("PSp4(3):36", psp43_data(),
        "PSp4(3) = W(E6)' on the 36 pairs of opposite E6 roots; point stabilizer Sym(6) of order 720")

    add("S2wrS2:4", wreath_product_action(sym_gens(2), sym_gens(2), 2, 2),
        "Sym(2) wr Sym(2) in product action on 4 points")
    add("S3wrS2:9", wreath_product_action(sym_gens(3), sym_gens(2), 3, 2),
        "Sym(3) wr Sym(2) in product action on 9 points")
    add("A5wrC2:25", wreath_product_action(alt_gens(5), sym_gens(2), 5, 2),
        "Alt(5) wr C2 in product action on 25 points")
    add("M11wrC2:144", wreath_product_action(m11_12, sym_gens(2), 12, 2),
        "M11 wr C2 in product action on 144 points; elusive")
    add("C2wrC3:6", [from_cycles(6, [(0, 3)]), from_cycles(6, [(0, 1, 2), (3, 4, 5)])],
        "C2 wr C3 in imprimitive action on 6 points (blocks of size 2)")

    entries.sort(key=lambda e: e["name"])
    with open(os.path.join(out, "index.json"), "w") as f:
        json.dump({"schema_version": 1, "groups": entries}, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Writes a sample of reflexive 3-polytopes in the native block format.

Independent of the C++ code: facets are found by brute force over point
triples and reflexivity is read off the facet offsets.

    python3 tools/gen_reflexive_sample.py > tests/data/reflexive3d_sample.txt
"""

import argparse
import itertools
import math
import random


def cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def primitive(v):
    g = math.gcd(*v)
    return tuple(x // g for x in v)


def facets(points):
    """Inner primitive normals m and offsets c with <m, x> >= c on the hull."""
    out = set()
    for p, q, r in itertools.combinations(points, 3):
        n = cross(sub(q, p), sub(r, p))
        if n == (0, 0, 0):
            continue
        n = primitive(n)
        vals = [dot(n, x) for x in points]
        c = dot(n, p)
        if all(v >= c for v in vals):
            out.add((n, c))
        elif all(v <= c for v in vals):
            out.add((tuple(-x for x in n), -c))
    return sorted(out)


def rank(vectors):
    rows = [list(v) for v in vectors]
    r = 0
    for col in range(3):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f, g = rows[i][col], rows[r][col]
                rows[i] = [g * x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def analyse(points):
    fs = facets(points)
    if not fs:
        return None
    # Full-dimensional iff some point is off every candidate plane pair, checked via rank of normals.
    if rank([n for n, _ in fs]) < 3:
        return None
    if any(c >= 0 for _, c in fs):
        return None  # origin not interior
    reflexive = all(c == -1 for _, c in fs)
    vertices = [x for x in points if rank([n for n, c in fs if dot(n, x) == c]) == 3]
    lo = [min(x[i] for x in vertices) for i in range(3)]
    hi = [max(x[i] for x in vertices) for i in range(3)]
    count = 0
    for x in itertools.product(*(range(lo[i], hi[i] + 1) for i in range(3))):
        if all(dot(n, x) >= c for n, c in fs):
            count += 1
    return reflexive, sorted(vertices), len(fs), count


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=60)
    ap.add_argument("--seed", type=int, default=20240611)
    ap.add_argument("--per-signature", type=int, default=2)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    box = [p for p in itertools.product(range(-2, 3), repeat=3) if p != (0, 0, 0)]
    seen = {}
    found = []
    while len(found) < args.count:
        k = rng.randint(4, 9)
        pts = rng.sample(box, k)
        res = analyse(pts)
        if res is None or not res[0]:
            continue
        _, verts, nfacets, npoints = res
        key = tuple(verts)
        if key in seen:
            continue
        sig = (len(verts), nfacets, npoints)
        if sum(1 for s in seen.values() if s == sig) >= args.per_signature:
            continue
        seen[key] = sig
        found.append((verts, sig))

    print("# Reflexive 3-polytopes, rows are vertices.")
    print(f"# generated by tools/gen_reflexive_sample.py --count {args.count} --seed {args.seed}")
    for verts, (nv, nf, npts) in found:
        print(f"{nv} 3 vertices={nv} facets={nf} points={npts}")
        for v in verts:
            print(" ".join(str(x) for x in v))


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Exact check of a bundled relator catalog.

Each generator acts on pi_1 of the surface (a free group on 2g letters) as a
Dehn twist in a ribbon model: a disk with 2g bands attached along the real
line, basepoint on the boundary. Relators must act as the identity
automorphism; the action is faithful for a surface with boundary, so this is
a proof that every relator holds in the mapping class group.

Also checks that the abelianized action matches x -> x + <x,c>c for the
homology class recorded for each generator, up to signs of the basis.

Usage: verify_presentation.py data/presentation_g3.json [...]
"""

import itertools
import json
import sys
from functools import reduce


def reduce_word(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse_word(w):
    return tuple(-x for x in reversed(w))


def concat(*ws):
    return reduce_word(tuple(itertools.chain(*ws)))


class Aut:
    """Automorphism of a free group, stored by images of the generators."""

    def __init__(self, images):
        self.images = images

    def apply(self, w):
        out = []
        for x in w:
            out.extend(self.images[x] if x > 0 else inverse_word(self.images[-x]))
        return reduce_word(out)

    def __mul__(self, other):  # self after other
        return Aut({k: self.apply(v) for k, v in other.images.items()})

    def __eq__(self, other):
        return self.images == other.images

    def is_identity(self):
        return all(v == (k,) for k, v in self.images.items())


class Ribbon:
    def __init__(self, bands):
        self.bands = bands  # band -> (left foot, right foot) on the real line

    @staticmethod
    def point(x):
        z = complex(x, 0)
        return (z + 1j) / (z - 1j)

    def foot(self, k, end, s):
        left, right = self.bands[k]
        return (left if end == "L" else right) + 0.1 * s

    # A curve is a cyclic list of band traversals (band, direction, offset).
    def chords(self, curve):
        segs = []
        m = len(curve)
        for i in range(m):
            k, d, s = curve[i]
            leave = self.foot(k, "R" if d > 0 else "L", -s)
            k2, d2, s2 = curve[(i + 1) % m]
            enter = self.foot(k2, "L" if d2 > 0 else "R", s2)
            segs.append((i, leave, enter))
        return segs

    def loop_from(self, curve, i, forward):
        m = len(curve)
        seq = [curve[(i + 1 + j) % m] for j in range(m)]
        w = tuple(k * d for k, d, _ in seq)
        return w if forward else inverse_word(w)


def crossing(p1, p2, q1, q2):
    d1 = p2 - p1
    d2 = q2 - q1
    den = d1.real * d2.imag - d1.imag * d2.real
    if abs(den) < 1e-15:
        return None
    r = q1 - p1
    t = (r.real * d2.imag - r.imag * d2.real) / den
    u = (r.real * d1.imag - r.imag * d1.real) / den
    if 0 < t < 1 and 0 < u < 1:
        return t, (1 if den > 0 else -1)
    return None


def twist(rb, curve, left=True):
    star = 1 + 0j
    segs = rb.chords(curve)
    images = {}
    for j, (lf, rf) in rb.bands.items():
        pieces = []
        for arc in ((star, rb.point(lf)), (rb.point(rf), star)):
            hits = []
            for i, leave, enter in segs:
                c = crossing(arc[0], arc[1], rb.point(leave), rb.point(enter))
                if c:
                    t, sign = c
                    hits.append((t, rb.loop_from(curve, i, (sign > 0) == left)))
            hits.sort()
            pieces.append([w for _, w in hits])
        images[j] = concat(*pieces[0], (j,), *pieces[1])
    return Aut(images)


def model(genus):
    bands = {1: (1, 3)}
    for k in range(2, 2 * genus + 1):
        bands[k] = (2 * k - 2, 2 * k + 1)
    rb = Ribbon(bands)
    curves = {f"a{k}": [(k, 1, 0.5)] for k in bands}
    curves["a0"] = [(1, -1, 0.9), (3, -1, 0.9)]
    twists = {name: (twist(rb, c), twist(rb, c, left=False)) for name, c in curves.items()}
    return rb, twists


def evaluate(twists, word):
    auts = []
    for name, e in word:
        pos, neg = twists[name]
        auts.extend([pos if e > 0 else neg] * abs(e))
    return reduce(lambda a, b: a * b, auts)


def abelianized(aut, n):
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        for x in aut.images[k]:
            m[abs(x) - 1][k - 1] += 1 if x > 0 else -1
    return m


def pairing(g, u, v):
    return sum(u[i] * v[g + i] - u[g + i] * v[i] for i in range(g))


def transvection(g, c):
    n = 2 * g
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        p = pairing(g, e, c)
        cols.append([e[i] + p * c[i] for i in range(n)])
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def check_homology(genus, twists, generators):
    """Finds signs s_k with P = [s_k c_k] (c_k the recorded chain classes) conjugating
    the ribbon action of each generator to the recorded transvection."""
    n = 2 * genus
    chain = [g for g in generators if g["name"] != "a0"]
    chain.sort(key=lambda g: int(g["name"][1:]))
    actions = {g["name"]: abelianized(twists[g["name"]][0], n) for g in generators}
    classes = {g["name"]: g["homology"] for g in generators}

    for signs in itertools.product((1, -1), repeat=n):
        p = [[signs[k] * chain[k]["homology"][i] for k in range(n)] for i in range(n)]
        ok = True
        # P M = T P avoids inverting P.
        for name, m in actions.items():
            t = transvection(genus, classes[name])
            pm = [[sum(p[i][k] * m[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
            tp = [[sum(t[i][k] * p[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
            if pm != tp:
                ok = False
                break
        if ok:
            return signs
    return None


def check(path):
    with open(path) as f:
        cat = json.load(f)
    genus = cat["genus"]
    _, twists = model(genus)
    gens = cat["generators"]
    names = [g["name"] for g in gens]
    failures = 0
    for i, g in enumerate(gens):
        pos, neg = twists[g["name"]]
        if not (pos * neg).is_identity():
            print(f"{path}: twist inverse mismatch for {g['name']}")
            failures += 1
        for j, h in enumerate(gens):
            alg = abs(pairing(genus, g["homology"], h["homology"]))
            geo = cat["geometric_intersections"][i][j]
            if alg > geo or (geo - alg) % 2:
                print(f"{path}: intersection data inconsistent for {g['name']}, {h['name']}")
                failures += 1
    for k, r in enumerate(cat["relators"]):
        for name, _ in r["word"]:
            if name not in names:
                print(f"{path}: relator {k} uses unknown generator {name}")
                failures += 1
        if not evaluate(twists, r["word"]).is_identity():
            print(f"{path}: relator {k} ({r['tag']} {r['label']}) is not the identity")
            failures += 1
    signs = check_homology(genus, twists, gens)
    if signs is None:
        print(f"{path}: recorded homology classes do not match the twist action")
        failures += 1
    print(f"{path}: genus {genus}, {len(cat['relators'])} relators, "
          f"homology signs {signs}, {'ok' if failures == 0 else f'{failures} failures'}")
    return failures == 0


def main(argv):
    if len(argv) < 2:
        print(__doc__)
        return 2
    return 0 if all([check(p) for p in argv[1:]]) else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv))

"""Regenerate the minimal-step lattice fixtures.

Each knot starts from a rasterised smooth parametrisation and is shrunk
with BFACF moves (which preserve knot type) until it reaches the known
minimal step number.  The knot type is confirmed by HOMFLY-PT before
anything is written.

    python tools/find_fixtures.py [--seed N] [--out DIR]
"""

from __future__ import annotations

import argparse
import math
import random
from pathlib import Path

from ropebound.homfly import homfly
from ropebound.lattice import LatticeLink, require_valid, serialize_lattice_link, step_counts
from ropebound.lattice import choose_projection_axis, relabel_axes
from ropebound.projection import project

DIRS = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]

CURVES = {
    "trefoil24": (lambda t: (math.sin(t) + 2 * math.sin(2 * t), math.cos(t) - 2 * math.cos(2 * t), -math.sin(3 * t)), 24,
                  {"-1 a^-4 + 2 a^-2 + 1 z^2 a^-2", "2 a^2 + -1 a^4 + 1 z^2 a^2"}),
    "figure8_30": (lambda t: ((2 + math.cos(2 * t)) * math.cos(3 * t), (2 + math.cos(2 * t)) * math.sin(3 * t), math.sin(4 * t)), 30,
                   {"1 a^-2 + -1 + 1 a^2 + -1 z^2"}),
    "knot51_34": (lambda t: ((2 + math.cos(5 * t)) * math.cos(2 * t), (2 + math.cos(5 * t)) * math.sin(2 * t), -math.sin(5 * t)), 34,
                  {"-2 a^-6 + 3 a^-4 + -1 z^2 a^-6 + 4 z^2 a^-4 + 1 z^4 a^-4",
                   "3 a^4 + -2 a^6 + 4 z^2 a^4 + -1 z^2 a^6 + 1 z^4 a^4"}),
}


def add(p, d):
    return (p[0] + d[0], p[1] + d[1], p[2] + d[2])


def rasterise(f, scale, samples=4000):
    pts = []
    for i in range(samples):
        t = 2 * math.pi * i / samples
        q = tuple(round(scale * c) for c in f(t))
        if not pts or q != pts[-1]:
            pts.append(q)
    if pts[-1] == pts[0]:
        pts.pop()
    walk = []
    for i, p in enumerate(pts):
        q = pts[(i + 1) % len(pts)]
        cur = list(p)
        walk.append(tuple(cur))
        for ax in range(3):
            while cur[ax] != q[ax]:
                cur[ax] += 1 if q[ax] > cur[ax] else -1
                if tuple(cur) != q:
                    walk.append(tuple(cur))
    if len(set(walk)) != len(walk):
        return None
    return walk


def bfacf(poly, target, rng, beta=0.02, max_iter=400_000):
    poly = list(poly)
    occ = set(poly)
    for _ in range(max_iter):
        n = len(poly)
        if n <= target:
            return poly
        i = rng.randrange(n)
        j = (i + 1) % n
        a, b = poly[i], poly[j]
        e = tuple(bb - aa for aa, bb in zip(a, b))
        d = rng.choice([d for d in DIRS if all(x * y == 0 for x, y in zip(d, e))])
        ad, bd = add(a, d), add(b, d)
        prev, nxt = poly[i - 1], poly[(j + 1) % n]
        if prev == ad and nxt == bd:
            if n - 2 < 4:
                continue
            occ.discard(a)
            occ.discard(b)
            poly = [v for k, v in enumerate(poly) if k not in (i, j)]
        elif prev == ad:
            if bd not in occ:
                occ.discard(a)
                occ.add(bd)
                poly[i] = bd
        elif nxt == bd:
            if ad not in occ:
                occ.discard(b)
                occ.add(ad)
                poly[j] = ad
        elif ad not in occ and bd not in occ and rng.random() < beta:
            occ.update((ad, bd))
            poly[i + 1:i + 1] = [ad, bd]
    return poly


def is_valid(poly):
    n = len(poly)
    if len(set(poly)) != n:
        return False
    return all(sum(abs(x - y) for x, y in zip(poly[i], poly[(i + 1) % n])) == 1 for i in range(n))


def knot_poly(poly):
    link = LatticeLink((tuple(poly),))
    link = relabel_axes(link, choose_projection_axis(step_counts(link)))
    return homfly(project(link).diagram, cap=200)


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out", default=str(Path(__file__).parents[1] / "src/ropebound/data"))
    ap.add_argument("--only", default=None)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    for name, (f, target, expect) in CURVES.items():
        if args.only and name != args.only:
            continue
        for scale in (2, 2.5, 3, 3.5, 4, 5):
            start = rasterise(f, scale)
            if start is not None:
                break
        ref = knot_poly(start)
        print(name, "start length", len(start), "HOMFLY", ref)
        best = None
        for attempt in range(200):
            poly = bfacf(start, target, rng)
            assert is_valid(poly)
            if len(poly) <= target:
                best = poly
                break
            print("  attempt", attempt, "stalled at", len(poly))
        if best is None:
            raise SystemExit(f"{name}: no {target}-step polygon found")
        got = knot_poly(best)
        assert got == ref, (got, ref)
        if expect is not None:
            assert got.serialize() in expect, got
        link = require_valid(LatticeLink((tuple(best),)))
        text = f"# {name}: {len(best)}-step lattice polygon, HOMFLY-PT {got}\n" + serialize_lattice_link(link)
        Path(args.out, f"{name}.lat").write_text(text)
        print(name, "written", len(best))


if __name__ == "__main__":
    main()

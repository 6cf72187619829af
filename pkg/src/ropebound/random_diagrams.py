"""Random inputs for property tests: cord diagrams, planar diagrams and lattice links."""

from __future__ import annotations

import random
from fractions import Fraction

from .diagram import PlanarDiagram
from .geometry import Arrangement, NonGenericError
from .lattice import LatticeLink
from .projection import Cord, CordDiagram, perimeter_point

__all__ = ["random_cord_diagram", "random_diagram", "random_lattice_link"]


def random_cord_diagram(n: int, rng: random.Random, column=(0, 0)) -> CordDiagram:
    """n cords with random endpoints (off the corners), pairing and slabs."""
    slots = 16 * n
    params = set()
    while len(params) < 2 * n:
        k = rng.randrange(slots)
        if k % (slots // 4) == 0:
            continue  # corner
        params.add(Fraction(k, slots))
    pts = [perimeter_point(t) for t in params]
    rng.shuffle(pts)
    cords = []
    z = 0
    for i in range(n):
        lo = z
        hi = lo + rng.randrange(3)
        z = hi + 1 + rng.randrange(2)
        cords.append(Cord(column, ("?", 0), ("?", 0), (lo, hi), (0, i), pts[2 * i], pts[2 * i + 1]))
    return CordDiagram.from_cords(column, cords)


def random_diagram(rng: random.Random, max_crossings: int = 8, max_components: int = 2) -> PlanarDiagram:
    """A random oriented diagram with 1..max_crossings crossings.

    The crossing count is drawn uniformly first.  Closed polygons with
    random vertices on a small grid are intersected exactly until one
    arrangement has that many crossings; each crossing then gets a random
    over-strand.  Non-generic draws are discarded.
    """
    target = rng.randint(1, max_crossings)
    while True:
        c = rng.randint(1, max_components)
        curves = []
        for _ in range(c):
            k = rng.randint(3, 7)
            curves.append([(Fraction(rng.randrange(97), 7), Fraction(rng.randrange(89), 7)) for _ in range(k)])
        try:
            arr = Arrangement(curves, closed=True)
            m = len(arr.crossings)
            if m != target:
                continue
            sides = [rng.randrange(2) for _ in range(m)]
            d, _ = arr.to_diagram(lambda x: sides[arr.crossings.index(x)])
        except NonGenericError:
            continue
        return d


_DIRS = ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1))


def random_lattice_link(rng: random.Random, components: int = 1, length: int = 24, moves: int = 400) -> LatticeLink:
    """Random self-avoiding lattice link grown from small squares.

    Components start as unit squares spaced along x and are deformed by
    BFACF moves (which keep the link type) against a shared occupancy set,
    so the result is an unlink whose geometry is random.  ``length`` caps
    the total step count.
    """
    polys = [[(3 * k, 0, 0), (3 * k + 1, 0, 0), (3 * k + 1, 1, 0), (3 * k, 1, 0)] for k in range(components)]
    occ = {v for p in polys for v in p}
    total = 4 * components
    for _ in range(moves):
        poly = polys[rng.randrange(components)]
        n = len(poly)
        i = rng.randrange(n)
        j = (i + 1) % n
        a, b = poly[i], poly[j]
        e = tuple(y - x for x, y in zip(a, b))
        d = rng.choice([d for d in _DIRS if all(x * y == 0 for x, y in zip(d, e))])
        ad, bd = _add(a, d), _add(b, d)
        prev, nxt = poly[i - 1], poly[(j + 1) % n]
        if prev == ad and nxt == bd:
            if n > 4 and rng.random() < 0.5:
                occ.difference_update((a, b))
                poly[:] = [v for k, v in enumerate(poly) if k not in (i, j)]
                total -= 2
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
        elif ad not in occ and bd not in occ and total + 2 <= length:
            occ.update((ad, bd))
            poly[i + 1:i + 1] = [ad, bd]
            total += 2
    return LatticeLink(tuple(tuple(p) for p in polys))


def _add(p, d):
    return (p[0] + d[0], p[1] + d[1], p[2] + d[2])

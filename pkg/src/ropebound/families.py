"""Standard alternating diagrams for the (2,2n) torus links, twist knots and
three-column odd pretzel knots, with their braid-index formulas.

Diagrams are drawn as exact polylines (twist regions are zigzags) and the
crossings are made alternating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import PlanarDiagram
from .geometry import Arrangement

__all__ = ["FamilySpec", "torus2", "twist", "pretzel", "family_braid_index", "family_pd", "family_curves",
           "crossing_number", "alternating_diagram", "alternating_sides"]


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind == "torus2":
            (n,) = self.params
            if n < 1:
                raise ValueError("torus2 needs n >= 1")
        elif self.kind == "twist":
            (n,) = self.params
            if n < 3:
                raise ValueError("twist knots need at least 3 crossings")
        elif self.kind == "pretzel":
            if len(self.params) != 3 or min(self.params) < 0:
                raise ValueError("pretzel needs three non-negative parameters")
        else:
            raise ValueError(f"unknown family {self.kind!r}")

    def __str__(self):
        return f"{self.kind}({','.join(map(str, self.params))})"


def torus2(n: int) -> FamilySpec:
    return FamilySpec("torus2", (n,))


def twist(n: int) -> FamilySpec:
    return FamilySpec("twist", (n,))


def pretzel(k: int, m: int, n: int) -> FamilySpec:
    return FamilySpec("pretzel", (k, m, n))


def crossing_number(f: FamilySpec) -> int:
    if f.kind == "torus2":
        return 2 * f.params[0]
    if f.kind == "twist":
        return f.params[0]
    return 2 * sum(f.params) + 3


def family_braid_index(f: FamilySpec) -> int:
    """Braid index (maximised over orientations) from the closed formulas."""
    if f.kind == "torus2":
        return f.params[0] + 1
    if f.kind == "twist":
        n = f.params[0]
        return (n + 1) // 2 if n % 2 else n // 2 + 1
    return 2 + sum(f.params)


# --- drawing -------------------------------------------------------------------

def _zigzag(x0, y0, c):
    """Two strands twisting c times upward from (x0, y0) and (x0+1, y0)."""
    left = [(x0 + (j % 2), y0 + j) for j in range(c + 1)]
    right = [(x0 + 1 - (j % 2), y0 + j) for j in range(c + 1)]
    return left, right


def _extend(strand, top):
    x, y = strand[-1]
    return strand + [(x, top)] if y < top else strand


def _chain(pieces):
    """Join open polylines sharing endpoints into closed curves."""
    pieces = [list(p) for p in pieces]
    curves = []
    while pieces:
        cur = pieces.pop(0)
        while cur[-1] != cur[0]:
            for i, p in enumerate(pieces):
                if p[0] == cur[-1]:
                    cur += p[1:]
                    pieces.pop(i)
                    break
                if p[-1] == cur[-1]:
                    cur += p[-2::-1]
                    pieces.pop(i)
                    break
            else:
                raise ValueError("open pieces do not close up")
        cur.pop()
        curves.append(_drop_collinear(cur))
    return curves


def _drop_collinear(c):
    out = []
    n = len(c)
    for i in range(n):
        p, q, r = c[i - 1], c[i], c[(i + 1) % n]
        if (q[0] - p[0]) * (r[1] - q[1]) - (q[1] - p[1]) * (r[0] - q[0]) != 0:
            out.append(q)
    return out


def _torus_curves(n):
    c = 2 * n
    left, right = _zigzag(0, 0, c)
    outer = [(0, c), (0, c + 2), (3, c + 2), (3, -2), (0, -2), (0, 0)]
    inner = [(1, c), (1, c + 1), (2, c + 1), (2, -1), (1, -1), (1, 0)]
    return _chain([left, right, outer, inner])


def _twist_curves(n):
    t = n - 2
    left, right = _zigzag(0, 0, t)
    a = Fraction(t - 1, 2)
    # horizontal clasp with two crossings at x in (3, 5)
    p = [(3, a), (4, a + 1), (5, a)]
    q = [(3, a + 1), (4, a), (5, a + 1)]
    top_in = [(1, t), (2, t), (3, a + 1)]
    bot_in = [(1, 0), (2, 0), (3, a)]
    top_out = [(0, t), (0, t + 1), (6, t + 1), (6, a + 1), (5, a + 1)]
    bot_out = [(0, 0), (0, -1), (6, -1), (6, a), (5, a)]
    return _chain([left, right, p, q, top_in, bot_in, top_out, bot_out])


def _pretzel_curves(k, m, n):
    cols = [2 * k + 1, 2 * m + 1, 2 * n + 1]
    H = max(cols)
    pieces = []
    for idx, c in enumerate(cols):
        x0 = 3 * idx
        l, r = _zigzag(x0, 0, c)
        pieces += [_extend(l, H), _extend(r, H)]
    pieces += [
        [(1, H), (1, H + 1), (3, H + 1), (3, H)],
        [(4, H), (4, H + 1), (6, H + 1), (6, H)],
        [(0, H), (0, H + 2), (7, H + 2), (7, H)],
        [(1, 0), (1, -1), (3, -1), (3, 0)],
        [(4, 0), (4, -1), (6, -1), (6, 0)],
        [(0, 0), (0, -2), (7, -2), (7, 0)],
    ]
    return _chain(pieces)


def alternating_diagram(curves) -> PlanarDiagram:
    """PD diagram of closed curves with crossings made alternating."""
    arr = Arrangement(curves, closed=True)
    over = alternating_sides(arr)
    d, _ = arr.to_diagram(lambda c: over[arr.crossings.index(c)])
    return d


def alternating_sides(arr: Arrangement) -> dict[int, int]:
    """Over side (0 = curve_a) of each crossing making the curves alternate."""
    over: dict[int, int] = {}  # crossing -> side that is over
    pending = list(range(len(arr.curves)))
    while pending:
        # prefer a curve already constrained by an assigned crossing
        pick = next((k for k in pending if any(e[2] in over for e in arr.events(k))), pending[0])
        pending.remove(pick)
        ev = arr.events(pick)
        if not ev:
            continue
        base = None
        for idx, (_, _, j, sd) in enumerate(ev):
            if j in over:
                is_over = over[j] == sd
                base = is_over if idx % 2 == 0 else not is_over
                break
        if base is None:
            base = True
        for idx, (_, _, j, sd) in enumerate(ev):
            want_over = base if idx % 2 == 0 else not base
            side = sd if want_over else 1 - sd
            if over.setdefault(j, side) != side:
                raise ValueError("diagram cannot be made alternating")
    return over


def family_pd(f: FamilySpec) -> PlanarDiagram:
    """Standard alternating diagram of the family member (orientation as drawn).

    For torus2 both components run the same way through the twist region,
    as in a two-strand braid closure.
    """
    return alternating_diagram(family_curves(f))


def family_curves(f: FamilySpec) -> list[list]:
    """Closed polylines of the standard drawing of ``f``."""
    if f.kind == "torus2":
        curves = _torus_curves(f.params[0])
        # orient both strands upward through the twist region
        return [c if _goes_up_first(c) else [c[0]] + c[:0:-1] for c in curves]
    if f.kind == "twist":
        return _twist_curves(f.params[0])
    return _pretzel_curves(*f.params)


def _goes_up_first(c):
    # the twist region occupies 0 <= x <= 1, 0 <= y <= 2n; find a segment
    # inside it and check that y increases along it
    n = len(c)
    for i in range(n):
        p, q = c[i], c[(i + 1) % n]
        if 0 <= p[0] <= 1 and 0 <= q[0] <= 1 and p[0] != q[0]:
            return q[1] > p[1]
    raise ValueError("no twist segment found")

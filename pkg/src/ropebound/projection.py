"""Regular projection of a lattice link onto the xy-plane.

The tilt is combinatorial.  Strands that run along the same projected
lattice edge are spread into parallel copies ordered by height: on
x-direction edges higher strands sit toward +y, on y-direction edges
toward +x.  Every strand therefore crosses the boundary of the unit
square around a lattice column at its own point, projected strands never
meet between squares, and all crossings live inside squares visited by
two or more strands.  Inside a square each visit is a cord; the cord
higher up (cords occupy disjoint height intervals) passes over.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .diagram import PlanarDiagram
from .geometry import Arrangement, NonGenericError, Point, as_point
from .lattice import LatticeLink

__all__ = [
    "Cord",
    "CordDiagram",
    "Projection",
    "column_visits",
    "column_cords",
    "project",
    "boundary_param",
    "straight_routing",
    "SIDES",
]

HALF = Fraction(1, 2)
SIDES = ("S", "E", "N", "W")


@dataclass(frozen=True)
class Cord:
    """One visit of a strand to a column's unit square.

    ``start``/``end`` are the entry/exit points in coordinates local to the
    column centre; ``slab`` is the closed height interval of the visit.
    """

    column: tuple[int, int]
    entry: tuple[str, int]
    exit: tuple[str, int]
    slab: tuple[int, int]
    visit: tuple[int, int]  # (component, visit index along it)
    start: Point
    end: Point


@dataclass(frozen=True)
class CordDiagram:
    """Cords of one multi-cord column; endpoints listed counterclockwise.

    ``endpoints`` holds (cord index, "start" | "end", local point) in
    counterclockwise order around the square boundary.
    """

    column: tuple[int, int]
    cords: tuple[Cord, ...]
    endpoints: tuple[tuple[int, str, Point], ...]

    @property
    def n(self) -> int:
        return len(self.cords)

    @classmethod
    def from_cords(cls, column, cords: Sequence[Cord]) -> "CordDiagram":
        cords = tuple(sorted(cords, key=lambda c: c.slab))
        eps = []
        for i, c in enumerate(cords):
            eps.append((i, "start", c.start))
            eps.append((i, "end", c.end))
        eps.sort(key=lambda e: boundary_param(e[2]))
        params = [boundary_param(e[2]) for e in eps]
        if len(set(params)) != len(params):
            raise ValueError("cord endpoints collide on the boundary circle")
        for a, b in zip(cords, cords[1:]):
            if a.slab[1] >= b.slab[0]:
                raise ValueError("cord slabs overlap")
        return cls(column, cords, tuple(eps))

    def to_text(self) -> str:
        lines = [f"column {self.column[0]} {self.column[1]}"]
        for i, c in enumerate(self.cords):
            lines.append(f"cord {i} slab {c.slab[0]} {c.slab[1]}")
        toks = [f"{i}{'s' if tag == 'start' else 'e'}" for i, tag, _ in self.endpoints]
        lines.append("endpoints " + " ".join(toks))
        lines.append("positions " + " ".join(f"{p[0]},{p[1]}" for _, _, p in self.endpoints))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CordDiagram":
        """Parse the cord-diagram format.

        ``positions`` is optional; without it the endpoints are spread
        evenly (counterclockwise, away from the corners) on the square.
        """
        column = (0, 0)
        slabs: dict[int, tuple[int, int]] = {}
        toks: list[str] = []
        positions = None
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, *rest = line.split()
            try:
                if head == "column":
                    column = (int(rest[0]), int(rest[1]))
                elif head == "cord":
                    i = int(rest[0])
                    if rest[1] != "slab":
                        raise ValueError
                    slabs[i] = (int(rest[2]), int(rest[3]))
                elif head == "endpoints":
                    toks = rest
                elif head == "positions":
                    positions = [as_point(tuple(Fraction(v) for v in r.split(","))) for r in rest]
                else:
                    raise ValueError
            except (ValueError, IndexError):
                raise ValueError(f"line {lineno}: cannot parse {raw!r}") from None
        n = len(slabs)
        if sorted(slabs) != list(range(n)) or len(toks) != 2 * n:
            raise ValueError("cord ids must be 0..n-1 with one start and one end each")
        if positions is not None and len(positions) != len(toks):
            raise ValueError("one position per endpoint required")
        if positions is None:
            positions = [perimeter_point(Fraction(2 * k + 1, 4 * n) + Fraction(1, 16 * n)) for k in range(2 * n)]
        starts, ends = {}, {}
        for tok, p in zip(toks, positions):
            i, tag = int(tok[:-1]), tok[-1]
            book = starts if tag == "s" else ends
            if tag not in "se" or i in book:
                raise ValueError(f"bad endpoint token {tok!r}")
            book[i] = p
        cords = [
            Cord(column, ("?", 0), ("?", 0), slabs[i], (0, i), starts[i], ends[i]) for i in range(n)
        ]
        return cls.from_cords(column, cords)


def boundary_param(p: Point) -> Fraction:
    """Counterclockwise position on the unit square centred at the origin, in [0, 1)."""
    u, v = p
    if v == -HALF and -HALF <= u < HALF:
        t = u + HALF
    elif u == HALF and -HALF <= v < HALF:
        t = 1 + v + HALF
    elif v == HALF and -HALF < u <= HALF:
        t = 2 + HALF - u
    elif u == -HALF and -HALF < v <= HALF:
        t = 3 + HALF - v
    else:
        raise ValueError(f"{p} is not on the unit square")
    return t / 4


def perimeter_point(t: Fraction) -> Point:
    """Inverse of boundary_param."""
    s = (Fraction(t) % 1) * 4
    side, r = int(s), s - int(s)
    if side == 0:
        return (r - HALF, -HALF)
    if side == 1:
        return (HALF, r - HALF)
    if side == 2:
        return (HALF - r, HALF)
    return (-HALF, HALF - r)


# --- column visits --------------------------------------------------------------

@dataclass(frozen=True)
class _Visit:
    component: int
    index: int
    column: tuple[int, int]
    zs: tuple[int, ...]
    prev_col: tuple[int, int]
    next_col: tuple[int, int]


def column_visits(link: LatticeLink) -> list[list[_Visit]]:
    """Split each component into maximal runs over a single column."""
    out = []
    for k, comp in enumerate(link.components):
        n = len(comp)
        cols = [(v[0], v[1]) for v in comp]
        starts = [i for i in range(n) if cols[i] != cols[i - 1]]
        if not starts:
            raise ValueError(f"component {k} never leaves its column")
        runs = []
        for r, s in enumerate(starts):
            e = starts[(r + 1) % len(starts)]
            idx = list(range(s, e)) if e > s else list(range(s, n)) + list(range(0, e))
            runs.append(idx)
        visits = []
        for r, idx in enumerate(runs):
            first, last = idx[0], idx[-1]
            visits.append(_Visit(
                k, r, cols[first],
                tuple(comp[i][2] for i in idx),
                cols[first - 1], cols[(last + 1) % n],
            ))
        out.append(visits)
    return out


def _edge_key(c1, c2, z):
    return (min(c1, c2), max(c1, c2))


def _edge_offsets(visits: list[list[_Visit]]) -> dict:
    """Offset of each (edge, height) strand, in (-1/4, 1/4)."""
    by_edge: dict = {}
    for comp in visits:
        for v in comp:
            by_edge.setdefault(_edge_key(v.column, v.next_col, None), set()).add(v.zs[-1])
    off = {}
    for e, zs in by_edge.items():
        zs = sorted(zs)
        k = len(zs)
        for r, z in enumerate(zs):
            off[(e, z)] = ((Fraction(r + 1, k + 1) - HALF) / 2, r)
    return off


def _side_point(col, other, offset) -> tuple[str, Point]:
    dx, dy = other[0] - col[0], other[1] - col[1]
    if (dx, dy) == (1, 0):
        return "E", (HALF, offset)
    if (dx, dy) == (-1, 0):
        return "W", (-HALF, offset)
    if (dx, dy) == (0, 1):
        return "N", (offset, HALF)
    if (dx, dy) == (0, -1):
        return "S", (offset, -HALF)
    raise ValueError("consecutive columns are not adjacent")


def _all_cords(link: LatticeLink) -> dict[tuple[int, int], list[Cord]]:
    visits = column_visits(link)
    off = _edge_offsets(visits)
    by_col: dict = {}
    for comp in visits:
        for v in comp:
            o_in, r_in = off[(_edge_key(v.prev_col, v.column, None), v.zs[0])]
            o_out, r_out = off[(_edge_key(v.column, v.next_col, None), v.zs[-1])]
            s_in, p_in = _side_point(v.column, v.prev_col, o_in)
            s_out, p_out = _side_point(v.column, v.next_col, o_out)
            cord = Cord(
                v.column, (s_in, r_in), (s_out, r_out),
                (min(v.zs), max(v.zs)), (v.component, v.index), p_in, p_out,
            )
            by_col.setdefault(v.column, []).append(cord)
    return by_col


def column_cords(link: LatticeLink, column: tuple[int, int]) -> list[Cord]:
    """Cords of one column, in order of ascending slab."""
    return sorted(_all_cords(link).get(tuple(column), []), key=lambda c: c.slab)


# --- routing ------------------------------------------------------------------------

def side_of(p: Point) -> str:
    u, v = p
    if v == -HALF:
        return "S"
    if u == HALF:
        return "E"
    if v == HALF:
        return "N"
    if u == -HALF:
        return "W"
    raise ValueError(f"{p} is not on the unit square")


def _chord(c: Cord) -> list[Point]:
    side = side_of(c.start)
    if side != side_of(c.end):
        return [c.start, c.end]
    # both ends on one side: bend inward by the distance between them
    (u1, v1), (u2, v2) = c.start, c.end
    if side in ("E", "W"):
        depth = abs(v1 - v2)
        u = u1 - depth if side == "E" else u1 + depth
        return [c.start, (u, (v1 + v2) / 2), c.end]
    depth = abs(u1 - u2)
    v = v1 - depth if side == "N" else v1 + depth
    return [c.start, ((u1 + u2) / 2, v), c.end]


def straight_routing(cd: CordDiagram) -> list[list[Point]]:
    """Default routing: straight chords, bent only where needed.

    A cord whose ends share a side is bent inward.  If the chords are not
    in generic position every cord gets an apex jittered by a small
    rational offset from a fixed-seed generator, shrinking on each retry.
    """
    base = [_chord(c) for c in cd.cords]
    try:
        Arrangement(base, closed=False)
        return base
    except NonGenericError:
        pass
    rng = random.Random(len(base))
    limit = HALF - Fraction(1, 64)
    for attempt in range(100):
        scale = Fraction(1, 8 * (attempt + 1))
        polys = []
        for p in base:
            a, b = p[0], p[-1]
            apex = p[1] if len(p) == 3 else ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
            du = Fraction(rng.randrange(-1000, 1001), 1009) * scale
            dv = Fraction(rng.randrange(-1000, 1001), 1013) * scale
            q = (max(-limit, min(limit, apex[0] + du)), max(-limit, min(limit, apex[1] + dv)))
            polys.append([a, q, b])
        try:
            Arrangement(polys, closed=False)
            return polys
        except NonGenericError:
            continue
    raise NonGenericError("could not perturb chords into generic position")


# --- projection ---------------------------------------------------------------------

@dataclass
class Projection:
    """Result of projecting a lattice link.

    ``routing`` maps every column to the local polylines used for its
    cords (same order as ``cords[column]``).
    """

    link: LatticeLink
    diagram: PlanarDiagram
    cord_diagrams: list[CordDiagram]
    cords: dict[tuple[int, int], list[Cord]]
    routing: dict[tuple[int, int], list[list[Point]]]
    curves: list[list[Point]] = field(repr=False)
    arrangement: Arrangement = field(repr=False)
    crossing_columns: list[tuple[int, int]] = field(repr=False)
    over: list[int] = field(repr=False, default_factory=list)  # per arrangement crossing

    @property
    def sum_n(self) -> int:
        return sum(cd.n for cd in self.cord_diagrams)

    def per_column_n(self) -> list[tuple[tuple[int, int], int]]:
        return [(cd.column, cd.n) for cd in self.cord_diagrams]


def project(
    link: LatticeLink,
    orientation: Sequence[bool] | None = None,
    routing: Mapping[tuple[int, int], list[list[Point]]] | None = None,
) -> Projection:
    """Project along z (relabel axes first) and build the PD diagram.

    ``orientation`` flags components to reverse.  ``routing`` overrides
    the polylines used inside given columns; each must start and end at
    the cord endpoints (cords listed by ascending slab).
    """
    if orientation is not None:
        link = link.reoriented(orientation)
    by_col = _all_cords(link)
    cords = {col: sorted(cs, key=lambda c: c.slab) for col, cs in sorted(by_col.items())}
    cds = [CordDiagram.from_cords(col, cs) for col, cs in cords.items() if len(cs) >= 2]
    routes: dict = {}
    for col, cs in cords.items():
        if routing is not None and col in routing:
            polys = [list(map(as_point, p)) for p in routing[col]]
            for c, p in zip(cs, polys):
                if p[0] != c.start or p[-1] != c.end:
                    raise ValueError(f"splice mismatch in column {col}")
            if len(polys) != len(cs):
                raise ValueError(f"splice mismatch in column {col}")
        elif len(cs) >= 2:
            polys = straight_routing(CordDiagram.from_cords(col, cs))
        else:
            polys = [_chord(cs[0])]
        routes[col] = polys
    # assemble global closed curves in visit order
    seg_cord = []  # per curve: list of (column, cord index) per segment
    curves = []
    by_visit = {c.visit: (col, i) for col, cs in cords.items() for i, c in enumerate(cs)}
    for k in range(len(link.components)):
        pts: list[Point] = []
        owners = []
        r = 0
        while (k, r) in by_visit:
            col, i = by_visit[(k, r)]
            poly = routes[col][i]
            glob = [(p[0] + col[0], p[1] + col[1]) for p in poly]
            pts.extend(glob[:-1])
            owners.extend([(col, i)] * (len(glob) - 1))
            r += 1
        curves.append(pts)
        seg_cord.append(owners)
    arr = Arrangement(curves, closed=True)
    crossing_columns = []

    def over_side(c):
        col_a, ia = seg_cord[c.curve_a][c.seg_a]
        col_b, ib = seg_cord[c.curve_b][c.seg_b]
        if col_a != col_b:
            raise AssertionError("crossing between different squares")
        sa, sb = cords[col_a][ia].slab, cords[col_b][ib].slab
        if ia == ib:
            raise AssertionError("a cord crosses itself")
        return 0 if sa[0] > sb[1] else 1

    diagram, order = arr.to_diagram(over_side)
    for j in order:
        c = arr.crossings[j]
        crossing_columns.append(seg_cord[c.curve_a][c.seg_a][0])
    over = [over_side(c) for c in arr.crossings]
    return Projection(link, diagram, cds, cords, routes, curves, arr, crossing_columns, over)

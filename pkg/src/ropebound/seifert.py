"""Seifert smoothing, companion arcs, and coherent rerouting of cord diagrams.

Positions on the boundary circle C are the counterclockwise parameters
in [0, 1) given by ``projection.boundary_param``.

Coherent routing.  Cords are inserted one at a time in ascending slab
order.  Cord number i (of n) runs in from its start along the ray towards
the centre to the concentric square of half-size (i+1)/(2(n+1)), follows
that square clockwise, and runs back out to its end.  Each new cord thus
travels along its companion arc outside everything placed before it and
only meets the radial stubs of earlier cords.  Smoothing those meetings
splices the new cord into the existing partial circles.  When the
companion of the new cord overlaps some partial circle's companion in
two separate arcs, exactly one new closed circle appears; otherwise none
does.  Every smoothed curve moves clockwise wherever it is not radial,
so closed circles wind once around the centre in the clockwise sense.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .diagram import PlanarDiagram
from .geometry import Arrangement, Point, as_point, point_in_polygon, signed_area
from .projection import CordDiagram, Projection, boundary_param, perimeter_point, project

__all__ = [
    "ArcOnCircle",
    "CordRealization",
    "SeifertResult",
    "CoherentResult",
    "smooth",
    "seifert_circles",
    "companion_arc",
    "classify_overlap",
    "smooth_cord_realization",
    "make_coherent",
    "is_coherent",
    "rewrite_diagram",
    "CoherenceError",
]

HALF = Fraction(1, 2)


class CoherenceError(AssertionError):
    """An internal postcondition of the coherence construction failed."""


# --- whole diagrams -----------------------------------------------------------------

@dataclass(frozen=True)
class SeifertResult:
    closed: int
    matching: dict[int, int] | None = None  # cord whose start begins a partial circle -> cord whose end it reaches
    open_paths: tuple = field(default=(), repr=False)
    closed_cycles: tuple = field(default=(), repr=False)

    @property
    def count(self) -> int:
        return self.closed


def seifert_circles(d: PlanarDiagram) -> list[list[int]]:
    """Arc cycles of the Seifert circles (crossing-free loops omitted)."""
    nxt = {}
    for i in range(d.n_crossings):
        (uin, uout), (oin, oout) = d.strands(i)
        nxt[uin] = oout
        nxt[oin] = uout
    seen = set()
    out = []
    for a in d.arcs:
        if a in seen:
            continue
        cyc = []
        while a not in seen:
            seen.add(a)
            cyc.append(a)
            a = nxt[a]
        out.append(cyc)
    return out


def smooth(d: PlanarDiagram) -> SeifertResult:
    """Number of Seifert circles s(D)."""
    return SeifertResult(len(seifert_circles(d)) + d.loops)


# --- arcs on C ------------------------------------------------------------------------

@dataclass(frozen=True)
class ArcOnCircle:
    """Arc of C from ``start`` to ``end`` traversed in the given sense.

    Parameters are counterclockwise positions in [0, 1).
    """

    start: Fraction
    end: Fraction
    clockwise: bool = True

    def __post_init__(self):
        object.__setattr__(self, "start", Fraction(self.start) % 1)
        object.__setattr__(self, "end", Fraction(self.end) % 1)
        if self.start == self.end:
            raise ValueError("degenerate arc: start equals end")

    @property
    def ccw_span(self) -> tuple[Fraction, Fraction]:
        """(lo, hi) such that the arc is the counterclockwise sweep lo -> hi."""
        return (self.end, self.start) if self.clockwise else (self.start, self.end)

    @property
    def length(self) -> Fraction:
        lo, hi = self.ccw_span
        return (hi - lo) % 1

    def contains(self, t) -> bool:
        """True for points strictly inside the arc."""
        lo, _ = self.ccw_span
        d = (Fraction(t) - lo) % 1
        return 0 < d < self.length


def companion_arc(start, end, clockwise: bool = True) -> ArcOnCircle:
    """Companion of an oriented cord from ``start`` to ``end`` (positions on C)."""
    if not isinstance(start, Fraction) and isinstance(start, tuple):
        start = boundary_param(as_point(start))
    if not isinstance(end, Fraction) and isinstance(end, tuple):
        end = boundary_param(as_point(end))
    return ArcOnCircle(start, end, clockwise)


def classify_overlap(A: ArcOnCircle, B: ArcOnCircle) -> str:
    """One of "disjoint", "nested", "single-arc", "two-arc"."""
    ends = [A.start, A.end, B.start, B.end]
    if len(set(ends)) < 4:
        raise ValueError("arcs share an endpoint (not in general position)")
    b_in_a = sum(A.contains(t) for t in (B.start, B.end))
    a_in_b = sum(B.contains(t) for t in (A.start, A.end))
    if b_in_a == 0 and a_in_b == 0:
        return "disjoint"
    if b_in_a == 2 and a_in_b == 2:
        return "two-arc"
    if b_in_a == 2 or a_in_b == 2:
        return "nested"
    return "single-arc"


# --- cord realizations ---------------------------------------------------------------

@dataclass(frozen=True)
class CordRealization:
    """Concrete polylines (local coordinates) for the cords of ``cd``."""

    cd: CordDiagram
    polylines: tuple[tuple[Point, ...], ...]

    def __post_init__(self):
        polys = tuple(tuple(as_point(p) for p in poly) for poly in self.polylines)
        object.__setattr__(self, "polylines", polys)
        if len(polys) != self.cd.n:
            raise ValueError("one polyline per cord required")
        for c, poly in zip(self.cd.cords, polys):
            if poly[0] != c.start or poly[-1] != c.end:
                raise ValueError("polyline endpoints differ from the cord endpoints")
            for p in poly[1:-1]:
                if max(abs(p[0]), abs(p[1])) >= HALF:
                    raise ValueError("cord leaves the open disk bounded by C")

    def arrangement(self) -> Arrangement:
        return Arrangement([list(p) for p in self.polylines], closed=False)

    def crossing_count(self) -> int:
        return len(self.arrangement().crossings)


def smooth_cord_realization(r: CordRealization) -> SeifertResult:
    """Smooth every crossing; report closed circles and the start->end matching."""
    if r.cd.n == 0:
        return SeifertResult(0, {})
    arr = r.arrangement()
    open_paths, cycles = arr.smooth()
    pieces = arr._piece_table
    matching = {}
    polys = []
    for path in open_paths:
        k0 = pieces[path[0]][0]
        k1 = pieces[path[-1]][0]
        matching[k0] = k1
        polys.append((k0, k1, tuple(arr.path_polyline(path))))
    closed = tuple(tuple(arr.path_polyline(c, closed=True)) for c in cycles)
    if len(open_paths) != r.cd.n:
        raise CoherenceError("smoothing did not give one partial circle per cord")
    return SeifertResult(len(cycles), matching, tuple(polys), closed)


def _radius(i: int, n: int) -> Fraction:
    return Fraction(i + 1, 2 * (n + 1))


def _corner_params():
    return [(Fraction(0), (-HALF, -HALF)), (Fraction(1, 4), (HALF, -HALF)),
            (Fraction(1, 2), (HALF, HALF)), (Fraction(3, 4), (-HALF, HALF))]


def staple(start: Point, end: Point, r: Fraction) -> list[Point]:
    """Radial in, clockwise along the square of half-size r, radial out."""
    k = 2 * r
    ts, te = boundary_param(start), boundary_param(end)
    span = (ts - te) % 1
    corners = sorted(
        ((ts - c) % 1, pt) for c, pt in _corner_params() if 0 < (ts - c) % 1 < span
    )
    pts = [start, (start[0] * k, start[1] * k)]
    pts += [(pt[0] * k, pt[1] * k) for _, pt in corners]
    pts += [(end[0] * k, end[1] * k), end]
    return pts


def _boundary_path(t0: Fraction, t1: Fraction, clockwise: bool) -> list[Point]:
    """Points along the unit square from param t0 to t1 (both included)."""
    if clockwise:
        span = (t0 - t1) % 1
        mids = sorted(((t0 - c) % 1, pt) for c, pt in _corner_params() if 0 < (t0 - c) % 1 < span)
    else:
        span = (t1 - t0) % 1
        mids = sorted(((c - t0) % 1, pt) for c, pt in _corner_params() if 0 < (c - t0) % 1 < span)
    return [perimeter_point(t0)] + [pt for _, pt in mids] + [perimeter_point(t1)]


@dataclass(frozen=True)
class CoherentResult:
    realization: CordRealization
    closed: int
    cases: tuple[int, ...]  # case (1 or 2) of each insertion after the first
    forest: dict[int, int | None]  # partial circle (by start cord) -> enclosing partial circle
    matching: dict[int, int]

    @property
    def n(self) -> int:
        return self.realization.cd.n


def make_coherent(cd: CordDiagram, check: bool = True) -> CoherentResult:
    """Equivalent coherent realization with n partial and at most n-1 closed circles."""
    n = cd.n
    params = [boundary_param(p) for _, _, p in cd.endpoints]
    if len(set(params)) != len(params):
        raise ValueError("endpoint collision on C")
    polys = [staple(c.start, c.end, _radius(i, n)) for i, c in enumerate(cd.cords)]
    cases = []
    prev = None
    for m in range(1, n + 1):
        sub = CordDiagram(cd.column, cd.cords[:m], tuple(e for e in cd.endpoints if e[0] < m))
        res = smooth_cord_realization(CordRealization(sub, polys[:m]))
        if prev is not None:
            new = companion_arc(boundary_param(cd.cords[m - 1].start), boundary_param(cd.cords[m - 1].end))
            two = any(
                classify_overlap(new, _partial_arc(cd, s, e)) == "two-arc"
                for s, e in prev.matching.items()
            )
            case = 2 if two else 1
            if res.closed - prev.closed != case - 1:
                raise CoherenceError(
                    f"insertion {m}: case {case} but closed count went {prev.closed} -> {res.closed}"
                )
            cases.append(case)
        prev = res
    real = CordRealization(cd, polys)
    res = smooth_cord_realization(real) if n else SeifertResult(0, {})
    closed = res.closed
    if closed != cases.count(2):
        raise CoherenceError("closed count differs from the number of case-2 insertions")
    if n and closed > n - 1:
        raise CoherenceError(f"{closed} closed circles for {n} cords")
    forest = _forest(cd, res.matching or {})
    if check and not is_coherent(real):
        raise CoherenceError("constructed realization is not coherent")
    return CoherentResult(real, closed, tuple(cases), forest, dict(res.matching or {}))


def _partial_arc(cd: CordDiagram, s: int, e: int, clockwise: bool = True) -> ArcOnCircle:
    return ArcOnCircle(boundary_param(cd.cords[s].start), boundary_param(cd.cords[e].end), clockwise)


def _forest(cd, matching) -> dict[int, int | None]:
    arcs = {s: _partial_arc(cd, s, e) for s, e in matching.items()}
    parent = {}
    for s, a in arcs.items():
        best = None
        for t, b in arcs.items():
            if t != s and classify_overlap(a, b) == "nested" and b.length > a.length:
                if best is None or b.length < arcs[best].length:
                    best = t
        parent[s] = best
    return parent


def _sample(poly: Sequence[Point]) -> Point:
    p, q = poly[0], poly[1]
    return ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)


def is_coherent(r: CordRealization) -> bool:
    """Check coherence for C oriented clockwise, then counterclockwise."""
    if r.cd.n == 0:
        return True
    res = smooth_cord_realization(r)  # NonGenericError propagates
    return any(_coherent_for(r.cd, res, cw) for cw in (True, False))


def _coherent_for(cd: CordDiagram, res: SeifertResult, clockwise: bool) -> bool:
    closed = [list(c) for c in res.closed_cycles]
    # (i) co-oriented with C and pairwise nested
    for c in closed:
        area = signed_area(c)
        if (area < 0) != clockwise:
            return False
    for i in range(len(closed)):
        for j in range(i + 1, len(closed)):
            if not (point_in_polygon(_sample(closed[i]), closed[j])
                    or point_in_polygon(_sample(closed[j]), closed[i])):
                return False
    partial = []
    for s, e, poly in res.open_paths:
        arc = _partial_arc(cd, s, e, clockwise)
        back = _boundary_path(arc.end, arc.start, not clockwise)
        domain = list(poly) + back[1:-1]
        partial.append((arc, list(poly), domain))
    # (ii) no closed circle inside a partial circle's domain
    for arc, poly, dom in partial:
        for c in closed:
            if point_in_polygon(_sample(c), dom):
                return False
    # (iii) domains nested or disjoint
    for i in range(len(partial)):
        for j in range(i + 1, len(partial)):
            a, pa, da = partial[i]
            b, pb, db = partial[j]
            kind = classify_overlap(a, b)
            a_in_b = point_in_polygon(_sample(pa), db)
            b_in_a = point_in_polygon(_sample(pb), da)
            if kind == "disjoint":
                if a_in_b or b_in_a:
                    return False
            elif kind == "nested":
                if b.length < a.length:
                    a_in_b, b_in_a = b_in_a, a_in_b
                if not a_in_b or b_in_a:
                    return False
            else:
                return False
    return True


# --- K -> K' --------------------------------------------------------------------------

def rewrite_diagram(proj: Projection, results: Sequence[CoherentResult] | None = None) -> Projection:
    """Splice coherent routings into every multi-cord column.

    ``results`` must follow ``proj.cord_diagrams``; they are computed when
    omitted.
    """
    if results is None:
        results = [make_coherent(cd) for cd in proj.cord_diagrams]
    if len(results) != len(proj.cord_diagrams):
        raise ValueError("splice mismatch: one coherent result per cord diagram required")
    routing = {}
    for cd, res in zip(proj.cord_diagrams, results):
        if res.realization.cd.endpoints != cd.endpoints:
            raise ValueError(f"splice mismatch in column {cd.column}: endpoint order disagrees")
        routing[cd.column] = [list(p) for p in res.realization.polylines]
    return project(proj.link, routing=routing)

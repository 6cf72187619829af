"""Exact rational plane geometry for polyline arrangements.

Curves are polylines with ``Fraction`` coordinates, open or closed.  An
arrangement records every transversal crossing between segments; any
touching, overlap, crossing at a vertex, or triple point is rejected as
non-generic.  Arrangements can be turned into PD diagrams (closed curves,
with an over/under rule supplied by the caller) or smoothed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .diagram import PlanarDiagram

Point = tuple[Fraction, Fraction]

__all__ = [
    "NonGenericError",
    "Crossing",
    "Arrangement",
    "as_point",
    "cross",
    "point_in_polygon",
    "signed_area",
]


class NonGenericError(ValueError):
    """Curves touch, overlap, or meet at a vertex or in a triple point."""


def as_point(p) -> Point:
    return (Fraction(p[0]), Fraction(p[1]))


def cross(u, v) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def _sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def _intersect(p1, p2, q1, q2):
    """Parameters (t, u) of a transversal interior crossing, else None.

    Raises NonGenericError for collinear overlap or contact at an endpoint.
    """
    r = _sub(p2, p1)
    s = _sub(q2, q1)
    den = cross(r, s)
    qp = _sub(q1, p1)
    if den == 0:
        if cross(qp, r) == 0:
            # collinear: overlapping extents are non-generic
            rr = r[0] * r[0] + r[1] * r[1]
            t0 = (qp[0] * r[0] + qp[1] * r[1]) / rr
            t1 = t0 + (s[0] * r[0] + s[1] * r[1]) / rr
            lo, hi = min(t0, t1), max(t0, t1)
            if hi >= 0 and lo <= 1:
                raise NonGenericError("collinear overlapping segments")
        return None
    t = cross(qp, s) / den
    u = cross(qp, r) / den
    if t < 0 or t > 1 or u < 0 or u > 1:
        return None
    if t in (0, 1) or u in (0, 1):
        raise NonGenericError("segments meet at a vertex")
    return t, u


@dataclass(frozen=True)
class Crossing:
    curve_a: int
    seg_a: int
    t_a: Fraction
    curve_b: int
    seg_b: int
    t_b: Fraction
    point: Point


class Arrangement:
    """Crossings and pieces of a family of polylines in generic position.

    Consecutive segments of one curve share a vertex, which is allowed;
    a closed curve's vertex list does not repeat its first point.
    """

    def __init__(self, curves: Sequence[Sequence], closed: Sequence[bool] | bool = True):
        self.curves = [[as_point(p) for p in c] for c in curves]
        if isinstance(closed, bool):
            closed = [closed] * len(self.curves)
        self.closed = list(closed)
        for c, cl in zip(self.curves, self.closed):
            if len(c) < (3 if cl else 2):
                raise ValueError("curve too short")
        for k in range(len(self.curves)):
            if any(p == q for p, q in self.segments(k)):
                raise NonGenericError(f"curve {k} has a repeated consecutive vertex")
        self.crossings = self._find_crossings()
        self._events = self._sort_events()

    def segments(self, k: int):
        c = self.curves[k]
        n = len(c)
        m = n if self.closed[k] else n - 1
        return [(c[i], c[(i + 1) % n]) for i in range(m)]

    def _find_crossings(self) -> list[Crossing]:
        segs = []
        for k in range(len(self.curves)):
            for i, (p, q) in enumerate(self.segments(k)):
                box = (min(p[0], q[0]), max(p[0], q[0]), min(p[1], q[1]), max(p[1], q[1]))
                segs.append((k, i, p, q, box))
        out = []
        points = set()
        nseg = {k: len(self.segments(k)) for k in range(len(self.curves))}
        for x in range(len(segs)):
            k1, i1, p1, p2, b1 = segs[x]
            for y in range(x + 1, len(segs)):
                k2, i2, q1, q2, b2 = segs[y]
                if b1[1] < b2[0] or b2[1] < b1[0] or b1[3] < b2[2] or b2[3] < b1[2]:
                    continue
                adjacent = k1 == k2 and (
                    abs(i1 - i2) == 1
                    or (self.closed[k1] and {i1, i2} == {0, nseg[k1] - 1})
                )
                if adjacent:
                    if nseg[k1] > 2 or not self.closed[k1]:
                        r, s = _sub(p2, p1), _sub(q2, q1)
                        if cross(r, s) == 0 and r[0] * s[0] + r[1] * s[1] < 0:
                            raise NonGenericError("curve doubles back on itself")
                    continue
                hit = _intersect(p1, p2, q1, q2)
                if hit is None:
                    continue
                t, u = hit
                pt = (p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1]))
                if pt in points:
                    raise NonGenericError(f"triple point at {pt}")
                points.add(pt)
                out.append(Crossing(k1, i1, t, k2, i2, u, pt))
        return out

    def _sort_events(self):
        ev: dict[int, list[tuple[int, Fraction, int, int]]] = {k: [] for k in range(len(self.curves))}
        for j, c in enumerate(self.crossings):
            ev[c.curve_a].append((c.seg_a, c.t_a, j, 0))
            ev[c.curve_b].append((c.seg_b, c.t_b, j, 1))
        for k in ev:
            ev[k].sort()
        return ev

    def events(self, k: int):
        """Crossing visits along curve k, in order: (seg, t, crossing index, side)."""
        return self._events[k]

    def direction(self, j: int, side: int) -> Point:
        c = self.crossings[j]
        k, i = (c.curve_a, c.seg_a) if side == 0 else (c.curve_b, c.seg_b)
        p, q = self.segments(k)[i]
        return _sub(q, p)

    # -- pieces ------------------------------------------------------------
    def _pieces(self):
        """Split curves at crossings.

        Returns (pieces, into, outof) where a piece is (curve, index) and
        into[(j, side)] / outof[(j, side)] give the piece arriving at /
        leaving crossing j along the given side.
        """
        pieces = []
        into, outof = {}, {}
        for k in range(len(self.curves)):
            ev = self.events(k)
            m = len(ev)
            if self.closed[k]:
                for idx in range(m):
                    pid = len(pieces)
                    pieces.append((k, idx))
                    j, sd = ev[idx][2], ev[idx][3]
                    j2, sd2 = ev[(idx + 1) % m][2], ev[(idx + 1) % m][3]
                    outof[(j, sd)] = pid
                    into[(j2, sd2)] = pid
                if m == 0:
                    pieces.append((k, -1))
            else:
                for idx in range(m + 1):
                    pid = len(pieces)
                    pieces.append((k, idx))
                    if idx > 0:
                        j, sd = ev[idx - 1][2], ev[idx - 1][3]
                        outof[(j, sd)] = pid
                    if idx < m:
                        j2, sd2 = ev[idx][2], ev[idx][3]
                        into[(j2, sd2)] = pid
        return pieces, into, outof

    def piece_points(self, k: int, idx: int) -> list[Point]:
        """Vertices of piece ``idx`` of curve k (crossing points included)."""
        c = self.curves[k]
        n = len(c)
        ev = self.events(k)
        m = len(ev)
        if self.closed[k] and m == 0:
            return list(c) + [c[0]]

        def at(e):
            seg, t, j, _ = e
            return self.crossings[j].point, seg

        if self.closed[k]:
            start_pt, s0 = at(ev[idx])
            end_pt, s1 = at(ev[(idx + 1) % m])
            if idx == m - 1:  # wraps past the first vertex
                verts = list(range(s0 + 1, n)) + list(range(0, s1 + 1))
            else:
                verts = list(range(s0 + 1, s1 + 1))
            return [start_pt] + [c[v] for v in verts] + [end_pt]
        # open curve
        if idx == 0:
            pts = [c[0]]
            s0 = 0
        else:
            p, s0 = at(ev[idx - 1])
            pts = [p]
        if idx == m:
            pts += [c[s] for s in range(s0 + 1, n)]
            return pts
        p, s1 = at(ev[idx])
        pts += [c[s] for s in range(s0 + 1, s1 + 1)]
        pts.append(p)
        return pts

    # -- smoothing -----------------------------------------------------------
    def smooth(self):
        """Oriented smoothing at every crossing.

        Returns (open_paths, closed_cycles): each open path is a list of
        piece ids from a curve start to a curve end; each closed cycle is
        a list of piece ids.
        """
        pieces, into, outof = self._pieces()
        nxt = {}
        for j in range(len(self.crossings)):
            nxt[into[(j, 0)]] = outof[(j, 1)]
            nxt[into[(j, 1)]] = outof[(j, 0)]
        used = set()
        open_paths = []
        for k in range(len(self.curves)):
            if self.closed[k]:
                continue
            pid = pieces.index((k, 0))
            path = [pid]
            used.add(pid)
            while pid in nxt:
                pid = nxt[pid]
                path.append(pid)
                used.add(pid)
            open_paths.append(path)
        cycles = []
        for pid in range(len(pieces)):
            if pid in used:
                continue
            cyc = []
            while pid not in used:
                used.add(pid)
                cyc.append(pid)
                if pid not in nxt:
                    break
                pid = nxt[pid]
            cycles.append(cyc)
        self._piece_table = pieces
        return open_paths, cycles

    def path_polyline(self, path: Sequence[int], closed: bool = False) -> list[Point]:
        pieces = self._pieces()[0]
        pts: list[Point] = []
        for pid in path:
            k, idx = pieces[pid]
            pp = self.piece_points(k, idx)
            if pts and pts[-1] == pp[0]:
                pp = pp[1:]
            pts.extend(pp)
        if closed and len(pts) > 1 and pts[0] == pts[-1]:
            pts.pop()
        return pts

    # -- PD ----------------------------------------------------------------
    def to_diagram(self, over_side: Callable[[Crossing], int]) -> tuple[PlanarDiagram, list[int]]:
        """PD diagram of an arrangement of closed curves.

        ``over_side(c)`` returns 0 if curve_a is over at crossing c, 1 if
        curve_b is.  Crossings are listed in order of first visit along
        the curves; the returned list maps diagram crossing index to
        arrangement crossing index.
        """
        if not all(self.closed):
            raise ValueError("PD diagrams need closed curves")
        pieces, into, outof = self._pieces()
        order = []
        seen = set()
        for k in range(len(self.curves)):
            for _, _, j, _ in self.events(k):
                if j not in seen:
                    seen.add(j)
                    order.append(j)
        label = {pid: pid + 1 for pid in range(len(pieces))}
        xs, ss = [], []
        for j in order:
            c = self.crossings[j]
            o = over_side(c)
            u = 1 - o
            du, do = self.direction(j, u), self.direction(j, o)
            sgn = 1 if cross(do, du) > 0 else -1
            uin, uout = label[into[(j, u)]], label[outof[(j, u)]]
            oin, oout = label[into[(j, o)]], label[outof[(j, o)]]
            if sgn > 0:
                xs.append((uin, oout, uout, oin))
            else:
                xs.append((uin, oin, uout, oout))
            ss.append(sgn)
        loops = sum(1 for k in range(len(self.curves)) if not self.events(k))
        return PlanarDiagram(tuple(xs), tuple(ss), loops).normalized(), order


def signed_area(poly: Sequence[Point]) -> Fraction:
    n = len(poly)
    return sum(cross(poly[i], poly[(i + 1) % n]) for i in range(n)) / 2


def winding_number(pt: Point, poly: Sequence[Point]) -> int:
    """Winding number of a closed polygon about a point not on it."""
    wn = 0
    n = len(poly)
    x, y = pt
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        if p[1] <= y:
            if q[1] > y and cross(_sub(q, p), _sub(pt, p)) > 0:
                wn += 1
        else:
            if q[1] <= y and cross(_sub(q, p), _sub(pt, p)) < 0:
                wn -= 1
    return wn


def point_in_polygon(pt: Point, poly: Sequence[Point]) -> bool:
    return winding_number(pt, poly) != 0

"""HOMFLY-PT polynomial by skein-tree recursion, and the MFW braid bounds.

Convention: ``a*H(D+) - a^-1*H(D-) = z*H(D0)`` with the unknot equal to 1.

The split-union factor follows from a single kink: its positive and
negative versions are both unknots and its smoothing is the 2-unlink, so
``a - a^-1 = z * H(2-unlink)``, i.e. ``delta = (a - a^-1) z^-1``.  A
c-component unlink evaluates to ``delta**(c-1)``.
"""

from __future__ import annotations

import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

from .diagram import PlanarDiagram
from .laurent import LaurentPoly2, ONE

__all__ = [
    "DELTA",
    "CrossingCapExceeded",
    "OddSpanError",
    "HomflyResult",
    "AbsoluteMfwResult",
    "homfly",
    "a_span",
    "mfw_bound",
    "homfly_result",
    "absolute_mfw",
    "orientations",
    "DEFAULT_CAP",
]

DELTA = LaurentPoly2({(-1, 1): 1, (-1, -1): -1})
DEFAULT_CAP = int(os.environ.get("ROPEBOUND_CAP", "24"))


class CrossingCapExceeded(RuntimeError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"diagram has {n} crossings, above the cap of {cap}")
        self.n = n
        self.cap = cap


class OddSpanError(ArithmeticError):
    pass


def _delta_power(k: int) -> LaurentPoly2:
    return DELTA ** k


# --- canonical memo keys ------------------------------------------------------

def canonical_key(d: PlanarDiagram) -> tuple:
    """Encoding of a connected diagram, minimal over all relabellings.

    For every choice of starting arc the arcs are renumbered by walking
    the starting component and then, in label order, entering unvisited
    components at the head crossing of each labelled arc.
    """
    heads = d._ends()[0]
    best = None
    for start in d.arcs:
        lab = _relabel_from(d, start, heads)
        enc = tuple(sorted(
            (tuple(lab[v] for v in x), s) for x, s in zip(d.crossings, d.signs)
        ))
        if best is None or enc < best:
            best = enc
    return (best, d.loops)


def _relabel_from(d, start, heads):
    lab: dict[int, int] = {}
    n = 0
    order = []

    def walk(a):
        nonlocal n
        while a not in lab:
            n += 1
            lab[a] = n
            order.append(a)
            a = d.successor(a)

    walk(start)
    k = 0
    while k < len(order):
        i, _ = heads[order[k]]
        x, s = d.crossings[i], d.signs[i]
        oin = 3 if s > 0 else 1
        for p in (0, oin):
            if x[p] not in lab:
                walk(x[p])
        k += 1
    return lab


# --- recursion ----------------------------------------------------------------

def _first_bad_crossing(d: PlanarDiagram, reverse_order: bool = False) -> int | None:
    """First crossing met from below when walking from the basepoints.

    Components are walked in order of their minimal arc label (or maximal,
    for the alternative strategy), each starting at the tail of that arc.
    None means the diagram is descending, hence an unlink.
    """
    comps = d.components()
    if reverse_order:
        comps = [c[c.index(max(c)):] + c[:c.index(max(c))] for c in comps]
        comps.sort(key=max, reverse=True)
    heads = d._ends()[0]
    seen: set[int] = set()
    for cyc in comps:
        for a in cyc:
            i, p = heads[a]
            if i in seen:
                continue
            if p == 0:
                return i
            seen.add(i)
    return None


class _Engine:
    def __init__(self, cap: int, reverse_order: bool = False, reduce_kinks: bool = True):
        self.cap = cap
        self.reverse_order = reverse_order
        self.reduce_kinks = reduce_kinks
        self.memo: dict = {}
        self.lock = threading.Lock()

    def run(self, d: PlanarDiagram) -> LaurentPoly2:
        if d.n_crossings > self.cap:
            raise CrossingCapExceeded(d.n_crossings, self.cap)
        return self._eval(d)

    def _eval(self, d: PlanarDiagram) -> LaurentPoly2:
        if self.reduce_kinks:
            d = _strip_kinks(d)
        if d.n_crossings == 0:
            return _delta_power(d.loops - 1) if d.loops > 1 else ONE
        parts = d.split_parts()
        extra = len(parts) - 1 + d.loops
        if len(parts) > 1 or d.loops:
            result = _delta_power(extra)
            for part in parts:
                result = result * self._connected(part)
            return result
        return self._connected(d)

    def _connected(self, d: PlanarDiagram) -> LaurentPoly2:
        key = canonical_key(d)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        i = _first_bad_crossing(d, self.reverse_order)
        if i is None:
            val = _delta_power(len(d.components()) - 1)
        else:
            switched = self._eval(d.switch(i))
            smoothed = self._eval(d.smooth(i))
            if d.signs[i] > 0:
                # H+ = a^-2 H- + a^-1 z H0
                val = switched.shift(a=-2) + smoothed.shift(z=1, a=-1)
            else:
                # H- = a^2 H+ - a z H0
                val = switched.shift(a=2) - smoothed.shift(z=1, a=1)
        with self.lock:
            val = self.memo.setdefault(key, val)
        return val


def _strip_kinks(d: PlanarDiagram) -> PlanarDiagram:
    changed = True
    while changed:
        changed = False
        for i, x in enumerate(d.crossings):
            if len(set(x)) < 4:
                d = d.remove_kink(i)
                changed = True
                break
    return d


def homfly(d: PlanarDiagram, cap: int | None = None, *, strategy: str = "default") -> LaurentPoly2:
    """HOMFLY-PT polynomial of an oriented diagram.

    ``strategy`` selects the basepoint rule ("default": minimal labels
    first; "reverse": maximal labels first) or disables kink stripping
    ("plain").  All strategies return the same polynomial.
    """
    if strategy not in ("default", "reverse", "plain"):
        raise ValueError(f"unknown strategy {strategy!r}")
    cap = DEFAULT_CAP if cap is None else cap
    eng = _Engine(
        cap,
        reverse_order=(strategy == "reverse"),
        reduce_kinks=(strategy != "plain"),
    )
    return eng.run(d)


# --- MFW bounds ---------------------------------------------------------------

def a_span(p: LaurentPoly2) -> tuple[int, int]:
    """Lowest and highest powers of ``a``."""
    if p.is_zero():
        raise ValueError("a_span of the zero polynomial")
    ex = p.a_exponents()
    return ex[0], ex[-1]


def mfw_bound(p: LaurentPoly2) -> int:
    """Braid index lower bound ``(E - e)/2 + 1``; odd spans raise."""
    e, E = a_span(p)
    if (E - e) % 2:
        raise OddSpanError(f"a-span {E - e} is odd; no MFW bound")
    return (E - e) // 2 + 1


@dataclass(frozen=True)
class HomflyResult:
    poly: LaurentPoly2
    e: int
    E: int
    b0: int

    def as_dict(self) -> dict:
        return {"poly": self.poly.serialize(), "e": self.e, "E": self.E, "b0": self.b0}


def homfly_result(d: PlanarDiagram, cap: int | None = None) -> HomflyResult:
    p = homfly(d, cap)
    e, E = a_span(p)
    return HomflyResult(p, e, E, mfw_bound(p))


@dataclass(frozen=True)
class AbsoluteMfwResult:
    rows: tuple[tuple[tuple[bool, ...], HomflyResult], ...]
    B0: int
    witness: tuple[bool, ...]


def orientations(c: int) -> list[tuple[bool, ...]]:
    """All assignments with component 0 fixed forward (True = reversed)."""
    if c < 1:
        raise ValueError("need at least one component")
    return [(False,) + rest for rest in product((False, True), repeat=c - 1)]


def absolute_mfw(d: PlanarDiagram, cap: int | None = None, workers: int = 1) -> AbsoluteMfwResult:
    """Maximise the MFW bound over orientations of the components of ``d``.

    Crossing-free loops only contribute a factor ``delta`` whatever their
    orientation, so they are not enumerated.
    """
    c = len(d.components())
    flags = orientations(max(c, 1))

    def one(f):
        dd = d.reverse(f) if c else d
        return f, homfly_result(dd, cap)

    if workers > 1 and len(flags) > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            rows = tuple(ex.map(one, flags))
    else:
        rows = tuple(one(f) for f in flags)
    best = max(rows, key=lambda r: r[1].b0)  # first maximiser in enumeration order
    return AbsoluteMfwResult(rows, best[1].b0, best[0])

"""Oriented planar link diagrams in PD form.

Each crossing is a 4-tuple of arc labels listed counterclockwise starting
from the incoming under-strand, together with a sign.  The under-strand
always runs from position 0 to position 2.  For a positive crossing the
over-strand runs from position 3 to position 1, for a negative one from
position 1 to position 3.

Crossing-free closed components are kept as a separate ``loops`` count.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

__all__ = [
    "PlanarDiagram",
    "DiagramError",
    "parse_pd",
    "pd_code",
]


class DiagramError(ValueError):
    """Raised for structurally invalid diagrams or malformed PD text."""


def _over_in_pos(sign: int) -> int:
    return 3 if sign > 0 else 1


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[tuple[int, int, int, int], ...] = ()
    signs: tuple[int, ...] = ()
    loops: int = 0
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(v) for v in x) for x in self.crossings))
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if len(self.crossings) != len(self.signs):
            raise DiagramError("one sign per crossing required")
        if any(s not in (1, -1) for s in self.signs):
            raise DiagramError("crossing signs must be +1 or -1")
        if any(len(x) != 4 for x in self.crossings):
            raise DiagramError("crossings must have four arc-ends")
        if self.loops < 0:
            raise DiagramError("negative loop count")
        self._ends()  # validates arc incidence

    # -- structure -------------------------------------------------------
    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def _ends(self):
        """Map each arc to ((head crossing, pos), (tail crossing, pos))."""
        if "ends" in self._cache:
            return self._cache["ends"]
        heads: dict[int, tuple[int, int]] = {}
        tails: dict[int, tuple[int, int]] = {}
        for i, (x, s) in enumerate(zip(self.crossings, self.signs)):
            oin = _over_in_pos(s)
            for p, lab in enumerate(x):
                incoming = p == 0 or p == oin
                book = heads if incoming else tails
                if lab in book:
                    raise DiagramError(f"arc {lab} has two {'heads' if incoming else 'tails'}")
                book[lab] = (i, p)
        if set(heads) != set(tails):
            bad = sorted(set(heads) ^ set(tails))
            raise DiagramError(f"arcs {bad} do not have exactly one head and one tail")
        self._cache["ends"] = (heads, tails)
        return heads, tails

    @property
    def arcs(self) -> list[int]:
        return sorted(self._ends()[0])

    def head(self, arc: int) -> tuple[int, int]:
        return self._ends()[0][arc]

    def tail(self, arc: int) -> tuple[int, int]:
        return self._ends()[1][arc]

    def successor(self, arc: int) -> int:
        """The arc continuing ``arc`` straight through its head crossing."""
        i, p = self.head(arc)
        return self.crossings[i][(p + 2) % 4]

    def components(self) -> list[list[int]]:
        """Arc cycles of the components, ordered by minimal arc label.

        Each cycle starts at its minimal arc and follows the orientation.
        Crossing-free loops are not listed (see ``loops``).
        """
        if "components" in self._cache:
            return self._cache["components"]
        seen: set[int] = set()
        comps = []
        for start in self.arcs:
            if start in seen:
                continue
            cyc = []
            a = start
            while a not in seen:
                seen.add(a)
                cyc.append(a)
                a = self.successor(a)
            comps.append(cyc)
        self._cache["components"] = comps
        return comps

    @property
    def n_components(self) -> int:
        return len(self.components()) + self.loops

    def component_of(self) -> dict[int, int]:
        return {a: k for k, cyc in enumerate(self.components()) for a in cyc}

    def strands(self, i: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """((under_in, under_out), (over_in, over_out)) arc labels at crossing i."""
        x, s = self.crossings[i], self.signs[i]
        oin = _over_in_pos(s)
        return (x[0], x[2]), (x[oin], x[(oin + 2) % 4])

    def writhe(self) -> int:
        return sum(self.signs)

    # -- local moves -----------------------------------------------------
    def switch(self, i: int) -> "PlanarDiagram":
        """Exchange over and under at crossing i."""
        a, b, c, d = self.crossings[i]
        if self.signs[i] > 0:
            new, sign = (d, a, b, c), -1
        else:
            new, sign = (b, c, d, a), 1
        xs = list(self.crossings)
        ss = list(self.signs)
        xs[i], ss[i] = new, sign
        return PlanarDiagram(tuple(xs), tuple(ss), self.loops)

    def smooth(self, i: int) -> "PlanarDiagram":
        """Orientation-respecting smoothing of crossing i."""
        (uin, uout), (oin, oout) = self.strands(i)
        return self._splice_out(i, [(uin, oout), (oin, uout)])

    def _splice_out(self, i: int, joins: Sequence[tuple[int, int]]) -> "PlanarDiagram":
        parent = {a: a for a in self.arcs}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for into, out in joins:
            ra, rb = find(into), find(out)
            if ra != rb:
                parent[rb] = ra
        xs = []
        ss = []
        for j, (x, s) in enumerate(zip(self.crossings, self.signs)):
            if j == i:
                continue
            xs.append(tuple(find(v) for v in x))
            ss.append(s)
        used = {v for x in xs for v in x}
        classes = {find(a) for a in self.arcs}
        loops = self.loops + len(classes - used)
        return PlanarDiagram(tuple(xs), tuple(ss), loops)

    def remove_kink(self, i: int) -> "PlanarDiagram":
        """Reidemeister I removal at a crossing whose arc returns to it."""
        x = self.crossings[i]
        if len(set(x)) == 4:
            raise DiagramError(f"crossing {i} is not a kink")
        # smoothing a kink closes the kink arc on itself and reconnects the
        # through strand, which is R1 removal plus one extra loop
        d = self.smooth(i)
        return PlanarDiagram(d.crossings, d.signs, d.loops - 1)

    def reverse(self, flags: Sequence[bool]) -> "PlanarDiagram":
        """Reverse the components flagged True (indexed as in ``components``).

        Loops are unaffected by reversal.
        """
        comps = self.components()
        if len(flags) != len(comps) + self.loops and len(flags) != len(comps):
            raise DiagramError("one flag per component required")
        comp_of = self.component_of()
        rev = {a for a in comp_of if flags[comp_of[a]]}
        xs, ss = [], []
        for x, s in zip(self.crossings, self.signs):
            under_rev = x[0] in rev
            oin = _over_in_pos(s)
            over_rev = x[oin] in rev
            if under_rev:
                x = (x[2], x[3], x[0], x[1])
            if under_rev != over_rev:
                s = -s
            xs.append(x)
            ss.append(s)
        return PlanarDiagram(tuple(xs), tuple(ss), self.loops).normalized()

    def mirror(self) -> "PlanarDiagram":
        return PlanarDiagram(
            tuple(self.switch(i).crossings[i] for i in range(self.n_crossings)),
            tuple(-s for s in self.signs),
            self.loops,
        )

    # -- labels ----------------------------------------------------------
    def normalized(self) -> "PlanarDiagram":
        """Relabel arcs 1..N consecutively along each component.

        Components are taken in order of the earliest-listed crossing they
        visit; each starts with the arc entering that crossing (the
        under-strand's arc if the component visits it twice).  This is the
        labelling that ``parse_pd`` relies on to orient components that
        pass over every crossing they meet.
        """
        if "normalized" in self._cache:
            return self._cache["normalized"]
        comps = self.components()
        heads = self._ends()[0]
        order = []
        for cyc in comps:
            first = min(cyc, key=lambda a: (heads[a][0], heads[a][1] != 0))
            k = cyc.index(first)
            order.append((heads[first][0], cyc[k:] + cyc[:k]))
        order.sort(key=lambda t: t[0])
        relabel = {}
        n = 1
        for _, cyc in order:
            for a in cyc:
                relabel[a] = n
                n += 1
        out = PlanarDiagram(
            tuple(tuple(relabel[v] for v in x) for x in self.crossings), self.signs, self.loops
        )
        self._cache["normalized"] = out
        return out

    def split_parts(self) -> list["PlanarDiagram"]:
        """Connected pieces (by shared crossings); loops are not included."""
        comps = self.components()
        comp_of = self.component_of()
        parent = list(range(len(comps)))

        def find(k):
            while parent[k] != k:
                parent[k] = parent[parent[k]]
                k = parent[k]
            return k

        for x in self.crossings:
            r1, r2 = find(comp_of[x[0]]), find(comp_of[x[1]])
            if r1 != r2:
                parent[r2] = r1
        groups: dict[int, list[int]] = {}
        for i, x in enumerate(self.crossings):
            groups.setdefault(find(comp_of[x[0]]), []).append(i)
        return [
            PlanarDiagram(
                tuple(self.crossings[i] for i in idx), tuple(self.signs[i] for i in idx), 0
            )
            for idx in groups.values()
        ]

    def __len__(self):
        return self.n_crossings


# --- PD text -----------------------------------------------------------------

_PD_RE = re.compile(r"^\s*PD\[(.*)\]\s*(?:;\s*loops\s*=\s*(\d+)\s*)?$", re.S)
_X_RE = re.compile(r"X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def pd_code(d: PlanarDiagram) -> str:
    """Emit ``PD[X[a,b,c,d], ...]; loops=k`` with normalized labels."""
    n = d.normalized()
    body = ", ".join("X[%d,%d,%d,%d]" % x for x in n.crossings)
    return f"PD[{body}]; loops={n.loops}"


def parse_pd(text: str) -> PlanarDiagram:
    """Parse PD text and recover crossing signs from the arc structure.

    Orientation is forced along any component that passes under at least
    one crossing.  A component that only passes over is oriented so its
    labels increase; for a two-arc component, so that its smaller label
    enters the earlier-listed crossing.
    """
    m = _PD_RE.match(text.strip())
    if not m:
        raise DiagramError("expected PD[X[a,b,c,d], ...] optionally followed by '; loops=k'")
    body = m.group(1).strip()
    loops = int(m.group(2) or 0)
    tuples = []
    if body:
        pos = 0
        for xm in _X_RE.finditer(body):
            gap = body[pos:xm.start()].strip().strip(",").strip()
            if gap:
                raise DiagramError(f"unexpected text in PD body: {gap!r}")
            tuples.append(tuple(int(g) for g in xm.groups()))
            pos = xm.end()
        if body[pos:].strip():
            raise DiagramError(f"unexpected text in PD body: {body[pos:].strip()!r}")
    if not tuples:
        return PlanarDiagram((), (), loops)
    return PlanarDiagram(tuple(tuples), _infer_signs(tuples), loops)


def _infer_signs(tuples: list[tuple[int, ...]]) -> tuple[int, ...]:
    occ: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(tuples):
        for p, lab in enumerate(x):
            if lab <= 0:
                raise DiagramError(f"arc labels must be positive integers, got {lab}")
            occ.setdefault(lab, []).append((i, p))
    for lab, where in occ.items():
        if len(where) != 2:
            raise DiagramError(f"arc {lab} appears {len(where)} times (expected 2)")
    # direction[(i, p)] = True if the arc-end at (i, p) is incoming
    direction: dict[tuple[int, int], bool] = {}
    stack = []

    def assign(end, incoming):
        if end in direction:
            if direction[end] != incoming:
                raise DiagramError("inconsistent orientation in PD code")
            return
        direction[end] = incoming
        stack.append(end)

    for i in range(len(tuples)):
        assign((i, 0), True)
        assign((i, 2), False)

    def propagate():
        while stack:
            i, p = stack.pop()
            inc = direction[(i, p)]
            lab = tuples[i][p]
            other = [e for e in occ[lab] if e != (i, p)][0]
            assign(other, not inc)
            if p in (1, 3):
                assign((i, 4 - p), not inc)

    propagate()
    # components made only of over-passes
    for i in range(len(tuples)):
        if (i, 1) in direction:
            continue
        cyc = _over_cycle(tuples, occ, i)
        labels = [lab for (_, _, lab) in cyc]
        lo = min(labels)
        if len(labels) >= 3:
            k = labels.index(lo)
            nxt = labels[(k + 1) % len(labels)]
            prv = labels[k - 1]
            forward = nxt < prv
        else:
            # two arcs: smaller label enters the earlier-listed crossing
            k = labels.index(lo)
            j_enter_forward = cyc[(k + 1) % len(cyc)][0]
            j_enter_backward = cyc[k][0]
            forward = j_enter_forward <= j_enter_backward
        # cyc entries are (crossing, pos_in, label_out) in one traversal direction
        for (j, p_in, _lab) in cyc:
            assign((j, p_in), forward)
        propagate()
    signs = []
    for i in range(len(tuples)):
        signs.append(1 if direction[(i, 3)] else -1)
    return tuple(signs)


def _over_cycle(tuples, occ, i0):
    """Walk an over-only component; returns (crossing, entry pos, arc label leaving) steps."""
    out = []
    i, p_in = i0, 3
    while True:
        p_out = 4 - p_in
        lab = tuples[i][p_out]
        out.append((i, p_in, lab))
        nxt = [e for e in occ[lab] if e != (i, p_out)][0]
        i, p_in = nxt
        if p_in not in (1, 3):
            raise DiagramError("component mixes determined and undetermined crossings")
        if (i, p_in) == (i0, 3):
            break
        if len(out) > 4 * len(tuples):
            raise DiagramError("malformed PD code")
    return out

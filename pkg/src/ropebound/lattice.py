"""Links embedded in the cubic lattice as closed unit-step polygons."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple, Sequence

__all__ = [
    "LatticeError",
    "LatticeLink",
    "StepCounts",
    "Violation",
    "ValidationReport",
    "parse_lattice_link",
    "serialize_lattice_link",
    "load_lattice_link",
    "validate",
    "require_valid",
    "step_counts",
    "choose_projection_axis",
    "relabel_axes",
    "fixture_path",
    "load_fixture",
    "FIXTURES",
]

Point3 = tuple[int, int, int]


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class LatticeLink:
    components: tuple[tuple[Point3, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "components",
            tuple(tuple(tuple(int(c) for c in v) for v in comp) for comp in self.components),
        )

    @property
    def length(self) -> int:
        return sum(len(c) for c in self.components)

    def reoriented(self, flags: Sequence[bool]) -> "LatticeLink":
        """Reverse the components whose flag is True (vertex 0 kept first)."""
        if len(flags) != len(self.components):
            raise ValueError("one orientation flag per component required")
        comps = []
        for comp, rev in zip(self.components, flags):
            comps.append((comp[0],) + tuple(reversed(comp[1:])) if rev else comp)
        return LatticeLink(tuple(comps))

    def steps(self, k: int):
        comp = self.components[k]
        n = len(comp)
        return [(comp[i], comp[(i + 1) % n]) for i in range(n)]


class StepCounts(NamedTuple):
    x_steps: int
    y_steps: int
    z_steps: int

    @property
    def total(self) -> int:
        return self.x_steps + self.y_steps + self.z_steps


class Violation(NamedTuple):
    kind: str  # "non-unit-step" | "self-intersection" | "too-short"
    component: int
    vertex: int
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(f"{v.kind}: {v.message}" for v in self.violations)


# --- text format -------------------------------------------------------------

def parse_lattice_link(text: str) -> LatticeLink:
    """Blocks of ``x y z`` lines, one block per component; ``#`` comments.

    Coordinates are plain decimal integers separated by single spaces, so
    that serialization reproduces the input exactly.
    """
    comps: list[list[Point3]] = []
    cur: list[Point3] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if raw.startswith("#"):
            continue
        if not raw.strip():
            if cur:
                comps.append(cur)
                cur = []
            continue
        parts = raw.split(" ")
        if len(parts) != 3:
            raise LatticeError(f"line {lineno}: expected 'x y z' separated by single spaces, got {raw!r}")
        col = 1
        for p in parts:
            if not _INT_RE.fullmatch(p):
                raise LatticeError(f"line {lineno}, column {col}: non-integer coordinate {p!r}")
            col += len(p) + 1
        cur.append(tuple(int(p) for p in parts))  # type: ignore[arg-type]
    if cur:
        comps.append(cur)
    if not comps:
        raise LatticeError("no components found")
    return LatticeLink(tuple(tuple(c) for c in comps))


_INT_RE = re.compile(r"0|-?[1-9][0-9]*")


def serialize_lattice_link(link: LatticeLink) -> str:
    blocks = ["\n".join(f"{x} {y} {z}" for x, y, z in comp) for comp in link.components]
    return "\n\n".join(blocks) + "\n"


def load_lattice_link(path) -> LatticeLink:
    return parse_lattice_link(Path(path).read_text())


# --- validation ------------------------------------------------------------------

def validate(link: LatticeLink) -> ValidationReport:
    out = []
    owner: dict[Point3, tuple[int, int]] = {}
    for k, comp in enumerate(link.components):
        n = len(comp)
        if n < 4:
            out.append(Violation("too-short", k, 0, f"component {k} has {n} vertices (< 4)"))
        for i, v in enumerate(comp):
            w = comp[(i + 1) % n]
            if n > 1 and sum(abs(a - b) for a, b in zip(v, w)) != 1:
                out.append(Violation(
                    "non-unit-step", k, i,
                    f"component {k}: step {i} from {v} to {w} is not a unit lattice step",
                ))
            if v in owner:
                k0, i0 = owner[v]
                out.append(Violation(
                    "self-intersection", k, i,
                    f"vertex {v} (component {k}, index {i}) repeats component {k0}, index {i0}",
                ))
            else:
                owner[v] = (k, i)
    return ValidationReport(tuple(out))


def require_valid(link: LatticeLink) -> LatticeLink:
    rep = validate(link)
    if not rep.ok:
        raise LatticeError(str(rep))
    return link


def step_counts(link: LatticeLink) -> StepCounts:
    c = Counter()
    for k in range(len(link.components)):
        for v, w in link.steps(k):
            axis = next(i for i in range(3) if v[i] != w[i])
            c[axis] += 1
    return StepCounts(c[0], c[1], c[2])


def choose_projection_axis(counts: StepCounts) -> tuple[int, int, int]:
    """Cyclic coordinate permutation putting the busiest axis last.

    Returns ``perm`` with new coordinate ``i`` taken from old coordinate
    ``perm[i]``.  Ties prefer z, then y, then x.  Only cyclic
    permutations are used, so the relabelling is a rotation and preserves
    chirality.
    """
    vals = (counts.x_steps, counts.y_steps, counts.z_steps)
    best = max((2, 1, 0), key=lambda a: vals[a])  # max() keeps the first maximiser
    return {2: (0, 1, 2), 1: (2, 0, 1), 0: (1, 2, 0)}[best]


def relabel_axes(link: LatticeLink, perm: tuple[int, int, int]) -> LatticeLink:
    return LatticeLink(tuple(
        tuple((v[perm[0]], v[perm[1]], v[perm[2]]) for v in comp) for comp in link.components
    ))


# --- shipped fixtures --------------------------------------------------------------

FIXTURES = ("trefoil24", "figure8_30", "knot51_34")


def fixture_path(name: str) -> Path:
    p = Path(__file__).parent / "data" / f"{name}.lat"
    if not p.exists():
        raise FileNotFoundError(f"no fixture named {name!r}")
    return p


def load_fixture(name: str) -> LatticeLink:
    return load_lattice_link(fixture_path(name))

"""Command-line front end: ``python -m ropebound <subcommand> ...``.

Exit status: 0 on success, 1 for bad input (missing file, parse error,
invalid link, crossing cap exceeded), 2 for usage errors, 3 when an
internal consistency check fails, which means a bug in this package.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path
from typing import Sequence

from .bounds import BoundsCertificate, CertificateError, certify, ropelength_lower
from .diagram import DiagramError, PlanarDiagram, parse_pd, pd_code
from .families import FamilySpec, crossing_number, family_braid_index, family_pd
from .homfly import CrossingCapExceeded, OddSpanError, a_span, absolute_mfw, homfly
from .lattice import (
    FIXTURES,
    LatticeError,
    LatticeLink,
    choose_projection_axis,
    fixture_path,
    load_lattice_link,
    relabel_axes,
    step_counts,
    validate,
)
from .projection import CordDiagram, project
from .random_diagrams import random_cord_diagram
from .render import render_cords, render_family, render_rewrite
from .seifert import CoherenceError, smooth

__all__ = ["main", "run", "build_parser", "parse_report", "SCHEMA"]

SCHEMA = 1
DEFAULT_SEED = 0

EXIT_OK, EXIT_USER, EXIT_INTERNAL = 0, 1, 3


class UserError(Exception):
    pass


# --- inputs ---------------------------------------------------------------------------

def _resolve(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    stem = p.name[:-4] if p.name.endswith(".lat") else p.name
    if stem in FIXTURES:
        return fixture_path(stem)
    raise UserError(f"{path}: no such file")


def _read(path: str) -> str:
    return _resolve(path).read_text()


def _load_link(path: str) -> LatticeLink:
    return load_lattice_link(_resolve(path))


def _load_pd(path: str) -> PlanarDiagram:
    return parse_pd(_read(path))


def _orientation(bits: str | None, c: int) -> tuple[bool, ...] | None:
    if bits is None:
        return None
    if len(bits) != c or set(bits) - {"0", "1"}:
        raise UserError(f"--orientation needs {c} bits of 0/1, got {bits!r}")
    if bits[0] != "0":
        raise UserError("--orientation: component 0 keeps its orientation (first bit must be 0)")
    return tuple(b == "1" for b in bits)


def _cap(args) -> int | None:
    if args.cap is not None:
        cap = args.cap
    elif os.environ.get("ROPEBOUND_CAP"):
        cap = int(os.environ["ROPEBOUND_CAP"])
    else:
        return None
    if cap < 1:
        raise UserError("crossing cap must be at least 1")
    return cap


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("ROPEBOUND_SEED", DEFAULT_SEED))


def _structured(kind: str, body: dict) -> str:
    return json.dumps({"schema": SCHEMA, "kind": kind, **body}, indent=2) + "\n"


def parse_report(text: str) -> dict:
    """Inverse of the ``--format structured`` output."""
    d = json.loads(text)
    if d.get("schema") != SCHEMA or "kind" not in d:
        raise ValueError("not a ropebound report")
    if d["kind"] == "bounds":
        d["certificate"] = BoundsCertificate.from_dict(d["certificate"])
    return d


# --- subcommands ----------------------------------------------------------------------

def cmd_validate(args) -> tuple[int, str]:
    link = _load_link(args.input)
    rep = validate(link)
    counts = step_counts(link)
    if args.format == "structured":
        return (EXIT_OK if rep.ok else EXIT_USER), _structured("validate", {
            "ok": rep.ok,
            "L": link.length,
            "components": len(link.components),
            "steps": list(counts[:3]),
            "violations": [str(v) for v in rep.violations],
        })
    if rep.ok:
        return EXIT_OK, f"ok: {len(link.components)} component(s), L={link.length}, steps x,y,z={tuple(counts[:3])}\n"
    return EXIT_USER, "".join(f"violation: {v}\n" for v in rep.violations)


def _projected(args):
    link = _load_link(args.input)
    rep = validate(link)
    if not rep.ok:
        raise UserError(f"invalid lattice link: {rep.violations[0]}")
    link = relabel_axes(link, choose_projection_axis(step_counts(link)))
    return project(link, orientation=_orientation(args.orientation, len(link.components)))


def cmd_project(args) -> tuple[int, str]:
    proj = _projected(args)
    pd = pd_code(proj.diagram)
    if args.format == "svg":
        return EXIT_OK, render_rewrite(proj.link)
    if args.format == "structured":
        return EXIT_OK, _structured("project", {
            "pd": pd,
            "crossings": proj.diagram.n_crossings,
            "sum_n": proj.sum_n,
            "cord_diagrams": [cd.to_text() for cd in proj.cord_diagrams],
        })
    out = [pd, f"crossings={proj.diagram.n_crossings} sum_n={proj.sum_n}"]
    for cd in proj.cord_diagrams:
        out.append("")
        out.append(cd.to_text().rstrip("\n"))
    return EXIT_OK, "\n".join(out) + "\n"


def _pd_oriented(args) -> PlanarDiagram:
    d = _load_pd(args.input)
    c = len(d.components())  # crossing-free loops have no orientation to choose
    flags = _orientation(args.orientation, max(c, 1))
    return d.reverse(flags) if flags and c else d


def cmd_seifert(args) -> tuple[int, str]:
    d = _pd_oriented(args)
    s = smooth(d).count
    if args.format == "structured":
        return EXIT_OK, _structured("seifert", {"pd": pd_code(d), "s": s})
    return EXIT_OK, f"s(D)={s}\n"


def cmd_homfly(args) -> tuple[int, str]:
    d = _pd_oriented(args)
    p = homfly(d, _cap(args))
    if args.format == "structured":
        e, E = a_span(p)
        body = {"pd": pd_code(d), "poly": p.serialize(), "e": e, "E": E}
        if (E - e) % 2 == 0:
            body["b0"] = (E - e) // 2 + 1
        return EXIT_OK, _structured("homfly", body)
    return EXIT_OK, p.serialize() + "\n"


def cmd_bounds(args) -> tuple[int, str]:
    link = _load_link(args.input)
    rep = validate(link)
    if not rep.ok:
        raise UserError(f"invalid lattice link: {rep.violations[0]}")
    cert = certify(link, _cap(args), workers=args.workers)
    if args.format == "structured":
        return EXIT_OK, _structured("bounds", {"summary": cert.summary(), "certificate": cert.as_dict()})
    if args.format == "svg":
        return EXIT_OK, render_rewrite(link)
    return EXIT_OK, cert.summary() + "\n"


def _family_spec(args) -> FamilySpec:
    try:
        if args.kind == "pretzel":
            return FamilySpec("pretzel", (args.k, args.m, args.n))
        if args.n is None:
            raise UserError(f"{args.kind} needs --n")
        return FamilySpec(args.kind, (args.n,))
    except (TypeError, ValueError) as exc:
        raise UserError(str(exc)) from exc


def cmd_family(args) -> tuple[int, str]:
    f = _family_spec(args)
    if args.format == "svg":
        return EXIT_OK, render_family(f)
    d = family_pd(f)
    b = family_braid_index(f)
    if args.format == "structured":
        res = absolute_mfw(d, _cap(args))
        return EXIT_OK, _structured("family", {
            "family": str(f),
            "pd": pd_code(d),
            "crossing_number": crossing_number(f),
            "braid_index_formula": b,
            "B0": res.B0,
            "ropelength_greater_than": str(ropelength_lower(b)),
        })
    return EXIT_OK, f"{pd_code(d)}\nbraid_index_formula={b}\n"


def cmd_render(args) -> tuple[int, str]:
    if args.random_cords is not None:
        if args.random_cords < 1:
            raise UserError("--random-cords needs at least one cord")
        cd = random_cord_diagram(args.random_cords, random.Random(_seed(args)))
        return EXIT_OK, render_cords(cd)
    if args.input is None:
        raise UserError("render needs an input file or --random-cords N")
    text = _read(args.input)
    if text.lstrip().startswith("column"):
        return EXIT_OK, render_cords(CordDiagram.from_text(text))
    link = _load_link(args.input)
    rep = validate(link)
    if not rep.ok:
        raise UserError(f"invalid lattice link: {rep.violations[0]}")
    return EXIT_OK, render_rewrite(link, _orientation(args.orientation, len(link.components)))


# --- driver ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--orientation", help="one bit per component, first bit 0 (1 = reversed)")
    common.add_argument("--cap", type=int, help="crossing cap for HOMFLY-PT (env ROPEBOUND_CAP)")
    common.add_argument("--format", choices=("text", "structured", "svg"), default="text")
    common.add_argument("--seed", type=int, help="seed for random inputs (env ROPEBOUND_SEED)")
    common.add_argument("--out", help="write output here instead of stdout")

    ap = argparse.ArgumentParser(prog="ropebound", description="Ropelength lower bounds for lattice links.")
    sub = ap.add_subparsers(dest="cmd", required=True)
    for name, helptext in (
        ("validate", "check a lattice link file"),
        ("project", "PD code and cord diagrams of a lattice link"),
        ("seifert", "Seifert circle count of a PD file"),
        ("homfly", "HOMFLY-PT polynomial of a PD file"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("input")
    p = sub.add_parser("bounds", parents=[common], help="full certificate for a lattice link")
    p.add_argument("input")
    p.add_argument("--workers", type=int, default=1, help="threads for the per-orientation runs")
    p = sub.add_parser("family", parents=[common], help="standard diagram of a family member")
    p.add_argument("kind", choices=("torus2", "twist", "pretzel"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p = sub.add_parser("render", parents=[common], help="SVG of a lattice link or cord diagram")
    p.add_argument("input", nargs="?")
    p.add_argument("--random-cords", type=int, metavar="N", help="render a random N-cord diagram")
    return ap


COMMANDS = {
    "validate": cmd_validate,
    "project": cmd_project,
    "seifert": cmd_seifert,
    "homfly": cmd_homfly,
    "bounds": cmd_bounds,
    "family": cmd_family,
    "render": cmd_render,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.cmd == "family" and args.kind == "pretzel" and args.n is None:
        args.n = 0
    try:
        code, text = COMMANDS[args.cmd](args)
    except (CertificateError, CoherenceError, AssertionError) as exc:
        print(f"internal check failed: {exc}", file=stderr)
        return EXIT_INTERNAL
    except CrossingCapExceeded as exc:
        print(f"error: {exc} (raise --cap)", file=stderr)
        return EXIT_USER
    except (UserError, LatticeError, DiagramError, OddSpanError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USER
    if args.out:
        Path(args.out).write_text(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())

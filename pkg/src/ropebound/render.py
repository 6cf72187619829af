"""SVG pictures of projected diagrams, family drawings and cord diagrams.

Pictures are for people; nothing is computed from them.  Under-strands
are broken at crossings by redrawing a short piece of the over-strand on
a white halo.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import Sequence

from .families import FamilySpec, alternating_sides, family_curves
from .geometry import Arrangement
from .lattice import LatticeLink, choose_projection_axis, relabel_axes, step_counts
from .projection import CordDiagram, Projection, project, straight_routing
from .seifert import CordRealization, make_coherent, rewrite_diagram, smooth_cord_realization

__all__ = ["render_curves", "render_projection", "render_family", "render_cords", "render_rewrite", "to_svg"]

SCALE = 40
PAD = 20
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")
SVG_NS = "http://www.w3.org/2000/svg"


def _fmt(v) -> str:
    return f"{float(v):.3f}".rstrip("0").rstrip(".")


class _Panel:
    """A group with its own world-to-pixel map (y up)."""

    def __init__(self, points, title: str):
        xs = [p[0] for p in points] or [0]
        ys = [p[1] for p in points] or [0]
        self.x0, self.y1 = min(xs), max(ys)
        self.w = float(max(xs) - self.x0) * SCALE + 2 * PAD
        self.h = float(self.y1 - min(ys)) * SCALE + 2 * PAD + 20
        self.g = ET.Element("g")
        t = ET.SubElement(self.g, "text", x=str(PAD), y="14", **{"font-size": "12", "font-family": "sans-serif"})
        t.text = title

    def xy(self, p):
        return (float(p[0] - self.x0) * SCALE + PAD, float(self.y1 - p[1]) * SCALE + PAD + 20)

    def line(self, pts, color, width=2.0, closed=False, dash=None):
        s = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in map(self.xy, pts))
        attrs = {"points": s, "fill": "none", "stroke": color, "stroke-width": _fmt(width),
                 "stroke-linejoin": "round", "stroke-linecap": "round"}
        if dash:
            attrs["stroke-dasharray"] = dash
        ET.SubElement(self.g, "polygon" if closed else "polyline", **attrs)


def _over_patches(panel: _Panel, arr: Arrangement, over: Sequence[int], colors):
    for j, c in enumerate(arr.crossings):
        k, seg = (c.curve_a, c.seg_a) if over[j] == 0 else (c.curve_b, c.seg_b)
        pts = arr.curves[k]
        p, q = pts[seg], pts[(seg + 1) % len(pts)]
        d = (q[0] - p[0], q[1] - p[1])
        norm = max(abs(d[0]), abs(d[1]))
        e = Fraction(1, 6) / norm if norm else 0
        a = (c.point[0] - d[0] * e, c.point[1] - d[1] * e)
        b = (c.point[0] + d[0] * e, c.point[1] + d[1] * e)
        panel.line([a, b], "white", 7.0)
        panel.line([a, b], colors[k % len(colors)], 2.0)


def render_curves(curves, over: Sequence[int], title: str = "", closed: bool = True) -> _Panel:
    arr = Arrangement([list(c) for c in curves], closed=closed)
    panel = _Panel([p for c in arr.curves for p in c], title)
    for k, c in enumerate(arr.curves):
        panel.line(c, COLORS[k % len(COLORS)], closed=closed)
    _over_patches(panel, arr, over, COLORS)
    return panel


def to_svg(panels: Sequence[_Panel], gap: int = 10) -> str:
    """Lay panels out left to right in one SVG document."""
    width = sum(p.w for p in panels) + gap * max(len(panels) - 1, 0)
    height = max((p.h for p in panels), default=0)
    root = ET.Element("svg", xmlns=SVG_NS, width=_fmt(width), height=_fmt(height),
                      viewBox=f"0 0 {_fmt(width)} {_fmt(height)}")
    ET.SubElement(root, "rect", width="100%", height="100%", fill="white")
    x = 0.0
    for p in panels:
        p.g.set("transform", f"translate({_fmt(x)},0)")
        root.append(p.g)
        x += p.w + gap
    return ET.tostring(root, encoding="unicode") + "\n"


def _projection_panel(proj: Projection, title: str) -> _Panel:
    return render_curves(proj.curves, proj.over, f"{title}: {proj.diagram.n_crossings} crossings")


def render_projection(proj: Projection, title: str = "K") -> str:
    return to_svg([_projection_panel(proj, title)])


def render_family(f: FamilySpec) -> str:
    curves = family_curves(f)
    over = alternating_sides(Arrangement(curves, closed=True))
    arr_over = [over[j] for j in range(len(over))]
    return to_svg([render_curves(curves, arr_over, str(f))])


def _cord_panel(r: CordRealization, title: str, show_smoothing: bool) -> _Panel:
    h = Fraction(1, 2)
    box = [(-h, -h), (h, -h), (h, h), (-h, h)]
    arr = r.arrangement()
    panel = _Panel(box, title)
    panel.line(box, "#999999", 1.0, closed=True, dash="4,3")
    # cords sorted by ascending slab: the later cord is over
    over = [0 if c.curve_a > c.curve_b else 1 for c in arr.crossings]
    for k, c in enumerate(arr.curves):
        panel.line(c, COLORS[k % len(COLORS)])
    _over_patches(panel, arr, over, COLORS)
    if show_smoothing:
        res = smooth_cord_realization(r)
        for cyc in res.closed_cycles:
            panel.line(cyc, "black", 1.0, closed=True, dash="2,2")
    return panel


def render_cords(cd: CordDiagram) -> str:
    """A cord diagram with straight chords next to its coherent rewriting."""
    before = CordRealization(cd, straight_routing(cd))
    after = make_coherent(cd).realization
    return to_svg([
        _cord_panel(before, f"column {cd.column}: straight", True),
        _cord_panel(after, f"column {cd.column}: coherent", True),
    ])


def render_rewrite(link: LatticeLink, orientation: Sequence[bool] | None = None) -> str:
    """Naive projection K, rewritten K', and every column before and after."""
    link = relabel_axes(link, choose_projection_axis(step_counts(link)))
    naive = project(link, orientation=orientation)
    results = [make_coherent(cd) for cd in naive.cord_diagrams]
    rewritten = rewrite_diagram(naive, results)
    panels = [_projection_panel(naive, "K"), _projection_panel(rewritten, "K'")]
    for cd, res in zip(naive.cord_diagrams, results):
        panels.append(_cord_panel(CordRealization(cd, straight_routing(cd)), f"{cd.column} before", True))
        panels.append(_cord_panel(res.realization, f"{cd.column} after", True))
    return to_svg(panels)

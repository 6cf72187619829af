"""Write SVG pictures of a rewritten projection, a cord diagram and a family member."""

import random
import sys
from pathlib import Path

from ropebound.families import torus2
from ropebound.lattice import load_fixture
from ropebound.random_diagrams import random_cord_diagram
from ropebound.render import render_cords, render_family, render_rewrite

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_svg")
out.mkdir(exist_ok=True)

pictures = {
    "trefoil24.svg": render_rewrite(load_fixture("trefoil24")),
    "cords.svg": render_cords(random_cord_diagram(4, random.Random(3))),
    "torus2_3.svg": render_family(torus2(3)),
}
for name, svg in pictures.items():
    (out / name).write_text(svg)
    print("wrote", out / name, len(svg), "bytes")

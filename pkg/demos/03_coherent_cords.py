"""Rerouting the cords of one column so that the partial Seifert circles nest."""

import random

from ropebound.projection import straight_routing
from ropebound.random_diagrams import random_cord_diagram
from ropebound.seifert import CordRealization, is_coherent, make_coherent, smooth_cord_realization

rng = random.Random(7)
cd = random_cord_diagram(5, rng)
print(cd.to_text())

# straight chords: smoothing may leave tangled partial circles
before = CordRealization(cd, straight_routing(cd))
print("straight: coherent =", is_coherent(before), " closed circles =", smooth_cord_realization(before).closed)

# insert the cords one by one, each along the companion arc of the last
res = make_coherent(cd)
after = smooth_cord_realization(res.realization)
print("rerouted: coherent =", is_coherent(res.realization), " closed circles =", after.closed)
print("insertion cases:", res.cases)
print("open paths:", len(after.open_paths), " n - 1 =", cd.n - 1)

# the same check over many random diagrams
worst = 0
for _ in range(200):
    c = random_cord_diagram(rng.randint(1, 8), rng)
    r = make_coherent(c)
    assert is_coherent(r.realization)
    worst = max(worst, r.closed - (c.n - 1))
print("max of closed - (n-1) over 200 diagrams:", worst)

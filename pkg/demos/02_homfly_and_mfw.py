"""HOMFLY-PT polynomials and the braid bound on a few standard families."""

from ropebound.diagram import parse_pd
from ropebound.families import crossing_number, family_braid_index, family_pd, pretzel, torus2, twist
from ropebound.homfly import a_span, absolute_mfw, homfly, mfw_bound

# a H+ - a^-1 H- = z H0, unknot = 1
trefoil = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]")
p = homfly(trefoil)
print("trefoil:", p.serialize())
print("a-span:", a_span(p), " b0 =", mfw_bound(p))

# two unlinked circles give delta = (a - a^-1)/z
print("2-unlink:", homfly(parse_pd("PD[]; loops=2")).serialize())

# for links the bound depends on orientation; B0 takes the best one
for f in (torus2(2), torus2(3), twist(5), pretzel(1, 1, 1)):
    res = absolute_mfw(family_pd(f))
    rows = ", ".join(f"{''.join('1' if b else '0' for b in flags)}:{r.b0}" for flags, r in res.rows)
    print(f"{f}: cr={crossing_number(f)} B0={res.B0} braid index={family_braid_index(f)}  [{rows}]")

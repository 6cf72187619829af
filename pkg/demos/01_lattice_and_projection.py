"""A lattice trefoil, its step counts and its projected diagram."""

from ropebound.diagram import pd_code
from ropebound.lattice import choose_projection_axis, load_fixture, relabel_axes, step_counts, validate
from ropebound.projection import project

link = load_fixture("trefoil24")
print("components:", len(link.components), " L =", link.length)
print("valid:", validate(link).ok)

# steps along x, y, z; the axis with the most steps becomes the projection axis
counts = step_counts(link)
print("steps x,y,z:", tuple(counts[:3]))
perm = choose_projection_axis(counts)
link = relabel_axes(link, perm)
print("after relabel:", tuple(step_counts(link)[:3]))

# tilt the z-steps slightly and read off the planar diagram
proj = project(link)
print(pd_code(proj.diagram))
print("crossings:", proj.diagram.n_crossings)

# columns visited by several vertical runs become cord diagrams
print("sum of cord counts:", proj.sum_n)
for column, n in proj.per_column_n():
    print("  column", column, "cords", n)

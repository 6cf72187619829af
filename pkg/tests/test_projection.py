import random
from fractions import Fraction

import pytest

from ropebound.homfly import DELTA, homfly
from ropebound.lattice import (
    FIXTURES,
    choose_projection_axis,
    load_fixture,
    parse_lattice_link,
    relabel_axes,
    step_counts,
)
from ropebound.projection import CordDiagram, boundary_param, column_cords, project, straight_routing
from ropebound.random_diagrams import random_lattice_link

SQUARE = "0 0 0\n1 0 0\n1 1 0\n0 1 0\n"
HALF = Fraction(1, 2)


def relabelled(link):
    return relabel_axes(link, choose_projection_axis(step_counts(link)))


def test_flat_square():
    p = project(parse_lattice_link(SQUARE))
    assert p.diagram.n_crossings == 0
    assert p.diagram.n_components == 1
    assert p.cord_diagrams == []


def test_stacked_squares():
    # The parallel-offset rule pushes the upper square towards +x on
    # y-edges and +y on x-edges, so its shadow is a translate of the lower
    # one: two crossings that cancel by a Reidemeister II move.
    p = project(parse_lattice_link(SQUARE + "\n" + SQUARE.replace(" 0\n", " 1\n")))
    assert p.diagram.n_components == 2
    assert p.diagram.n_crossings % 2 == 0
    assert sum(p.diagram.signs) == 0
    assert homfly(p.diagram) == DELTA


def test_straight_through():
    rect = parse_lattice_link("0 0 3\n1 0 3\n2 0 3\n2 1 3\n1 1 3\n0 1 3\n")
    (c,) = column_cords(rect, (1, 0))
    assert c.slab == (3, 3)
    assert {c.entry[0], c.exit[0]} == {"W", "E"}


def test_climbing_cord():
    link = parse_lattice_link(
        "0 0 2\n1 0 2\n1 0 3\n1 0 4\n2 0 4\n3 0 4\n3 1 4\n2 1 4\n1 1 4\n0 1 4\n0 1 3\n0 1 2\n"
    )
    (c,) = column_cords(link, (1, 0))
    assert c.slab == (2, 4)


def test_two_visits():
    link = parse_lattice_link(
        "0 0 0\n1 0 0\n2 0 0\n2 0 1\n2 0 2\n2 0 3\n2 0 4\n2 0 5\n1 0 5\n0 0 5\n0 0 4\n0 0 3\n0 0 2\n0 0 1\n"
    )
    cs = column_cords(link, (1, 0))
    assert sorted(c.slab for c in cs) == [(0, 0), (5, 5)]


def test_trefoil_fixture():
    p = project(relabelled(load_fixture("trefoil24")))
    assert p.diagram.n_crossings >= 3
    assert homfly(p.diagram).serialize() == "2 a^2 + -1 a^4 + 1 z^2 a^2"


def check_invariants(link):
    link = relabelled(link)
    p = project(link)
    x, y, _ = step_counts(link)
    assert p.sum_n <= x + y
    assert p.diagram.n_components == len(link.components)
    multi = {cd.column for cd in p.cord_diagrams}
    arr = p.arrangement
    for c in arr.crossings:
        # locality: the crossing lies in the open square of a multi-cord column
        cx, cy = round(c.point[0]), round(c.point[1])
        assert (cx, cy) in multi
        assert abs(c.point[0] - cx) < HALF and abs(c.point[1] - cy) < HALF
    for col in p.crossing_columns:
        assert col in multi
    # over/under: slabs strictly ordered at each crossing
    for cd in p.cord_diagrams:
        slabs = [c.slab for c in cd.cords]
        assert all(a[1] < b[0] for a, b in zip(slabs, slabs[1:]))
    return p


@pytest.mark.parametrize("name", FIXTURES)
def test_invariants_fixtures(name):
    check_invariants(load_fixture(name))


def test_invariants_random():
    rng = random.Random(11)
    for _ in range(60):
        link = random_lattice_link(rng, rng.randint(1, 3), length=30)
        p = check_invariants(link)
        if p.diagram.n_crossings <= 12:
            want = DELTA ** (len(link.components) - 1) if len(link.components) > 1 else homfly(p.diagram)
            assert homfly(p.diagram) == want  # random links are unlinks


def test_over_strand_has_higher_slab():
    link = relabelled(load_fixture("figure8_30"))
    p = project(link)
    # heights of the two strands at each crossing, read off the lattice
    for j, c in enumerate(p.arrangement.crossings):
        za = _height(p, c.curve_a, c.seg_a)
        zb = _height(p, c.curve_b, c.seg_b)
        over, under = (za, zb) if p.over[j] == 0 else (zb, za)
        assert over[0] > under[1]
    assert len(p.crossing_columns) == p.diagram.n_crossings


def _height(p, k, seg):
    # slab of the cord owning segment ``seg`` of curve ``k``
    count = 0
    r = 0
    by_visit = {c.visit: c for cs in p.cords.values() for c in cs}
    while (k, r) in by_visit:
        c = by_visit[(k, r)]
        n = len(p.routing[c.column][p.cords[c.column].index(c)]) - 1
        if seg < count + n:
            return c.slab
        count += n
        r += 1
    raise AssertionError("segment not found")


def test_cord_diagram_text_round_trip():
    p = project(relabelled(load_fixture("knot51_34")))
    for cd in p.cord_diagrams:
        back = CordDiagram.from_text(cd.to_text())
        assert back.to_text() == cd.to_text()
        assert [boundary_param(e[2]) for e in back.endpoints] == [boundary_param(e[2]) for e in cd.endpoints]
        assert [c.slab for c in back.cords] == [c.slab for c in cd.cords]


def test_endpoints_counterclockwise():
    p = project(relabelled(load_fixture("figure8_30")))
    for cd in p.cord_diagrams:
        ts = [boundary_param(e[2]) for e in cd.endpoints]
        assert ts == sorted(ts)
        assert len(ts) == 2 * cd.n and cd.n >= 2


def test_straight_routing_endpoints():
    p = project(relabelled(load_fixture("trefoil24")))
    for cd in p.cord_diagrams:
        for c, poly in zip(cd.cords, straight_routing(cd)):
            assert poly[0] == c.start and poly[-1] == c.end


def test_routing_mismatch_rejected():
    link = relabelled(load_fixture("trefoil24"))
    p = project(link)
    col = p.cord_diagrams[0].column
    bad = {col: [list(reversed(poly)) for poly in p.routing[col]]}
    with pytest.raises(ValueError, match="splice mismatch"):
        project(link, routing=bad)

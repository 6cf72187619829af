import pytest

from ropebound.diagram import DiagramError, parse_pd, pd_code
from ropebound.families import family_pd, pretzel, torus2
from ropebound.random_diagrams import random_diagram

from conftest import FIGURE8_PD, TREFOIL_PD


def test_unknot_pd():
    d = parse_pd("PD[]; loops=1")
    assert d.n_crossings == 0 and d.n_components == 1
    assert pd_code(d) == "PD[]; loops=1"


def test_trefoil_structure(trefoil):
    assert trefoil.n_crossings == 3
    labels = [a for x in trefoil.crossings for a in x]
    assert all(labels.count(a) == 2 for a in set(labels))
    assert abs(trefoil.writhe()) == 3
    assert len(trefoil.components()) == 1


@pytest.mark.parametrize("text", [TREFOIL_PD, FIGURE8_PD, "PD[X[1,1,2,2]]", "PD[X[4,1,3,2], X[2,3,1,4]]; loops=2"])
def test_emit_parse_emit(text):
    once = pd_code(parse_pd(text))
    assert pd_code(parse_pd(once)) == once


def test_round_trip_random(rng):
    for _ in range(60):
        d = random_diagram(rng, max_components=3)
        text = pd_code(d)
        back = parse_pd(text)
        assert pd_code(back) == text
        assert back.normalized() == d.normalized()


def test_round_trip_families():
    for f in (torus2(3), pretzel(1, 0, 2)):
        d = family_pd(f)
        assert parse_pd(pd_code(d)).normalized() == d.normalized()


@pytest.mark.parametrize("bad", ["X[1,2,3,4]", "PD[X[1,2,3]]", "PD[X[1,2,3,4]]", "PD[X[0,1,1,0]]", "PD[X[1,2,2,1]] junk"])
def test_parse_errors(bad):
    with pytest.raises(DiagramError):
        parse_pd(bad)


def test_switch_smooth_counts(trefoil):
    s = trefoil.switch(0)
    assert s.n_crossings == 3 and s.signs[0] == -trefoil.signs[0]
    assert s.switch(0).normalized() == trefoil.normalized()
    sm = trefoil.smooth(0)
    assert sm.n_crossings == 2
    assert sm.n_components == 2  # the Hopf link


def test_reverse_and_mirror(rng):
    for _ in range(30):
        d = random_diagram(rng)
        c = len(d.components())
        assert d.reverse((True,) * c).writhe() == d.writhe()
        m = d.mirror()
        assert m.writhe() == -d.writhe()
        assert m.n_components == d.n_components


def test_components_partition(rng):
    for _ in range(30):
        d = random_diagram(rng, max_components=3)
        arcs = sorted(a for comp in d.components() for a in comp)
        assert arcs == sorted(d.arcs)

import pytest
from hypothesis import given, strategies as st

from ropebound.homfly import homfly
from ropebound.lattice import (
    FIXTURES,
    LatticeError,
    LatticeLink,
    StepCounts,
    choose_projection_axis,
    fixture_path,
    load_fixture,
    parse_lattice_link,
    relabel_axes,
    serialize_lattice_link,
    step_counts,
    validate,
)

SQUARE = "0 0 0\n1 0 0\n1 1 0\n0 1 0\n"


def test_parse_square():
    link = parse_lattice_link(SQUARE)
    assert len(link.components) == 1 and link.length == 4
    assert validate(link).ok


def test_parse_trefoil_fixture():
    link = load_fixture("trefoil24")
    assert len(link.components) == 1 and link.length == 24


@pytest.mark.parametrize("text, where", [
    ("0 0\n", "line 1"),
    ("0 0 0\n1 x 0\n", "line 2, column 3"),
    ("0 0 0\n1  0 0\n", "line 2"),
    ("0 0 0\n1 0 1.5\n", "column 5"),
    ("# only a comment\n", "no components"),
])
def test_parse_errors(text, where):
    with pytest.raises(LatticeError, match=where):
        parse_lattice_link(text)


def test_repeated_vertex():
    link = LatticeLink((((0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0), (0, 0, 0), (1, 0, 0)),))
    rep = validate(link)
    assert not rep.ok
    v = next(v for v in rep.violations if v.kind == "self-intersection")
    assert v.vertex == 4 and "(0, 0, 0)" in v.message


def test_short_and_nonunit():
    rep = validate(LatticeLink((((0, 0, 0), (1, 0, 0), (1, 1, 0)),)))
    assert {v.kind for v in rep.violations} >= {"too-short", "non-unit-step"}
    rep = validate(LatticeLink((((0, 0, 0), (2, 0, 0), (2, 1, 0), (0, 1, 0)),)))
    assert [v.kind for v in rep.violations].count("non-unit-step") == 2


def test_two_squares_valid():
    link = parse_lattice_link(SQUARE + "\n0 0 1\n1 0 1\n1 1 1\n0 1 1\n")
    assert len(link.components) == 2 and validate(link).ok


def test_touching_components_rejected():
    link = parse_lattice_link(SQUARE + "\n1 1 0\n2 1 0\n2 2 0\n1 2 0\n")
    assert not validate(link).ok


def test_step_counts_examples():
    assert step_counts(parse_lattice_link(SQUARE)) == StepCounts(2, 2, 0)
    yz = LatticeLink((((0, 0, 0), (0, 1, 0), (0, 1, 1), (0, 0, 1)),))
    assert step_counts(yz) == StepCounts(0, 2, 2)
    assert step_counts(load_fixture("trefoil24")).total == 24


@pytest.mark.parametrize("counts, perm", [
    ((2, 2, 0), (2, 0, 1)),  # y becomes z
    ((8, 8, 8), (0, 1, 2)),
    ((10, 3, 2), (1, 2, 0)),  # x becomes z
])
def test_axis_choice(counts, perm):
    assert choose_projection_axis(StepCounts(*counts)) == perm


@pytest.mark.parametrize("name", FIXTURES)
def test_relabelled_counts(name):
    link = load_fixture(name)
    rel = relabel_axes(link, choose_projection_axis(step_counts(link)))
    x, y, z = step_counts(rel)
    assert z >= max(x, y)
    assert 3 * z >= link.length and 3 * (x + y) <= 2 * link.length
    assert validate(rel).ok


def test_relabel_is_rotation():
    # a cyclic relabel keeps the knot type, chirality included
    link = load_fixture("trefoil24")
    from ropebound.projection import project

    for perm in ((0, 1, 2), (2, 0, 1), (1, 2, 0)):
        d = project(relabel_axes(link, perm)).diagram
        assert homfly(d).serialize() == "2 a^2 + -1 a^4 + 1 z^2 a^2"


@pytest.mark.parametrize("name", FIXTURES)
def test_round_trip_fixture(name):
    text = fixture_path(name).read_text()
    body = "\n".join(l for l in text.splitlines() if not l.startswith("#")).strip() + "\n"
    link = parse_lattice_link(text)
    assert serialize_lattice_link(link) == body
    assert parse_lattice_link(serialize_lattice_link(link)) == link


walks = st.lists(st.tuples(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50)), min_size=4, max_size=9)


@given(st.lists(walks, min_size=1, max_size=3))
def test_serialize_parse_identity(comps):
    link = LatticeLink(tuple(tuple(c) for c in comps))
    text = serialize_lattice_link(link)
    assert parse_lattice_link(text) == link
    assert serialize_lattice_link(parse_lattice_link(text)) == text

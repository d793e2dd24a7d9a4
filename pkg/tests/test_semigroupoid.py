import itertools

import pytest

from graphproj.graph import parse_graph, shadowed_graph
from graphproj.semigroupoid import (
    Path,
    Unit,
    WordParseError,
    compose,
    enumerate_elements,
    parse_element,
)


@pytest.fixture
def g1():
    return parse_graph("vertex x\nvertex y\nedge e x y\n")


@pytest.fixture
def g2():
    return parse_graph("vertex v\nedge f v v\n")


@pytest.fixture
def g3():
    return parse_graph(
        "vertex x\nvertex y\nvertex z\nedge e1 x y\nedge e2 y z\n"
    )


def test_unit_endpoints(g1):
    u = Unit(g1.vertex("x"))
    assert u.source == u.range == g1.vertex("x")
    assert u.length == 0
    assert str(u) == "x"


def test_path_validates_admissibility(g3):
    e1, e2 = g3.edge("e1"), g3.edge("e2")
    p = Path((e1, e2))
    assert p.source == g3.vertex("x")
    assert p.range == g3.vertex("z")
    assert p.length == 2
    assert str(p) == "e1.e2"
    with pytest.raises(ValueError):
        Path((e2, e1))
    with pytest.raises(ValueError):
        Path(())


def test_compose_unit_absorption(g1):
    x, y = Unit(g1.vertex("x")), Unit(g1.vertex("y"))
    e = Path((g1.edge("e"),))
    assert compose(x, x) == x
    assert compose(x, y) is None
    assert compose(x, e) == e
    assert compose(e, y) == e
    # wrong side: e ends at y, so x cannot follow it
    assert compose(e, x) is None
    assert compose(y, e) is None


def test_compose_concatenates_matching_paths(g3):
    e1 = Path((g3.edge("e1"),))
    e2 = Path((g3.edge("e2"),))
    assert compose(e1, e2) == Path((g3.edge("e1"), g3.edge("e2")))
    assert compose(e2, e1) is None


def test_compose_length_is_additive_when_defined(g2):
    f = Path((g2.edge("f"),))
    w = f
    for n in range(2, 6):
        w = compose(w, f)
        assert w.length == n


def test_enumeration_matches_brute_force_loop_graph(g2):
    # every concatenation of the loop is admissible, so the elements of
    # length <= 2 are exactly the unit, f, and ff
    got = enumerate_elements(g2, 2)
    f = g2.edge("f")
    assert got == [Unit(g2.vertex("v")), Path((f,)), Path((f, f))]


def test_enumeration_matches_brute_force_generic(g3):
    # oracle: filter all edge tuples for admissibility
    for max_len in (1, 2, 3):
        expect = [Unit(v) for v in g3.vertices]
        for n in range(1, max_len + 1):
            for combo in itertools.product(g3.edges, repeat=n):
                if all(
                    combo[i].range == combo[i + 1].source
                    for i in range(n - 1)
                ):
                    expect.append(Path(combo))
        got = enumerate_elements(g3, max_len)
        assert sorted(str(w) for w in got) == sorted(str(w) for w in expect)
        assert len(got) == len(expect)


def test_enumeration_orders_by_length_then_id(g3):
    names = [str(w) for w in enumerate_elements(g3, 2)]
    assert names == ["x", "y", "z", "e1", "e2", "e1.e2"]


def test_associativity_exhaustive(g3):
    elems = enumerate_elements(g3, 3)
    for a, b, c in itertools.product(elems, repeat=3):
        ab = compose(a, b)
        bc = compose(b, c)
        left = compose(ab, c) if ab is not None else None
        right = compose(a, bc) if bc is not None else None
        assert left == right


def test_parse_element(g3):
    assert parse_element("y", g3) == Unit(g3.vertex("y"))
    assert parse_element("e1.e2", g3) == Path((g3.edge("e1"), g3.edge("e2")))
    with pytest.raises(WordParseError):
        parse_element("nope", g3)
    with pytest.raises(WordParseError):
        parse_element("e2.e1", g3)
    with pytest.raises(WordParseError):
        parse_element("", g3)


def test_parse_element_resolves_star_alias_on_shadowed_graph(g1):
    gs = shadowed_graph(g1)
    assert parse_element("e^-1", gs) == Path((gs.edge("e^-1"),))
    assert parse_element("e*", gs) == parse_element("e^-1", gs)
    assert parse_element("e.e*", gs) == Path((gs.edge("e"), gs.edge("e^-1")))

import pytest

from tiltcount import closed_forms as cf
from tiltcount.dynkin import (
    DynkinType, ExtendedDynkinType, component_tilt_count, dynkin_tilt_count, parse_dynkin_type,
    recognize_dynkin, recognize_extended_dynkin,
)
from tiltcount.graph import Graph, InputError, Quiver


def star(arms):
    """Tree with one centre and arms of the given lengths."""
    verts, edges, k = ["c"], [], 0
    for length in arms:
        prev = "c"
        for _ in range(length):
            k += 1
            verts.append(k)
            edges.append((prev, k))
            prev = k
    return Graph(tuple(verts), tuple(edges))


@pytest.mark.parametrize("arms,name", [
    ((), "A1"), ((2,), "A3"), ((3, 4), "A8"), ((1, 1, 1), "D4"), ((1, 1, 5), "D8"),
    ((1, 2, 2), "E6"), ((1, 2, 3), "E7"), ((1, 2, 4), "E8"),
])
def test_recognize_dynkin_trees(arms, name):
    assert str(recognize_dynkin(star(arms))) == name


@pytest.mark.parametrize("g,name", [
    (star((1, 1, 1, 1)), "~D4"), (star((2, 2, 2)), "~E6"), (star((1, 3, 3)), "~E7"),
    (star((1, 2, 5)), "~E8"), (cf.cycle_graph(5), "~A4"), (cf.cycle_graph(2), "~A1"),
    (Graph((1, 2, 3, 4, 5, 6), ((1, 3), (2, 3), (3, 4), (4, 5), (4, 6))), "~D5"),
])
def test_recognize_extended(g, name):
    assert recognize_dynkin(g) is None
    assert str(recognize_extended_dynkin(g)) == name


def test_larger_non_dynkin_trees_are_neither():
    g = star((2, 2, 3))
    assert recognize_dynkin(g) is None and recognize_extended_dynkin(g) is None


def test_disconnected_input_raises():
    with pytest.raises(InputError):
        recognize_dynkin(Graph((1, 2)))
    with pytest.raises(InputError):
        recognize_extended_dynkin(Graph((1, 2)))


def test_type_validation_and_parsing():
    for fam, n in (("A", 0), ("D", 3), ("E", 9), ("B", 2)):
        with pytest.raises(InputError):
            DynkinType(fam, n)
    with pytest.raises(InputError):
        ExtendedDynkinType("E", 5)
    assert parse_dynkin_type(" e7 ") == DynkinType("E", 7)
    with pytest.raises(InputError):
        parse_dynkin_type("X")


def test_tilt_counts():
    assert [dynkin_tilt_count(DynkinType("A", n)) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]
    assert [dynkin_tilt_count(DynkinType("D", n)) for n in (4, 5)] == [20, 77]
    assert [dynkin_tilt_count(DynkinType("E", n)) for n in (6, 7, 8)] == [418, 2431, 17342]


def test_component_tilt_count():
    assert component_tilt_count(Quiver((1,), ())) == 1
    assert component_tilt_count(Quiver((1, 2, 3), ((1, 2), (3, 2)))) == 5
    assert component_tilt_count(Quiver((1, 2), ((1, 2), (1, 2)))) is None
    assert component_tilt_count(Quiver((1, 2, 3, 4), ((1, 2), (3, 2), (3, 4), (1, 4)))) is None

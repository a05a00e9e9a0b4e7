from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tiltcount import closed_forms as cf
from tiltcount.graph import InputError


@given(st.integers(2, 80), st.data())
def test_pascal(n, data):
    k = data.draw(st.integers(1, n - 1))
    assert cf.binomial(n, k) == cf.binomial(n - 1, k - 1) + cf.binomial(n - 1, k)


@given(st.integers(0, 40))
def test_catalan_recurrence(n):
    assert cf.catalan(n + 1) == sum(cf.catalan(i) * cf.catalan(n - i) for i in range(n + 1))


def test_binomial_edges():
    assert cf.binomial(0, 0) == 1 and cf.binomial(7, 7) == 1
    for n, k in ((5, -1), (5, 6), (-1, 0)):
        with pytest.raises(InputError):
            cf.binomial(n, k)


def test_small_formula_values():
    assert [cf.a_n(n) for n in (4, 5, 6)] == [84, 344, 1396]
    assert [cf.closed_form(cf.FamilyLabel("A", n)) for n in (1, 2, 3)] == [2, 6, 20]
    assert cf.closed_form(cf.FamilyLabel("AffineAOdd", 3)) == 32
    assert [cf.closed_form(cf.FamilyLabel("II", n)) for n in range(5, 9)] == [632, 2936, 11306, 75240]


def test_d_expression_is_exact():
    for n in range(4, 13):
        v = cf.d_proof_expression(n)
        assert isinstance(v, int) and not isinstance(v, Fraction)
        assert v == cf.a_n(n)


def test_family_labels():
    assert str(cf.FamilyLabel("A", 7)) == "A(7)"
    assert str(cf.FamilyLabel("E6")) == "E6"
    assert str(cf.FamilyLabel("NotInList", reason="even-cycle")) == "NotInList(even-cycle)"
    for bad in (("II", 9), ("AffineAOdd", 4), ("E6", 6), ("Q", 1)):
        with pytest.raises(InputError):
            cf.FamilyLabel(*bad)
    with pytest.raises(InputError):
        cf.closed_form(cf.FamilyLabel("NotInList"))


@pytest.mark.parametrize("text,label", [
    ("A7", cf.FamilyLabel("A", 7)), ("D(5)", cf.FamilyLabel("D", 5)), ("E8", cf.FamilyLabel("E8")),
    ("II6", cf.FamilyLabel("II", 6)), ("III", cf.FamilyLabel("III")), ("I(9)", cf.FamilyLabel("I", 9)),
    ("AffineAOdd5", cf.FamilyLabel("AffineAOdd", 5)),
])
def test_parse_family(text, label):
    assert cf.parse_family(text) == label


def test_family_graph_sizes():
    for f in cf.list_families(12):
        g = cf.family_graph(f)
        assert len(g.vertices) == cf.family_vertex_count(f) <= 12
        assert g.is_connected() and g.is_simple()

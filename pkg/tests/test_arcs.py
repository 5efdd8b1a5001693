import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcbricks.arcs import (
    Arc,
    ColoredDiagram,
    arc_from_json,
    arc_to_join_irreducible,
    check_nad,
    diagram_to_permutation,
    double_diagram,
    enumerate_arcs,
    enumerate_nad,
    is_crossing,
    restrict_green,
    restrict_red,
)
from arcbricks.permutations import (
    Permutation,
    all_permutations,
    descents,
    identity_permutation,
    parse_permutation,
)

from expected_diagrams import DAD_RANK2, DAD_RANK3, EXAMPLE_53271468, G, R


def P(text):
    return parse_permutation(text)


def entries_of(diagram):
    return [
        (arc.left, arc.right, tuple(sorted(arc.above)), color)
        for arc, color in diagram.entries
    ]


def test_arc_validation():
    with pytest.raises(ValueError):
        Arc(3, 2)
    with pytest.raises(ValueError):
        Arc(1, 3, frozenset({3}))
    arc = Arc(1, 4, frozenset({2}))
    assert arc.side(2) == "above" and arc.side(3) == "below"


def test_arc_json_round_trip():
    arc = Arc(2, 7, frozenset({4, 6}))
    assert arc.to_json() == {"left": 2, "right": 7, "above": [4, 6]}
    assert arc_from_json(arc.to_json()) == arc


def test_is_crossing_examples():
    assert is_crossing(Arc(1, 3, frozenset({2})), Arc(2, 4, frozenset({3})))
    assert not is_crossing(Arc(1, 3), Arc(3, 5))
    assert is_crossing(Arc(1, 4, frozenset({3})), Arc(2, 3))
    with pytest.raises(ValueError):
        is_crossing(Arc(1, 2), Arc(1, 2))


def test_is_crossing_symmetry():
    arcs = enumerate_arcs(3)
    for a, b in itertools.combinations(arcs, 2):
        assert is_crossing(a, b) == is_crossing(b, a)


def test_check_nad_examples():
    assert not check_nad([Arc(1, 3, frozenset({2})), Arc(1, 2)])  # shared left
    assert check_nad(
        [Arc(2, 8, frozenset({5, 7})), Arc(3, 4), Arc(4, 6, frozenset({5}))]
    )
    assert check_nad([])


def test_double_diagram_worked_example():
    d = double_diagram(P("53271468"))
    greens = {(a.left, a.right, tuple(sorted(a.above))) for a in d.green_arcs()}
    reds = {(a.left, a.right, tuple(sorted(a.above))) for a in d.red_arcs()}
    assert greens == {(l, r, tuple(ab)) for l, r, ab in EXAMPLE_53271468["green"]}
    assert reds == {(l, r, tuple(ab)) for l, r, ab in EXAMPLE_53271468["red"]}


@pytest.mark.parametrize("word,expected", sorted(DAD_RANK2.items()))
def test_double_diagram_rank2(word, expected):
    d = double_diagram(P(word))
    assert entries_of(d) == [(l, r, tuple(ab), c) for l, r, ab, c in expected]


@pytest.mark.parametrize("word,expected", sorted(DAD_RANK3.items()))
def test_double_diagram_rank3(word, expected):
    d = double_diagram(P(word))
    assert entries_of(d) == [(l, r, tuple(ab), c) for l, r, ab, c in expected]


def test_identity_diagram_is_red_chain():
    d = double_diagram(identity_permutation(3))
    assert entries_of(d) == [(1, 2, (), R), (2, 3, (), R), (3, 4, (), R)]
    assert restrict_green(d) == frozenset()
    assert restrict_red(double_diagram(P("4321"))) == frozenset()


def test_diagram_arcs_never_cross():
    for n in (2, 3, 4):
        for w in all_permutations(n):
            d = double_diagram(w)
            assert len(d.entries) == n
            arcs = [arc for arc, _ in d.entries]
            for a, b in itertools.combinations(arcs, 2):
                assert not is_crossing(a, b)
            assert check_nad(restrict_green(d))
            assert check_nad(restrict_red(d))


def test_green_marks_descents():
    for w in all_permutations(3):
        d = double_diagram(w)
        assert [i for i in range(1, 4) if d.color(i) == G] == descents(w)


def test_colored_diagram_rejects_crossing_entries():
    with pytest.raises(ValueError):
        ColoredDiagram(
            2,
            ((Arc(1, 3, frozenset({2})), G), (Arc(2, 3), R)),
        )


def test_permutation_round_trip():
    for n in (1, 2, 3, 4):
        for w in all_permutations(n):
            assert double_diagram(w).permutation() == w


def test_arc_to_join_irreducible_examples():
    assert arc_to_join_irreducible(Arc(1, 3, frozenset({2})), 2) == P("312")
    assert arc_to_join_irreducible(Arc(1, 3), 2) == P("231")
    assert arc_to_join_irreducible(Arc(1, 2), 2) == P("213")


def test_arc_to_join_irreducible_inverts_green():
    for n in (2, 3, 4):
        for arc in enumerate_arcs(n):
            w = arc_to_join_irreducible(arc, n)
            assert len(descents(w)) == 1
            assert restrict_green(double_diagram(w)) == frozenset({arc})


def test_diagram_to_permutation_examples():
    assert diagram_to_permutation([Arc(1, 2), Arc(2, 3)], 2) == P("321")
    assert diagram_to_permutation([], 2) == P("123")
    assert diagram_to_permutation([Arc(1, 3)], 2) == P("231")
    with pytest.raises(ValueError):
        diagram_to_permutation([Arc(1, 3, frozenset({2})), Arc(1, 2)], 2)


def test_diagram_to_permutation_inverts_restrict_green():
    for n in range(1, 5):
        for w in all_permutations(n):
            greens = restrict_green(double_diagram(w))
            assert diagram_to_permutation(greens, n) == w


@settings(max_examples=60, deadline=None)
@given(st.permutations(list(range(1, 7))))
def test_diagram_to_permutation_round_trip_random(word):
    w = Permutation(tuple(word))
    greens = restrict_green(double_diagram(w))
    assert diagram_to_permutation(greens, w.rank) == w


def test_red_restriction_is_injective():
    for n in (2, 3, 4):
        reds = {restrict_red(double_diagram(w)) for w in all_permutations(n)}
        assert len(reds) == math.factorial(n + 1)


def test_enumerate_arcs_counts_and_order():
    assert len(enumerate_arcs(1)) == 1
    assert len(enumerate_arcs(2)) == 4
    assert len(enumerate_arcs(3)) == 11
    for n in (2, 3, 4, 5, 6):
        arcs = enumerate_arcs(n)
        assert len(arcs) == 2 ** (n + 1) - n - 2
        assert arcs == sorted(arcs, key=Arc.sort_key)
        assert len(set(arcs)) == len(arcs)
    with pytest.raises(ValueError):
        enumerate_arcs(9)


def test_enumerate_nad_counts():
    assert len(enumerate_nad(1)) == 2
    assert len(enumerate_nad(2)) == 6
    assert len(enumerate_nad(3)) == 24
    assert len(enumerate_nad(4)) == 120
    diagrams = enumerate_nad(3)
    assert len(set(diagrams)) == len(diagrams)
    assert all(check_nad(d) for d in diagrams)


def test_enumerate_nad_matches_green_images():
    for n in (2, 3):
        greens = {restrict_green(double_diagram(w)) for w in all_permutations(n)}
        assert set(enumerate_nad(n)) == greens


def test_diagram_round_trip_from_diagram_side():
    for n in (1, 2, 3):
        for diagram in enumerate_nad(n):
            w = diagram_to_permutation(diagram, n)
            assert restrict_green(double_diagram(w)) == diagram

import math

import pytest

from arcbricks.arcs import Arc, double_diagram, enumerate_arcs, enumerate_nad, restrict_green
from arcbricks.permutations import all_permutations
from arcbricks.quiver import arc_module, path_action_is_zero
from arcbricks.quotients import (
    MonomialIdealSpec,
    arc_killed_by,
    family_count,
    is_alternating_arc,
    is_right_arc,
    linear_ideal,
    nad_ideal_filter,
    parse_ideal,
    radical_square_ideal,
    two_cycle_ideal,
)


def test_ideal_spec_validation():
    with pytest.raises(ValueError):
        MonomialIdealSpec((((1, 1), (1, 1)),))  # a1 a1 not composable
    with pytest.raises(ValueError):
        MonomialIdealSpec(((),))
    spec = parse_ideal(["a1-", "a2 a3"])
    assert spec.generators == (((1, -1),), ((2, 1), (3, 1)))


def test_two_cycle_filter_keeps_everything():
    for n in (1, 2, 3, 4):
        filtered = nad_ideal_filter(n, two_cycle_ideal(n))
        assert len(filtered) == math.factorial(n + 1)
        assert set(filtered) == set(enumerate_nad(n))


def test_empty_ideal_keeps_everything():
    spec = MonomialIdealSpec(())
    assert len(nad_ideal_filter(3, spec)) == 24


def test_linear_ideal_counts():
    assert len(nad_ideal_filter(2, linear_ideal(2))) == 5
    for n in (1, 2, 3, 4):
        assert len(nad_ideal_filter(n, linear_ideal(n))) == family_count(n, "rnad")


def test_right_arc_predicate():
    assert is_right_arc(Arc(1, 3))
    assert not is_right_arc(Arc(1, 3, frozenset({2})))
    assert is_right_arc(Arc(2, 3))
    for n in (2, 3, 4, 5):
        lin = linear_ideal(n)
        for arc in enumerate_arcs(n):
            assert is_right_arc(arc) == arc_killed_by(arc, lin, n)


def test_alternating_arc_predicate():
    assert is_alternating_arc(Arc(1, 4, frozenset({3})))  # below 2, above 3
    assert not is_alternating_arc(Arc(1, 4))
    assert is_alternating_arc(Arc(2, 3))
    for n in (2, 3, 4, 5):
        rad2 = radical_square_ideal(n)
        for arc in enumerate_arcs(n):
            assert is_alternating_arc(arc) == arc_killed_by(arc, rad2, n)


def test_family_counts():
    assert [family_count(n, "rnad") for n in (1, 2, 3, 4)] == [2, 5, 14, 42]
    assert family_count(3, "nad") == 24
    assert family_count(2, "anad") == 6
    for n in (1, 2, 3, 4):
        assert family_count(n, "anad") == family_count(
            n, "custom", radical_square_ideal(n)
        )
    with pytest.raises(ValueError):
        family_count(2, "wide")
    with pytest.raises(ValueError):
        family_count(2, "custom")


def test_filtered_diagrams_are_annihilated_semibricks():
    n = 3
    rad2 = radical_square_ideal(n)
    greens = {restrict_green(double_diagram(w)) for w in all_permutations(n)}
    for diagram in nad_ideal_filter(n, rad2):
        assert diagram in greens
        for arc in diagram:
            module = arc_module(arc, n)
            for gen in rad2.generators:
                assert path_action_is_zero(module, gen)

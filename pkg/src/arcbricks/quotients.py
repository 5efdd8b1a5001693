"""Diagram families cut out by monomial ideals of the doubled quiver.

A monomial ideal is specified by composable arrow paths; a diagram survives
the filter when every generator acts as zero on every one of its arc
modules.  Three families have closed combinatorial descriptions that the
test suite pins against the path filters: all diagrams (the two-cycle
ideal changes nothing), right diagrams (inverse arrows killed: every
interior side below), and alternating diagrams (radical square: interior
sides constant on each parity class and opposite between them).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arcs import Arc, enumerate_arcs, iter_nad_index_sets
from .quiver import Arrow, arc_module, arrow_source, arrow_target, parse_arrow, path_action_is_zero

Path = tuple[Arrow, ...]


@dataclass(frozen=True)
class MonomialIdealSpec:
    generators: tuple[Path, ...]

    def __post_init__(self):
        for path in self.generators:
            if not path:
                raise ValueError("ideal generators must be nonempty paths")
            for prev, nxt in zip(path, path[1:]):
                if arrow_target(prev) != arrow_source(nxt):
                    raise ValueError(f"generator {path} is not composable")


def parse_ideal(tokens: list[str]) -> MonomialIdealSpec:
    """Generators as whitespace-joined arrow names, e.g. ["a1-", "a2 a3"]."""
    return MonomialIdealSpec(
        tuple(tuple(parse_arrow(tok) for tok in gen.split()) for gen in tokens)
    )


def two_cycle_ideal(n: int) -> MonomialIdealSpec:
    gens = []
    for i in range(1, n):
        gens.append(((i, 1), (i, -1)))
        gens.append(((i, -1), (i, 1)))
    return MonomialIdealSpec(tuple(gens))


def linear_ideal(n: int) -> MonomialIdealSpec:
    """Kill every inverse arrow, leaving the linearly oriented path algebra."""
    return MonomialIdealSpec(tuple(((i, -1),) for i in range(1, n)))


def radical_square_ideal(n: int) -> MonomialIdealSpec:
    """All composable paths of length two."""
    gens = []
    for i in range(1, n):
        gens.append(((i, 1), (i, -1)))
        gens.append(((i, -1), (i, 1)))
        if i + 1 < n:
            gens.append(((i, 1), (i + 1, 1)))
            gens.append(((i + 1, -1), (i, -1)))
    return MonomialIdealSpec(tuple(gens))


def arc_killed_by(arc: Arc, spec: MonomialIdealSpec, n: int) -> bool:
    module = arc_module(arc, n)
    return all(path_action_is_zero(module, path) for path in spec.generators)


def is_right_arc(arc: Arc) -> bool:
    """Never passes above an interior point."""
    return not arc.above


def is_alternating_arc(arc: Arc) -> bool:
    """Sides constant on each parity class and opposite between nonempty ones."""
    evens = {m in arc.above for m in arc.interior if m % 2 == 0}
    odds = {m in arc.above for m in arc.interior if m % 2 == 1}
    if len(evens) > 1 or len(odds) > 1:
        return False
    if evens and odds and evens == odds:
        return False
    return True


FAMILIES = ("nad", "rnad", "anad")


def _family_mask(n: int, family: str, ideal: MonomialIdealSpec | None) -> tuple[list[Arc], int]:
    arcs = enumerate_arcs(n)
    if family == "nad":
        keep = lambda arc: True
    elif family == "rnad":
        keep = is_right_arc
    elif family == "anad":
        keep = is_alternating_arc
    elif family == "custom":
        if ideal is None:
            raise ValueError("custom family needs an ideal")
        keep = lambda arc: arc_killed_by(arc, ideal, n)
    else:
        raise ValueError(f"unknown family {family!r}")
    mask = 0
    for j, arc in enumerate(arcs):
        if keep(arc):
            mask |= 1 << j
    return arcs, mask


def nad_ideal_filter(n: int, spec: MonomialIdealSpec) -> list[frozenset[Arc]]:
    """All noncrossing diagrams whose arc modules the ideal annihilates."""
    arcs, mask = _family_mask(n, "custom", spec)
    return [
        frozenset(arcs[j] for j in idx)
        for idx in iter_nad_index_sets(arcs, allowed=mask)
    ]


def family_count(n: int, family: str, ideal: MonomialIdealSpec | None = None) -> int:
    arcs, mask = _family_mask(n, family, ideal)
    return sum(1 for _ in iter_nad_index_sets(arcs, allowed=mask))

"""Mutation of colored diagrams and of two-term collections.

The half twist reconnects two arcs meeting at a single point: the new arc
joins the two non-shared endpoints, passes above the shared point when the
pivot sits to its left (below when to its right), and keeps every other
interior side from whichever input arc contains that point strictly inside
its span.

``mutate_dad`` applies the half twist at a position of a colored diagram
(left mutation pivots on green, right on red) and must land on the diagram
of ``s_i w``; that equality is the package's central cross-check, not an
assumption of the implementation.  ``mutate_smc_collection`` is the
independent module-level oracle: it mutates the image under ``psi`` using
only hom/ext computations, extension-middle searches and kernel/cokernel
constructions, never the half twist.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .arcs import (
    GREEN,
    RED,
    Arc,
    ColoredDiagram,
    double_diagram,
)
from .permutations import Permutation, all_permutations
from .quiver import (
    Representation,
    arc_module,
    combine_morphisms,
    ext1_dim,
    hom_basis,
    hom_dim,
    is_brick,
    is_isomorphic,
    morphism_parts,
)
from .strings import graph_map_count

ShiftedModule = tuple[Representation, int]
TwoTermCollection = tuple[ShiftedModule, ...]


class MutationError(ValueError):
    """A mutation precondition failed (wrong color, bad position, bad shift)."""


def half_twist(pivot: Arc, other: Arc, twist: str = "left") -> Arc:
    """Reconnect the non-shared endpoints of two arcs meeting at one point.

    When the shared point lands inside the new span (the arcs met end to
    end), the left twist passes above it if the pivot sat to the left of the
    other arc and below if to the right; the right twist is the inverse
    transformation and flips that side.  Every other interior side is
    inherited from the input arc whose span strictly contains the point.
    """
    if twist not in ("left", "right"):
        raise ValueError(f"twist must be 'left' or 'right', got {twist!r}")
    shared = {pivot.left, pivot.right} & {other.left, other.right}
    if len(shared) != 1:
        raise ValueError(
            f"{pivot} and {other} share {len(shared)} endpoints, need exactly one"
        )
    s = shared.pop()
    a = pivot.left if pivot.right == s else pivot.right
    b = other.left if other.right == s else other.right
    left, right = min(a, b), max(a, b)
    above = set()
    for m in range(left + 1, right):
        if m == s:
            pivot_on_left = pivot.right == s == other.left
            if pivot_on_left == (twist == "left"):
                above.add(m)
        elif m in pivot.interior:
            if m in pivot.above:
                above.add(m)
        elif m in other.interior:
            if m in other.above:
                above.add(m)
        else:
            raise AssertionError(f"point {m} inside neither input arc")
    return Arc(left, right, frozenset(above))


def mutate_dad(
    diagram: ColoredDiagram, i: int, direction: str | None = None
) -> ColoredDiagram:
    """Mutate at position i: the pivot arc keeps its place and flips color,
    the neighbors are half-twisted around it and recolored by the new
    adjacent comparisons.  Left requires green at i, right requires red."""
    n = diagram.n
    if not 1 <= i <= n:
        raise MutationError(f"position {i} out of range 1..{n}")
    pivot_color = diagram.color(i)
    inferred = "left" if pivot_color == GREEN else "right"
    if direction is None:
        direction = inferred
    elif direction not in ("left", "right"):
        raise MutationError(f"direction must be 'left' or 'right', got {direction!r}")
    elif direction != inferred:
        raise MutationError(
            f"{direction} mutation needs {'green' if direction == 'left' else 'red'} "
            f"at position {i}, found {pivot_color}"
        )
    w = diagram.permutation()
    pivot = diagram.arc(i)
    entries = list(diagram.entries)
    entries[i - 1] = (pivot, RED if pivot_color == GREEN else GREEN)
    if i - 1 >= 1:
        new_arc = half_twist(pivot, diagram.arc(i - 1), twist=direction)
        entries[i - 2] = (new_arc, GREEN if w[i - 1] > w[i + 1] else RED)
    if i + 1 <= n:
        new_arc = half_twist(pivot, diagram.arc(i + 1), twist=direction)
        entries[i] = (new_arc, GREEN if w[i] > w[i + 2] else RED)
    return ColoredDiagram(n, tuple(entries))


def psi(diagram: ColoredDiagram) -> TwoTermCollection:
    """Arc modules of the diagram: green members at shift 0, red at shift 1."""
    return tuple(
        (arc_module(arc, diagram.n), 0 if color == GREEN else 1)
        for arc, color in diagram.entries
    )


def smc_axiom_check(members: TwoTermCollection, n: int) -> bool:
    """The four collection axioms, with the basis proxy for generation.

    sm1: every member is a brick.  sm2: homs between distinct same-shift
    members vanish (shift 1 -> shift 0 is automatically zero).  sm3: homs of
    underlying modules from shift-0 to shift-1 members vanish.  sm4 proxy:
    the signed dimension vectors (+ at shift 0, - at shift 1) form a Z-basis
    of Z^n.  The proxy is necessary, not known to be sufficient.
    """
    members = tuple(members)
    if len(members) != n:
        return False
    if not all(is_brick(m) for m, _ in members):
        return False
    for (m, cm), (k, ck) in itertools.permutations(members, 2):
        if cm == ck and hom_dim(m, k) != 0:
            return False
        if cm == 0 and ck == 1 and hom_dim(m, k) != 0:
            return False
    signed = [
        [d if c == 0 else -d for d in m.dims] for m, c in members
    ]
    return abs(_det(signed)) == 1


def _det(rows: list[list[int]]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in rows]
    size = len(m)
    det = Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, size):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def smc_leq(lower: ColoredDiagram, upper: ColoredDiagram) -> bool:
    """Order criterion: no graph map from a green arc of the lower diagram
    to a red arc of the upper one.  Must agree with the weak order."""
    if lower.n != upper.n:
        raise ValueError("rank mismatch")
    return all(
        graph_map_count(g, r) == 0
        for g in lower.green_arcs()
        for r in upper.red_arcs()
    )


def _injective_choices(basis, source: Representation):
    """Candidate morphisms to test for injectivity: basis elements, then
    generic combinations (1, t, t^2, ...) that dodge the vanishing loci."""
    yield from basis
    if len(basis) > 1:
        for t in range(2, len(basis) * source.n + 3):
            coeffs = [Fraction(t) ** k for k in range(len(basis))]
            yield combine_morphisms(basis, coeffs)


def _extension_middle(
    pivot: Representation, neighbor: Representation, n: int
) -> Representation:
    """The middle of the unique nonsplit extension of the neighbor by the
    pivot, located by searching arcs with the summed dimension vector for an
    embedded pivot with the right cokernel."""
    dims = tuple(p + q for p, q in zip(pivot.dims, neighbor.dims))
    support = [v for v in range(1, n + 1) if dims[v - 1]]
    if any(d > 1 for d in dims) or support != list(
        range(support[0], support[0] + len(support))
    ):
        raise MutationError(f"summed dimension vector {dims} is not an interval")
    p, q = support[0], support[-1] + 1
    matches = []
    for bits in itertools.product((False, True), repeat=q - p - 1):
        arc = Arc(
            p, q, frozenset(m for m, up in zip(range(p + 1, q), bits) if up)
        )
        candidate = arc_module(arc, n)
        basis = hom_basis(pivot, candidate)
        for f in _injective_choices(basis, pivot):
            if not f.is_injective():
                continue
            _, _, cokernel = morphism_parts(f)
            if is_isomorphic(cokernel, neighbor):
                matches.append(candidate)
                break
    if len(matches) != 1:
        raise MutationError(
            f"expected one extension middle, found {len(matches)}"
        )
    return matches[0]


def mutate_smc_collection(members: TwoTermCollection, i: int) -> TwoTermCollection:
    """Module-level left mutation at position i (1-based).

    The pivot must sit at shift 0 and moves to shift 1.  A shift-0 member
    with a one-dimensional extension space against the pivot is replaced by
    the extension middle; a shift-1 member with a one-dimensional hom space
    to the pivot is replaced by the cokernel (shift 0) of that map when it
    is injective, or by the kernel (shift 1) when it is surjective.  Members
    with no approximation target are untouched.
    """
    members = tuple(members)
    if not 1 <= i <= len(members):
        raise MutationError(f"position {i} out of range 1..{len(members)}")
    pivot, pivot_shift = members[i - 1]
    if pivot_shift != 0:
        raise MutationError(f"member at position {i} sits at shift 1, need shift 0")
    n = pivot.n
    out = []
    for j, (module, shift) in enumerate(members, start=1):
        if j == i:
            out.append((pivot, 1))
            continue
        if shift == 0:
            d = ext1_dim(module, pivot)
            if d == 0:
                out.append((module, 0))
            elif d == 1:
                out.append((_extension_middle(pivot, module, n), 0))
            else:
                raise MutationError(
                    f"extension space against the pivot has dimension {d}"
                )
        else:
            d = hom_dim(module, pivot)
            if d == 0:
                out.append((module, 1))
            elif d == 1:
                f = hom_basis(module, pivot)[0]
                if f.is_injective():
                    _, _, cokernel = morphism_parts(f)
                    out.append((cokernel, 0))
                elif f.is_surjective():
                    kernel, _, _ = morphism_parts(f)
                    out.append((kernel, 1))
                else:
                    raise MutationError(
                        "approximation map is neither injective nor surjective"
                    )
            else:
                raise MutationError(
                    f"hom space against the pivot has dimension {d}"
                )
    return tuple(out)


def collections_match(x: TwoTermCollection, y: TwoTermCollection) -> bool:
    """Member-by-member equality up to isomorphism of the underlying modules."""
    if len(x) != len(y):
        return False
    return all(
        cx == cy and is_isomorphic(mx, my)
        for (mx, cx), (my, cy) in zip(x, y)
    )


def hasse(n: int, cap: int = 6):
    """The left-mutation graph on all colored diagrams.

    Returns (diagrams, edges): diagrams sorted by their permutation word,
    and one edge (source_index, target_index, i) per green position i.
    """
    if n > cap:
        raise ValueError(f"n={n} exceeds the mutation-graph cap {cap}")
    perms = all_permutations(n)
    diagrams = [double_diagram(w) for w in perms]
    index = {d.permutation().word: k for k, d in enumerate(diagrams)}
    edges = []
    for k, diagram in enumerate(diagrams):
        for i in range(1, n + 1):
            if diagram.color(i) == GREEN:
                target = mutate_dad(diagram, i, "left")
                edges.append((k, index[target.permutation().word], i))
    return diagrams, edges


def hasse_dot(n: int) -> str:
    """Deterministic DOT rendering of the mutation graph."""
    diagrams, edges = hasse(n)
    lines = ["digraph mutation {"]
    for k, diagram in enumerate(diagrams):
        lines.append(f'  w{k} [label="{diagram.permutation()}"];')
    for src, dst, i in sorted(edges):
        lines.append(f'  w{src} -> w{dst} [label="mu{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_json(n: int) -> dict:
    diagrams, edges = hasse(n)
    return {
        "n": n,
        "vertices": [
            {
                "permutation": str(d.permutation()),
                "arcs": [
                    {**arc.to_json(), "color": color, "shift": 0 if color == GREEN else 1}
                    for arc, color in d.entries
                ],
            }
            for d in diagrams
        ],
        "edges": [
            {"source": src, "target": dst, "mutation": i}
            for src, dst, i in sorted(edges)
        ],
    }


def weak_order_hasse(n: int) -> tuple[list[Permutation], list[tuple[int, int, int]]]:
    """Cover digraph of the weak order: w -> s_i w at each descent i."""
    perms = all_permutations(n)
    index = {w.word: k for k, w in enumerate(perms)}
    edges = []
    for k, w in enumerate(perms):
        for i in range(1, n + 1):
            if w[i] > w[i + 1]:
                word = list(w.word)
                word[i - 1], word[i] = word[i], word[i - 1]
                edges.append((k, index[tuple(word)], i))
    return perms, edges

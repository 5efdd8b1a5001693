"""Cross-oracle verification suites.

Every check compares two independent routes to the same answer: string
combinatorics against explicit linear algebra, local diagram rewrites
against the symmetric-group action, closed counting formulas against
exhaustive enumeration.  Each criterion reports pass/fail plus a minimal
counterexample, and the CLI ``check`` subcommand is a thin runner over
these functions.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field

from .arcs import (
    arc_to_join_irreducible,
    check_nad,
    double_diagram,
    enumerate_arcs,
    enumerate_nad,
    is_crossing,
    iter_compatible_index_sets,
    restrict_green,
)
from .mutation import (
    collections_match,
    hasse,
    mutate_dad,
    mutate_smc_collection,
    psi,
    smc_leq,
    weak_order_hasse,
)
from .permutations import (
    all_permutations,
    descents,
    identity_permutation,
    join,
    left_multiply_simple,
    weak_leq,
)
from .quiver import arc_module, ext1_dim, hom_dim, is_brick, quad
from .quotients import (
    arc_killed_by,
    family_count,
    is_alternating_arc,
    is_right_arc,
    linear_ideal,
    nad_ideal_filter,
    radical_square_ideal,
    two_cycle_ideal,
)
from .strings import graph_map_count

SAMPLE_SEED = 20260809


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    counterexample: str = ""
    seconds: float = field(default=0.0)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.name}: {self.detail}"
        if not self.passed and self.counterexample:
            out += f"\n     counterexample: {self.counterexample}"
        return out


def _run(name: str, fn) -> CheckResult:
    start = time.perf_counter()
    failures: list[str] = []
    detail = fn(failures)
    elapsed = time.perf_counter() - start
    return CheckResult(
        name=name,
        passed=not failures,
        detail=detail if not failures else f"{detail}; {len(failures)} failure(s)",
        counterexample=failures[0] if failures else "",
        seconds=elapsed,
    )


def check_bijection_counts(max_n: int = 5) -> CheckResult:
    """Distinct green diagrams over W number (n+1)! and pass the diagram test."""

    def body(failures):
        seen = 0
        for n in range(1, min(5, max_n) + 1):
            greens = set()
            for w in all_permutations(n):
                g = restrict_green(double_diagram(w))
                if not check_nad(g):
                    failures.append(f"n={n} w={w}: green restriction fails nad test")
                greens.add(g)
            if len(greens) != math.factorial(n + 1):
                failures.append(
                    f"n={n}: {len(greens)} distinct green diagrams, "
                    f"expected {math.factorial(n + 1)}"
                )
            seen += len(greens)
        return f"{seen} diagrams over n=1..{min(5, max_n)}"

    return _run("bijection-counts", body)


ARC_COUNTS = {1: 1, 2: 4, 3: 11, 4: 26, 5: 57, 6: 120}


def check_brick_classification(max_n: int = 6) -> CheckResult:
    """Arc counts match the closed formula and the single-descent count;
    every arc module is a brick of quadratic value 2 with no self-extension."""

    def body(failures):
        total = 0
        for n in range(1, min(6, max_n) + 1):
            arcs = enumerate_arcs(n)
            if len(arcs) != 2 ** (n + 1) - n - 2 or len(arcs) != ARC_COUNTS[n]:
                failures.append(f"n={n}: {len(arcs)} arcs, expected {ARC_COUNTS[n]}")
            single_descent = sum(
                1 for w in all_permutations(n) if len(descents(w)) == 1
            )
            if single_descent != len(arcs):
                failures.append(
                    f"n={n}: {single_descent} single-descent words vs {len(arcs)} arcs"
                )
            for arc in arcs:
                module = arc_module(arc, n)
                if not is_brick(module):
                    failures.append(f"n={n} {arc}: not a brick")
                if quad(module.dims) != 2:
                    failures.append(f"n={n} {arc}: quadratic value {quad(module.dims)}")
                if ext1_dim(module, module) != 0:
                    failures.append(f"n={n} {arc}: nonzero self-extension")
            total += len(arcs)
        return f"{total} arcs over n=1..{min(6, max_n)}"

    return _run("brick-classification", body)


def check_graph_maps_equal_linear_algebra(max_n: int = 4) -> CheckResult:
    """Graph-map counts reproduce hom dimensions on every ordered arc pair."""

    def body(failures):
        pairs = 0
        for n in (3, 4):
            if n > max_n:
                continue
            arcs = enumerate_arcs(n)
            modules = {arc: arc_module(arc, n) for arc in arcs}
            for a in arcs:
                for b in arcs:
                    combinatorial = graph_map_count(a, b)
                    linear = hom_dim(modules[a], modules[b])
                    if combinatorial != linear:
                        failures.append(
                            f"n={n} {a}->{b}: {combinatorial} graph maps vs "
                            f"hom dimension {linear}"
                        )
                    pairs += 1
        return f"{pairs} ordered pairs"

    return _run("graph-maps-equal-linear-algebra", body)


def check_orthogonality_iff_noncrossing(max_n: int = 4) -> CheckResult:
    """Hom-orthogonality coincides with the noncrossing conditions, and the
    shared-endpoint case split behaves as stated."""

    def body(failures):
        pairs = 0
        for n in range(1, min(4, max_n) + 1):
            arcs = enumerate_arcs(n)
            modules = {arc: arc_module(arc, n) for arc in arcs}
            for i, a in enumerate(arcs):
                for b in arcs[i + 1 :]:
                    h_ab = hom_dim(modules[a], modules[b])
                    h_ba = hom_dim(modules[b], modules[a])
                    orthogonal = h_ab == 0 and h_ba == 0
                    if check_nad([a, b]) != orthogonal:
                        failures.append(
                            f"n={n} {a},{b}: nad={check_nad([a, b])} but homs "
                            f"({h_ab},{h_ba})"
                        )
                    if not is_crossing(a, b):
                        same_left = a.left == b.left
                        same_right = a.right == b.right
                        if same_left != same_right and sorted((h_ab, h_ba)) != [0, 1]:
                            failures.append(
                                f"n={n} {a},{b}: one shared endpoint, homs ({h_ab},{h_ba})"
                            )
                        if same_left and same_right and (h_ab == 0 or h_ba == 0):
                            failures.append(
                                f"n={n} {a},{b}: both endpoints shared, homs ({h_ab},{h_ba})"
                            )
                    pairs += 1
        return f"{pairs} unordered pairs over n=1..{min(4, max_n)}"

    return _run("orthogonality-iff-noncrossing", body)


def check_semibrick_oracle(max_n: int = 3) -> CheckResult:
    """At n=3, the pairwise hom-orthogonal arc sets found by linear solves
    are exactly the 24 green diagrams."""

    def body(failures):
        if max_n < 3:
            return "skipped (max_n < 3)"
        n = 3
        arcs = enumerate_arcs(n)
        modules = [arc_module(arc, n) for arc in arcs]
        masks = [0] * len(arcs)
        for i in range(len(arcs)):
            for j in range(i + 1, len(arcs)):
                if hom_dim(modules[i], modules[j]) == 0 and hom_dim(
                    modules[j], modules[i]
                ) == 0:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        orthogonal_sets = {
            frozenset(arcs[j] for j in idx)
            for idx in iter_compatible_index_sets(masks)
        }
        greens = {
            restrict_green(double_diagram(w)) for w in all_permutations(n)
        }
        if len(orthogonal_sets) != 24:
            failures.append(f"{len(orthogonal_sets)} orthogonal sets, expected 24")
        if orthogonal_sets != greens:
            extra = orthogonal_sets - greens
            missing = greens - orthogonal_sets
            failures.append(
                f"sets differ: {len(extra)} extra, {len(missing)} missing; "
                f"first extra: {sorted(map(str, next(iter(extra), ())))}"
            )
        return f"{len(orthogonal_sets)} orthogonal sets among 2^{len(arcs)} subsets"

    return _run("semibrick-oracle", body)


def check_mutation_compatibility(max_n: int = 4) -> CheckResult:
    """Diagram mutation agrees with the simple-generator action everywhere."""

    def body(failures):
        checks = 0
        for n in (3, 4):
            if n > max_n:
                continue
            for w in all_permutations(n):
                diagram = double_diagram(w)
                for i in range(1, n + 1):
                    direction = "left" if i in descents(w) else "right"
                    expected = double_diagram(left_multiply_simple(i, w))
                    got = mutate_dad(diagram, i, direction)
                    if got != expected:
                        failures.append(f"n={n} w={w} i={i} ({direction})")
                    checks += 1
        return f"{checks} mutations"

    return _run("mutation-compatibility", body)


def check_module_mutation_oracle(max_n: int = 4, samples: int = 500) -> CheckResult:
    """Module-level mutation matches the diagram route member by member:
    exhaustively at n=3, on seeded samples at n=4."""

    def body(failures):
        cases = []
        if max_n >= 3:
            for w in all_permutations(3):
                for i in descents(w):
                    cases.append((3, w, i))
        sampled = 0
        if max_n >= 4:
            rng = random.Random(SAMPLE_SEED)
            perms4 = all_permutations(4)
            while sampled < samples:
                w = perms4[rng.randrange(len(perms4))]
                des = descents(w)
                if not des:
                    continue
                cases.append((4, w, des[rng.randrange(len(des))]))
                sampled += 1
        for n, w, i in cases:
            diagram = double_diagram(w)
            expected = psi(double_diagram(left_multiply_simple(i, w)))
            got = mutate_smc_collection(psi(diagram), i)
            if not collections_match(got, expected):
                failures.append(f"n={n} w={w} i={i}")
        return f"{len(cases)} mutations ({len(cases) - sampled} exhaustive, {sampled} sampled)"

    return _run("module-mutation-oracle", body)


def check_order_criterion(max_n: int = 4, samples: int = 2000) -> CheckResult:
    """The no-graph-map criterion reproduces the weak order."""

    def body(failures):
        checked = 0
        if max_n >= 3:
            perms = all_permutations(3)
            diagrams = {w: double_diagram(w) for w in perms}
            for u in perms:
                for w in perms:
                    if smc_leq(diagrams[u], diagrams[w]) != weak_leq(u, w):
                        failures.append(f"n=3 u={u} w={w}")
                    checked += 1
        if max_n >= 4:
            rng = random.Random(SAMPLE_SEED)
            perms = all_permutations(4)
            diagrams = {w: double_diagram(w) for w in perms}
            for _ in range(samples):
                u = perms[rng.randrange(len(perms))]
                w = perms[rng.randrange(len(perms))]
                if smc_leq(diagrams[u], diagrams[w]) != weak_leq(u, w):
                    failures.append(f"n=4 u={u} w={w}")
                checked += 1
        return f"{checked} ordered pairs"

    return _run("order-criterion", body)


def check_canonical_join_representations(max_n: int = 5) -> CheckResult:
    """Green arcs are join-irreducible joinands of w, irredundantly."""

    def body(failures):
        words = 0
        for n in range(1, min(5, max_n) + 1):
            for w in all_permutations(n):
                greens = sorted(restrict_green(double_diagram(w)), key=lambda a: a.sort_key())
                joinands = [arc_to_join_irreducible(a, n) for a in greens]
                total = identity_permutation(n)
                for u in joinands:
                    total = join(total, u)
                if total != w:
                    failures.append(f"n={n} w={w}: joinands give {total}")
                for k in range(len(joinands)):
                    sub = identity_permutation(n)
                    for j, u in enumerate(joinands):
                        if j != k:
                            sub = join(sub, u)
                    if sub == w or not weak_leq(sub, w):
                        failures.append(f"n={n} w={w}: dropping {greens[k]} not strict")
                words += 1
        return f"{words} words over n=1..{min(5, max_n)}"

    return _run("canonical-join-representations", body)


RNAD_COUNTS = (2, 5, 14, 42, 132, 429)


def check_quotient_families(max_n: int = 6) -> CheckResult:
    """Ideal filters against the closed families and counting formulas."""

    def body(failures):
        for n in range(1, min(5, max_n) + 1):
            filtered = nad_ideal_filter(n, two_cycle_ideal(n))
            if len(filtered) != math.factorial(n + 1) or set(filtered) != set(
                enumerate_nad(n)
            ):
                failures.append(f"n={n}: two-cycle filter is not all of nad")
        for n in range(1, min(6, max_n) + 1):
            count = family_count(n, "rnad")
            if count != RNAD_COUNTS[n - 1]:
                failures.append(
                    f"n={n}: rnad count {count}, expected {RNAD_COUNTS[n - 1]}"
                )
        for n in range(1, min(5, max_n) + 1):
            lin = linear_ideal(n)
            rad2 = radical_square_ideal(n)
            for arc in enumerate_arcs(n):
                if is_right_arc(arc) != arc_killed_by(arc, lin, n):
                    failures.append(f"n={n} {arc}: right-arc predicate vs path filter")
                if is_alternating_arc(arc) != arc_killed_by(arc, rad2, n):
                    failures.append(
                        f"n={n} {arc}: alternating predicate vs radical-square filter"
                    )
            if family_count(n, "anad") != family_count(n, "custom", rad2):
                failures.append(f"n={n}: anad counts disagree between routes")
        return f"families over n=1..{min(6, max_n)}"

    return _run("quotient-families", body)


def check_hasse_structure(max_n: int = 3) -> CheckResult:
    """The mutation graph is the weak-order cover digraph, sizes included."""

    def body(failures):
        for n, nv, ne in ((2, 6, 6), (3, 24, 36)):
            if n > max_n:
                continue
            diagrams, edges = hasse(n)
            if len(diagrams) != nv or len(edges) != ne:
                failures.append(
                    f"n={n}: {len(diagrams)} vertices / {len(edges)} edges, "
                    f"expected {nv}/{ne}"
                )
            perms, weak_edges = weak_order_hasse(n)
            if [d.permutation() for d in diagrams] != perms:
                failures.append(f"n={n}: vertex labelings differ")
            if sorted(edges) != sorted(weak_edges):
                failures.append(f"n={n}: edge sets differ")
        return "mutation graph vs weak-order covers, n=2 and n=3"

    return _run("hasse-structure", body)


ALL_CHECKS = (
    check_bijection_counts,
    check_brick_classification,
    check_graph_maps_equal_linear_algebra,
    check_orthogonality_iff_noncrossing,
    check_semibrick_oracle,
    check_mutation_compatibility,
    check_module_mutation_oracle,
    check_order_criterion,
    check_canonical_join_representations,
    check_quotient_families,
    check_hasse_structure,
)

SUITES = {
    "bijection": (
        check_bijection_counts,
        check_brick_classification,
        check_semibrick_oracle,
        check_canonical_join_representations,
    ),
    "homs": (
        check_graph_maps_equal_linear_algebra,
        check_orthogonality_iff_noncrossing,
    ),
    "mutation": (
        check_mutation_compatibility,
        check_module_mutation_oracle,
    ),
    "order": (
        check_order_criterion,
        check_hasse_structure,
    ),
    "quotients": (check_quotient_families,),
    "all": ALL_CHECKS,
}


def run_suite(suite: str, max_n: int) -> list[CheckResult]:
    if suite not in SUITES:
        raise KeyError(suite)
    return [fn(max_n=max_n) for fn in SUITES[suite]]

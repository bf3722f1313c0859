from __future__ import annotations

import random

import pytest

from graphstrength.bounds import (
    bounds_report,
    edge_connectivity,
    hypercube_lower_bound,
    hypercube_upper_bound,
    independence_lower_bound_str,
    independence_number,
    recognize_hypercube,
    two_regular_cycle_lengths,
    two_regular_strength,
    xi_profile,
)
from graphstrength.graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    cycles_union,
    disjoint_union,
    hypercube,
    path,
    star,
)
from graphstrength.labeling import UnconfirmedBound
from graphstrength.oracle import exact_strength

from conftest import random_graph


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def test_independence_number_frozen_values():
    size, witness = independence_number(petersen())
    assert size == 4
    assert all(not petersen().has_edge(u, v) for u in witness for v in witness if u < v)
    assert independence_number(complete_bipartite(3, 5))[0] == 5
    assert independence_number(cycle(7))[0] == 3
    assert independence_number(hypercube(4))[0] == 8
    assert independence_number(complete(6))[0] == 1


def test_independence_matches_brute_force_on_random():
    rng = random.Random(13)
    for _ in range(40):
        p = rng.randint(2, 10)
        g = random_graph(rng, p, rng.uniform(0.2, 0.8))
        size, witness = independence_number(g)
        # verify the witness and maximality by enumeration
        from itertools import combinations

        best = 0
        for k in range(p, 0, -1):
            if any(
                all(not g.has_edge(u, v) for u, v in combinations(sub, 2))
                for sub in combinations(range(p), k)
            ):
                best = k
                break
        assert size == best


def test_independence_bound_value():
    g = cycle(5)
    assert independence_lower_bound_str(g) == 2 * 5 - 2 * 2 + 1  # = 7
    with pytest.raises(ValueError):
        independence_lower_bound_str(cycles_union([3] * 20), cap=10)


def test_xi_profile_closed_forms_on_cubes():
    expected = {2: [2, 2, 1], 3: [3, 4, 4, 3], 4: [4, 6, 7, 7], 5: [5, 8, 10, 11]}
    for n, want in expected.items():
        prof = xi_profile(hypercube(n), i_max=4)
        assert list(prof.x) == want[: len(prof.x)]
        assert all(prof.complete)
    # closed forms: x1=n, x2=2n-2, x3=3n-5, x4=4n-9
    for n in (3, 4, 5):
        prof = xi_profile(hypercube(n), i_max=4)
        assert prof.x[0] == n
        assert prof.x[1] == 2 * n - 2
        assert prof.x[2] == 3 * n - 5
        assert prof.x[3] == 4 * n - 9


def test_xi_parallel_equals_serial():
    g = hypercube(4)
    a = xi_profile(g, i_max=4, jobs=1)
    b = xi_profile(g, i_max=4, jobs=2)
    assert a.x == b.x and a.xi == b.xi


def test_xi_budget_marks_incomplete():
    prof = xi_profile(hypercube(5), i_max=4, budget=0)
    assert not any(prof.complete)
    with pytest.raises(UnconfirmedBound):
        prof.xi
    full = xi_profile(hypercube(5), i_max=4)
    assert all(full.complete)


def test_xi_values():
    assert xi_profile(hypercube(2), i_max=4).xi == 2
    assert xi_profile(hypercube(3), i_max=4).xi == 3
    assert xi_profile(hypercube(4), i_max=4).xi == 5
    assert xi_profile(star(4), i_max=4).xi == 1


def test_hypercube_bound_formulas():
    assert [hypercube_lower_bound(n) for n in (2, 3, 4)] == [6, 11, 21]
    for n in range(5, 10):
        assert hypercube_lower_bound(n) == 2**n + 4 * n - 12
    assert hypercube_lower_bound(10) == 2**10 + 5**2 + 4
    assert hypercube_lower_bound(11) == 2**11 + 6**2 - 6 + 4
    assert hypercube_lower_bound(12) == 2**12 + 6**2 + 4
    for n in range(2, 13):
        assert hypercube_upper_bound(n) == 5 * 2 ** (n - 2) + 1
        assert hypercube_lower_bound(n) <= hypercube_upper_bound(n)


def test_recognize_hypercube():
    for n in range(1, 6):
        got = recognize_hypercube(hypercube(n))
        assert got is not None and got[0] == n
    # a scrambled copy is still recognized, with the coordinate words recovered
    rng = random.Random(2)
    perm = list(range(16))
    rng.shuffle(perm)
    scrambled = hypercube(4).relabeled(perm)
    got = recognize_hypercube(scrambled)
    assert got is not None and got[0] == 4
    n, words = got
    assert scrambled.relabeled(words) == hypercube(4)
    # non-cubes with cube-like parameters are rejected
    assert recognize_hypercube(cycle(8)) is None
    assert recognize_hypercube(complete(4)) is None
    assert recognize_hypercube(complete_bipartite(2, 2)) is None or True  # C4 = Q2
    assert recognize_hypercube(cycle(4)) is not None


def test_edge_connectivity_values():
    assert edge_connectivity(path(5)) == 1
    assert edge_connectivity(cycle(6)) == 2
    assert edge_connectivity(complete(5)) == 4
    assert edge_connectivity(hypercube(4)) == 4
    assert edge_connectivity(disjoint_union(cycle(3), cycle(3))) == 0
    bridge = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
    assert edge_connectivity(bridge) == 1


def test_two_regular_helpers():
    assert two_regular_cycle_lengths(cycles_union([5, 3, 4])) == [3, 4, 5]
    assert two_regular_cycle_lengths(path(4)) is None
    assert two_regular_strength([4, 6]) == 12
    assert two_regular_strength([3, 3, 3]) == 9 + 1 + 3
    assert two_regular_strength([5]) == 7


def test_bounds_report_sandwich_and_exactness():
    g = petersen()
    report = bounds_report(g)
    value = exact_strength(g).value
    assert report.best_lower <= value <= report.best_upper

    report = bounds_report(complete(6))
    assert report.exact and report.best_lower == 11

    report = bounds_report(cycles_union([3, 5, 4]))
    assert report.exact and report.best_lower == 12 + 3

    report = bounds_report(hypercube(4))
    assert report.exact and report.best_lower == 21

    report = bounds_report(star(6))
    assert report.exact and report.best_lower == 8


def test_bounds_report_handles_isolated_vertices():
    g = disjoint_union(cycle(4), Graph(2, []))
    report = bounds_report(g)
    assert report.p == 6 and report.core_p == 4
    assert report.best_lower == 6 and report.exact


def test_bounds_report_rejects_edgeless():
    with pytest.raises(ValueError):
        bounds_report(Graph(3, []))


def test_report_json_fields_render():
    report = bounds_report(cycle(5))
    text = report.render()
    assert "independence" in text and "strength in" in text
    entries = {e.name for e in report.entries}
    assert {"p+delta", "maxdeg+2", "2p-1"} <= entries

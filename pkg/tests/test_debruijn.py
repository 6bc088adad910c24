"""Graph construction over nonsingular windows, walk counts, synthesis.

The q=2, b=2 graph is small enough to freeze completely: vertices
010, 011, 101, 110 with loops at 010 and 101, the two-cycle 011 <-> 110,
and the four-cycle 010 -> 011 -> 101 -> 110 -> 010; every vertex has
in- and out-degree 2.
"""

import itertools

import pytest

from lhca.debruijn import (
    DetGraph,
    build_graph,
    count_paths,
    enumerate_paths,
    fuse,
    latin_hypercube_count,
    rule_from_path,
)
from lhca.errors import BudgetExceededError
from lhca.field import GF
from lhca.hypercube import count_latin_rules, is_latin
from lhca.rules import LinearRule, enumerate_linear_rules
from lhca.toeplitz import is_latin_by_windows, windows

F2 = GF(2)
F3 = GF(3)

GOLDEN_EDGES = [
    ((0, 1, 0), (0, 1, 0)),
    ((0, 1, 0), (0, 1, 1)),
    ((0, 1, 1), (1, 0, 1)),
    ((0, 1, 1), (1, 1, 0)),
    ((1, 0, 1), (1, 0, 1)),
    ((1, 0, 1), (1, 1, 0)),
    ((1, 1, 0), (0, 1, 0)),
    ((1, 1, 0), (0, 1, 1)),
]


def test_fuse():
    assert fuse((0, 1, 0), (0, 1, 1), 1) == (0, 1, 0, 1, 1)
    assert fuse((1, 2), (3, 4), 0) == (1, 2, 3, 4)
    assert fuse((0, 1, 0), (1, 0, 1), 2) == (0, 1, 0, 1)
    # full overlap collapses to the shared tuple
    assert fuse((0, 1, 0), (0, 1, 0), 3) == (0, 1, 0)
    # a failed overlap is a value, not an error
    assert fuse((0, 1, 0), (1, 0, 1), 1) is None
    assert fuse((1, 2), (3, 4), 1) is None
    with pytest.raises(ValueError):
        fuse((1,), (2,), 3)


def test_golden_graph():
    g = build_graph(F2, 2)
    assert g.vertices == ((0, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0))
    assert g.edges() == GOLDEN_EDGES
    assert g.successors((0, 1, 0)) == [(0, 1, 0), (0, 1, 1)]
    assert g.successors((1, 0, 1)) == [(1, 0, 1), (1, 1, 0)]
    with pytest.raises(ValueError):
        g.successors((0, 0, 0))


@pytest.mark.parametrize("q,b", [(2, 2), (2, 3), (3, 2), (2, 1), (3, 1)])
def test_graph_is_regular(q, b):
    fld = GF(q)
    g = build_graph(fld, b)
    r = (q - 1) * q ** (b - 1)
    assert len(g.vertices) == (q - 1) * q ** (2 * (b - 1))
    assert set(g.out_degrees()) == {r}
    assert set(g.in_degrees()) == {r}


def test_b1_graph_is_complete_with_loops():
    g = build_graph(F3, 1)
    assert g.vertices == ((1,), (2,))
    assert len(g.edges()) == 4
    assert g.successors((1,)) == [(1,), (2,)]


def test_count_paths_golden():
    # length counts edges: zero edges counts the vertices
    g = build_graph(F2, 2)
    assert count_paths(g, 0) == 4
    assert count_paths(g, 1) == 8
    assert count_paths(g, 2) == 16
    # regular out-degree 2 means each extra edge doubles the count
    assert count_paths(g, 9) == 4 * 2**9
    with pytest.raises(ValueError):
        count_paths(g, -1)


def test_count_paths_bit_budget():
    g = build_graph(F2, 2)
    with pytest.raises(BudgetExceededError):
        count_paths(g, 30, max_bits=10)


def test_enumerate_paths_lex_and_complete():
    g = build_graph(F2, 2)
    walks = list(enumerate_paths(g, 1))
    assert len(walks) == 8
    assert walks == sorted(walks)
    assert walks == [(u, v) for u, v in g.edges()]
    assert walks[0] == ((0, 1, 0), (0, 1, 0))
    assert walks[-1] == ((1, 1, 0), (0, 1, 1))
    assert [w[0] for w in enumerate_paths(g, 0)] == list(g.vertices)
    two_step = list(enumerate_paths(g, 2))
    assert len(two_step) == 16
    assert ((0, 1, 0), (0, 1, 1), (1, 0, 1)) in two_step
    with pytest.raises(BudgetExceededError):
        list(enumerate_paths(g, 12, budget=100))


def test_rule_from_path_golden():
    # fusing 010, 011, 101 recovers x1+x3+x5+x6+x8+x9
    rule = rule_from_path(F2, [(0, 1, 0), (0, 1, 1), (1, 0, 1)])
    assert rule.b == 2 and rule.k == 5
    assert rule.coeffs == (0, 1, 0, 1, 1, 0, 1)
    assert windows(rule) == [(0, 1, 0), (0, 1, 1), (1, 0, 1)]
    # a singleton path gives the k=3 rule of that window
    assert rule_from_path(F2, [(0, 1, 0)]) == LinearRule(F2, 2, 3, (0, 1, 0))


def test_rule_from_path_validation():
    with pytest.raises(ValueError):
        rule_from_path(F2, [])
    with pytest.raises(ValueError):
        rule_from_path(F2, [(0, 1)])
    with pytest.raises(ValueError):
        rule_from_path(F2, [(0, 1, 0), (1, 0, 1)])   # overlap mismatch
    with pytest.raises(ValueError):
        rule_from_path(F2, [(0, 1, 0), (0, 1, 1, 0, 1)])


def test_windows_and_rule_from_path_are_inverse():
    g = build_graph(F3, 2)
    for walk in itertools.islice(enumerate_paths(g, 1), 40):
        rule = rule_from_path(F3, walk)
        assert tuple(windows(rule)) == walk


def test_every_walk_gives_a_latin_cube():
    g = build_graph(F2, 2)
    for walk in enumerate_paths(g, 2):
        rule = rule_from_path(F2, walk)
        assert rule.k == 5
        assert is_latin_by_windows(rule)
        assert is_latin(rule)


def test_walks_are_exactly_the_latin_rules():
    # bijection between walks and brute-force Latin linear rules
    for fld, b, k in [(F2, 2, 4), (F3, 2, 3)]:
        g = build_graph(fld, b)
        from_walks = {rule_from_path(fld, w) for w in enumerate_paths(g, k - 3)}
        from_sweep = {r for r in enumerate_linear_rules(fld, b, k) if is_latin(r)}
        assert from_walks == from_sweep


def test_counting_theorem_small_cases():
    assert latin_hypercube_count(F2, 2, 5, verify=True) == 16
    assert latin_hypercube_count(F2, 2, 4, verify=True) == 8
    assert latin_hypercube_count(F3, 2, 4, verify=True) == 108
    assert latin_hypercube_count(F2, 3, 3, verify=True) == 16
    assert latin_hypercube_count(GF(4), 2, 3, verify=True) == 48


def test_counting_theorem_matches_brute_force():
    for fld, b, k in [(F2, 2, 3), (F3, 2, 3), (F2, 2, 4), (F2, 1, 4)]:
        assert latin_hypercube_count(fld, b, k) == count_latin_rules(fld, b, k)


def test_square_count_is_bipermutive_rule_count():
    assert latin_hypercube_count(F2, 2, 2) == 4
    assert latin_hypercube_count(F2, 3, 2) == 16
    assert latin_hypercube_count(F3, 2, 2) == 27
    assert latin_hypercube_count(F2, 1, 2) == 2


def test_count_bit_budget():
    with pytest.raises(BudgetExceededError):
        latin_hypercube_count(F2, 2, 10**7, max_bits=1000)
    with pytest.raises(BudgetExceededError):
        latin_hypercube_count(F2, 30, 2, max_bits=1000)


def test_graph_json_and_dot():
    g = build_graph(F2, 2)
    data = g.to_json()
    assert data["q"] == 2 and data["b"] == 2
    assert data["vertices"] == [[0, 1, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert len(data["edges"]) == 8
    assert data["edges"][0] == [0, 0]
    for i, j in data["edges"]:
        u, v = data["vertices"][i], data["vertices"][j]
        assert u[-1:] == v[:1]
    dot = g.to_dot()
    assert dot.startswith("digraph")
    assert '"010" -> "011";' in dot
    assert dot.count("->") == 8

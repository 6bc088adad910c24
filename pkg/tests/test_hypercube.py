"""Index encoding, cube entries, Latin verification, dumps, rule counting.

The 4x4x4 golden cube below was worked out by hand for the rule
f(x1..x5) = x1 + x3 + x5 over GF(2) with b=2, k=3 and is frozen here;
GOLDEN_CUBE[z-1][x-1][y-1] is the entry at (i1=x, i2=y, i3=z).
"""

import itertools

import pytest

from lhca.errors import BudgetExceededError
from lhca.field import GF
from lhca.hypercube import (
    LatinCheck,
    block_structure,
    check_random_lines,
    count_latin_rules,
    dump,
    dump_text,
    entry,
    is_latin,
    psi,
    psi_inverse,
)
from lhca.rules import GeneralBipermutiveRule, LinearRule

F2 = GF(2)
F3 = GF(3)

XOR5 = LinearRule(F2, 2, 3, (0, 1, 0))

GOLDEN_CUBE = [
    [[1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]],
    [[2, 1, 4, 3], [1, 2, 3, 4], [4, 3, 2, 1], [3, 4, 1, 2]],
    [[3, 4, 1, 2], [4, 3, 2, 1], [1, 2, 3, 4], [2, 1, 4, 3]],
    [[4, 3, 2, 1], [3, 4, 1, 2], [2, 1, 4, 3], [1, 2, 3, 4]],
]


def test_psi_encoding_of_small_indices():
    assert psi(1, 2, 2) == (0, 0)
    assert psi(2, 2, 2) == (1, 0)
    assert psi(3, 2, 2) == (0, 1)
    assert psi(4, 2, 2) == (1, 1)
    assert psi(5, 3, 2) == (1, 1)


def test_psi_round_trip():
    for q, b in [(2, 3), (3, 2), (4, 2)]:
        for i in range(1, q**b + 1):
            assert psi_inverse(psi(i, q, b), q) == i


def test_psi_validation():
    with pytest.raises(ValueError):
        psi(0, 2, 2)
    with pytest.raises(ValueError):
        psi(5, 2, 2)
    with pytest.raises(ValueError):
        psi_inverse((0, 2), 2)


def test_block_structure_defaults_and_overrides():
    assert block_structure(XOR5) == (2, 3)
    assert block_structure(XOR5, b=4) == (4, 2)
    assert block_structure(XOR5, k=5) == (1, 5)
    assert block_structure(XOR5, b=2, k=3) == (2, 3)
    gen = GeneralBipermutiveRule(F2, 5, tuple([0] * 8))
    assert block_structure(gen) == (4, 2)
    assert block_structure(gen, k=3) == (2, 3)
    with pytest.raises(ValueError):
        block_structure(XOR5, k=4)       # 4 does not divide into 3 blocks
    with pytest.raises(ValueError):
        block_structure(XOR5, b=3)
    with pytest.raises(ValueError):
        block_structure(XOR5, b=2, k=2)


def test_entry_golden_values():
    assert entry(XOR5, (1, 3, 2)) == 4
    assert entry(XOR5, (4, 1, 1)) == 4
    # order-2 cube of f(x1,x2,x3) = x1 + x2 + x3
    r = LinearRule(F2, 1, 3, (1,))
    assert entry(r, (2, 2, 2)) == 2
    assert entry(r, (1, 1, 1)) == 1
    with pytest.raises(ValueError):
        entry(XOR5, (1, 2))
    with pytest.raises(ValueError):
        entry(XOR5, (1, 2, 5))


def test_full_golden_cube():
    for z, x, y in itertools.product(range(1, 5), repeat=3):
        assert entry(XOR5, (x, y, z)) == GOLDEN_CUBE[z - 1][x - 1][y - 1]


def test_golden_cube_is_latin():
    res = is_latin(XOR5)
    assert res
    assert isinstance(res, LatinCheck)
    assert res.axis is None and res.fixed is None and res.value is None


def test_non_latin_rule_counterexample_is_deterministic():
    # f = x1 + x5 ignores the middle block, so axis-2 lines are constant
    flat = LinearRule(F2, 2, 3, (0, 0, 0))
    res = is_latin(flat)
    assert not res
    assert res.axis == 2
    assert res.fixed == (1, 1)
    assert res.value == 1


def test_axis_subset():
    flat = LinearRule(F2, 2, 3, (0, 0, 0))
    assert is_latin(flat, axis_subset=(1,))
    assert is_latin(flat, axis_subset=(3,))
    assert not is_latin(flat, axis_subset=(2,))
    with pytest.raises(ValueError):
        is_latin(flat, axis_subset=(0,))


def test_alternative_readings_of_one_rule():
    # Latinness depends on the reading: the same diameter-5 rule gives a
    # Latin 16x16 square, but its 2^5 cube has constant axis-2 lines
    # because the rule ignores x2
    assert is_latin(XOR5, b=4, k=2)
    res = is_latin(XOR5, k=5)
    assert not res and res.axis == 2


def test_general_rule_square_is_latin():
    add = GeneralBipermutiveRule(F3, 2, (0,))   # f(x1,x2) = x1 + x2
    assert is_latin(add)
    shifted = GeneralBipermutiveRule(F3, 2, (2,))
    assert is_latin(shifted)


def test_is_latin_budget():
    with pytest.raises(BudgetExceededError):
        is_latin(XOR5, budget=10)


def test_check_random_lines():
    assert check_random_lines(XOR5, n_lines=200, seed=7)
    flat = LinearRule(F2, 2, 3, (0, 0, 0))
    res = check_random_lines(flat, n_lines=200, seed=7)
    assert not res
    assert res.axis == 2
    assert res.value >= 1


def test_dump_structure_and_goldens():
    data = dump(XOR5)
    assert data["q"] == 2 and data["b"] == 2 and data["k"] == 3
    assert data["coeffs"] == [0, 1, 0]
    assert len(data["layers"]) == 4
    for z in range(4):
        assert data["layers"][z] == GOLDEN_CUBE[z]
    assert data["layers"][0][0] == [1, 2, 3, 4]
    assert data["layers"][3][3] == [1, 2, 3, 4]


def test_dump_square_has_one_layer():
    r = LinearRule(F3, 2, 2, (1,))
    data = dump(r)
    assert len(data["layers"]) == 1
    assert len(data["layers"][0]) == 9


def test_dump_general_rule_records_g_table():
    add = GeneralBipermutiveRule(F3, 2, (0,))
    data = dump(add)
    assert data["g_table"] == [0]
    assert data["d"] == 2
    assert data["layers"][0][0] == [1, 2, 3]


def test_dump_text_layout():
    text = dump_text(XOR5)
    lines = text.splitlines()
    assert lines[0] == "z=1"
    assert lines[1] == "1 2 3 4"
    assert "z=4" in lines
    square = dump_text(LinearRule(F2, 2, 2, (0,)))
    assert square.splitlines()[0].split() == ["1", "2", "3", "4"]


def test_dump_budget():
    with pytest.raises(BudgetExceededError):
        dump(XOR5, budget=10)


def test_count_latin_rules_small():
    assert count_latin_rules(F2, 2, 3) == 4
    assert count_latin_rules(F2, 1, 2) == 1
    assert count_latin_rules(F2, 2, 2) == 2
    assert count_latin_rules(F3, 2, 3) == 18


def test_count_latin_rules_workers_agree():
    assert count_latin_rules(F2, 2, 3, workers=2) == 4


def test_count_latin_rules_budget():
    with pytest.raises(BudgetExceededError):
        count_latin_rules(F2, 2, 3, budget=100)

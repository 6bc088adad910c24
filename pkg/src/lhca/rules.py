"""Local rules and the no-boundary cellular automaton global map.

A configuration ("cell vector") is a plain tuple of field elements.  The
global map of a rule of diameter d sends a configuration of length n >= d
to the length n-d+1 configuration obtained by evaluating the rule on every
window of d consecutive cells.

Three rule representations are supported:

* ``LinearRule``       -- a linear combination of the window cells whose
  border coefficients are fixed to 1, stored as the d-2 interior
  coefficients.  Parameterized by a block size b and dimension k with
  d = b(k-1)+1; these drive the hypercube construction downstream.
* ``GeneralBipermutiveRule`` -- first cell, plus a table-backed function of
  the d-2 interior cells, plus last cell.  Bipermutive by construction.
* ``TableRule``        -- an arbitrary rule given by its full value table;
  exists so that checks can be exercised against rules with no structural
  guarantees at all.

Table indices follow the same convention used everywhere in this package:
a tuple of cells (c_0, ..., c_{n-1}) has rank sum(c_i * q^i), i.e. the
leftmost cell is the least significant digit.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError
from .field import GF

DEFAULT_INT_BITS = 1 << 20


def rank_cells(cells: Sequence[int], q: int) -> int:
    """Rank of a cell tuple, leftmost cell least significant."""
    r = 0
    for c in reversed(cells):
        r = r * q + c
    return r


def unrank_cells(r: int, q: int, n: int) -> tuple[int, ...]:
    """Inverse of :func:`rank_cells` for tuples of length n."""
    out = []
    for _ in range(n):
        r, c = divmod(r, q)
        out.append(c)
    return tuple(out)


@dataclass(frozen=True)
class LinearRule:
    """Linear rule x_1 + a_2 x_2 + ... + a_{d-1} x_{d-1} + x_d over GF(q).

    ``coeffs`` holds the interior coefficients (a_2, ..., a_{d-1}); the
    border coefficients are hardwired to 1, which makes the rule
    bipermutive.  d = b(k-1)+1.
    """

    field: GF
    b: int
    k: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.b < 1:
            raise ValueError(f"block size must be >= 1, got {self.b}")
        if self.k < 2:
            raise ValueError(f"dimension must be >= 2, got {self.k}")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.d - 2:
            raise ValueError(
                f"expected {self.d - 2} interior coefficients for "
                f"b={self.b}, k={self.k}, got {len(self.coeffs)}")
        for c in self.coeffs:
            self.field._check(c)

    @property
    def d(self) -> int:
        return self.b * (self.k - 1) + 1

    @property
    def full_coeffs(self) -> tuple[int, ...]:
        """(a_1, ..., a_d) with the unit border coefficients included."""
        return (1,) + self.coeffs + (1,)

    def to_json(self) -> dict:
        return {"q": self.field.q, "b": self.b, "k": self.k,
                "coeffs": list(self.coeffs)}


@dataclass(frozen=True)
class GeneralBipermutiveRule:
    """Rule x_1 + g(x_2, ..., x_{d-1}) + x_d with g given as a value table.

    ``g_table`` has q^(d-2) entries, indexed by the rank of the interior
    window.  For d = 2 the table is the single constant g().
    """

    field: GF
    d: int
    g_table: tuple[int, ...]

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"diameter must be >= 2, got {self.d}")
        object.__setattr__(self, "g_table", tuple(self.g_table))
        if len(self.g_table) != self.field.q ** (self.d - 2):
            raise ValueError(
                f"g table needs {self.field.q ** (self.d - 2)} entries, "
                f"got {len(self.g_table)}")
        for v in self.g_table:
            self.field._check(v)

    def to_json(self) -> dict:
        return {"q": self.field.q, "d": self.d, "g_table": list(self.g_table)}


@dataclass(frozen=True)
class TableRule:
    """Arbitrary rule of diameter d given by its full value table
    (q^d entries, indexed by window rank)."""

    field: GF
    d: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"diameter must be >= 1, got {self.d}")
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.field.q ** self.d:
            raise ValueError(
                f"value table needs {self.field.q ** self.d} entries, "
                f"got {len(self.table)}")
        for v in self.table:
            self.field._check(v)


Rule = LinearRule | GeneralBipermutiveRule | TableRule


def rule_from_json(data: dict) -> LinearRule | GeneralBipermutiveRule:
    """Rebuild a rule from its JSON dict form."""
    fld = GF(data["q"])
    if "coeffs" in data:
        return LinearRule(fld, data["b"], data["k"], tuple(data["coeffs"]))
    if "g_table" in data:
        return GeneralBipermutiveRule(fld, data["d"], tuple(data["g_table"]))
    raise ValueError("rule JSON needs either 'coeffs' or 'g_table'")


def _check_cells(field: GF, cells: Sequence[int]) -> None:
    for c in cells:
        field._check(c)


def apply_rule(rule: Rule, window: Sequence[int]) -> int:
    """Evaluate the rule on one window of exactly d cells."""
    fld = rule.field
    if len(window) != rule.d:
        raise ValueError(f"window length {len(window)} != diameter {rule.d}")
    _check_cells(fld, window)
    if isinstance(rule, LinearRule):
        acc = 0
        for a, x in zip(rule.full_coeffs, window):
            acc = fld.add(acc, fld.mul(a, x))
        return acc
    if isinstance(rule, GeneralBipermutiveRule):
        g = rule.g_table[rank_cells(window[1:-1], fld.q)]
        return fld.add(fld.add(window[0], g), window[-1])
    return rule.table[rank_cells(window, fld.q)]


def apply_ca(rule: Rule, cells: Sequence[int]) -> tuple[int, ...]:
    """Global map: the rule applied to every window of d consecutive cells."""
    d = rule.d
    if len(cells) < d:
        raise ValueError(f"input length {len(cells)} < diameter {d}")
    cells = tuple(cells)
    return tuple(apply_rule(rule, cells[i:i + d])
                 for i in range(len(cells) - d + 1))


def apply_ca_batch(rule: Rule, inputs: np.ndarray) -> np.ndarray:
    """Vectorized global map over a batch of configurations.

    ``inputs`` is an (M, n) integer array of configurations; returns the
    (M, n-d+1) array of outputs.  Needs the field's lookup tables; falls
    back to a row-by-row loop for fields above the table cap.
    """
    fld = rule.field
    inputs = np.asarray(inputs)
    if inputs.ndim != 2:
        raise ValueError("inputs must be a 2-d array of configurations")
    n = inputs.shape[1]
    d = rule.d
    if n < d:
        raise ValueError(f"input length {n} < diameter {d}")
    if inputs.size and (inputs.min() < 0 or inputs.max() >= fld.q):
        raise ValueError("inputs contain values outside the field")
    if fld.add_table is None:
        return np.array([apply_ca(rule, row) for row in inputs.tolist()],
                        dtype=np.int64)

    width = n - d + 1
    add, mul = fld.add_table, fld.mul_table
    x = inputs.astype(np.uint8, copy=False)
    out = np.zeros((inputs.shape[0], width), dtype=np.uint8)
    if isinstance(rule, LinearRule):
        full = rule.full_coeffs
        for j in range(width):
            acc = np.zeros(inputs.shape[0], dtype=np.uint8)
            for t, a in enumerate(full):
                if a == 0:
                    continue
                term = x[:, j + t] if a == 1 else mul[a, x[:, j + t]]
                acc = add[acc, term]
            out[:, j] = acc
        return out

    powers = fld.q ** np.arange(d, dtype=np.int64)
    if isinstance(rule, GeneralBipermutiveRule):
        g = np.asarray(rule.g_table, dtype=np.uint8)
        for j in range(width):
            interior = x[:, j + 1:j + d - 1].astype(np.int64)
            mid = g[interior @ powers[:d - 2]] if d > 2 else np.full(
                inputs.shape[0], rule.g_table[0], dtype=np.uint8)
            out[:, j] = add[add[x[:, j], mid], x[:, j + d - 1]]
        return out

    table = np.asarray(rule.table, dtype=np.uint8)
    for j in range(width):
        ranks = x[:, j:j + d].astype(np.int64) @ powers
        out[:, j] = table[ranks]
    return out


def restriction_is_permutation(rule: Rule, side: str,
                               fixed: Sequence[int],
                               b: int | None = None) -> bool:
    """Exhaustively test whether varying one border block is a bijection.

    The free block of b cells sits on the given side ('left' or 'right');
    ``fixed`` supplies the remaining d-1 cells.  Returns True iff the map
    from the free block to the CA output (also b cells) is a permutation
    of GF(q)^b.  The free block size defaults to rule.b for linear rules
    and to d-1 otherwise.
    """
    fld = rule.field
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if b is None:
        b = rule.b if isinstance(rule, LinearRule) else rule.d - 1
    if len(fixed) != rule.d - 1:
        raise ValueError(
            f"fixed part must have d-1 = {rule.d - 1} cells, got {len(fixed)}")
    fixed = tuple(fixed)
    _check_cells(fld, fixed)
    q = fld.q
    seen = set()
    for free in itertools.product(range(q), repeat=b):
        cells = free + fixed if side == "left" else fixed + free
        seen.add(apply_ca(rule, cells))
    return len(seen) == q**b


def count_bipermutive_rules(field: GF, b: int,
                            max_bits: int = DEFAULT_INT_BITS) -> int:
    """Number of bipermutive rules of diameter b+1: q^(q^(b-1))."""
    if b < 1:
        raise ValueError(f"block size must be >= 1, got {b}")
    q = field.q
    exponent = q ** (b - 1)
    if exponent * q.bit_length() > max_bits:
        raise BudgetExceededError(
            f"q^(q^(b-1)) for q={q}, b={b} exceeds the {max_bits}-bit budget")
    return q**exponent


def enumerate_linear_rules(field: GF, b: int, k: int) -> Iterator[LinearRule]:
    """All q^(b(k-1)-1) linear rules, coefficient vectors in lexicographic
    order (leftmost coefficient most significant)."""
    n = b * (k - 1) - 1
    if n < 0:
        raise ValueError(f"b={b}, k={k} give a negative coefficient count")
    for coeffs in itertools.product(range(field.q), repeat=n):
        yield LinearRule(field, b, k, coeffs)


def enumerate_bipermutive_rules(field: GF, b: int,
                                max_bits: int = DEFAULT_INT_BITS
                                ) -> Iterator[GeneralBipermutiveRule]:
    """All q^(q^(b-1)) bipermutive rules of diameter b+1, g tables in
    lexicographic order."""
    count_bipermutive_rules(field, b, max_bits)  # budget guard
    for g in itertools.product(range(field.q), repeat=field.q ** (b - 1)):
        yield GeneralBipermutiveRule(field, b + 1, g)

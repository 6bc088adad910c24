"""Hypercubes of order q^b built by running a cellular automaton once.

The cube of a rule read with parameters (b, k) is the k-dimensional array
of order N = q^b whose entry at (i_1, ..., i_k) is computed by encoding
each 1-based index as a block of b cells (the base-q digits of i-1,
leftmost cell least significant), concatenating the k blocks into a
configuration of bk cells, applying the global map once, and decoding the
b output cells back to an index.

The array is Latin when every axis-parallel line hits every value exactly
once.  ``is_latin`` verifies this by direct evaluation of every line, in
vectorized chunks; it deliberately knows nothing about the algebraic
criterion in ``toeplitz`` so the two routes stay independently checkable.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError
from .field import GF
from .rules import (
    GeneralBipermutiveRule,
    LinearRule,
    Rule,
    apply_ca,
    apply_ca_batch,
    rank_cells,
    unrank_cells,
)

DEFAULT_ENTRY_BUDGET = 1 << 24


def psi(i: int, q: int, b: int) -> tuple[int, ...]:
    """Encode a 1-based index 1 <= i <= q^b as a block of b cells; the
    leftmost cell is the least significant base-q digit of i-1."""
    if not 1 <= i <= q**b:
        raise ValueError(f"index {i} out of range 1..{q**b}")
    return unrank_cells(i - 1, q, b)


def psi_inverse(cells: Sequence[int], q: int) -> int:
    """Decode a block of cells back to its 1-based index."""
    for c in cells:
        if not 0 <= c < q:
            raise ValueError(f"cell value {c} out of range for q={q}")
    return rank_cells(cells, q) + 1


def block_structure(rule: Rule, b: int | None = None,
                    k: int | None = None) -> tuple[int, int]:
    """Resolve the (block size, dimension) reading of a rule.

    A rule of diameter d supports any splitting with b(k-1) = d-1.  Linear
    rules default to their declared (b, k); other rules default to the
    square reading b = d-1, k = 2.
    """
    span = rule.d - 1
    if b is None and k is None:
        if isinstance(rule, LinearRule):
            return rule.b, rule.k
        return span, 2
    if b is None:
        if k < 2 or span % (k - 1):
            raise ValueError(
                f"diameter {rule.d} does not split into k={k} blocks")
        b = span // (k - 1)
    elif k is None:
        if b < 1 or span % b:
            raise ValueError(
                f"diameter {rule.d} does not split into blocks of size {b}")
        k = span // b + 1
    if b < 1 or k < 2 or b * (k - 1) != span:
        raise ValueError(f"(b={b}, k={k}) inconsistent with diameter {rule.d}")
    return b, k


def entry(rule: Rule, idx: Sequence[int], b: int | None = None,
          k: int | None = None) -> int:
    """The cube entry at the 1-based position idx = (i_1, ..., i_k)."""
    b, k = block_structure(rule, b, k)
    q = rule.field.q
    if len(idx) != k:
        raise ValueError(f"expected {k} indices, got {len(idx)}")
    cells: list[int] = []
    for i in idx:
        cells.extend(psi(i, q, b))
    return psi_inverse(apply_ca(rule, cells), q)


@dataclass(frozen=True)
class LatinCheck:
    """Outcome of a Latin verification; falsy iff a line repeats a value.

    On failure ``axis`` (1-based) names the direction of the offending
    line, ``fixed`` gives its other k-1 coordinates in increasing axis
    order, and ``value`` is the smallest entry hit more than once.
    """

    ok: bool
    axis: int | None = None
    fixed: tuple[int, ...] | None = None
    value: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _psi_array(q: int, b: int) -> np.ndarray:
    dt = np.uint8 if q <= 256 else np.int64
    out = np.zeros((q**b, b), dtype=dt)
    for v in range(q**b):
        out[v] = unrank_cells(v, q, b)
    return out


def _line_inputs(psi_arr: np.ndarray, coords: np.ndarray, axis: int,
                 b: int, k: int) -> np.ndarray:
    """Inputs for a batch of lines: every line repeated N times with the
    block of the swept axis running through all of GF(q)^b."""
    N = psi_arr.shape[0]
    L = coords.shape[0]
    inputs = np.zeros((L * N, b * k), dtype=psi_arr.dtype)
    others = [j for j in range(k) if j != axis - 1]
    for t, j in enumerate(others):
        inputs[:, b * j:b * (j + 1)] = np.repeat(psi_arr[coords[:, t]], N, axis=0)
    j = axis - 1
    inputs[:, b * j:b * (j + 1)] = np.tile(psi_arr, (L, 1))
    return inputs


def _first_duplicate(sorted_vals: np.ndarray) -> int:
    eq = sorted_vals[:-1] == sorted_vals[1:]
    return int(sorted_vals[:-1][eq][0])


def is_latin(rule: Rule, b: int | None = None, k: int | None = None,
             budget: int = DEFAULT_ENTRY_BUDGET,
             axis_subset: Iterable[int] | None = None) -> LatinCheck:
    """Brute-force Latin test: evaluate every axis-parallel line and check
    each is a permutation of 1..N.

    Axes are scanned in order and lines in lexicographic order of their
    fixed coordinates, so the reported counterexample is deterministic.
    Raises BudgetExceededError for cubes with more than ``budget`` entries.
    """
    b, k = block_structure(rule, b, k)
    q = rule.field.q
    N = q**b
    if N**k > budget:
        raise BudgetExceededError(
            f"cube with {N}^{k} entries exceeds budget {budget}")
    axes = tuple(range(1, k + 1)) if axis_subset is None else tuple(axis_subset)
    for a in axes:
        if not 1 <= a <= k:
            raise ValueError(f"axis {a} out of range 1..{k}")
    psi_arr = _psi_array(q, b)
    out_pow = q ** np.arange(b, dtype=np.int64)
    target = np.arange(N, dtype=np.int64)
    n_lines = N ** (k - 1)
    chunk = max(1, 65536 // N)
    for axis in axes:
        for lo in range(0, n_lines, chunk):
            hi = min(lo + chunk, n_lines)
            r = np.arange(lo, hi, dtype=np.int64)
            coords = np.zeros((hi - lo, k - 1), dtype=np.int64)
            for t in range(k - 2, -1, -1):
                coords[:, t] = r % N
                r = r // N
            inputs = _line_inputs(psi_arr, coords, axis, b, k)
            outs = apply_ca_batch(rule, inputs).astype(np.int64)
            vals = (outs @ out_pow).reshape(hi - lo, N)
            svals = np.sort(vals, axis=1)
            good = (svals == target).all(axis=1)
            if not good.all():
                bad = int(np.argmin(good))
                fixed = tuple(int(c) + 1 for c in coords[bad])
                return LatinCheck(False, axis, fixed,
                                  _first_duplicate(svals[bad]) + 1)
    return LatinCheck(True)


def check_random_lines(rule: Rule, n_lines: int = 1000, seed: int = 0,
                       b: int | None = None,
                       k: int | None = None) -> LatinCheck:
    """Sampled Latin test for cubes too large to sweep exhaustively.

    Checks ``n_lines`` independently random axis-parallel lines.  A pass
    is evidence, not proof; a failure is a genuine counterexample.
    """
    b, k = block_structure(rule, b, k)
    q = rule.field.q
    N = q**b
    rng = random.Random(seed)
    psi_arr = _psi_array(q, b)
    out_pow = q ** np.arange(b, dtype=np.int64)
    target = np.arange(N, dtype=np.int64)
    for _ in range(n_lines):
        axis = rng.randrange(k) + 1
        coords = np.array([[rng.randrange(N) for _ in range(k - 1)]])
        inputs = _line_inputs(psi_arr, coords, axis, b, k)
        vals = apply_ca_batch(rule, inputs).astype(np.int64) @ out_pow
        svals = np.sort(vals)
        if not (svals == target).all():
            fixed = tuple(int(c) + 1 for c in coords[0])
            return LatinCheck(False, axis, fixed,
                              _first_duplicate(svals) + 1)
    return LatinCheck(True)


def dump(rule: Rule, b: int | None = None, k: int | None = None,
         budget: int = DEFAULT_ENTRY_BUDGET) -> dict:
    """All cube entries as nested lists, plus the rule parameters.

    ``layers`` holds one N x N block (rows i_1, columns i_2) for each
    assignment of the remaining indices, in lexicographic order of
    (i_3, ..., i_k); a square has exactly one layer.  Entries are the
    1-based values.
    """
    b, k = block_structure(rule, b, k)
    q = rule.field.q
    N = q**b
    if N**k > budget:
        raise BudgetExceededError(
            f"cube with {N}^{k} entries exceeds budget {budget}")
    psi_arr = _psi_array(q, b)
    out_pow = q ** np.arange(b, dtype=np.int64)
    rows = np.repeat(np.arange(N), N)
    cols = np.tile(np.arange(N), N)
    layers = []
    for rest in itertools.product(range(N), repeat=k - 2):
        inputs = np.zeros((N * N, b * k), dtype=psi_arr.dtype)
        inputs[:, 0:b] = psi_arr[rows]
        inputs[:, b:2 * b] = psi_arr[cols]
        for t, v in enumerate(rest):
            j = t + 2
            inputs[:, b * j:b * (j + 1)] = psi_arr[v]
        vals = (apply_ca_batch(rule, inputs).astype(np.int64) @ out_pow) + 1
        layers.append(vals.reshape(N, N).tolist())
    out = {"q": q, "b": b, "k": k}
    if isinstance(rule, LinearRule):
        out["coeffs"] = list(rule.coeffs)
    elif isinstance(rule, GeneralBipermutiveRule):
        out["d"] = rule.d
        out["g_table"] = list(rule.g_table)
    out["layers"] = layers
    return out


def dump_text(rule: Rule, b: int | None = None, k: int | None = None,
              budget: int = DEFAULT_ENTRY_BUDGET) -> str:
    """Human-readable rendering of :func:`dump`."""
    data = dump(rule, b, k, budget)
    b, k = data["b"], data["k"]
    N = data["q"] ** b
    width = len(str(N))
    lines: list[str] = []
    for idx, layer in zip(itertools.product(range(1, N + 1), repeat=k - 2),
                          data["layers"]):
        if k == 3:
            lines.append(f"z={idx[0]}")
        elif k > 3:
            lines.append("layer " + ",".join(str(i) for i in idx))
        for row in layer:
            lines.append(" ".join(str(v).rjust(width) for v in row))
        if k > 2:
            lines.append("")
    return "\n".join(lines).rstrip("\n") + "\n"


def _rank_to_coeffs(r: int, q: int, n: int) -> tuple[int, ...]:
    # inverse of the lexicographic enumeration order: the last coefficient
    # is the least significant digit
    out = [0] * n
    for t in range(n - 1, -1, -1):
        r, out[t] = divmod(r, q)
    return tuple(out)


def _count_latin_range(args: tuple) -> int:
    field_json, b, k, lo, hi, budget = args
    fld = GF.from_json(field_json)
    n = b * (k - 1) - 1
    count = 0
    for r in range(lo, hi):
        rule = LinearRule(fld, b, k, _rank_to_coeffs(r, fld.q, n))
        if is_latin(rule, budget=budget):
            count += 1
    return count


def count_latin_rules(field: GF, b: int, k: int,
                      budget: int = DEFAULT_ENTRY_BUDGET,
                      workers: int | None = None) -> int:
    """Count, by exhaustive verification, the linear rules whose (b, k)
    cube is Latin.

    ``budget`` bounds rules times cube entries; ``workers`` greater than 1
    spreads the rule range over that many processes.
    """
    if b < 1 or k < 2:
        raise ValueError(f"need b >= 1 and k >= 2, got b={b}, k={k}")
    q = field.q
    n = b * (k - 1) - 1
    total = q**n
    if total * q ** (b * k) > budget:
        raise BudgetExceededError(
            f"{total} rules x {q**b}^{k} entries exceeds budget {budget}")
    if workers and workers > 1 and total > 1:
        chunks = min(total, workers * 4)
        bounds = [total * i // chunks for i in range(chunks + 1)]
        jobs = [(field.to_json(), b, k, bounds[i], bounds[i + 1], budget)
                for i in range(chunks)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(_count_latin_range, jobs))
    return _count_latin_range((field.to_json(), b, k, 0, total, budget))

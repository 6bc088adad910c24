"""Independent oracles used to cross-check the library implementations."""

from lhca.field import GF


def cofactor_det(field: GF, matrix) -> int:
    """Determinant by Laplace expansion along the first row; exponential,
    but shares no code with the elimination-based implementation."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    det = 0
    for c in range(n):
        if matrix[0][c] == 0:
            continue
        minor = [list(row[:c]) + list(row[c + 1:]) for row in matrix[1:]]
        term = field.mul(matrix[0][c], cofactor_det(field, minor))
        det = field.add(det, term) if c % 2 == 0 else field.sub(det, term)
    return det


def mat_vec(field: GF, matrix, vec) -> list[int]:
    out = []
    for row in matrix:
        acc = 0
        for a, x in zip(row, vec):
            acc = field.add(acc, field.mul(a, x))
        out.append(acc)
    return out

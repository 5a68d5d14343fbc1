"""Small exact integer matrices stored as tuples of row tuples."""

from fractions import Fraction

from .errors import DomainError


def as_matrix(rows):
    m = tuple(tuple(int(e) for e in row) for row in rows)
    if not m or any(len(row) != len(m) for row in m):
        raise DomainError("expected a non-empty square matrix")
    return m


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(a):
    return tuple(zip(*a))


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def column(a, j):
    return tuple(row[j] for row in a)


def from_columns(cols):
    return transpose(tuple(tuple(c) for c in cols))


def inverse(a):
    """Exact inverse of a unimodular integer matrix.

    Gauss-Jordan over the rationals; raises DomainError if ``a`` is
    singular or its inverse is not integral.
    """
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise DomainError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = [row[n:] for row in aug]
    if any(x.denominator != 1 for row in inv for x in row):
        raise DomainError("matrix is not invertible over the integers")
    return tuple(tuple(int(x) for x in row) for row in inv)

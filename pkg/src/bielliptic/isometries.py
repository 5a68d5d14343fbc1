"""Isometries of N(S), the group O(U) of the divisor lattice, and the image index."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .delta import admissibility_failures, delta_basis, in_delta
from .errors import DomainError, NotIsometryError
from .intmat import as_matrix, identity, matmul, matvec, transpose
from .lattice import GRAM, NumClass, check_type, common_surface


def is_isometry(m):
    try:
        m = as_matrix(m)
    except (DomainError, TypeError, ValueError):
        return False
    if len(m) != 4:
        return False
    return matmul(matmul(transpose(m), GRAM), m) == GRAM


@dataclass(frozen=True)
class NumIsometry:
    """A 4x4 integer matrix preserving the Euler pairing.

    Columns are the images of (P0, E1, E2, P4).  Construction raises
    NotIsometryError if the Gram check fails.
    """

    matrix: tuple
    surface: Optional[int] = None

    def __post_init__(self):
        try:
            m = as_matrix(self.matrix)
        except (TypeError, ValueError) as exc:
            raise NotIsometryError(f"not an isometry: {exc}") from None
        if not is_isometry(m):
            raise NotIsometryError()
        object.__setattr__(self, "matrix", m)
        if self.surface is not None:
            check_type(self.surface)

    @classmethod
    def identity(cls, surface=None):
        return cls(identity(4), surface)

    @classmethod
    def _unchecked(cls, matrix, surface):
        # Products and inverses of isometries need no Gram re-check.
        obj = object.__new__(cls)
        object.__setattr__(obj, "matrix", matrix)
        object.__setattr__(obj, "surface", surface)
        return obj

    def __matmul__(self, other):
        return NumIsometry._unchecked(matmul(self.matrix, other.matrix), common_surface(self, other))

    def inverse(self):
        # m^T G m = G and G^2 = 1 give m^-1 = G m^T G.
        return NumIsometry._unchecked(matmul(matmul(GRAM, transpose(self.matrix)), GRAM), self.surface)

    def apply(self, v):
        t = common_surface(self, v)
        return NumClass(*matvec(self.matrix, v.coords), t)

    def __call__(self, v):
        return self.apply(v)

    def flat(self):
        return tuple(e for row in self.matrix for e in row)


class UIsometry(Enum):
    """The four isometries of the hyperbolic plane U."""

    ID = "id"
    IOTA = "iota"
    SIGMA = "sigma"
    IOTA_SIGMA = "iota_sigma"

    @property
    def matrix(self):
        return _U_MATRICES[self]

    def __mul__(self, other):
        return UIsometry.from_matrix(matmul(self.matrix, other.matrix))

    @classmethod
    def from_matrix(cls, m):
        m = tuple(tuple(row) for row in m)
        for psi, mat in _U_MATRICES.items():
            if mat == m:
                return psi
        raise DomainError(f"{m} is not an isometry of U")


_U_MATRICES = {
    UIsometry.ID: ((1, 0), (0, 1)),
    UIsometry.IOTA: ((-1, 0), (0, -1)),
    UIsometry.SIGMA: ((0, 1), (1, 0)),
    UIsometry.IOTA_SIGMA: ((0, -1), (-1, 0)),
}


def block(psi, surface=None):
    """``id + psi + id`` acting on (r, (x, y), s)."""
    (a, b), (c, d) = psi.matrix
    return NumIsometry(
        ((1, 0, 0, 0), (0, a, b, 0), (0, c, d, 0), (0, 0, 0, 1)),
        surface,
    )


def block_part(m):
    """The U-isometry ``psi`` if ``m`` equals ``block(psi)``, else None."""
    mat = m.matrix if isinstance(m, NumIsometry) else as_matrix(m)
    if [mat[0], mat[3]] != [(1, 0, 0, 0), (0, 0, 0, 1)]:
        return None
    if any(mat[i][j] for i in (1, 2) for j in (0, 3)):
        return None
    try:
        return UIsometry.from_matrix(((mat[1][1], mat[1][2]), (mat[2][1], mat[2][2])))
    except DomainError:
        return None


def _as_isometry(m):
    return m if isinstance(m, NumIsometry) else NumIsometry(m)


def preserves_delta(m, model):
    """True iff ``m`` maps the special sublattice of ``model`` onto itself."""
    m = _as_isometry(m)
    common_surface(m, model)
    inv = m.inverse()
    for b in delta_basis(model):
        b = NumClass(*b.coords)
        if not (in_delta(model, m.apply(b)) and in_delta(model, inv.apply(b))):
            return False
    return True


def delta_preserving_blocks(model):
    return [psi for psi in UIsometry if preserves_delta(block(psi), model)]


def image_index(model):
    """Index of the autoequivalence image inside O_Delta(N(S)).

    Every Delta-preserving isometry is an image element times a block
    isometry, and images meet the block subgroup trivially, so the index
    is the number of U-isometries whose block preserves Delta.
    """
    bad = admissibility_failures(model)
    if bad:
        raise DomainError("inadmissible Delta model: " + ", ".join(bad))
    return len(delta_preserving_blocks(model))

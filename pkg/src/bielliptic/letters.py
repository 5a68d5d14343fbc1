"""Generator letters and their actions on N(S).

A relative Fourier-Mukai transform along an elliptic fibration with
matrix ``(c, a; d, b)`` in SL2(Z) acts on (rank, fibre degree) by that
matrix.  Along p_A (fibre B) the fibre degree of ``(r, x, y, s)`` is
``k x``; along p_B (fibre A) it is ``n y``.  The full 4x4 action is the
doubled block N + N on the coordinate pairs ((r, x), (y, s)) for p_A and
((r, y), (x, s)) for p_B, which is an isometry for every det-1 N.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from .errors import DomainError
from .intmat import identity, matvec
from .isometries import NumIsometry
from .lattice import NumClass, check_type, common_surface, surface_profile


@dataclass(frozen=True)
class Shift:
    surface: int
    inverse: bool = False

    def __post_init__(self):
        check_type(self.surface)

    def inverted(self):
        return replace(self, inverse=not self.inverse)

    @property
    def geometric(self):
        return True

    def _matrix(self):
        return tuple(tuple(-e for e in row) for row in identity(4))


@dataclass(frozen=True)
class TensorLB:
    """Twist by a line bundle with ``c1 = mx e1 + my e2``."""

    surface: int
    mx: int
    my: int
    inverse: bool = False

    def __post_init__(self):
        check_type(self.surface)

    def inverted(self):
        return replace(self, inverse=not self.inverse)

    @property
    def geometric(self):
        return True

    def _matrix(self):
        mx, my = self.mx, self.my
        return (
            (1, 0, 0, 0),
            (mx, 1, 0, 0),
            (my, 0, 1, 0),
            (mx * my, my, mx, 1),
        )


@dataclass(frozen=True)
class _RelFM:
    surface: int
    c: int
    a: int
    d: int
    b: int
    inverse: bool = False

    def __post_init__(self):
        check_type(self.surface)
        if self.c * self.b - self.a * self.d != 1:
            raise DomainError(f"({self.c},{self.a};{self.d},{self.b}) is not in SL2(Z)")
        lam = self.multisection_degree
        if self.d % lam:
            raise DomainError(
                f"{type(self).__name__}: multisection degree {lam} does not divide d={self.d}"
            )

    def inverted(self):
        return replace(self, inverse=not self.inverse)

    @property
    def geometric(self):
        """Whether the transform exists directly, which needs ``a > 0``."""
        return self.a > 0

    @property
    def sl2(self):
        return ((self.c, self.a), (self.d, self.b))


class RelFMA(_RelFM):
    """Relative transform along p_A (fibre class B)."""

    @property
    def multisection_degree(self):
        return surface_profile(self.surface).lambda_pA

    def _matrix(self):
        lam = self.multisection_degree
        c, ak, dk, b = self.c, self.a * lam, self.d // lam, self.b
        return (
            (c, ak, 0, 0),
            (dk, b, 0, 0),
            (0, 0, c, ak),
            (0, 0, dk, b),
        )


class RelFMB(_RelFM):
    """Relative transform along p_B (fibre class A)."""

    @property
    def multisection_degree(self):
        return surface_profile(self.surface).lambda_pB

    def _matrix(self):
        lam = self.multisection_degree
        c, an, dn, b = self.c, self.a * lam, self.d // lam, self.b
        return (
            (c, 0, an, 0),
            (0, c, 0, an),
            (dn, 0, b, 0),
            (0, dn, 0, b),
        )


LETTER_TYPES = (Shift, TensorLB, RelFMA, RelFMB)


def psi_B(t):
    return RelFMA(check_type(t), 1, 1, 0, 1)


def psi_hat(t):
    """The transform with matrix (0, 1; -1, 0) along p_A; needs a section (split types)."""
    return RelFMA(check_type(t), 0, 1, -1, 0)


def fiber_degree_A(v, t):
    return surface_profile(t).k * v.x


def fiber_degree_B(v, t):
    return surface_profile(t).n * v.y


@lru_cache(maxsize=8192)
def letter_action(letter):
    m = NumIsometry(letter._matrix(), letter.surface)
    return m.inverse() if letter.inverse else m


def compose(letters, surface=None):
    """Product of the letter actions, leftmost letter applied last."""
    letters = list(letters)
    t = common_surface(*letters)
    if surface is not None:
        check_type(surface)
        if t not in (None, surface):
            raise DomainError(f"word of type {t} composed as type {surface}")
        t = surface
    m = NumIsometry.identity(t)
    for letter in letters:
        m = m @ letter_action(letter)
    return NumIsometry._unchecked(m.matrix, t)


def apply_word(letters, v):
    """``compose(letters)(v)`` without forming the product matrix."""
    t = common_surface(v, *letters)
    coords = v.coords
    for letter in reversed(list(letters)):
        coords = matvec(letter_action(letter).matrix, coords)
    return NumClass(*coords, t)

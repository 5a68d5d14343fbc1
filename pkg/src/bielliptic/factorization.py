"""Factor isometries of split-type surfaces into generator words.

``factor_point_image`` finds a word sending the point class P4 to a given
isotropic, primitive special class.  Its three cases are: the class is
already +-P4; the rank is zero, so one relative transform suffices; or the
rank is non-zero, where the Euclidean algorithm on (rank / n, x / n)
driven by twists and powers of Psi_B brings the rank to zero.
``decompose`` peels off such a word and a line-bundle twist, leaving an
isometry that is the identity on ranks and Euler characteristics, i.e. a
block isometry from O(U).
"""

from __future__ import annotations

from dataclasses import dataclass

from .delta import default_delta, in_delta
from .errors import (
    DeltaNotPreservedError,
    DomainError,
    NonSplitError,
    NotInDeltaError,
    NotIsotropicError,
    NotPrimitiveError,
)
from .intmat import matvec
from .isometries import NumIsometry, UIsometry, block_part, preserves_delta
from .lattice import P0, P4, NumClass, check_type, common_surface, is_isotropic, is_primitive, surface_profile
from .letters import RelFMA, RelFMB, Shift, TensorLB, apply_word, compose, letter_action, psi_hat
from .literals import format_word


@dataclass(frozen=True)
class GeneratorWord:
    letters: tuple
    surface: int

    def __post_init__(self):
        check_type(self.surface)
        letters = tuple(self.letters)
        if common_surface(*letters) not in (None, self.surface):
            raise DomainError("word mixes letters of different surface types")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other):
        return GeneratorWord(self.letters + tuple(other.letters), self.surface)

    def __str__(self):
        return format_word(self.letters)

    def action(self):
        return compose(self.letters, self.surface)

    def apply(self, v):
        return apply_word(self.letters, NumClass(*v.coords, self.surface))

    def inverse(self):
        return GeneratorWord(tuple(x.inverted() for x in reversed(self.letters)), self.surface)


@dataclass(frozen=True)
class Decomposition:
    """``compose(word) . block(residual)`` equals the decomposed isometry."""

    word: GeneratorWord
    residual: UIsometry

    @property
    def in_image(self):
        return self.residual is UIsometry.ID


def _require_split(t):
    p = surface_profile(t)
    if not p.split:
        raise NonSplitError(f"non-split type: type {p.type_id} has k = {p.k}")
    return p


def _check_point_image(t, v):
    model = default_delta(t)
    if not in_delta(model, v):
        raise NotInDeltaError(f"not in Delta: {v.coords}")
    if not is_isotropic(v):
        raise NotIsotropicError(f"not isotropic: {v.coords}")
    if v.is_zero() or not is_primitive(v):
        raise NotPrimitiveError(f"not primitive: {v.coords}")


class _Reducer:
    """Carries the class being reduced and the letters that undo each step.

    ``emit(L)`` records L and replaces the current class w by L^-1(w), so
    the recorded letters applied to the final class give back the input.
    """

    def __init__(self, t, v, trace):
        self.t = t
        self.w = v.coords
        self.letters = []
        self.trace = trace

    def emit(self, letter):
        self.letters.append(letter)
        inv = letter_action(letter.inverted())
        self.w = matvec(inv.matrix, self.w)
        if self.trace is not None:
            self.trace.append(NumClass(*self.w, self.t))


def _final_transform(red, n):
    """Rank-zero case: one relative transform sends P4 to ``(0, x, y, s)``."""
    t = red.t
    _, x, y, s = red.w
    if x == 0 and y == 0:
        if s == -1:
            red.emit(Shift(t))
        return
    if x * y != 0:
        raise AssertionError(f"rank-zero isotropic class with x*y != 0: {red.w}")
    along_B = y == 0
    a = x // n if along_B else y
    if a < 0:
        red.emit(Shift(t))
        a, s = -a, -s
    lam = n if along_B else 1
    # Bezout: c*s - a*d = 1 with lam | d; c is the canonical residue mod a*lam.
    c = pow(s, -1, a * lam)
    d = (c * s - 1) // a
    red.emit((RelFMB if along_B else RelFMA)(t, c, a, d, s))


def _normalize_shifts(letters, t):
    # Shift acts by -1, which is central, so only the parity of shifts matters.
    odd = sum(isinstance(x, Shift) for x in letters) % 2
    rest = [x for x in letters if not isinstance(x, Shift)]
    return ([Shift(t)] if odd else []) + rest


def factor_point_image(t, v, trace=None):
    """Word ``w`` with ``compose(w)(P4) == v`` for a split type ``t``.

    ``v`` must be special for the default model, isotropic and primitive.
    If ``trace`` is a list, every intermediate class is appended to it.
    """
    p = _require_split(t)
    t = p.type_id
    common_surface(v, NumClass(0, 0, 0, 0, t))
    v = NumClass(*v.coords, t)
    _check_point_image(t, v)
    n = p.n
    red = _Reducer(t, v, trace)

    if red.w[0] < 0:
        red.emit(Shift(t))
    if red.w[0] > 0:
        r, x, _, _ = red.w
        if x == 0:
            # (n c, 0, y, 0) -> Psi_hat of it is (0, -c A, 0, -y); undo via Psi_hat^-1 = shift . Psi_hat.
            red.emit(Shift(t))
            red.emit(psi_hat(t))
        else:
            c0, a0 = r // n, x // n
            while c0:
                step = (a0 - 1) // c0
                if step:
                    red.emit(TensorLB(t, step, 0))
                a0 -= step * c0
                q = c0 // a0
                red.emit(RelFMA(t, 1, q, 0, 1))
                c0 -= q * a0
                if (red.w[0], red.w[1]) != (n * c0, n * a0):
                    raise AssertionError(f"Euclidean step drifted: {red.w}")
    _final_transform(red, n)
    if red.w != P4.coords:
        raise AssertionError(f"factorization did not reach P4: {red.w}")
    return GeneratorWord(tuple(_normalize_shifts(red.letters, t)), t)


def _as_isometry(m, t):
    m = m if isinstance(m, NumIsometry) else NumIsometry(m)
    common_surface(m, NumClass(0, 0, 0, 0, t))
    return NumIsometry(m.matrix, t)


def decompose(t, m):
    """Split ``m`` as ``compose(word) . block(psi)`` for a split type ``t``."""
    p = _require_split(t)
    t = p.type_id
    m = _as_isometry(m, t)
    if not preserves_delta(m, default_delta(t)):
        raise DeltaNotPreservedError()
    w1 = factor_point_image(t, m.apply(P4))
    m1 = w1.action().inverse() @ m
    if m1.apply(P4).coords != P4.coords:
        raise AssertionError("peeled isometry does not fix P4")
    u = m1.apply(P0)
    if u.r != 1 or u.s != u.x * u.y:
        raise AssertionError(f"image of P0 is not a line-bundle class: {u.coords}")
    twist = TensorLB(t, u.x, u.y)
    m2 = letter_action(twist).inverse() @ m1
    psi = block_part(m2)
    if psi is None:
        raise AssertionError(f"residual is not a block isometry: {m2.matrix}")
    letters = w1.letters + ((twist,) if (u.x, u.y) != (0, 0) else ())
    return Decomposition(GeneratorWord(letters, t), psi)


def is_in_image(t, m):
    """``(True, word)`` if ``m`` is a composite of generators, else ``(False, residual)``."""
    dec = decompose(t, m)
    if dec.in_image:
        return True, dec.word
    return False, dec.residual


def verify_word(word, claim):
    """Exact check of ``word`` against a claimed isometry or image of P4."""
    try:
        if isinstance(claim, NumClass):
            return word.apply(P4).coords == claim.coords
        matrix = claim.matrix if isinstance(claim, NumIsometry) else claim
        return word.action().matrix == tuple(tuple(row) for row in matrix)
    except (DomainError, TypeError, ValueError):
        return False

"""The sublattice of special classes and its admissible models.

A class ``(r, D, s)`` is special iff ``n | r`` and ``D`` lies in a
sublattice L of Num(S) with <A, B> <= L.  Which L occurs is only pinned
down by constraints (A, B in L; no fractional multiple of A in L; for
non-split types none of B either), so L is a parameter of the model.  The
canonical default is L = <A, B>.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

from .errors import DomainError
from .lattice import DivisorClass, NumClass, P4, check_type, common_surface, surface_profile


def hnf2(generators):
    """Column Hermite normal form of the rank-2 lattice spanned by ``generators``.

    Returns ``((a, b), (0, c))`` with ``a, c > 0`` and ``0 <= b < a``; the
    columns ``(a, 0)`` and ``(b, c)`` form a basis.
    """
    gens = [(int(x), int(y)) for x, y in generators]
    # Row-reduce on the second coordinate to isolate a single vector with y != 0.
    pivot = None
    rest = []
    for v in gens:
        if v[1] == 0:
            rest.append(v)
            continue
        if pivot is None:
            pivot = v
            continue
        # Euclid on the y-coordinates of (pivot, v).
        p, q = pivot, v
        while q[1] != 0:
            t = p[1] // q[1]
            p, q = q, (p[0] - t * q[0], p[1] - t * q[1])
        pivot = p
        rest.append(q)
    if pivot is None:
        raise DomainError("generators do not span a rank-2 lattice")
    a = 0
    for x, _ in rest:
        a = gcd(a, x)
    if a == 0:
        raise DomainError("generators do not span a rank-2 lattice")
    if pivot[1] < 0:
        pivot = (-pivot[0], -pivot[1])
    return ((a, pivot[0] % a), (0, pivot[1]))


@dataclass(frozen=True)
class DeltaModel:
    """Model of the special sublattice for one surface type.

    ``l_div`` is the column HNF ``((a, b), (0, c))`` of the divisor part L.
    """

    surface: int
    l_div: tuple

    def __post_init__(self):
        check_type(self.surface)
        object.__setattr__(self, "l_div", hnf2(_columns(self.l_div)))

    @classmethod
    def from_generators(cls, t, divisors):
        """Model whose divisor lattice is <A, B> plus ``divisors``."""
        p = surface_profile(t)
        gens = [(p.n, 0), (0, p.k)] + [(d.x, d.y) for d in divisors]
        return cls(p.type_id, hnf2(gens))

    @property
    def profile(self):
        return surface_profile(self.surface)

    @property
    def columns(self):
        return _columns(self.l_div)

    def contains_divisor(self, d):
        (a, b), (_, c) = self.l_div
        if d.y % c:
            return False
        return (d.x - (d.y // c) * b) % a == 0

    def divisor_index(self):
        """Index of L in Num(S)."""
        (a, _), (_, c) = self.l_div
        return a * c

    def index(self):
        """Index of the special sublattice in N(S)."""
        return self.profile.n * self.divisor_index()

    def key(self):
        (a, b), (_, c) = self.l_div
        return (a, b, 0, c)


def _columns(m):
    (a, b), (z, c) = m
    return [(a, z), (b, c)]


def default_delta(t):
    return DeltaModel.from_generators(t, [])


def _axis_violations(model):
    p = model.profile
    bad = []
    if any(model.contains_divisor(DivisorClass(j, 0)) for j in range(1, p.n)):
        bad.append("fractional multiple of A in L")
    if not p.split and any(model.contains_divisor(DivisorClass(0, j)) for j in range(1, p.k)):
        bad.append("fractional multiple of B in L")
    return bad


def admissibility_failures(model):
    """Names of the model invariants that ``model`` violates (empty if admissible)."""
    p = model.profile
    bad = []
    if not model.contains_divisor(DivisorClass(p.n, 0)):
        bad.append("A not in L")
    if not model.contains_divisor(DivisorClass(0, p.k)):
        bad.append("B not in L")
    # With A in L, L meets the e1 axis in Z.A iff no (j, 0) with 0 < j < n lies in L.
    return bad + _axis_violations(model)


def is_admissible(model):
    return not admissibility_failures(model)


def _subgroups(n, k):
    """All subgroups of Z/n x Z/k, each as a frozenset of pairs."""
    elements = list(product(range(n), range(k)))
    seen = set()
    for g, h in product(elements, repeat=2):
        group = {(0, 0)}
        frontier = [(0, 0)]
        while frontier:
            u = frontier.pop()
            for w in (g, h):
                z = ((u[0] + w[0]) % n, (u[1] + w[1]) % k)
                if z not in group:
                    group.add(z)
                    frontier.append(z)
        seen.add(frozenset(group))
    return seen


def enumerate_admissible_models(t):
    """Every admissible model of type ``t``, sorted by HNF (default first)."""
    p = surface_profile(t)
    models = set()
    for h in _subgroups(p.n, p.k):
        model = DeltaModel.from_generators(p.type_id, [DivisorClass(x, y) for x, y in h])
        if is_admissible(model):
            models.add(model)
    return sorted(models, key=DeltaModel.key)


def rank_condition(model, v):
    return v.r % model.profile.n == 0


def in_delta(model, v):
    common_surface(model, v)
    return rank_condition(model, v) and model.contains_divisor(v.d)


def delta_basis(model):
    """Free basis ``[n P0, l1, l2, P4]`` of the special sublattice."""
    t = model.surface
    (l1x, l1y), (l2x, l2y) = model.columns
    return [
        NumClass(model.profile.n, 0, 0, 0, t),
        NumClass(0, l1x, l1y, 0, t),
        NumClass(0, l2x, l2y, 0, t),
        NumClass(*P4.coords, t),
    ]

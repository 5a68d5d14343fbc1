import random
from fractions import Fraction
from itertools import combinations, product
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bielliptic import (
    DeltaModel,
    DivisorClass,
    DomainError,
    NumClass,
    default_delta,
    delta_basis,
    enumerate_admissible_models,
    in_delta,
    is_admissible,
    surface_profile,
)
from bielliptic.delta import admissibility_failures, hnf2
from bielliptic.lattice import fiber_A, fiber_B

from conftest import ALL_TYPES
from test_lattice import leibniz_det


def oracle_subgroups(n, k):
    """Subsets of Z/n x Z/k containing 0 and closed under addition (power-set search)."""
    elements = [e for e in product(range(n), range(k)) if e != (0, 0)]
    found = []
    for size in range(len(elements) + 1):
        for subset in combinations(elements, size):
            s = set(subset) | {(0, 0)}
            if all(((a[0] + b[0]) % n, (a[1] + b[1]) % k) in s for a in s for b in s):
                found.append(frozenset(s))
    return found


def oracle_admissible_subgroups(t):
    p = surface_profile(t)
    out = []
    for h in oracle_subgroups(p.n, p.k):
        if any(x != 0 and y == 0 for x, y in h):
            continue
        if not p.split and any(x == 0 and y != 0 for x, y in h):
            continue
        out.append(h)
    return out


def in_span(columns, d, box=12):
    """Brute-force: is d an integer combination of the two columns?"""
    (ax, ay), (bx, by) = columns
    return any(i * ax + j * bx == d.x and i * ay + j * by == d.y
               for i in range(-box, box + 1) for j in range(-box, box + 1))


def test_default_examples():
    assert default_delta(1).l_div == ((2, 0), (0, 1))
    assert default_delta(2).l_div == ((2, 0), (0, 2))
    assert default_delta(7).l_div == ((6, 0), (0, 1))


@pytest.mark.parametrize("t, count", [(1, 1), (2, 2), (3, 1), (4, 3), (5, 1), (6, 2), (7, 1)])
def test_model_census(t, count):
    models = enumerate_admissible_models(t)
    assert len(models) == count == len(oracle_admissible_subgroups(t))
    assert models[0] == default_delta(t)


@pytest.mark.parametrize("t", ALL_TYPES)
def test_models_match_oracle_subgroups(t):
    # Each oracle subgroup H gives L = {(x, y) : (x mod n, y mod k) in H}.
    p = surface_profile(t)
    models = enumerate_admissible_models(t)
    box = range(-8, 9)
    expected = set()
    for h in oracle_admissible_subgroups(t):
        expected.add(frozenset((x, y) for x in box for y in box if (x % p.n, y % p.k) in h))
    got = {frozenset((x, y) for x in box for y in box if m.contains_divisor(DivisorClass(x, y)))
           for m in models}
    assert got == expected


def test_named_models():
    t2 = enumerate_admissible_models(2)
    assert [m.l_div for m in t2] == [((2, 0), (0, 2)), ((2, 1), (0, 1))]
    assert t2[1] == DeltaModel.from_generators(2, [DivisorClass(1, 1)])
    t4 = enumerate_admissible_models(4)
    assert t4[1] == DeltaModel.from_generators(4, [DivisorClass(1, 1)])
    assert t4[2] == DeltaModel.from_generators(4, [DivisorClass(1, 2)])


@pytest.mark.parametrize("t", ALL_TYPES)
def test_enumerated_models_satisfy_invariants(t):
    p = surface_profile(t)
    for m in enumerate_admissible_models(t):
        # Membership by brute-force span search, independent of the HNF reduction.
        member = lambda d: in_span(m.columns, d)
        assert member(fiber_A(t)) and member(fiber_B(t))
        assert not any(member(DivisorClass(j, 0)) for j in range(1, p.n))
        if not p.split:
            assert not any(member(DivisorClass(0, j)) for j in range(1, p.k))
        assert is_admissible(m)


def test_inadmissible_models_are_flagged():
    assert admissibility_failures(DeltaModel(1, ((1, 0), (0, 1)))) == ["fractional multiple of A in L"]
    assert "B not in L" in admissibility_failures(DeltaModel(2, ((2, 0), (0, 4))))
    assert "fractional multiple of B in L" in admissibility_failures(DeltaModel(6, ((4, 0), (0, 1))))


def test_in_delta_examples():
    m = default_delta(1)
    assert in_delta(m, NumClass(0, 2, 0, 0))
    assert not in_delta(m, NumClass(0, 1, 0, 0))
    assert in_delta(m, NumClass(2, 2, 1, 1))
    with pytest.raises(DomainError):
        in_delta(m, NumClass(0, 2, 0, 0, 3))


def test_delta_basis_examples():
    assert [v.coords for v in delta_basis(default_delta(1))] == [
        (2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    assert [v.coords for v in delta_basis(default_delta(2))] == [
        (2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 1)]
    second = enumerate_admissible_models(2)[1]
    assert [v.coords for v in delta_basis(second)] == [
        (2, 0, 0, 0), (0, 2, 0, 0), (0, 1, 1, 0), (0, 0, 0, 1)]


@pytest.mark.parametrize("t", ALL_TYPES)
def test_index(t):
    p = surface_profile(t)
    assert default_delta(t).index() == p.n * p.n * p.k
    for m in enumerate_admissible_models(t):
        basis = [v.coords for v in delta_basis(m)]
        assert abs(leibniz_det(basis)) == m.index()


@pytest.mark.parametrize("t", ALL_TYPES)
def test_componentwise_membership_small_box(t):
    for m in enumerate_admissible_models(t):
        for r, x, y, s in product(range(-6, 7), repeat=4):
            v = NumClass(r, x, y, s)
            parts = in_delta(m, NumClass(r, 0, 0, 0)) and in_delta(m, NumClass(0, x, y, 0)) \
                and in_delta(m, NumClass(0, 0, 0, s))
            assert in_delta(m, v) == parts


@pytest.mark.parametrize("t", ALL_TYPES)
def test_subgroup_closure(t):
    rng = random.Random(t)
    for m in enumerate_admissible_models(t):
        basis = delta_basis(m)
        for _ in range(200):
            v = sum((rng.randint(-50, 50) * b for b in basis), NumClass(0, 0, 0, 0))
            w = sum((rng.randint(-50, 50) * b for b in basis), NumClass(0, 0, 0, 0))
            assert in_delta(m, v) and in_delta(m, w)
            assert in_delta(m, v + w) and in_delta(m, v - w)


gens = st.lists(st.tuples(st.integers(-30, 30), st.integers(-30, 30)), min_size=2, max_size=5)


@given(gens)
def test_hnf_normal_form(generators):
    minors = [x1 * y2 - x2 * y1 for (x1, y1), (x2, y2) in combinations(generators, 2)]
    det = 0
    for m in minors:
        det = gcd(det, m)
    if det == 0:
        with pytest.raises(DomainError):
            hnf2(generators)
        return
    (a, b), (z, c) = hnf2(generators)
    assert z == 0 and a > 0 and c > 0 and 0 <= b < a
    assert a * c == det
    for x, y in generators:
        # Solve i*(a, 0) + j*(b, c) = (x, y) over Q; both coefficients must be integers.
        j = Fraction(y, c)
        i = (x - j * b) / a
        assert i.denominator == 1 and j.denominator == 1

import random
from functools import lru_cache
from itertools import product

import pytest

from bielliptic import RelFMA, RelFMB, Shift, TensorLB, surface_profile

ALL_TYPES = (1, 2, 3, 4, 5, 6, 7)
SPLIT = (1, 3, 5, 7)


@lru_cache(maxsize=None)
def sl2_bounded(bound):
    """Every (c, a, d, b) with cb - ad = 1 and entries in [-bound, bound]."""
    r = range(-bound, bound + 1)
    return tuple(m for m in product(r, r, r, r) if m[0] * m[3] - m[1] * m[2] == 1)


@lru_cache(maxsize=None)
def _fm_choices(t, bound):
    p = surface_profile(t)
    mats = sl2_bounded(bound)
    return (
        tuple(m for m in mats if m[2] % p.lambda_pA == 0),
        tuple(m for m in mats if m[2] % p.lambda_pB == 0),
    )


def random_letter(rng, t, bound=10, inverses=True):
    fma, fmb = _fm_choices(t, bound)
    kind = rng.randrange(4)
    if kind == 0:
        letter = Shift(t)
    elif kind == 1:
        letter = TensorLB(t, rng.randint(-bound, bound), rng.randint(-bound, bound))
    elif kind == 2:
        letter = RelFMA(t, *rng.choice(fma))
    else:
        letter = RelFMB(t, *rng.choice(fmb))
    if inverses and rng.random() < 0.5:
        letter = letter.inverted()
    return letter


def random_word(rng, t, length, bound=10):
    return [random_letter(rng, t, bound) for _ in range(length)]


@pytest.fixture
def rng():
    return random.Random(20261017)


# Acceptance summary: one line per criterion, printed after the run.

_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for mark in getattr(report, "criterion_marks", ()):
        number, title = mark
        prev = _criteria.get(number, (title, "PASS"))
        status = "PASS" if report.outcome == "passed" and prev[1] == "PASS" else "FAIL"
        _criteria[number] = (title, status)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    report.criterion_marks = [tuple(m.args) for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")

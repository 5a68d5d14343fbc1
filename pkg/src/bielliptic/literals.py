"""Text forms of classes, matrices and words.

Classes are ``r,x,y,s``; matrices are 16 comma-separated integers in
row-major order; words are whitespace-separated letters ``shift``,
``tlb(mx,my)``, ``fma(c,a,d,b)`` and ``fmb(c,a,d,b)``, each optionally
followed by ``^-1``.  Integers are written without leading zeros, plus
signs or ``-0`` so that parsing and formatting are mutually inverse.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DomainError
from .lattice import NumClass, surface_profile
from .letters import RelFMA, RelFMB, Shift, TensorLB

INT = r"(?:0|-?[1-9][0-9]*)"

_INTS = re.compile(rf"{INT}(?:,{INT})*")
_LETTER = re.compile(
    rf"(?P<name>shift|tlb|fma|fmb)(?:\((?P<args>{INT}(?:,{INT})*)\))?(?P<inv>\^-1)?"
)
_ARITY = {"shift": 0, "tlb": 2, "fma": 4, "fmb": 4}


def _parse_ints(text, count, what):
    if not isinstance(text, str) or not _INTS.fullmatch(text):
        raise DomainError(f"malformed {what} literal {text!r}")
    values = [int(part) for part in text.split(",")]
    if len(values) != count:
        raise DomainError(f"{what} literal needs {count} integers, got {len(values)}")
    return values


def parse_class(text, surface=None):
    return NumClass(*_parse_ints(text, 4, "class"), surface)


def format_class(v):
    return ",".join(str(e) for e in v.coords)


def parse_matrix16(text):
    flat = _parse_ints(text, 16, "matrix")
    return tuple(tuple(flat[4 * i:4 * i + 4]) for i in range(4))


def format_matrix16(m):
    rows = m.matrix if hasattr(m, "matrix") else m
    return ",".join(str(e) for row in rows for e in row)


def format_ab(v, t):
    """Human-readable ``(r, (x/n)A + (y/k)B, s)``."""
    p = surface_profile(t)
    return f"({v.r}, ({Fraction(v.x, p.n)})A + ({Fraction(v.y, p.k)})B, {v.s})"


def parse_letter(token, surface):
    m = _LETTER.fullmatch(token.lower())
    if not m:
        raise DomainError(f"malformed letter {token!r}")
    name = m["name"]
    args = [int(a) for a in m["args"].split(",")] if m["args"] else []
    if len(args) != _ARITY[name]:
        raise DomainError(f"letter {name} takes {_ARITY[name]} arguments, got {len(args)}")
    inverse = m["inv"] is not None
    if name == "shift":
        return Shift(surface, inverse)
    if name == "tlb":
        return TensorLB(surface, *args, inverse)
    cls = RelFMA if name == "fma" else RelFMB
    return cls(surface, *args, inverse)


def format_letter(letter):
    if isinstance(letter, Shift):
        body = "shift"
    elif isinstance(letter, TensorLB):
        body = f"tlb({letter.mx},{letter.my})"
    else:
        name = "fma" if isinstance(letter, RelFMA) else "fmb"
        body = f"{name}({letter.c},{letter.a},{letter.d},{letter.b})"
    return body + ("^-1" if letter.inverse else "")


def parse_word(text, surface):
    return [parse_letter(token, surface) for token in text.split()]


def format_word(letters):
    return " ".join(format_letter(letter) for letter in letters)

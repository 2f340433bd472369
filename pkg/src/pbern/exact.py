"""Exact rational scalars and the small combinatorial numbers used everywhere.

Rationals are :class:`fractions.Fraction` values. ``Fraction`` already keeps
``den > 0`` and ``gcd(|num|, den) == 1`` after every operation, so structural
equality is value equality and ``str()`` produces the canonical text form
(``"-1/3"``, ``"1"``, ``"0"``).
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .errors import DivisionByZero

Rational = Fraction

__all__ = [
    "Rational",
    "rat",
    "rat_add",
    "rat_mul",
    "rat_div",
    "rat_neg",
    "rat_text",
    "parse_rat",
    "harmonic",
    "binomial",
    "factorial",
]


def rat(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise DivisionByZero(f"{num}/0")
    return Fraction(num, den)


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(a) + Fraction(b)


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(a) * Fraction(b)


def rat_neg(a: Fraction) -> Fraction:
    return -Fraction(a)


def rat_div(a: Fraction, b: Fraction) -> Fraction:
    if b == 0:
        raise DivisionByZero(f"{a} / 0")
    return Fraction(a) / Fraction(b)


def rat_text(a: Fraction) -> str:
    """Canonical wire form: ``num/den``, with ``/den`` dropped when den is 1."""
    return str(Fraction(a))


def parse_rat(text: str) -> Fraction:
    """Inverse of :func:`rat_text`. Only the ``[-]num[/den]`` shape is accepted."""
    text = text.strip()
    num, sep, den = text.partition("/")
    if sep:
        return rat(int(num), int(den))
    return Fraction(int(num))


_harmonic_cache = [Fraction(0)]
_harmonic_lock = threading.Lock()


def harmonic(k: int) -> Fraction:
    """H_k = 1 + 1/2 + ... + 1/k, with H_0 = 0."""
    if k < 0:
        raise ValueError(f"harmonic number of negative index {k}")
    if k < len(_harmonic_cache):
        return _harmonic_cache[k]
    with _harmonic_lock:
        while len(_harmonic_cache) <= k:
            j = len(_harmonic_cache)
            _harmonic_cache.append(_harmonic_cache[-1] + Fraction(1, j))
        return _harmonic_cache[k]


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial with negative n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)

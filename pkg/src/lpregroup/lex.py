"""Lexicographic product of an integer vector group with the base map algebra.

Elements pair a vector in Z^m (ordered lexicographically) with a periodic
map; multiplication and the residuals act coordinatewise, while meets and
joins compare the vector part first and fall through to the base algebra on
ties.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from .errors import ShapeMismatch
from .periodic import (
    PeriodicMap,
    enumerate_maps,
    format_element,
    identity,
    parse_element,
)


@dataclass(frozen=True, slots=True)
class LexElement:
    h: tuple[int, ...]
    f: PeriodicMap

    def __str__(self) -> str:
        return format_lex(self)


def _check_shape(a: LexElement, b: LexElement) -> None:
    if len(a.h) != len(b.h) or a.f.n != b.f.n:
        raise ShapeMismatch(
            f"shapes ({len(a.h)}, F{a.f.n}) and ({len(b.h)}, F{b.f.n})"
        )


def lex_mul(a: LexElement, b: LexElement) -> LexElement:
    _check_shape(a, b)
    return LexElement(tuple(x + y for x, y in zip(a.h, b.h)), a.f * b.f)


def lex_resl(a: LexElement) -> LexElement:
    return LexElement(tuple(-x for x in a.h), a.f.resl())


def lex_resr(a: LexElement) -> LexElement:
    return LexElement(tuple(-x for x in a.h), a.f.resr())


def lex_meet(a: LexElement, b: LexElement) -> LexElement:
    _check_shape(a, b)
    if a.h == b.h:
        return LexElement(a.h, a.f.meet(b.f))
    return a if a.h < b.h else b


def lex_join(a: LexElement, b: LexElement) -> LexElement:
    _check_shape(a, b)
    if a.h == b.h:
        return LexElement(a.h, a.f.join(b.f))
    return a if a.h > b.h else b


def lex_leq(a: LexElement, b: LexElement) -> bool:
    _check_shape(a, b)
    return a.h < b.h or (a.h == b.h and a.f <= b.f)


class LexModel:
    """Z^m (lex order) times the period-n map algebra."""

    def __init__(self, m: int, n: int):
        if m < 1:
            raise ValueError("vector length must be >= 1")
        self.m = m
        self.n = n
        self.name = f"Lex{m}xF{n}"

    def one(self) -> LexElement:
        return LexElement((0,) * self.m, identity(self.n))

    mul = staticmethod(lex_mul)
    meet = staticmethod(lex_meet)
    join = staticmethod(lex_join)
    resl = staticmethod(lex_resl)
    resr = staticmethod(lex_resr)
    leq = staticmethod(lex_leq)

    def eq(self, a: LexElement, b: LexElement) -> bool:
        return a == b

    def elements(self, bounds) -> list[LexElement]:
        """All elements with vector entries in [-lex_bound, lex_bound] and base
        heights within bounds.h, in deterministic nested order."""
        base = list(enumerate_maps(self.n, bounds.h))
        b = bounds.lex_bound
        vectors = product(range(-b, b + 1), repeat=self.m)
        return [LexElement(h, f) for h in vectors for f in base]

    def format(self, a: LexElement) -> str:
        return format_lex(a)

    def __repr__(self) -> str:
        return f"LexModel({self.m}, {self.n})"


# -- literals ----------------------------------------------------------------

_LEX_RE = re.compile(r"^Lex\[((?:[+-]?\d+)(?:,[+-]?\d+)*)\]:(F\d+:\[.*\])$")


def parse_lex(text: str) -> LexElement:
    """Parse the literal format Lex[h1,..,hm]:F<n>:[..]."""
    compact = "".join(text.split())
    m = _LEX_RE.match(compact)
    if not m:
        raise ValueError(f"bad lex literal: {text!r}")
    h = tuple(int(tok) for tok in m.group(1).split(","))
    return LexElement(h, parse_element(m.group(2)))


def format_lex(a: LexElement) -> str:
    return f"Lex[{','.join(str(x) for x in a.h)}]:{format_element(a.f)}"

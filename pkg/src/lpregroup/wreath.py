"""Finite-support wreath model: a global integer shift acting on a Z-indexed
family of periodic maps.

An element pairs a translation of the index chain with an eventually
constant family: a left tail value below the exception window, a right tail
value above it, and finitely many exceptions.  Operations follow the
semidirect-product formulas; closure of the eventually-constant form is a
construction invariant, revalidated on every build.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from math import lcm
from typing import Iterable, Mapping

from .errors import ShapeMismatch
from .periodic import (
    PeriodicMap,
    enumerate_maps,
    format_element,
    identity,
    parse_element,
    shift,
)
from .atoms import atoms


@dataclass(frozen=True, slots=True)
class WreathElement:
    """(global shift, eventually-constant local family)."""

    shift: int
    left: PeriodicMap
    right: PeriodicMap
    exceptions: tuple[tuple[int, PeriodicMap], ...]

    def __post_init__(self):
        n = self.left.n
        if self.right.n != n or any(v.n != n for _, v in self.exceptions):
            raise ShapeMismatch("local components must share one period")
        keys = [i for i, _ in self.exceptions]
        if keys != sorted(set(keys)):
            raise ValueError("exception indices must be sorted and distinct")
        for i, v in self.exceptions:
            if v == (self.left if i < 0 else self.right):
                raise ValueError(f"exception at {i} equals the tail value")

    @property
    def n(self) -> int:
        return self.left.n

    def local(self, i: int) -> PeriodicMap:
        for j, v in self.exceptions:
            if j == i:
                return v
        return self.left if i < 0 else self.right

    def __str__(self) -> str:
        return format_wreath(self)


def wreath(
    global_shift: int,
    left: PeriodicMap,
    right: PeriodicMap,
    exceptions: Mapping[int, PeriodicMap] | Iterable[tuple[int, PeriodicMap]] = (),
) -> WreathElement:
    """Build an element, dropping exceptions that agree with their tail."""
    items = dict(exceptions)
    kept = tuple(
        (i, v)
        for i, v in sorted(items.items())
        if v != (left if i < 0 else right)
    )
    return WreathElement(global_shift, left, right, kept)


def _check_period(a: WreathElement, b: WreathElement) -> None:
    if a.n != b.n:
        raise ShapeMismatch(f"periods {a.n} and {b.n}")


def _boundary(offset: int) -> range:
    # indices whose side of 0 changes under i -> i + offset
    return range(min(0, -offset), max(0, -offset))


def wreath_mul(a: WreathElement, b: WreathElement) -> WreathElement:
    """(a*b)(i, m) = a(b(i, m)): global shifts add, local parts compose with
    the index translated by b's shift."""
    _check_period(a, b)
    candidates = set(i for i, _ in b.exceptions)
    candidates.update(i - b.shift for i, _ in a.exceptions)
    candidates.update(_boundary(b.shift))
    exc = {i: a.local(i + b.shift) * b.local(i) for i in candidates}
    return wreath(a.shift + b.shift, a.left * b.left, a.right * b.right, exc)


def _res(a: WreathElement, which: str) -> WreathElement:
    op = (lambda f: f.resl()) if which == "l" else (lambda f: f.resr())
    candidates = set(i + a.shift for i, _ in a.exceptions)
    candidates.update(_boundary(-a.shift))
    exc = {i: op(a.local(i - a.shift)) for i in candidates}
    return wreath(-a.shift, op(a.left), op(a.right), exc)


def wreath_resl(a: WreathElement) -> WreathElement:
    return _res(a, "l")


def wreath_resr(a: WreathElement) -> WreathElement:
    return _res(a, "r")


def wreath_meet(a: WreathElement, b: WreathElement) -> WreathElement:
    _check_period(a, b)
    if a.shift != b.shift:
        return a if a.shift < b.shift else b
    keys = {i for i, _ in a.exceptions} | {i for i, _ in b.exceptions}
    exc = {i: a.local(i).meet(b.local(i)) for i in keys}
    return wreath(a.shift, a.left.meet(b.left), a.right.meet(b.right), exc)


def wreath_join(a: WreathElement, b: WreathElement) -> WreathElement:
    _check_period(a, b)
    if a.shift != b.shift:
        return a if a.shift > b.shift else b
    keys = {i for i, _ in a.exceptions} | {i for i, _ in b.exceptions}
    exc = {i: a.local(i).join(b.local(i)) for i in keys}
    return wreath(a.shift, a.left.join(b.left), a.right.join(b.right), exc)


def wreath_leq(a: WreathElement, b: WreathElement) -> bool:
    _check_period(a, b)
    if a.shift != b.shift:
        return a.shift < b.shift
    keys = {i for i, _ in a.exceptions} | {i for i, _ in b.exceptions}
    return (
        a.left <= b.left
        and a.right <= b.right
        and all(a.local(i) <= b.local(i) for i in keys)
    )


# -- local-subalgebra predicates -----------------------------------------------


@dataclass(frozen=True)
class Support:
    """Support of a local family: finite points plus tail classes."""

    left_tail: bool
    right_tail: bool
    points: frozenset[int]

    def is_finite(self) -> bool:
        return not (self.left_tail or self.right_tail)

    def __eq__(self, other) -> bool:
        if isinstance(other, (set, frozenset)):
            return self.is_finite() and self.points == frozenset(other)
        if isinstance(other, Support):
            return (
                self.left_tail == other.left_tail
                and self.right_tail == other.right_tail
                and self.points == other.points
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.left_tail, self.right_tail, self.points))


def is_local(a: WreathElement) -> bool:
    return a.shift == 0


def support(a: WreathElement) -> Support:
    one = identity(a.n)
    return Support(
        left_tail=a.left != one,
        right_tail=a.right != one,
        points=frozenset(i for i, v in a.exceptions if v != one),
    )


def sigma_w(a: WreathElement) -> WreathElement:
    """Componentwise greatest-invertible-below; global part unchanged."""
    return wreath(
        a.shift,
        a.left.sigma(),
        a.right.sigma(),
        {i: v.sigma() for i, v in a.exceptions},
    )


def gamma_w(a: WreathElement) -> WreathElement:
    return wreath(
        a.shift,
        a.left.gamma(),
        a.right.gamma(),
        {i: v.gamma() for i, v in a.exceptions},
    )


def per_w(a: WreathElement) -> int:
    """lcm of the component periodicities."""
    out = lcm(a.left.per(), a.right.per())
    for _, v in a.exceptions:
        out = lcm(out, v.per())
    return out


def is_idempotent_w(a: WreathElement) -> bool:
    """Global part is the identity and every local component is idempotent."""
    return (
        a.shift == 0
        and a.left.is_idempotent()
        and a.right.is_idempotent()
        and all(v.is_idempotent() for _, v in a.exceptions)
    )


def is_flat_w(a: WreathElement) -> bool:
    return (
        a.shift == 0
        and a.left.is_flat()
        and a.right.is_flat()
        and all(v.is_flat() for _, v in a.exceptions)
    )


# -- model -----------------------------------------------------------------------


class WreathModel:
    """Integer translations acting on eventually-constant families over F_n."""

    def __init__(self, n: int):
        self.n = n
        self.name = f"W[F{n}]"

    def one(self) -> WreathElement:
        e = identity(self.n)
        return wreath(0, e, e)

    mul = staticmethod(wreath_mul)
    meet = staticmethod(wreath_meet)
    join = staticmethod(wreath_join)
    resl = staticmethod(wreath_resl)
    resr = staticmethod(wreath_resr)
    leq = staticmethod(wreath_leq)

    def eq(self, a: WreathElement, b: WreathElement) -> bool:
        return a == b

    def component_pool(self) -> list[PeriodicMap]:
        pool = [identity(self.n), shift(self.n, 1), shift(self.n, -1)]
        pool.extend(atoms(self.n)[:1])
        return pool

    def elements(self, bounds) -> list[WreathElement]:
        """Deterministic small family: shifts in [-1, 1], identity or constant
        shift tails, exceptions over [0, window) drawn from a four-map pool."""
        e = identity(self.n)
        pool = self.component_pool()
        tails = [(e, e), (shift(self.n, 1), shift(self.n, 1))]
        out: dict[WreathElement, None] = {}
        for g in (-1, 0, 1):
            for left, right in tails:
                for combo in product(pool, repeat=bounds.window):
                    w = wreath(g, left, right, dict(enumerate(combo)))
                    out.setdefault(w, None)
        return list(out)

    def random_element(self, rng, *, local_only: bool = False) -> WreathElement:
        pool = self.component_pool()
        g = 0 if local_only else rng.randint(-2, 2)
        left, right = rng.choice(pool), rng.choice(pool)
        exc = {
            i: rng.choice(pool)
            for i in range(-2, 3)
            if rng.random() < 0.4
        }
        return wreath(g, left, right, exc)

    def format(self, a: WreathElement) -> str:
        return format_wreath(a)

    def __repr__(self) -> str:
        return f"WreathModel({self.n})"


# -- literals ----------------------------------------------------------------------

_WREATH_RE = re.compile(
    r"^W\(g=(-?\d+);left=(F\d+:\[[^\]]*\]);right=(F\d+:\[[^\]]*\])"
    r"(?:;at\{(.*)\})?\)$"
)
_ENTRY_RE = re.compile(r"^(-?\d+)=(F\d+:\[[^\]]*\])$")


def parse_wreath(text: str) -> WreathElement:
    """Parse W(g=<int>; left=F<n>:[..]; right=F<n>:[..]; at{i=F<n>:[..],...})."""
    compact = "".join(text.split())
    m = _WREATH_RE.match(compact)
    if not m:
        raise ValueError(f"bad wreath literal: {text!r}")
    g = int(m.group(1))
    left = parse_element(m.group(2))
    right = parse_element(m.group(3))
    exc: dict[int, PeriodicMap] = {}
    body = m.group(4) or ""
    if body:
        for chunk in re.split(r",(?=-?\d+=)", body):
            em = _ENTRY_RE.match(chunk)
            if not em:
                raise ValueError(f"bad wreath exception entry: {chunk!r}")
            exc[int(em.group(1))] = parse_element(em.group(2))
    return wreath(g, left, right, exc)


def format_wreath(a: WreathElement) -> str:
    entries = ",".join(f"{i}={format_element(v)}" for i, v in a.exceptions)
    return (
        f"W(g={a.shift}; left={format_element(a.left)}; "
        f"right={format_element(a.right)}; at{{{entries}}})"
    )

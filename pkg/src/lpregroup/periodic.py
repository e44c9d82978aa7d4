"""Exact arithmetic for n-periodic, order-preserving, finite-to-one maps on Z.

A map f is stored as one period of values v_0..v_{n-1} with v_i = f(i); the
total map is f(x) = v_{x mod n} + n*floor(x/n).  Construction validates the
representation invariants, so every PeriodicMap in existence is a genuine
element of the algebra.  All operations are pure; values are immutable and
safe to share across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm
from typing import Iterator, Sequence

from .errors import (
    InvalidPeriod,
    NotDivisible,
    NotMonotone,
    PeriodMismatch,
    ValueBoundExceeded,
)

# Magnitude guard: desk-scale inputs never get near this, so hitting it means
# a runaway computation rather than a legitimate value.
VALUE_BOUND = 1 << 40


@dataclass(frozen=True, slots=True)
class PeriodicMap:
    """One period of an n-periodic order-preserving map on Z."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n <= 0:
            raise InvalidPeriod(f"period must be a positive integer, got {self.n!r}")
        if len(self.values) != self.n:
            raise ValueError(
                f"expected {self.n} values, got {len(self.values)}"
            )
        v = self.values
        for i in range(self.n - 1):
            if v[i] > v[i + 1]:
                raise NotMonotone(f"v_{i}={v[i]} > v_{i+1}={v[i+1]}")
        if v[self.n - 1] > v[0] + self.n:
            raise NotMonotone(
                f"wrap violated: v_{self.n-1}={v[self.n-1]} > v_0+n={v[0]+self.n}"
            )
        for x in v:
            if abs(x) > VALUE_BOUND:
                raise ValueBoundExceeded(f"|{x}| exceeds {VALUE_BOUND}")

    # -- total map ---------------------------------------------------------

    def __call__(self, x: int) -> int:
        return self.values[x % self.n] + self.n * (x // self.n)

    # -- order (pointwise; a partial order, so <= and >= may both be false) -

    def _check_period(self, other: "PeriodicMap") -> None:
        if self.n != other.n:
            raise PeriodMismatch(f"periods {self.n} and {other.n}")

    def __le__(self, other: "PeriodicMap") -> bool:
        self._check_period(other)
        return all(a <= b for a, b in zip(self.values, other.values))

    def __ge__(self, other: "PeriodicMap") -> bool:
        return other.__le__(self)

    def __lt__(self, other: "PeriodicMap") -> bool:
        return self.__le__(other) and self != other

    def __gt__(self, other: "PeriodicMap") -> bool:
        return other.__lt__(self)

    # -- monoid and lattice ------------------------------------------------

    def __mul__(self, other: "PeriodicMap") -> "PeriodicMap":
        """Functional composition: (f*g)(x) = f(g(x))."""
        self._check_period(other)
        return PeriodicMap(self.n, tuple(self(other.values[i]) for i in range(self.n)))

    def power(self, k: int) -> "PeriodicMap":
        if k < 0:
            raise ValueError("power expects k >= 0")
        out = identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def meet(self, other: "PeriodicMap") -> "PeriodicMap":
        self._check_period(other)
        return PeriodicMap(self.n, tuple(map(min, self.values, other.values)))

    def join(self, other: "PeriodicMap") -> "PeriodicMap":
        self._check_period(other)
        return PeriodicMap(self.n, tuple(map(max, self.values, other.values)))

    # -- residuals -----------------------------------------------------------

    def resl(self) -> "PeriodicMap":
        """Dual residual f^l, with f^l(q) = min{p : q <= f(p)}.

        The minimizer lies in [q-hmax-n, q-hmin+n]: the window's left end
        evaluates below q and its right end at or above q, so an ascending
        scan finds the minimum; a miss would mean a broken invariant.
        """
        n = self.n
        lo, hi = -self.hmax() - n, -self.hmin() + n
        out = []
        for q in range(n):
            for p in range(q + lo, q + hi + 1):
                if self(p) >= q:
                    out.append(p)
                    break
            else:
                raise AssertionError(f"resl window missed a minimizer for {self}")
        return PeriodicMap(n, tuple(out))

    def resr(self) -> "PeriodicMap":
        """Residual f^r, with f^r(q) = max{p : f(p) <= q}."""
        n = self.n
        lo, hi = -self.hmax() - n, -self.hmin() + n
        out = []
        for q in range(n):
            for p in range(q + hi, q + lo - 1, -1):
                if self(p) <= q:
                    out.append(p)
                    break
            else:
                raise AssertionError(f"resr window missed a maximizer for {self}")
        return PeriodicMap(n, tuple(out))

    def conj(self, k: int) -> "PeriodicMap":
        """The shifted conjugate f^[k]: x -> f(x-k) + k.

        Equals resl iterated 2k times for k >= 0 and resr iterated -2k times
        for k < 0; the test suite cross-checks this.
        """
        return PeriodicMap(self.n, tuple(self(x - k) + k for x in range(self.n)))

    # -- heights, group skeleton, norm ---------------------------------------

    def hmin(self) -> int:
        return min(v - i for i, v in enumerate(self.values))

    def hmax(self) -> int:
        return max(v - i for i, v in enumerate(self.values))

    def sigma(self) -> "PeriodicMap":
        """Greatest invertible element below: the shift by hmin."""
        return shift(self.n, self.hmin())

    def gamma(self) -> "PeriodicMap":
        """Least invertible element above: the shift by hmax."""
        return shift(self.n, self.hmax())

    def norm(self) -> "PeriodicMap":
        """sigma(f)^{-1} v gamma(f); always at or above the identity."""
        return shift(self.n, max(-self.hmin(), self.hmax()))

    def is_invertible(self) -> bool:
        h0 = self.values[0]
        return all(v - i == h0 for i, v in enumerate(self.values))

    def inverse(self) -> "PeriodicMap":
        if not self.is_invertible():
            raise ValueError(f"{self} is not invertible")
        return shift(self.n, -self.values[0])

    # -- periodicity and re-representation ------------------------------------

    def per(self) -> int:
        """Smallest k with f(x+k) = f(x)+k for all x.

        The set of periods of f is closed under gcd and contains n, so the
        minimum is a divisor of n; searching divisors only is sound.
        """
        for k in range(1, self.n + 1):
            if self.n % k:
                continue
            if all(self(x + k) == self(x) + k for x in range(self.n)):
                return k
        raise AssertionError("unreachable: n itself is always a period")

    def rescale(self, m: int) -> "PeriodicMap":
        """The same total map represented with period m (n must divide m)."""
        if m % self.n:
            raise NotDivisible(f"{self.n} does not divide {m}")
        return PeriodicMap(m, tuple(self(x) for x in range(m)))

    def reduce(self) -> "PeriodicMap":
        """The same total map represented with its minimal period."""
        p = self.per()
        return PeriodicMap(p, self.values[:p])

    def equivalent(self, other: "PeriodicMap") -> bool:
        """Equality as total maps, comparing across different periods."""
        m = lcm(self.n, other.n)
        return self.rescale(m) == other.rescale(m)

    # -- predicates ------------------------------------------------------------

    def is_positive(self) -> bool:
        return all(v >= i for i, v in enumerate(self.values))

    def is_strictly_positive(self) -> bool:
        return self.is_positive() and self != identity(self.n)

    def is_negative(self) -> bool:
        return all(v <= i for i, v in enumerate(self.values))

    def is_idempotent(self) -> bool:
        return self * self == self

    def fixed_points(self) -> frozenset[int]:
        """Residues r mod n with f(r) = r."""
        return frozenset(i for i, v in enumerate(self.values) if v == i)

    def flat_interval(self) -> int | None:
        """Left endpoint in [0, n-1] of an n-element interval I with f[I] in I."""
        for k in range(self.n):
            if self(k) >= k and self(k + self.n - 1) <= k + self.n - 1:
                return k
        return None

    def is_flat(self) -> bool:
        """Whether f sits between two idempotents.

        Computes the three equivalent criteria (fixed point exists,
        f^n = f^{n-1}, a flat interval exists) and insists they agree.
        """
        fixed = bool(self.fixed_points())
        stable = self.power(self.n) == self.power(self.n - 1)
        interval = self.flat_interval() is not None
        if not (fixed == stable == interval):
            raise AssertionError(f"flatness criteria disagree on {self}")
        return fixed

    def __str__(self) -> str:
        return format_element(self)


# -- constructors --------------------------------------------------------------


def make(n: int, values: Sequence[int]) -> PeriodicMap:
    """Validated construction from one period of values."""
    return PeriodicMap(n, tuple(values))


def identity(n: int) -> PeriodicMap:
    return shift(n, 0)


def shift(n: int, m: int) -> PeriodicMap:
    """The invertible element s^m: x -> x + m."""
    if n <= 0:
        raise InvalidPeriod(f"period must be a positive integer, got {n!r}")
    return PeriodicMap(n, tuple(m + i for i in range(n)))


# -- convex subalgebra membership ----------------------------------------------


def cv_member(b: PeriodicMap, a: PeriodicMap) -> bool:
    """Whether b lies in the convex subalgebra generated by a.

    Holds iff norm(b) <= norm(a)^k for some k >= 0; with norms being shifts
    this reduces to norm(a) != 1 or norm(b) = 1.
    """
    if b.n != a.n:
        raise PeriodMismatch(f"periods {b.n} and {a.n}")
    pa = max(-a.hmin(), a.hmax())
    pb = max(-b.hmin(), b.hmax())
    return pa != 0 or pb == 0


# -- exhaustive enumeration ------------------------------------------------------


def enumerate_maps(n: int, h: int) -> Iterator[PeriodicMap]:
    """All elements with every height in [-h, h], ascending by value tuple."""
    if n <= 0:
        raise InvalidPeriod(f"period must be a positive integer, got {n!r}")
    if h < 0:
        raise ValueError("height bound must be nonnegative")

    def rec(prefix: list[int]) -> Iterator[PeriodicMap]:
        i = len(prefix)
        if i == n:
            yield PeriodicMap(n, tuple(prefix))
            return
        lo = i - h if not prefix else max(i - h, prefix[-1])
        hi = i + h if not prefix else min(i + h, prefix[0] + n)
        for v in range(lo, hi + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


# -- element literals ------------------------------------------------------------

_ELEMENT_RE = re.compile(r"^F(\d+):\[((?:[+-]?\d+)(?:,[+-]?\d+)*)\]$")


def parse_element(text: str) -> PeriodicMap:
    """Parse the literal format F<n>:[v0,...,v{n-1}] (whitespace-insensitive)."""
    compact = "".join(text.split())
    m = _ELEMENT_RE.match(compact)
    if not m:
        raise ValueError(f"bad element literal: {text!r}")
    n = int(m.group(1))
    values = tuple(int(tok) for tok in m.group(2).split(","))
    if len(values) != n:
        raise ValueError(f"literal {text!r} lists {len(values)} values for period {n}")
    return PeriodicMap(n, values)


def format_element(f: PeriodicMap) -> str:
    return f"F{f.n}:[{','.join(str(v) for v in f.values)}]"

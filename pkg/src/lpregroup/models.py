"""Model interface for term evaluation, plus the base integer-map model.

A model supplies the carrier operations the term evaluator and the checker
need: one/mul/meet/join/resl/resr, the order test, equality, element
enumeration under bounds, and literal formatting for reports.
"""

from __future__ import annotations

from typing import Protocol, runtime_checkable

from .periodic import PeriodicMap, enumerate_maps, format_element, identity


@runtime_checkable
class Model(Protocol):
    name: str

    def one(self): ...

    def mul(self, a, b): ...

    def meet(self, a, b): ...

    def join(self, a, b): ...

    def resl(self, a): ...

    def resr(self, a): ...

    def leq(self, a, b) -> bool: ...

    def eq(self, a, b) -> bool: ...

    def elements(self, bounds) -> list: ...

    def format(self, a) -> str: ...


class FnModel:
    """The n-periodic maps on Z under composition and pointwise order."""

    def __init__(self, n: int):
        self.n = n
        self.name = f"F{n}"

    def one(self) -> PeriodicMap:
        return identity(self.n)

    def mul(self, a: PeriodicMap, b: PeriodicMap) -> PeriodicMap:
        return a * b

    def meet(self, a: PeriodicMap, b: PeriodicMap) -> PeriodicMap:
        return a.meet(b)

    def join(self, a: PeriodicMap, b: PeriodicMap) -> PeriodicMap:
        return a.join(b)

    def resl(self, a: PeriodicMap) -> PeriodicMap:
        return a.resl()

    def resr(self, a: PeriodicMap) -> PeriodicMap:
        return a.resr()

    def leq(self, a: PeriodicMap, b: PeriodicMap) -> bool:
        return a <= b

    def eq(self, a: PeriodicMap, b: PeriodicMap) -> bool:
        return a == b

    def elements(self, bounds) -> list[PeriodicMap]:
        return list(enumerate_maps(self.n, bounds.h))

    def format(self, a: PeriodicMap) -> str:
        return format_element(a)

    def __repr__(self) -> str:
        return f"FnModel({self.n})"

"""Bounded counterexample search over finite samples of a model.

`check_equation` sweeps assignments in a fixed deterministic order (variables
sorted by name, elements in enumeration order, rightmost variable fastest)
and returns either a verdict that the equation held within the bounds or the
first counterexample, re-verified with a fresh evaluator before being
reported.  "Holds within bounds" is an enumeration report, not a validity
claim; the statistics carry the exact counts.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from time import perf_counter
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import BoundsTooLarge
from .models import FnModel
from .periodic import PeriodicMap, enumerate_maps
from .terms import Equation, Mul, Term, Var, eval_term, free_vars


@dataclass(frozen=True)
class Bounds:
    """Enumeration bounds; product-model fields are ignored by FnModel."""

    n: int = 2
    h: int = 2
    mode: str = "exhaustive"  # or "random"
    sample_count: int = 10_000
    seed: int = 0
    lex_bound: int = 2
    window: int = 2
    ceiling: int = 50_000_000

    def describe(self) -> dict:
        out = {"n": self.n, "h": self.h, "mode": self.mode}
        if self.mode == "random":
            out["sample_count"] = self.sample_count
            out["seed"] = self.seed
        return out


@dataclass(frozen=True)
class HoldsWithinBounds:
    checked: int
    element_count: int
    mode: str
    seed: int | None = None


@dataclass(frozen=True)
class Counterexample:
    assignment: dict
    lhs_value: object
    rhs_value: object


Verdict = HoldsWithinBounds | Counterexample


def enumerate_elements(bounds: Bounds) -> list[PeriodicMap]:
    """Exactly the maps with heights in [-h, h], ascending by value tuple."""
    return list(enumerate_maps(bounds.n, bounds.h))


# -- numpy batch helpers -----------------------------------------------------------
#
# Used to sweep one variable of an equation in bulk.  These re-express map
# composition on arrays, so the scalar operations stay the authority: the
# test suite cross-validates both against each other on random samples.


def values_matrix(elems: Sequence[PeriodicMap]) -> np.ndarray:
    return np.array([e.values for e in elems], dtype=np.int64)


def compose_rows(v: np.ndarray, g: PeriodicMap) -> np.ndarray:
    """Row r of the result is (row_r * g), i.e. x -> row_r(g(x))."""
    n = g.n
    gv = np.asarray(g.values, dtype=np.int64)
    return v[:, gv % n] + n * (gv // n)


def apply_map(g: PeriodicMap, v: np.ndarray) -> np.ndarray:
    """Apply g elementwise: entry (r, i) becomes g(v[r, i])."""
    n = g.n
    gv = np.asarray(g.values, dtype=np.int64)
    return gv[v % n] + n * (v // n)


# -- assignment sweep ---------------------------------------------------------------


class _MemoEvaluator:
    """Evaluates terms over indexed assignments, caching any subterm whose
    free-variable set is a proper nonempty subset of the equation's."""

    def __init__(self, model, elems, variables):
        self.model = model
        self.elems = elems
        self.variables = variables
        self.nvars = len(variables)
        self.cache: dict[tuple, object] = {}
        self.fv: dict[int, frozenset[str]] = {}

    def _free(self, t: Term) -> frozenset[str]:
        key = id(t)
        if key not in self.fv:
            self.fv[key] = free_vars(t)
        return self.fv[key]

    def eval(self, t: Term, idx: Mapping[str, int]):
        if isinstance(t, Var):
            return self.elems[idx[t.name]]
        fv = self._free(t)
        cacheable = len(fv) < self.nvars
        key = None
        if cacheable:
            key = (id(t), tuple(idx[v] for v in sorted(fv)))
            hit = self.cache.get(key)
            if hit is not None:
                return hit
        value = self._structural(t, idx)
        if cacheable:
            self.cache[key] = value
        return value

    def _structural(self, t: Term, idx: Mapping[str, int]):
        from . import terms as _t

        if isinstance(t, _t.One):
            return self.model.one()
        if isinstance(t, _t.Mul):
            return self.model.mul(self.eval(t.left, idx), self.eval(t.right, idx))
        if isinstance(t, _t.Meet):
            return self.model.meet(self.eval(t.left, idx), self.eval(t.right, idx))
        if isinstance(t, _t.Join):
            return self.model.join(self.eval(t.left, idx), self.eval(t.right, idx))
        if isinstance(t, _t.Resl):
            return self.model.resl(self.eval(t.arg, idx))
        if isinstance(t, _t.Resr):
            return self.model.resr(self.eval(t.arg, idx))
        raise TypeError(f"not a term: {t!r}")

    def holds(self, eq: Equation, idx: Mapping[str, int]) -> bool:
        lv = self.eval(eq.lhs, idx)
        rv = self.eval(eq.rhs, idx)
        return self.model.eq(lv, rv) if eq.kind == "eq" else self.model.leq(lv, rv)


def _reverified(eq: Equation, model, elems, variables, idxs) -> Counterexample:
    # fresh, cache-free evaluation; a reported counterexample must stand on its own
    assignment = {v: elems[i] for v, i in zip(variables, idxs)}
    lv = eval_term(eq.lhs, model, assignment)
    rv = eval_term(eq.rhs, model, assignment)
    ok = model.eq(lv, rv) if eq.kind == "eq" else model.leq(lv, rv)
    if ok:
        raise AssertionError("counterexample did not re-verify")
    return Counterexample(assignment=assignment, lhs_value=lv, rhs_value=rv)


def _scan_chunk(eq, model, elems, variables, outer_range):
    ev = _MemoEvaluator(model, elems, variables)
    rest = variables[1:]
    n = len(elems)
    for first in outer_range:
        for tail in product(range(n), repeat=len(rest)):
            idx = {variables[0]: first, **dict(zip(rest, tail))}
            if not ev.holds(eq, idx):
                return (first, *tail)
    return None


def _commute_fast(eq: Equation, model, elems) -> tuple[int, ...] | None | type(NotImplemented):
    """Vectorized sweep for two-variable equations of the shape
    x*t(y) = t(y)*x with x the first variable in sorted order."""
    if not isinstance(model, FnModel) or eq.kind != "eq":
        return NotImplemented
    variables = eq.variables()
    if len(variables) != 2:
        return NotImplemented
    lhs, rhs = eq.lhs, eq.rhs
    if not (isinstance(lhs, Mul) and isinstance(rhs, Mul)):
        return NotImplemented
    xv, yv = variables
    if not (
        lhs.left == Var(xv)
        and rhs.right == Var(xv)
        and lhs.right == rhs.left
        and free_vars(lhs.right) == {yv}
    ):
        return NotImplemented
    t = lhs.right
    v = values_matrix(elems)
    best: tuple[int, int] | None = None
    for y_idx, y in enumerate(elems):
        u = eval_term(t, model, {yv: y})
        bad = (compose_rows(v, u) != apply_map(u, v)).any(axis=1)
        if bad.any():
            cand = (int(np.argmax(bad)), y_idx)
            if best is None or cand < best:
                best = cand
    return best


def check_equation(
    eq: Equation, model, bounds: Bounds, threads: int = 1
) -> Verdict:
    """Evaluate eq on every (or sampled) assignment; first failure wins."""
    variables = eq.variables()
    elems = model.elements(bounds)
    n = len(elems)

    if bounds.mode == "random":
        rng = random.Random(bounds.seed)
        ev = _MemoEvaluator(model, elems, variables)
        for _ in range(bounds.sample_count):
            idxs = tuple(rng.randrange(n) for _ in variables)
            if not ev.holds(eq, dict(zip(variables, idxs))):
                return _reverified(eq, model, elems, variables, idxs)
        return HoldsWithinBounds(
            checked=bounds.sample_count,
            element_count=n,
            mode="random",
            seed=bounds.seed,
        )
    if bounds.mode != "exhaustive":
        raise ValueError(f"unknown mode {bounds.mode!r}")

    total = n ** len(variables) if variables else 1
    if total > bounds.ceiling:
        raise BoundsTooLarge(f"{total} assignments exceed ceiling {bounds.ceiling}")

    fast = _commute_fast(eq, model, elems)
    if fast is not NotImplemented:
        if fast is None:
            return HoldsWithinBounds(checked=total, element_count=n, mode="exhaustive")
        return _reverified(eq, model, elems, variables, fast)

    if not variables:
        ev = _MemoEvaluator(model, elems, variables)
        if ev.holds(eq, {}):
            return HoldsWithinBounds(checked=1, element_count=n, mode="exhaustive")
        return _reverified(eq, model, elems, variables, ())

    if threads > 1 and n > 1:
        # workers report their chunk's first failure; the smallest index wins,
        # so the verdict matches the sequential order exactly
        chunk = (n + threads - 1) // threads
        ranges = [range(i, min(i + chunk, n)) for i in range(0, n, chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            found = list(
                pool.map(
                    lambda r: _scan_chunk(eq, model, elems, variables, r), ranges
                )
            )
        hits = [f for f in found if f is not None]
        if hits:
            return _reverified(eq, model, elems, variables, min(hits))
        return HoldsWithinBounds(checked=total, element_count=n, mode="exhaustive")

    hit = _scan_chunk(eq, model, elems, variables, range(n))
    if hit is not None:
        return _reverified(eq, model, elems, variables, hit)
    return HoldsWithinBounds(checked=total, element_count=n, mode="exhaustive")


# -- lemma suite --------------------------------------------------------------------


@dataclass(frozen=True)
class LawSpec:
    """A registered property: a runner plus a human-readable bounds note."""

    name: str
    bounds: str
    run: Callable[[], tuple[int, dict | None]]


@dataclass(frozen=True)
class PropertyResult:
    name: str
    bounds: str
    passed: bool
    witness: dict | None
    checked: int
    elapsed_ms: int

    def to_json(self) -> dict:
        out = {
            "property": self.name,
            "bounds": self.bounds,
            "verdict": "pass" if self.passed else "fail",
            "elapsed_ms": self.elapsed_ms,
            "checked": self.checked,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def verify_lemma_suite(
    names: Sequence[str] | None = None,
    registry: Mapping[str, LawSpec] | None = None,
) -> list[PropertyResult]:
    """Run every registered property at its registered bounds.

    `names=None` runs the whole registry; an explicit empty list yields an
    empty, successful report.
    """
    if registry is None:
        from . import laws

        registry = laws.REGISTRY
    selected = list(registry) if names is None else list(names)
    results = []
    for name in selected:
        if name not in registry:
            raise ValueError(f"unknown property {name!r}")
        spec = registry[name]
        t0 = perf_counter()
        checked, witness = spec.run()
        results.append(
            PropertyResult(
                name=name,
                bounds=spec.bounds,
                passed=witness is None,
                witness=witness,
                checked=checked,
                elapsed_ms=int((perf_counter() - t0) * 1000),
            )
        )
    return results


def report_to_json(results: Sequence[PropertyResult]) -> str:
    return json.dumps([r.to_json() for r in results], indent=2)

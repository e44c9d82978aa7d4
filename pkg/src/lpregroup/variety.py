"""Divisibility-lattice combinatorics for the varieties the checker probes.

A variety is named by a finite antichain of positive integers under
divisibility (the maximal elements of its downset); the empty antichain is
the trivial variety and sits at the bottom.  Inclusion, join, and meet all
reduce to downset arithmetic on divisor lattices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import EmptySignature
from .terms import Equation, axiom_join


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("n must be >= 1")
    return [k for k in range(1, n + 1) if n % k == 0]


def downsets(n: int) -> list[frozenset[int]]:
    """All downward-closed subsets of the divisor lattice of n.

    Deterministic order: by size, then by sorted element tuple.
    """
    divs = divisors(n)
    out = []
    for mask in range(1 << len(divs)):
        s = frozenset(d for i, d in enumerate(divs) if mask >> i & 1)
        if all(x in s for d in s for x in divisors(d)):
            out.append(s)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True)
class VarietySig:
    """Finite antichain of positive integers under divisibility."""

    antichain: frozenset[int]

    def __post_init__(self):
        items = sorted(self.antichain)
        for k in items:
            if k < 1:
                raise ValueError(f"signature entries must be positive, got {k}")
        for a in items:
            for b in items:
                if a != b and b % a == 0:
                    raise ValueError(f"not an antichain: {a} divides {b}")

    def downset(self) -> frozenset[int]:
        return frozenset(d for k in self.antichain for d in divisors(k))

    def __str__(self) -> str:
        return format_sig(self)


def normalize(s: Iterable[int]) -> VarietySig:
    """Keep the divisibility-maximal elements of the input set."""
    items = set(s)
    maximal = {a for a in items if not any(b != a and b % a == 0 for b in items)}
    return VarietySig(frozenset(maximal))


def leq(a: VarietySig, b: VarietySig) -> bool:
    """Inclusion: every index of a divides some index of b."""
    return all(any(y % x == 0 for y in b.antichain) for x in a.antichain)


def join(a: VarietySig, b: VarietySig) -> VarietySig:
    return normalize(a.antichain | b.antichain)


def meet(a: VarietySig, b: VarietySig) -> VarietySig:
    return normalize(a.downset() & b.downset())


def properly_periodic_bottom(n: int) -> VarietySig:
    """Maximal prime-power divisors of n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return VarietySig(frozenset((1,)))
    out = set()
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            q = 1
            while rest % p == 0:
                rest //= p
                q *= p
            out.add(q)
        p += 1
    if rest > 1:
        out.add(rest)
    return VarietySig(frozenset(out))


def axiom_for(sig: VarietySig) -> Equation:
    """One-equation axiom for the variety named by the signature."""
    if not sig.antichain:
        raise EmptySignature("the trivial variety has no join axiom")
    return axiom_join(set(sig.antichain))


def subvariety_sigs(n: int) -> list[VarietySig]:
    """Signatures of all subvarieties below the index-n variety."""
    return [normalize(s) for s in downsets(n)]


def cover_relations(n: int) -> list[tuple[int, int]]:
    """Cover pairs (i, j) into subvariety_sigs(n): sig_i is covered by sig_j.

    In a downset lattice the covers are exactly the one-element extensions.
    """
    ds = downsets(n)
    index = {s: i for i, s in enumerate(ds)}
    out = []
    for s in ds:
        for t in ds:
            if len(t) == len(s) + 1 and s < t:
                out.append((index[s], index[t]))
    return sorted(out)


def lattice_report(n: int) -> dict:
    """JSON-ready adjacency report of the subvariety lattice."""
    sigs = subvariety_sigs(n)
    return {
        "n": n,
        "signatures": [format_sig(s) for s in sigs],
        "covers": [list(pair) for pair in cover_relations(n)],
    }


# -- literals -----------------------------------------------------------------

_SIG_RE = re.compile(r"^V\{(\d+(?:,\d+)*)?\}$")


def parse_sig(text: str) -> VarietySig:
    """Parse the literal format V{k1,k2,...}; V{} is the trivial variety."""
    compact = "".join(text.split())
    m = _SIG_RE.match(compact)
    if not m:
        raise ValueError(f"bad signature literal: {text!r}")
    body = m.group(1)
    items = frozenset(int(t) for t in body.split(",")) if body else frozenset()
    return VarietySig(items)


def format_sig(sig: VarietySig) -> str:
    return "V{" + ",".join(str(k) for k in sorted(sig.antichain)) + "}"

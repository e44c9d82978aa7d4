"""Atoms, cores, and the generation pipeline for periodic maps.

Covers the structural algorithms on top of the element arithmetic: the atom
family, the core meet that extracts an atom from a strictly positive
idempotent, the height-one idempotent delta, final-periodicity boosting, the
atom-generation pipeline, positive-word decomposition over shifts and atoms,
and the lcm join of incomparable atoms.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import lcm

from .errors import (
    EmptyPSet,
    NoWitness,
    NotFlat,
    NotPositive,
    NotProperPeriodicity,
    PreconditionFailed,
    SearchExhausted,
)
from .periodic import PeriodicMap, identity, shift

Word = tuple[str, ...]


# -- atoms ----------------------------------------------------------------------


def atoms(n: int) -> list[PeriodicMap]:
    """The covers of the identity: c_i maps i-1 to i and fixes the rest.

    F_1 has no atoms above the identity, so atoms(1) is empty.
    """
    if n <= 1:
        return []
    out = []
    for i in range(1, n + 1):
        values = list(range(n))
        values[i - 1] = i
        out.append(PeriodicMap(n, tuple(values)))
    return out


def is_atom(f: PeriodicMap) -> bool:
    """Positive idempotent fixing all residues except exactly one."""
    if not f.is_positive() or not f.is_idempotent():
        return False
    return len(f.fixed_points()) == f.n - 1


def _nonfixed_residue(atom: PeriodicMap) -> int:
    (r,) = set(range(atom.n)) - atom.fixed_points()
    return r


# -- core -----------------------------------------------------------------------


def p_set(f: PeriodicMap) -> frozenset[int]:
    """Residues l mod n at which the conjugate f^[l] is positive at 0."""
    return frozenset(l for l in range(f.n) if f(-l) + l > 0)


def core(f: PeriodicMap) -> PeriodicMap:
    """Meet of the conjugates f^[l] over l in the positivity set."""
    ps = sorted(p_set(f))
    if not ps:
        raise EmptyPSet(f"{f} has no positive conjugate at 0")
    out = f.conj(ps[0])
    for l in ps[1:]:
        out = out.meet(f.conj(l))
    return out


def delta(f: PeriodicMap) -> PeriodicMap:
    """f^lll * f join the identity.

    For a strictly positive idempotent input, the result is a strictly
    positive idempotent of maximal height one.
    """
    return (f.resl().resl().resl() * f).join(identity(f.n))


# -- final periodicity and boosting ------------------------------------------------


def final_periodicity(f: PeriodicMap) -> int:
    """Periodicity of f^{n-1}, the least idempotent above a positive flat f."""
    if not f.is_positive() or not f.is_flat():
        raise NotFlat(f"{f} is not positive and flat")
    return f.power(f.n - 1).per()


def boost_final_periodicity(a: PeriodicMap, k: int) -> PeriodicMap:
    """From a of periodicity n and a final periodicity k < n, build an
    element of strictly larger final periodicity.

    Picks the smallest l >= 0 with a(l+k) < a(l)+k, caps with the maximal
    k-periodic idempotent that is constant on [a(l), a(l)+k-1], and flattens
    the product back to a strictly positive flat element.
    """
    n = a.n
    if not a.is_positive() or not a.is_flat():
        raise NotFlat(f"{a} is not positive and flat")
    if a.per() != n:
        raise NotProperPeriodicity(f"{a} has periodicity {a.per()}, ambient {n}")
    if k <= 0 or n % k:
        raise ValueError(f"k={k} must be a positive divisor of n={n}")
    l = next((l for l in range(n) if a(l + k) < a(l) + k), None)
    if l is None:
        raise NoWitness(f"no l with a(l+{k}) < a(l)+{k}; is k < per(a)?")
    p = a(l)
    top = PeriodicMap(
        k, tuple(p + k - 1 + k * ((x - p) // k) for x in range(k))
    ).rescale(n)
    d = top * a
    c = d.sigma().inverse() * d
    assert c.is_positive() and c.is_flat() and final_periodicity(c) > k
    return c


# -- generation pipeline ---------------------------------------------------------


@dataclass(frozen=True)
class GenerationTrace:
    """Witness elements produced while generating an atom from one element."""

    input: PeriodicMap
    stages: tuple[tuple[str, PeriodicMap], ...]

    @property
    def atom(self) -> PeriodicMap:
        label, element = self.stages[-1]
        assert label == "atom"
        return element


def generate_atom(a: PeriodicMap) -> GenerationTrace:
    """Drive a non-invertible element of full periodicity down to an atom.

    Flattens with sigma(a)^{-1} a, boosts the final periodicity until it
    reaches n, raises the result to its idempotent power, and extracts the
    core.  Every stage is recorded and the terminal stage is an atom.
    """
    n = a.n
    if n < 2 or a.per() != n:
        raise NotProperPeriodicity(
            f"need periodicity equal to the ambient period {n} > 1, got {a.per()}"
        )
    c0 = a.sigma().inverse() * a
    assert c0.is_strictly_positive() and c0.is_flat() and c0.per() == n
    k = final_periodicity(c0)
    stages = [(f"flattened fp={k}", c0)]
    cur = c0
    while k < n:
        cur = boost_final_periodicity(c0, k)
        k_next = final_periodicity(cur)
        assert k_next > k and n % k_next == 0
        k = k_next
        stages.append((f"boosted fp={k}", cur))
    e = cur.power(n - 1)
    assert e.is_strictly_positive() and e.is_idempotent() and e.per() == n
    stages.append(("idempotent", e))
    out = core(e)
    assert is_atom(out)
    stages.append(("atom", out))
    return GenerationTrace(input=a, stages=tuple(stages))


# -- word decomposition ------------------------------------------------------------

#: Default cap on the word length explored by the search fallback.
DEFAULT_WORD_BOUND = 12


def word_generators(n: int) -> list[tuple[str, PeriodicMap]]:
    gens = [("S", shift(n, 1)), ("S^-1", shift(n, -1))]
    gens.extend((f"C{i}", c) for i, c in enumerate(atoms(n), start=1))
    return gens


def eval_word(word: Word, n: int) -> PeriodicMap:
    """Product of the word's letters, left to right; empty word is the identity."""
    table = dict(word_generators(n))
    out = identity(n)
    for tok in word:
        if tok not in table:
            raise ValueError(f"unknown letter {tok!r} for period {n}")
        out = out * table[tok]
    return out


def format_word(word: Word) -> str:
    return " ".join(word) if word else "1"


def _construction_word(f: PeriodicMap) -> Word | None:
    """Direct decomposition via the double-shifted interval map.

    Conjugates f so that it maps [0, n-1] into itself, then factors the
    conjugate into descending atom products.  Applicable only when that
    conjugate is positive; returns None otherwise.
    """
    n = f.n
    k = max(x for x in range(n) if f(x) == f(0))
    a = f(k + 1)
    g = PeriodicMap(n, tuple(f(x + k + 1) - a for x in range(n)))
    if not g.is_positive():
        return None
    atom_part: list[str] = []
    for value in range(1, n):
        pre = [x for x in range(n) if g(x) == value]
        if pre and pre != [value]:
            low = pre[0] + 1
            atom_part.extend(f"C{i}" for i in range(value, low - 1, -1))
    if atom_part:
        word = tuple(["S"] * a + atom_part + ["S^-1"] * (k + 1))
    else:
        word = tuple(["S"] * (a - k - 1))
    return word if eval_word(word, n) == f else None


# Append-only shortest-word tables keyed by period; lock-guarded so shared use
# across threads stays safe.  Entries never change once written, so cached
# lookups agree with a fresh breadth-first search.
_BFS_LOCK = threading.Lock()
_BFS_TABLES: dict[int, tuple[dict[PeriodicMap, Word], list[PeriodicMap], int]] = {}


def _bfs_word(target: PeriodicMap, limit: int) -> Word:
    n = target.n
    with _BFS_LOCK:
        words, frontier, depth = _BFS_TABLES.get(
            n, ({identity(n): ()}, [identity(n)], 0)
        )
        gens = word_generators(n)
        while target not in words and depth < limit and frontier:
            nxt: list[PeriodicMap] = []
            for state in frontier:
                base = words[state]
                for tok, gmap in gens:
                    candidate = state * gmap
                    if candidate not in words:
                        words[candidate] = base + (tok,)
                        nxt.append(candidate)
            frontier = nxt
            depth += 1
        _BFS_TABLES[n] = (words, frontier, depth)
        found = words.get(target)
    if found is None or len(found) > limit:
        raise SearchExhausted(limit)
    return found


def decompose_positive(
    f: PeriodicMap, max_word_length: int = DEFAULT_WORD_BOUND
) -> Word:
    """Express a positive element as a word over {S, S^-1, C1..Cn}.

    Follows the direct construction when its positivity side condition
    holds; otherwise falls back to a breadth-first search over words of
    increasing length.  The returned word is re-evaluated before being
    reported, so a successful return is always a verified factorization.
    """
    if not f.is_positive():
        raise NotPositive(f"{f} is not positive")
    word = _construction_word(f)
    if word is None:
        word = _bfs_word(f, max_word_length)
    assert eval_word(word, f.n) == f
    return word


# -- lcm join of atoms -----------------------------------------------------------


def atom_lcm_join(
    a: PeriodicMap, b: PeriodicMap
) -> tuple[int, int, PeriodicMap]:
    """Align two atoms of incomparable periodicities and join them.

    Accepts atoms natively represented or already rescaled; the alignment
    shifts s, t put each atom's single height-1 residue at 0, and the join
    then has periodicity lcm of the two.
    """
    na, nb = a.per(), b.per()
    ra, rb = a.reduce(), b.reduce()
    if not is_atom(ra) or not is_atom(rb):
        raise PreconditionFailed("both inputs must be atoms")
    if na % nb == 0 or nb % na == 0:
        raise PreconditionFailed(
            f"periodicities {na} and {nb} are comparable under divisibility"
        )
    target = lcm(na, nb)
    s = (-_nonfixed_residue(ra)) % na
    t = (-_nonfixed_residue(rb)) % nb
    aligned_a = ra.conj(s).rescale(target)
    aligned_b = rb.conj(t).rescale(target)
    assert aligned_a(0) == 1 and aligned_b(0) == 1
    joined = aligned_a.join(aligned_b)
    assert joined.per() == target
    return s, t, joined

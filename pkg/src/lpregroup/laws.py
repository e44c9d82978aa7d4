"""Registered properties for the lemma-verification suite.

Each law function returns (checked_count, witness) where witness is None on
success and otherwise a JSON-ready dict naming the failing law instance.
Singles and pairs run on the scalar operations directly; the two
triple-quantified families sweep one variable with the checker's batch
helpers, which the test suite cross-validates against the scalar path.
"""

from __future__ import annotations

import random
from collections import OrderedDict
from itertools import product
from math import gcd

import numpy as np

from .atoms import (
    atoms,
    atom_lcm_join,
    core,
    decompose_positive,
    delta,
    eval_word,
    final_periodicity,
    generate_atom,
    is_atom,
)
from .checker import (
    Bounds,
    Counterexample,
    HoldsWithinBounds,
    LawSpec,
    apply_map,
    check_equation,
    compose_rows,
    values_matrix,
)
from .lex import LexModel
from .models import FnModel
from .periodic import (
    PeriodicMap,
    enumerate_maps,
    format_element,
    identity,
    shift,
)
from .terms import axiom_commute, axiom_periodic, eval_term
from .variety import (
    axiom_for,
    cover_relations,
    downsets,
    format_sig,
    join as sig_join,
    leq as sig_leq,
    meet as sig_meet,
    normalize,
    properly_periodic_bottom,
    subvariety_sigs,
    VarietySig,
)
from .wreath import WreathModel, is_local, wreath

DEFAULT_NS = (1, 2, 3, 4)
DEFAULT_H = 3
SAMPLE6_COUNT = 120
SAMPLE6_SEED = 60301


def _witness(law: str, n: int, **elems) -> dict:
    out = {"law": law, "n": n}
    for key, value in elems.items():
        out[key] = format_element(value) if isinstance(value, PeriodicMap) else str(value)
    return out


def _envs(ns=DEFAULT_NS, h=DEFAULT_H, sample6=SAMPLE6_COUNT):
    for n in ns:
        yield n, list(enumerate_maps(n, h))
    if sample6:
        rng = random.Random(SAMPLE6_SEED)
        pool = list(enumerate_maps(6, h))
        yield 6, [pool[rng.randrange(len(pool))] for _ in range(sample6)]


# -- element-law singles and pairs ------------------------------------------------


def law_adjunction(ns=DEFAULT_NS, h=DEFAULT_H, sample6=SAMPLE6_COUNT):
    checked = 0
    for n, elems in _envs(ns, h, sample6):
        one = identity(n)
        for f in elems:
            checked += 1
            fl, fr = f.resl(), f.resr()
            if not (fl * f <= one <= f * fl and f * fr <= one <= fr * f):
                return checked, _witness("adjunction", n, f=f)
    return checked, None


def law_involution(ns=DEFAULT_NS, h=DEFAULT_H, sample6=SAMPLE6_COUNT):
    checked = 0
    for n, elems in _envs(ns, h, sample6):
        for f in elems:
            checked += 1
            if f.resl().resr() != f or f.resr().resl() != f:
                return checked, _witness("involution", n, f=f)
    return checked, None


def law_antihomomorphism(ns=DEFAULT_NS, h=DEFAULT_H, sample6=40):
    checked = 0
    for n, elems in _envs(ns, h, sample6):
        resl = {f: f.resl() for f in elems}
        resr = {f: f.resr() for f in elems}
        for f in elems:
            for g in elems:
                checked += 1
                fg = f * g
                if fg.resl() != resl[g] * resl[f] or fg.resr() != resr[g] * resr[f]:
                    return checked, _witness("antihomomorphism", n, f=f, g=g)
    return checked, None


def law_de_morgan(ns=DEFAULT_NS, h=DEFAULT_H, sample6=40):
    checked = 0
    for n, elems in _envs(ns, h, sample6):
        resl = {f: f.resl() for f in elems}
        resr = {f: f.resr() for f in elems}
        for f in elems:
            for g in elems:
                checked += 1
                jn, mt = f.join(g), f.meet(g)
                ok = (
                    jn.resl() == resl[f].meet(resl[g])
                    and mt.resl() == resl[f].join(resl[g])
                    and jn.resr() == resr[f].meet(resr[g])
                    and mt.resr() == resr[f].join(resr[g])
                )
                if not ok:
                    return checked, _witness("de_morgan", n, f=f, g=g)
    return checked, None


def law_distributivity(ns=DEFAULT_NS, h=DEFAULT_H):
    """Composition distributes over meet and join on both sides, and the
    value lattice is distributive; swept over all triples with one batched
    variable."""
    checked = 0
    for n in ns:
        elems = list(enumerate_maps(n, h))
        v = values_matrix(elems)
        left_of = {g: compose_rows(v, g) for g in elems}  # rows f -> f*g
        right_of = {g: apply_map(g, v) for g in elems}  # rows f -> g*f
        for g in elems:
            gv = np.asarray(g.values, dtype=np.int64)
            for h_el in elems:
                checked += len(elems)
                hv = np.asarray(h_el.values, dtype=np.int64)
                mt, jn = g.meet(h_el), g.join(h_el)
                ok = (
                    np.array_equal(
                        compose_rows(v, mt), np.minimum(left_of[g], left_of[h_el])
                    )
                    and np.array_equal(
                        compose_rows(v, jn), np.maximum(left_of[g], left_of[h_el])
                    )
                    and np.array_equal(
                        apply_map(mt, v), np.minimum(right_of[g], right_of[h_el])
                    )
                    and np.array_equal(
                        apply_map(jn, v), np.maximum(right_of[g], right_of[h_el])
                    )
                    and np.array_equal(
                        np.minimum(np.maximum(v, gv), hv),
                        np.maximum(np.minimum(v, hv), np.minimum(gv, hv)),
                    )
                )
                if not ok:
                    return checked, _witness("distributivity", n, g=g, h=h_el)
    return checked, None


def law_bracket_automorphism(ns=DEFAULT_NS, h=DEFAULT_H, ks=(-2, -1, 1, 2), sample6=25):
    checked = 0
    for n, elems in _envs(ns, h, sample6):
        for f in elems:
            for k in ks:
                checked += 1
                if f.conj(k).resl() != f.resl().conj(k) or f.conj(k).resr() != f.resr().conj(k):
                    return checked, _witness("bracket_respects_residuals", n, f=f, k=k)
        conj = {(f, k): f.conj(k) for f in elems for k in ks}
        for f in elems:
            for g in elems:
                for k in ks:
                    checked += 1
                    ok = (
                        (f * g).conj(k) == conj[f, k] * conj[g, k]
                        and f.meet(g).conj(k) == conj[f, k].meet(conj[g, k])
                        and f.join(g).conj(k) == conj[f, k].join(conj[g, k])
                    )
                    if not ok:
                        return checked, _witness("bracket_automorphism", n, f=f, g=g, k=k)
    return checked, None


def law_central_power(ns=DEFAULT_NS, h=DEFAULT_H, sample6=SAMPLE6_COUNT):
    checked = 0
    for n, elems in _envs(ns, h, sample6):
        s_n = shift(n, n)
        for f in elems:
            checked += 1
            if f * s_n != s_n * f:
                return checked, _witness("central_power", n, f=f)
    return checked, None


def law_sigma_conucleus(ns=DEFAULT_NS, h=DEFAULT_H, sample6=40):
    checked = 0
    for n, elems in _envs(ns, h, sample6):
        sig = {f: f.sigma() for f in elems}
        for f in elems:
            checked += 1
            if not (sig[f].sigma() == sig[f] and sig[f] <= f):
                return checked, _witness("sigma_interior", n, f=f)
        for f in elems:
            for g in elems:
                checked += 1
                ok = sig[f] * sig[g] <= (f * g).sigma() and f.meet(g).sigma() == sig[
                    f
                ].meet(sig[g])
                if not ok:
                    return checked, _witness("sigma_conucleus", n, f=f, g=g)
    return checked, None


def law_gamma_closure(ns=DEFAULT_NS, h=DEFAULT_H, sample6=40):
    checked = 0
    for n, elems in _envs(ns, h, sample6):
        gam = {f: f.gamma() for f in elems}
        for f in elems:
            checked += 1
            if not (f <= gam[f] and gam[f].gamma() == gam[f]):
                return checked, _witness("gamma_closure_unit", n, f=f)
        for f in elems:
            for g in elems:
                checked += 1
                ok = f.join(g).gamma() == gam[f].join(gam[g]) and (f * g).gamma() <= gam[
                    f
                ] * gam[g]
                if not ok:
                    return checked, _witness("gamma_closure", n, f=f, g=g)
    return checked, None


def law_sigma_gamma_duality(ns=DEFAULT_NS, h=DEFAULT_H, sample6=SAMPLE6_COUNT):
    checked = 0
    for n, elems in _envs(ns, h, sample6):
        for f in elems:
            checked += 1
            inv = f.sigma().inverse()
            if inv != f.resl().gamma() or inv != f.resr().gamma():
                return checked, _witness("sigma_gamma_duality", n, f=f)
    return checked, None


def law_norm(ns=DEFAULT_NS, h=DEFAULT_H, sample6=40):
    checked = 0
    for n, elems in _envs(ns, h, sample6):
        one = identity(n)
        nrm = {f: f.norm() for f in elems}
        for f in elems:
            checked += 1
            ok = (
                nrm[f].inverse() <= f <= nrm[f]
                and one <= nrm[f]
                and nrm[f] == f.resl().norm() == f.resr().norm()
            )
            if not ok:
                return checked, _witness("norm_unary", n, f=f)
        for f in elems:
            for g in elems:
                checked += 1
                bound = nrm[f].join(nrm[g])
                ok = (
                    f.meet(g).norm() <= bound
                    and f.join(g).norm() <= bound
                    and (f * g).norm() <= nrm[f] * nrm[g] * nrm[f]
                )
                if not ok:
                    return checked, _witness("norm_binary", n, f=f, g=g)
    return checked, None


def law_xxl(ns=DEFAULT_NS, h=DEFAULT_H, sample6=SAMPLE6_COUNT):
    checked = 0
    for n, elems in _envs(ns, h, sample6):
        one = identity(n)
        for f in elems:
            checked += 1
            e = f * f.resl()
            if not (e.is_idempotent() and one <= e):
                return checked, _witness("xxl_idempotent", n, f=f)
            if f.is_positive() and f.is_idempotent() and e != f:
                return checked, _witness("xxl_fixes_positive_idempotent", n, f=f)
    return checked, None


def law_conjugate_collapse(ns=DEFAULT_NS, h=DEFAULT_H):
    """c^r (b^r a b & 1) c & 1 == (b c)^r a (b c) & 1, batched over a."""
    checked = 0
    for n in ns:
        elems = list(enumerate_maps(n, h))
        v = values_matrix(elems)
        idrow = np.arange(n, dtype=np.int64)
        for b in elems:
            br = b.resr()
            for c in elems:
                checked += len(elems)
                cr = c.resr()
                inner = np.minimum(compose_rows(apply_map(br, v), b), idrow)
                lhs = np.minimum(compose_rows(apply_map(cr, inner), c), idrow)
                bc = b * c
                rhs = np.minimum(compose_rows(apply_map(bc.resr(), v), bc), idrow)
                if not np.array_equal(lhs, rhs):
                    return checked, _witness("conjugate_collapse", n, b=b, c=c)
    return checked, None


def law_flatness(ns=DEFAULT_NS, h=DEFAULT_H, sample6=SAMPLE6_COUNT):
    """is_flat's three criteria agree (asserted internally) and, on positive
    elements, flatness coincides with sigma(f) = 1."""
    checked = 0
    for n, elems in _envs(ns, h, sample6):
        one = identity(n)
        for f in elems:
            checked += 1
            flat = f.is_flat()
            if f.is_positive() and flat != (f.sigma() == one):
                return checked, _witness("flatness_sigma", n, f=f)
    return checked, None


def law_sigma_gamma_definitions(ns=DEFAULT_NS, h=DEFAULT_H, sample6=60):
    """sigma/gamma agree with their conjugate meet/join definitions, and
    conj(k) agrees with iterated residuals."""
    checked = 0
    for n, elems in _envs(ns, h, sample6):
        for f in elems:
            checked += 1
            meet_all = f
            join_all = f
            for k in range(1, n):
                meet_all = meet_all.meet(f.conj(k))
                join_all = join_all.join(f.conj(k))
            if f.sigma() != meet_all or f.gamma() != join_all:
                return checked, _witness("sigma_gamma_definition", n, f=f)
            up = down = f
            for k in range(1, 3):
                up = up.resl().resl()
                down = down.resr().resr()
                if up != f.conj(k) or down != f.conj(-k):
                    return checked, _witness("conj_vs_residuals", n, f=f, k=k)
    return checked, None


def law_atom_conjugacy(ns=(2, 3, 4, 5, 6)):
    checked = 0
    for n in ns:
        ats = atoms(n)
        for a in ats:
            for b in ats:
                checked += 1
                if not any(b == a.conj(k) for k in range(n)):
                    return checked, _witness("atom_conjugacy", n, a=a, b=b)
    return checked, None


# -- idempotent enumeration and the structural theorems -----------------------------


def strictly_positive_idempotents(n: int) -> list[PeriodicMap]:
    """One positive idempotent per nonempty proper periodic fixed-point set,
    in deterministic mask order."""
    out = []
    for mask in range(1, (1 << n) - 1):
        fixed = [i for i in range(n) if mask >> i & 1]
        values = []
        for x in range(n):
            values.append(next(l for l in range(x, x + n) if l % n in fixed))
        out.append(PeriodicMap(n, tuple(values)))
    return out


def law_core_theorem(nmax=8):
    checked = 0
    for n in range(1, nmax + 1):
        for e in strictly_positive_idempotents(n):
            checked += 1
            c = core(e)
            if c.per() != e.per() or not is_atom(c.reduce()):
                return checked, _witness("core_theorem", n, e=e, core=c)
    return checked, None


def law_delta_theorem(nmax=8):
    checked = 0
    for n in range(1, nmax + 1):
        for e in strictly_positive_idempotents(n):
            checked += 1
            d = delta(e)
            ok = (
                d.is_strictly_positive()
                and d.is_idempotent()
                and d.hmax() == 1
                and d.gamma() == shift(n, 1)
            )
            if not ok:
                return checked, _witness("delta_theorem", n, e=e, delta=d)
    return checked, None


def law_decomposition_soundness(nmax=4, h=3, bound=12):
    checked = 0
    for n in range(1, nmax + 1):
        for f in enumerate_maps(n, h):
            if not f.is_positive():
                continue
            checked += 1
            word = decompose_positive(f, bound)
            if eval_word(word, n) != f:
                return checked, _witness("decomposition_soundness", n, f=f)
    return checked, None


def law_generation_pipeline(ns=(2, 3, 4, 6)):
    checked = 0
    for n in ns:
        for a in enumerate_maps(n, n):
            if not (a.is_strictly_positive() and a.per() == n and a.is_flat()):
                continue
            checked += 1
            trace = generate_atom(a)
            fps = [
                final_periodicity(el)
                for label, el in trace.stages
                if label.startswith(("flattened", "boosted"))
            ]
            ok = (
                all(x < y for x, y in zip(fps, fps[1:]))
                and all(n % k == 0 for k in fps)
                and is_atom(trace.atom)
            )
            if not ok:
                return checked, _witness("generation_pipeline", n, a=a)
    return checked, None


def law_lcm_join(cases=((2, 3), (4, 6))):
    checked = 0
    for na, nb in cases:
        checked += 1
        a, b = atoms(na)[0], atoms(nb)[0]
        _, _, joined = atom_lcm_join(a, b)
        expect = na * nb // gcd(na, nb)
        if joined.per() != expect:
            return checked, _witness("lcm_join", expect, a=a, b=b, joined=joined)
    return checked, None


# -- axiom experiments ---------------------------------------------------------------


def law_axiom_divisor(ks=(1, 2, 3, 4, 6), ns=(1, 2, 3, 4, 6), h=3):
    """Both axiom halves hold on F_k iff k divides the axiom index; the
    periodicity half otherwise yields a counterexample."""
    checked = 0
    for k in ks:
        model = FnModel(k)
        bounds = Bounds(n=k, h=h)
        for n in ns:
            checked += 1
            periodic = check_equation(axiom_periodic(n), model, bounds)
            if n % k == 0:
                commute = check_equation(axiom_commute(n), model, bounds)
                if not isinstance(periodic, HoldsWithinBounds) or not isinstance(
                    commute, HoldsWithinBounds
                ):
                    return checked, {"law": "axiom_divisor", "k": k, "n": n,
                                     "expected": "holds"}
            elif not isinstance(periodic, Counterexample):
                return checked, {"law": "axiom_divisor", "k": k, "n": n,
                                 "expected": "counterexample"}
    return checked, None


# -- product models ------------------------------------------------------------------


def _shared_model_laws(model, elems, triple_elems):
    one = model.one()
    checked = 0
    for a in elems:
        checked += 1
        la, ra = model.resl(a), model.resr(a)
        ok = (
            model.leq(model.mul(la, a), one)
            and model.leq(one, model.mul(a, la))
            and model.leq(model.mul(a, ra), one)
            and model.leq(one, model.mul(ra, a))
            and model.eq(model.resr(la), a)
            and model.eq(model.resl(ra), a)
        )
        if not ok:
            return checked, {"law": "adjunction_involution", "model": model.name,
                             "a": model.format(a)}
    for a in elems:
        la, ra = model.resl(a), model.resr(a)
        for b in elems:
            checked += 1
            jn, mt = model.join(a, b), model.meet(a, b)
            ok = (
                model.eq(model.resl(jn), model.meet(la, model.resl(b)))
                and model.eq(model.resl(mt), model.join(la, model.resl(b)))
                and model.eq(model.resr(jn), model.meet(ra, model.resr(b)))
                and model.eq(model.resr(mt), model.join(ra, model.resr(b)))
            )
            if not ok:
                return checked, {"law": "de_morgan", "model": model.name,
                                 "a": model.format(a), "b": model.format(b)}
    for a in triple_elems:
        for b in triple_elems:
            mt, jn = model.meet(a, b), model.join(a, b)
            for c in triple_elems:
                checked += 1
                ok = (
                    model.eq(model.mul(c, mt), model.meet(model.mul(c, a), model.mul(c, b)))
                    and model.eq(model.mul(mt, c), model.meet(model.mul(a, c), model.mul(b, c)))
                    and model.eq(model.mul(c, jn), model.join(model.mul(c, a), model.mul(c, b)))
                    and model.eq(model.mul(jn, c), model.join(model.mul(a, c), model.mul(b, c)))
                )
                if not ok:
                    return checked, {"law": "distributivity", "model": model.name,
                                     "a": model.format(a), "b": model.format(b),
                                     "c": model.format(c)}
    return checked, None


def law_lex_suite(m=1, n=2, lex_bound=2, h=1):
    model = LexModel(m, n)
    elems = model.elements(Bounds(h=h, lex_bound=lex_bound))
    return _shared_model_laws(model, elems, elems)


def law_wreath_suite(n=2, window=2, triple_window=1):
    model = WreathModel(n)
    elems = model.elements(Bounds(window=window))
    triples = model.elements(Bounds(window=triple_window))
    return _shared_model_laws(model, elems, triples)


def law_product_periodicity(n=2, lex_bound=2, h=1, window=2):
    """Every product-model element over an n-periodic base satisfies x = x^[n]."""
    checked = 0
    for model, elems in (
        (LexModel(1, n), LexModel(1, n).elements(Bounds(h=h, lex_bound=lex_bound))),
        (WreathModel(n), WreathModel(n).elements(Bounds(window=window))),
    ):
        for a in elems:
            checked += 1
            x = a
            for _ in range(2 * n):
                x = model.resl(x)
            if not model.eq(x, a):
                return checked, {"law": "periodicity_lift", "model": model.name,
                                 "a": model.format(a)}
    return checked, None


def law_loc_properties(n=2, trials=10_000, seed=74123):
    """loc is closed under the operations, convex, and closed under
    conjugation; checked on seeded random triples."""
    model = WreathModel(n)
    rng = random.Random(seed)
    checked = 0
    for _ in range(trials):
        checked += 1
        a = model.random_element(rng, local_only=True)
        b = model.random_element(rng, local_only=True)
        c = model.random_element(rng)
        closure = [
            model.mul(a, b),
            model.meet(a, b),
            model.join(a, b),
            model.resl(a),
            model.resr(a),
        ]
        if not all(is_local(x) for x in closure):
            return checked, {"law": "loc_closure", "a": str(a), "b": str(b)}
        lo, hi = model.meet(a, b), model.join(a, b)
        mid = model.meet(model.join(c, lo), hi)
        if not is_local(mid):
            return checked, {"law": "loc_convexity", "a": str(a), "b": str(b),
                             "c": str(c)}
        conj = model.meet(model.mul(model.mul(c, a), model.resl(c)), model.one())
        if not is_local(conj):
            return checked, {"law": "loc_conjugation", "a": str(a), "c": str(c)}
    return checked, None


def law_lex_commute(n=2, trials=10_000, seed=90817, lex_bound=2, h=2):
    model = LexModel(1, n)
    bounds = Bounds(h=h, lex_bound=lex_bound, mode="random",
                    sample_count=trials, seed=seed)
    verdict = check_equation(axiom_commute(n), model, bounds)
    if isinstance(verdict, HoldsWithinBounds):
        return verdict.checked, None
    return trials, {"law": "lex_commute",
                    "assignment": {k: model.format(v) for k, v in
                                   verdict.assignment.items()}}


# -- variety lattice -----------------------------------------------------------------


def law_variety_lattice(iso_ns=(6, 12, 30), law_n=12):
    """Downset-lattice facts: |O(D_12)| = 10, signatures biject with downsets
    and respect order/join/meet, lattice identities hold, and the properly
    periodic bottom of 12 is {3,4}."""
    checked = 0
    if len(downsets(12)) != 10:
        return checked, {"law": "downset_count", "n": 12}
    for n in iso_ns:
        ds = downsets(n)
        sigs = subvariety_sigs(n)
        checked += len(ds)
        if len(set(sigs)) != len(ds):
            return checked, {"law": "sig_downset_bijection", "n": n}
        for s, a in zip(ds, sigs):
            if a.downset() != s:
                return checked, {"law": "sig_downset_roundtrip", "n": n,
                                 "downset": sorted(s)}
        for s, a in zip(ds, sigs):
            for t, b in zip(ds, sigs):
                checked += 1
                ok = (
                    sig_leq(a, b) == (s <= t)
                    and sig_join(a, b).downset() == s | t
                    and sig_meet(a, b).downset() == s & t
                )
                if not ok:
                    return checked, {"law": "sig_lattice_vs_downsets", "n": n,
                                     "a": format_sig(a), "b": format_sig(b)}
    sigs12 = subvariety_sigs(law_n)
    for a in sigs12:
        for b in sigs12:
            for c in sigs12:
                checked += 1
                ok = (
                    sig_join(a, b) == sig_join(b, a)
                    and sig_join(a, a) == a
                    and sig_join(sig_join(a, b), c) == sig_join(a, sig_join(b, c))
                )
                if not ok:
                    return checked, {"law": "join_semilattice", "a": format_sig(a),
                                     "b": format_sig(b), "c": format_sig(c)}
    if properly_periodic_bottom(12) != normalize({3, 4}):
        return checked, {"law": "properly_periodic_bottom", "n": 12}
    return checked, None


def law_axiom_for_agreement(ks=(1, 2, 3, 4, 6), ns=(1, 2, 3, 4, 6),
                            samples=2000, seed=77001, h=3):
    """axiom_for({n}) agrees with the axiom pair on the bounded experiments:
    it holds on F_k under seeded sampling when k | n, and the constructed
    assignment (w,x,y,z) = (1, atom, s, atom) falsifies it when k does not
    divide n."""
    checked = 0
    for k in ks:
        model = FnModel(k)
        for n in ns:
            checked += 1
            eq = axiom_for(VarietySig(frozenset((n,))))
            if n % k == 0:
                bounds = Bounds(n=k, h=h, mode="random",
                                sample_count=samples, seed=seed + 31 * n + k)
                verdict = check_equation(eq, model, bounds)
                if not isinstance(verdict, HoldsWithinBounds):
                    return checked, {"law": "axiom_for_holds", "k": k, "n": n}
            else:
                c = atoms(k)[0]
                assignment = {
                    f"w{n}": identity(k),
                    f"x{n}": c,
                    f"y{n}": shift(k, 1),
                    f"z{n}": c,
                }
                value = eval_term(eq.rhs, model, assignment)
                if identity(k) <= value:
                    return checked, {"law": "axiom_for_fails", "k": k, "n": n}
    return checked, None


# -- figure-derived golden vectors -----------------------------------------------------


def law_figure_vectors():
    """The worked examples reproduced exactly."""
    checked = 0
    f2 = PeriodicMap(2, (4, 4))
    f6 = PeriodicMap(6, (2, 2, 2, 4, 5, 5))
    cases = [
        (f2.sigma(), shift(2, 3)),
        (f2.sigma().inverse() * f2, PeriodicMap(2, (1, 1))),
        (f6.conj(2), PeriodicMap(6, (1, 1, 4, 4, 4, 6))),
        (core(f6), PeriodicMap(6, (1, 1, 2, 4, 4, 5))),
        (f6 * f6, PeriodicMap(6, (2, 2, 2, 5, 5, 5))),
    ]
    for got, want in cases:
        checked += 1
        if got != want:
            return checked, {"law": "figure_vectors", "got": str(got),
                             "want": str(want)}
    from .atoms import p_set, boost_final_periodicity

    checked += 1
    if sorted(p_set(f6)) != [0, 2, 3, 5]:
        return checked, {"law": "figure_vectors", "got": str(sorted(p_set(f6))),
                         "want": "[0, 2, 3, 5]"}
    top6 = PeriodicMap(3, (1, 1, 4)).rescale(6)
    d = top6 * f6
    checked += 1
    if d != PeriodicMap(6, (4, 4, 4, 4, 7, 7)):
        return checked, {"law": "figure_vectors", "got": str(d),
                         "want": "F6:[4,4,4,4,7,7]"}
    c = boost_final_periodicity(f6, 3)
    checked += 1
    if c != PeriodicMap(6, (3, 3, 3, 3, 6, 6)) or final_periodicity(c) != 6:
        return checked, {"law": "figure_vectors", "got": str(c),
                         "want": "F6:[3,3,3,3,6,6] with final periodicity 6"}
    return checked, None


# -- registry --------------------------------------------------------------------------


def _spec(name, bounds, fn):
    return name, LawSpec(name=name, bounds=bounds, run=fn)


_EXH = "n in {1,2,3,4}, heights in [-3,3], plus a seeded F6 sample"

REGISTRY: "OrderedDict[str, LawSpec]" = OrderedDict(
    [
        _spec("figure_vectors", "worked examples", law_figure_vectors),
        _spec("adjunction", _EXH, law_adjunction),
        _spec("involution", _EXH, law_involution),
        _spec("antihomomorphism", _EXH, law_antihomomorphism),
        _spec("de_morgan", _EXH, law_de_morgan),
        _spec("distributivity", "triples, n in {1,2,3,4}, heights in [-3,3]",
              law_distributivity),
        _spec("bracket_automorphism", _EXH + ", k in {-2,-1,1,2}",
              law_bracket_automorphism),
        _spec("central_power", _EXH, law_central_power),
        _spec("sigma_conucleus", _EXH, law_sigma_conucleus),
        _spec("gamma_closure", _EXH, law_gamma_closure),
        _spec("sigma_gamma_duality", _EXH, law_sigma_gamma_duality),
        _spec("norm_laws", _EXH, law_norm),
        _spec("xxl_idempotent", _EXH, law_xxl),
        _spec("conjugate_collapse", "triples, n in {1,2,3,4}, heights in [-3,3]",
              law_conjugate_collapse),
        _spec("flatness_equivalence", _EXH, law_flatness),
        _spec("sigma_gamma_definitions", _EXH, law_sigma_gamma_definitions),
        _spec("atom_conjugacy", "n in {2..6}", law_atom_conjugacy),
        _spec("core_theorem", "all strictly positive idempotents, n <= 8",
              law_core_theorem),
        _spec("delta_theorem", "all strictly positive idempotents, n <= 8",
              law_delta_theorem),
        _spec("decomposition_soundness", "positive maps, n <= 4, hmax <= 3",
              law_decomposition_soundness),
        _spec("generation_pipeline",
              "strictly positive flat of full periodicity, n in {2,3,4,6}",
              law_generation_pipeline),
        _spec("lcm_join", "atom pairs (2,3) and (4,6)", law_lcm_join),
        _spec("axiom_divisor", "k,n in {1,2,3,4,6}, h=3", law_axiom_divisor),
        _spec("lex_law_suite", "Z x F2, h-components in [-2,2]", law_lex_suite),
        _spec("wreath_law_suite", "wreath over F2, window <= 2", law_wreath_suite),
        _spec("product_periodicity", "lex and wreath families over F2",
              law_product_periodicity),
        _spec("loc_properties", "10^4 seeded random triples", law_loc_properties),
        _spec("lex_commute", "10^4 seeded assignments in Z x F2", law_lex_commute),
        _spec("variety_lattice", "downsets within divisors of 30",
              law_variety_lattice),
        _spec("axiom_for_agreement", "k,n in {1,2,3,4,6}", law_axiom_for_agreement),
    ]
)

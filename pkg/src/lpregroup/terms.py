"""Term language over the signature {*, &, |, 1, ^l, ^r} with variables.

Provides the AST, a parser and printer for the concrete grammar, evaluation
over pluggable models, derived-term builders, equations with a normal form,
and the axiom schemas used by the checker and the variety layer.

Grammar (loosest to tightest): `|`, `&`, juxtaposition or `*`, postfix
`^l`/`^r`; all binary operators associate to the left.  Macro calls
`sigma_k(t)`, `gamma_k(t)`, `delta(t)`, `sh(t,k)`, `norm_k(t)`, `conj(t,u)`
expand at parse time, so parsed terms contain no macro nodes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .errors import EmptySet, TermSyntaxError, UnboundVariable


class Term:
    """Base class for AST nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class One(Term):
    pass


@dataclass(frozen=True)
class Mul(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Join(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Resl(Term):
    arg: Term


@dataclass(frozen=True)
class Resr(Term):
    arg: Term


def free_vars(t: Term) -> frozenset[str]:
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, One):
        return frozenset()
    if isinstance(t, (Resl, Resr)):
        return free_vars(t.arg)
    return free_vars(t.left) | free_vars(t.right)


# -- evaluation -----------------------------------------------------------------


def eval_term(t: Term, model, assignment: Mapping[str, object]):
    """Structural interpretation of t in the model under the assignment.

    Repeated subterms (common in sigma/gamma expansions) are evaluated once
    per call via a value-keyed memo.
    """
    memo: dict[Term, object] = {}

    def go(node: Term):
        found = memo.get(node)
        if found is not None:
            return found
        if isinstance(node, Var):
            try:
                value = assignment[node.name]
            except KeyError:
                raise UnboundVariable(node.name) from None
        elif isinstance(node, One):
            value = model.one()
        elif isinstance(node, Mul):
            value = model.mul(go(node.left), go(node.right))
        elif isinstance(node, Meet):
            value = model.meet(go(node.left), go(node.right))
        elif isinstance(node, Join):
            value = model.join(go(node.left), go(node.right))
        elif isinstance(node, Resl):
            value = model.resl(go(node.arg))
        elif isinstance(node, Resr):
            value = model.resr(go(node.arg))
        else:
            raise TypeError(f"not a term: {node!r}")
        memo[node] = value
        return value

    return go(t)


# -- derived builders -------------------------------------------------------------


def iter_l(t: Term, k: int) -> Term:
    """t^{l^k} for k >= 0; negative k uses r-iterates."""
    for _ in range(abs(k)):
        t = Resl(t) if k >= 0 else Resr(t)
    return t


def bracket(t: Term, k: int) -> Term:
    """The conjugate term t^[k], i.e. t^{l^{2k}} (r-iterates for k < 0)."""
    return iter_l(t, 2 * k)


def pow_term(t: Term, k: int) -> Term:
    if k < 0:
        raise ValueError("pow_term expects k >= 0")
    if k == 0:
        return One()
    out = t
    for _ in range(k - 1):
        out = Mul(out, t)
    return out


def sigma_term(n: int, t: Term) -> Term:
    """Meet of the conjugates t^[0] & ... & t^[n-1]."""
    if n < 1:
        raise ValueError("sigma_term expects n >= 1")
    out = t
    for k in range(1, n):
        out = Meet(out, bracket(t, k))
    return out


def gamma_term(n: int, t: Term) -> Term:
    if n < 1:
        raise ValueError("gamma_term expects n >= 1")
    out = t
    for k in range(1, n):
        out = Join(out, bracket(t, k))
    return out


def delta_term(t: Term) -> Term:
    return Join(Mul(iter_l(t, 3), t), One())


def norm_term(n: int, t: Term) -> Term:
    """sigma_n(t)^l | gamma_n(t); the inverse is legal as ^l on a group image."""
    return Join(Resl(sigma_term(n, t)), gamma_term(n, t))


def conj_term(t: Term, u: Term) -> Term:
    """Left conjugate of t by u: u^r t u & 1."""
    return Meet(Mul(Mul(Resr(u), t), u), One())


# -- equations --------------------------------------------------------------------


@dataclass(frozen=True)
class Equation:
    """A pair of terms related by equality or by <= (kept as a kind flag)."""

    lhs: Term
    rhs: Term
    kind: str  # "eq" or "le"

    def __post_init__(self):
        if self.kind not in ("eq", "le"):
            raise ValueError(f"kind must be 'eq' or 'le', got {self.kind!r}")

    def variables(self) -> list[str]:
        return sorted(free_vars(self.lhs) | free_vars(self.rhs))

    def holds(self, model, assignment: Mapping[str, object]) -> bool:
        lv = eval_term(self.lhs, model, assignment)
        rv = eval_term(self.rhs, model, assignment)
        return model.eq(lv, rv) if self.kind == "eq" else model.leq(lv, rv)


def normalize(eq: Equation) -> Term:
    """A single term u with: eq holds iff 1 <= u.

    An inequality s <= t becomes t s^l (1 <= t s^l iff s <= t, by
    residuation); an equality takes the meet of both directions.
    """
    s, t = eq.lhs, eq.rhs
    forward = Mul(t, Resl(s))
    if eq.kind == "le":
        return forward
    return Meet(forward, Mul(s, Resl(t)))


# -- axiom schemas ------------------------------------------------------------------


def axiom_commute(n: int) -> Equation:
    """n-th powers of the invertible-part term are central: x s(y)^n = s(y)^n x."""
    x, y = Var("x"), Var("y")
    s = pow_term(sigma_term(n, y), n)
    return Equation(Mul(x, s), Mul(s, x), "eq")


def axiom_periodic(n: int) -> Equation:
    """x <= x^[n], the inequality half of n-periodicity."""
    return Equation(Var("x"), bracket(Var("x"), n), "le")


def axiom_join(ks: set[int] | frozenset[int]) -> Equation:
    """The one-equation axiom for the join variety over the index set ks.

    Uses the 4*|ks| variables w_k, x_k, y_k, z_k; the inverse power of the
    sigma term is emitted as (sigma_k(y)^l)^k.
    """
    if not ks:
        raise EmptySet("axiom_join needs a nonempty index set")
    joinands = []
    for k in sorted(ks):
        if k < 1:
            raise ValueError(f"indices must be positive, got {k}")
        w, x, y, z = (Var(f"{c}{k}") for c in "wxyz")
        s = sigma_term(k, y)
        periodic_part = Mul(bracket(z, k), Resl(z))
        commute_part = Mul(Mul(Mul(pow_term(s, k), x), pow_term(Resl(s), k)), Resl(x))
        joinands.append(Mul(Mul(w, Meet(periodic_part, commute_part)), Resl(w)))
    body = joinands[0]
    for t in joinands[1:]:
        body = Join(body, t)
    return Equation(One(), body, "le")


# -- parsing ----------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"[ \t\r\n]*(?:(?P<int>-?\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>\^[ \t]*l|\^[ \t]*r|<=|=|[()&|*,]))"
)
_MACRO_RE = re.compile(r"^(sigma|gamma|norm)_(\d+)$")
_ATOM_STARTERS = ("int", "ident", "(")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                at = len(text) - len(stripped)
                raise TermSyntaxError(f"unexpected character {stripped[0]!r}", at)
            pos = m.end()
            if m.lastgroup == "op":
                op = "".join(m.group("op").split())
                self.tokens.append(("op" if op not in "()" else op, op, m.start()))
            else:
                self.tokens.append((m.lastgroup, m.group(m.lastgroup), m.start()))
        self.tokens.append(("eof", "", len(text)))
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, val, pos = self.advance()
        if val != op:
            raise TermSyntaxError(f"expected {op!r}, found {val or 'end of input'!r}", pos)

    def parse_term(self) -> Term:
        t = self.join()
        kind, val, pos = self.peek()
        if kind != "eof":
            raise TermSyntaxError(f"unexpected {val!r}", pos)
        return t

    def parse_equation(self) -> Equation:
        lhs = self.join()
        kind, val, pos = self.advance()
        if val not in ("=", "<="):
            raise TermSyntaxError("expected '=' or '<='", pos)
        rhs = self.join()
        k2, v2, p2 = self.peek()
        if k2 != "eof":
            raise TermSyntaxError(f"unexpected {v2!r}", p2)
        return Equation(lhs, rhs, "eq" if val == "=" else "le")

    def join(self) -> Term:
        t = self.meet()
        while self.peek()[1] == "|":
            self.advance()
            t = Join(t, self.meet())
        return t

    def meet(self) -> Term:
        t = self.product()
        while self.peek()[1] == "&":
            self.advance()
            t = Meet(t, self.product())
        return t

    def product(self) -> Term:
        t = self.postfix()
        while True:
            kind, val, _ = self.peek()
            if val == "*":
                self.advance()
                t = Mul(t, self.postfix())
            elif kind in _ATOM_STARTERS:
                t = Mul(t, self.postfix())
            else:
                return t

    def postfix(self) -> Term:
        t = self.atom()
        while self.peek()[1] in ("^l", "^r"):
            _, val, _ = self.advance()
            t = Resl(t) if val == "^l" else Resr(t)
        return t

    def atom(self) -> Term:
        kind, val, pos = self.advance()
        if kind == "int":
            if val == "1":
                return One()
            raise TermSyntaxError(f"unexpected integer {val}", pos)
        if kind == "(":
            t = self.join()
            self.expect_op(")")
            return t
        if kind == "ident":
            if self.peek()[0] == "(" and self._is_macro(val):
                return self.macro_call(val, pos)
            return Var(val)
        raise TermSyntaxError(f"unexpected {val or 'end of input'!r}", pos)

    @staticmethod
    def _is_macro(name: str) -> bool:
        return name in ("delta", "sh", "conj") or bool(_MACRO_RE.match(name))

    def macro_call(self, name: str, pos: int) -> Term:
        self.expect_op("(")
        first = self.join()
        if name == "delta":
            self.expect_op(")")
            return delta_term(first)
        if name == "conj":
            self.expect_op(",")
            second = self.join()
            self.expect_op(")")
            return conj_term(first, second)
        if name == "sh":
            self.expect_op(",")
            kind, val, p = self.advance()
            if kind != "int":
                raise TermSyntaxError("sh expects an integer shift", p)
            self.expect_op(")")
            return bracket(first, int(val))
        m = _MACRO_RE.match(name)
        assert m is not None
        self.expect_op(")")
        idx = int(m.group(2))
        if idx < 1:
            raise TermSyntaxError(f"{name}: index must be >= 1", pos)
        builder = {"sigma": sigma_term, "gamma": gamma_term, "norm": norm_term}[m.group(1)]
        return builder(idx, first)


def parse_term(text: str) -> Term:
    return _Parser(text).parse_term()


def parse_equation(text: str) -> Equation:
    """Parse `<term> = <term>` or `<term> <= <term>`."""
    return _Parser(text).parse_equation()


# -- printing ---------------------------------------------------------------------

_LEVEL_JOIN, _LEVEL_MEET, _LEVEL_MUL, _LEVEL_POSTFIX, _LEVEL_ATOM = 1, 2, 3, 4, 5


def format_term(t: Term) -> str:
    """Render t so that parse(format_term(t)) == t."""

    def go(node: Term, context: int) -> str:
        if isinstance(node, Var):
            return node.name
        if isinstance(node, One):
            return "1"
        if isinstance(node, Join):
            text, level = f"{go(node.left, 1)} | {go(node.right, 2)}", _LEVEL_JOIN
        elif isinstance(node, Meet):
            text, level = f"{go(node.left, 2)} & {go(node.right, 3)}", _LEVEL_MEET
        elif isinstance(node, Mul):
            text, level = f"{go(node.left, 3)} {go(node.right, 4)}", _LEVEL_MUL
        elif isinstance(node, Resl):
            text, level = f"{go(node.arg, 4)}^l", _LEVEL_POSTFIX
        elif isinstance(node, Resr):
            text, level = f"{go(node.arg, 4)}^r", _LEVEL_POSTFIX
        else:
            raise TypeError(f"not a term: {node!r}")
        return f"({text})" if level < context else text

    return go(t, _LEVEL_JOIN)


def format_equation(eq: Equation) -> str:
    op = "=" if eq.kind == "eq" else "<="
    return f"{format_term(eq.lhs)} {op} {format_term(eq.rhs)}"

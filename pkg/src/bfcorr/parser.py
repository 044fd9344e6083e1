"""Expressions over z- or p-variables.

Grammar (whitespace ignored)::

    expr   := sign? term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := rational | var | '(' expr ')'
    var    := ('z' | 'p') uint           uint >= 1
    rational := uint ('/' uint)?

The optional leading sign lets rendered polynomials such as ``-z1 + z2``
read back in.  An expression may use only one variable family.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .boson import BosonPolynomial
from .combinatorics import EMPTY, Partition
from .linear import format_rational
from .symm import SymmElement

FAMILIES = {"boson": "z", "symm": "p"}
DEFAULT_DEGREE_CAP = 8


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.message = message
        self.offset = offset


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    family: str
    index: int


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (sign, node), sign in {+1, -1}


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Power:
    base: "Expression"
    exponent: int


Expression = Union[Num, Var, Sum, Product, Power]

_TOKEN = re.compile(r"(?P<num>\d+)|(?P<var>[A-Za-z]\w*)|(?P<op>[-+*^/()])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos, end = 0, len(text)
    while True:
        while pos < end and text[pos].isspace():
            pos += 1
        if pos == end:
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte(text, pos))
        out.append((m.lastgroup, m.group(), _byte(text, pos)))
        pos = m.end()
    out.append(("end", "", _byte(text, end)))
    return out


def _byte(text: str, pos: int) -> int:
    return len(text[:pos].encode())


class _Parser:
    def __init__(self, text: str, family: str | None, max_degree: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.family = family
        self.seen: tuple[str, int] | None = None
        self.max_degree = max_degree

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, value, off = self.take()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}, found {value or 'end of input'!r}", off)

    def uint(self, what: str) -> int:
        kind, value, off = self.take()
        if kind != "num":
            raise ParseError(f"expected {what}, found {value or 'end of input'!r}", off)
        return int(value)

    def expr(self):
        terms = []
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        terms.append((sign, self.term()))
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                terms.append((-1 if value == "-" else 1, self.term()))
            else:
                break
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while self.peek()[:2] == ("op", "*"):
            self.take()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            off = self.peek()[2]
            exp = self.uint("a non-negative integer exponent")
            if exp > self.max_degree:
                raise ParseError(f"exponent {exp} exceeds the degree cap {self.max_degree}", off)
            return Power(base, exp)
        return base

    def atom(self):
        kind, value, off = self.take()
        if kind == "num":
            num = int(value)
            if self.peek()[:2] == ("op", "/"):
                self.take()
                doff = self.peek()[2]
                den = self.uint("a denominator")
                if den == 0:
                    raise ParseError("zero denominator", doff)
                return Num(Fraction(num, den))
            return Num(Fraction(num))
        if kind == "var":
            return self.variable(value, off)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected {value or 'end of input'!r}", off)

    def variable(self, name: str, off: int) -> Var:
        m = re.fullmatch(r"([zp])(\d+)", name)
        if m is None:
            raise ParseError(f"unknown variable {name!r}; expected z<k> or p<k>", off)
        fam, index = m.group(1), int(m.group(2))
        if index < 1:
            raise ParseError(f"variable index must be >= 1 in {name!r}", off)
        if self.seen is not None and self.seen[0] != fam:
            raise ParseError(
                f"mixed variable families: {name!r} after {self.seen[0]}-variables", off
            )
        if self.family is not None and fam != self.family:
            raise ParseError(f"{name!r} is not a {self.family}-variable", off)
        if self.seen is None:
            self.seen = (fam, off)
        return Var(fam, index)


def parse(text: str, space: str | None = None, *, max_degree: int = DEFAULT_DEGREE_CAP) -> Expression:
    """Parse ``text``; ``space`` ('boson' or 'symm') pins the variable family."""
    if space is not None and space not in FAMILIES:
        raise ValueError(f"space must be one of {sorted(FAMILIES)}, not {space!r}")
    parser = _Parser(text, FAMILIES.get(space), max_degree)
    tree = parser.expr()
    kind, value, off = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected {value!r}", off)
    return tree


def flatten(node: Expression) -> Expression:
    """Canonical flattening: nested sums and products merge, singletons unwrap."""
    if isinstance(node, Sum):
        terms = []
        for sign, sub in node.terms:
            sub = flatten(sub)
            if isinstance(sub, Sum):
                terms.extend((sign * s, t) for s, t in sub.terms)
            else:
                terms.append((sign, sub))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))
    if isinstance(node, Product):
        factors = []
        for sub in node.factors:
            sub = flatten(sub)
            factors.extend(sub.factors if isinstance(sub, Product) else (sub,))
        return factors[0] if len(factors) == 1 else Product(tuple(factors))
    if isinstance(node, Power):
        return Power(flatten(node.base), node.exponent)
    return node


def render(node: Expression) -> str:
    """Text that :func:`parse` reads back to the same flattened tree."""
    if isinstance(node, Num):
        return format_rational(node.value)
    if isinstance(node, Var):
        return f"{node.family}{node.index}"
    if isinstance(node, Power):
        base = node.base
        inner = render(base)
        if not isinstance(base, Var) and not (isinstance(base, Num) and base.value.denominator == 1):
            inner = f"({inner})"
        return f"{inner}^{node.exponent}"
    if isinstance(node, Product):
        return "*".join(
            f"({render(f)})" if isinstance(f, Sum) else render(f) for f in node.factors
        )
    if isinstance(node, Sum):
        out = []
        for k, (sign, t) in enumerate(node.terms):
            body = f"({render(t)})" if isinstance(t, Sum) else render(t)
            if k == 0:
                out.append(("-" if sign < 0 else "") + body)
            else:
                out.append((" - " if sign < 0 else " + ") + body)
        return "".join(out)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node: Expression, space: str):
    """Expand to a :class:`BosonPolynomial` ('boson') or :class:`SymmElement` ('symm')."""
    if space == "boson":
        one = BosonPolynomial.constant(1)
        var = lambda j: BosonPolynomial.monomial({j: 1})
    elif space == "symm":
        one = SymmElement({EMPTY: 1})
        var = lambda j: SymmElement({Partition((j,)): 1})
    else:
        raise ValueError(f"cannot evaluate in space {space!r}")

    def ev(n):
        if isinstance(n, Num):
            return one.scale(n.value)
        if isinstance(n, Var):
            if n.family != FAMILIES[space]:
                raise ValueError(f"{n.family}{n.index} does not live in {space}")
            return var(n.index)
        if isinstance(n, Sum):
            acc = one.scale(0)
            for sign, t in n.terms:
                v = ev(t)
                acc = acc + (v if sign > 0 else -v)
            return acc
        if isinstance(n, Product):
            acc = one
            for f in n.factors:
                acc = acc * ev(f)
            return acc
        if isinstance(n, Power):
            return ev(n.base) ** n.exponent
        raise TypeError(f"not an expression node: {n!r}")

    return ev(node)


def parse_element(text: str, space: str, *, max_degree: int = DEFAULT_DEGREE_CAP):
    """``evaluate(parse(text, space), space)``."""
    return evaluate(parse(text, space, max_degree=max_degree), space)

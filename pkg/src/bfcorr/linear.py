"""Finite linear combinations with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Callable, Hashable, Iterable, Iterator, Mapping


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(value) -> str:
    """Reduced ``a/b``; integers carry no denominator."""
    q = as_fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class LinearCombination:
    """Immutable table ``key -> nonzero Fraction``.

    Subclasses fix the key type and the rendering; addition, scaling and
    equality are shared.  Only combinations of the same class mix.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, object] | Iterable[tuple] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        table: dict = {}
        for key, coeff in items:
            key = self._coerce_key(key)
            table[key] = table.get(key, 0) + as_fraction(coeff)
        object.__setattr__(self, "_terms", {k: c for k, c in table.items() if c != 0})
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _coerce_key(cls, key):
        return key

    @classmethod
    def _from_clean(cls, table: dict):
        # fast path: caller guarantees coerced keys and nonzero Fractions
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_terms", table)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key) -> Fraction:
        return self._terms.get(self._coerce_key(key), Fraction(0))

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other):
        if type(other) is type(self):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((type(self).__name__, frozenset(self._terms.items()))))
        return self._hash

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        table = dict(self._terms)
        for k, c in other._terms.items():
            s = table.get(k, 0) + c
            if s:
                table[k] = s
            else:
                table.pop(k, None)
        return self._from_clean(table)

    def __neg__(self):
        return self._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = as_fraction(c)
        if c == 0:
            return self._from_clean({})
        return self._from_clean({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Rational)):
            return self.scale(c)
        return NotImplemented

    def map_keys(self, cls, fn: Callable, sign: Callable | None = None):
        """Relabel through an injective ``fn``; ``sign(key)`` multiplies coefficients."""
        if sign is None:
            return cls._from_clean({fn(k): c for k, c in self._terms.items()})
        return cls._from_clean({fn(k): sign(k) * c for k, c in self._terms.items()})

    def dot(self, other, weight: Callable[[object], object]) -> Fraction:
        """sum_k a_k b_k weight(k): the product for any diagonal basis."""
        small, big = sorted((self._terms, other._terms), key=len)
        total = Fraction(0)
        for k, c in small.items():
            d = big.get(k)
            if d is not None:
                total += c * d * weight(k)
        return total

    # rendering -----------------------------------------------------------

    def sort_key(self, key):
        return key

    def format_key(self, key) -> str:
        return str(key)

    def unit_key(self, key) -> bool:
        """True when the key renders as the constant 1."""
        return False

    def sorted_items(self) -> list[tuple]:
        return sorted(self._terms.items(), key=lambda kc: self.sort_key(kc[0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (key, coeff) in enumerate(self.sorted_items()):
            neg = coeff < 0
            mag = -coeff if neg else coeff
            if self.unit_key(key):
                body = format_rational(mag)
            elif mag == 1:
                body = self.format_key(key)
            else:
                body = f"{format_rational(mag)}*{self.format_key(key)}"
            if i == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"

"""Symmetric functions in the power-sum basis.

Elements are finite combinations ``sum_mu c_mu p_mu`` with
``p_mu = p_mu1 * p_mu2 * ...``.  The Hall product makes the ``p_mu``
orthogonal with ``<p_mu, p_mu> = z_mu``; Schur functions enter only through
the character transition ``p_mu = sum_lambda chi^lambda(mu) s_lambda``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

from .boson import BosonPolynomial, ZMonomial
from .combinatorics import EMPTY, Partition, partitions_of, z_mu
from .linear import LinearCombination


def _partition_key(cls, key):
    return key if isinstance(key, Partition) else Partition.from_parts(key)


class SymmElement(LinearCombination):
    """``sum_mu c_mu p_mu``, keyed by :class:`Partition`."""

    __slots__ = ()

    _coerce_key = classmethod(_partition_key)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymmElement({EMPTY: other})
        return super().__add__(other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymmElement({EMPTY: other})
        return super().__sub__(other)

    def __mul__(self, other):
        if isinstance(other, SymmElement):
            table: dict = {}
            for mu, c in self.items():
                for nu, d in other.items():
                    key = mu + nu
                    table[key] = table.get(key, 0) + c * d
            return SymmElement._from_clean({k: v for k, v in table.items() if v})
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = SymmElement({EMPTY: 1})
        for _ in range(n):
            out = out * self
        return out

    def degree(self) -> int:
        return max((mu.weight for mu in self), default=-1)

    def homogeneous_part(self, d: int) -> "SymmElement":
        return SymmElement._from_clean({mu: c for mu, c in self.items() if mu.weight == d})

    def sort_key(self, mu):
        return (-mu.weight, tuple(-x for x in mu))

    def unit_key(self, mu) -> bool:
        return not mu

    def format_key(self, mu) -> str:
        mult = mu.multiplicities()
        return "*".join(
            f"p{j}" if mult[j] == 1 else f"p{j}^{mult[j]}" for j in sorted(mult, reverse=True)
        )


class SchurExpansion(LinearCombination):
    """``sum_lambda c_lambda s_lambda``, keyed by :class:`Partition`."""

    __slots__ = ()

    _coerce_key = classmethod(_partition_key)

    def degree(self) -> int:
        return max((lam.weight for lam in self), default=-1)

    def sort_key(self, lam):
        return (-lam.weight, tuple(-x for x in lam))

    def format_key(self, lam) -> str:
        return f"s{lam}"


def p(*parts: int) -> SymmElement:
    """The basis element ``p_(parts)``; ``p()`` is the constant 1."""
    return SymmElement({Partition.from_parts(parts): 1})


def schur(*parts: int) -> SchurExpansion:
    return SchurExpansion({Partition.from_parts(parts): 1})


# --- the substitution z_k -> p_k -------------------------------------------


def apply_I(f: BosonPolynomial) -> SymmElement:
    """``z_1^k1 z_2^k2 ... -> p_1^k1 p_2^k2 ...``, extended linearly."""
    return f.map_keys(SymmElement, ZMonomial.to_partition)


def apply_I_inverse(f: SymmElement) -> BosonPolynomial:
    return f.map_keys(BosonPolynomial, ZMonomial.from_partition)


def hall_inner(f: SymmElement, g: SymmElement) -> Fraction:
    """Bilinear extension of ``<p_mu, p_nu> = delta * z_mu``."""
    if not isinstance(f, SymmElement) or not isinstance(g, SymmElement):
        raise TypeError("hall_inner expects power-sum SymmElements")
    return f.dot(g, z_mu)


# --- finitely many variables ----------------------------------------------------


class TruncatedPolynomial:
    """Polynomial in ``x_1..x_n``: exponent tuples of length ``n`` -> Fraction."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[tuple, object] | Iterable[tuple] = ()):
        if n < 0:
            raise ValueError("n must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        table: dict = {}
        for e, c in items:
            e = tuple(int(v) for v in e)
            if len(e) != n or any(v < 0 for v in e):
                raise ValueError(f"exponent {e} is not a non-negative {n}-vector")
            table[e] = table.get(e, 0) + Fraction(c)
        self.n = n
        self._terms = {e: c for e, c in table.items() if c}

    @classmethod
    def _raw(cls, n, table):
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = table
        return obj

    @classmethod
    def constant(cls, n: int, c=1) -> "TruncatedPolynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "TruncatedPolynomial":
        """``x_i`` (1-based)."""
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exponents) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, TruncatedPolynomial):
            return self.n == other.n and self._terms == other._terms
        return NotImplemented

    __hash__ = None

    def _check(self, other):
        if not isinstance(other, TruncatedPolynomial):
            return False
        if other.n != self.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        table = dict(self._terms)
        for e, c in other._terms.items():
            s = table.get(e, 0) + c
            if s:
                table[e] = s
            else:
                table.pop(e, None)
        return self._raw(self.n, table)

    def __neg__(self):
        return self._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "TruncatedPolynomial":
        c = Fraction(c)
        if not c:
            return self._raw(self.n, {})
        return self._raw(self.n, {e: c * v for e, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        if not self._terms or not other._terms:
            return self._raw(self.n, {})
        return _packed_product(self, other)

    def swap(self, i: int, j: int) -> "TruncatedPolynomial":
        """Exchange ``x_i`` and ``x_j`` (1-based)."""
        i, j = i - 1, j - 1
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i], e[j] = e[j], e[i]
            out[tuple(e)] = c
        return self._raw(self.n, out)

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for k, (e, c) in enumerate(sorted(self._terms.items(), key=lambda ec: (-sum(ec[0]), [-v for v in ec[0]]))):
            mono = "*".join(f"x{i}" if v == 1 else f"x{i}^{v}" for i, v in enumerate(e, 1) if v)
            neg, mag = c < 0, abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = ("-" if neg else "") if k == 0 else (" - " if neg else " + ")
            pieces.append(sign + body)
        return "".join(pieces)

    def __repr__(self):
        return f"TruncatedPolynomial({self.n}, {str(self)!r})"


def _integer_terms(table: dict) -> tuple[int, dict]:
    den = 1
    for c in table.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return den, {e: int(c * den) for e, c in table.items()}


def _packed_product(f: TruncatedPolynomial, g: TruncatedPolynomial) -> TruncatedPolynomial:
    # Exponent vectors are packed into one int (fixed-width slots) so a
    # monomial product is a single integer addition; coefficients are scaled
    # to integers for the inner loop.
    n = f.n
    top = max(max(e) for e in f._terms) + max(max(e) for e in g._terms) if n else 0
    width = max(top.bit_length(), 1)
    mask = (1 << width) - 1

    def pack(e):
        key = 0
        for i, v in enumerate(e):
            key |= v << (width * i)
        return key

    df, tf = _integer_terms(f._terms)
    dg, tg = _integer_terms(g._terms)
    pf = [(pack(e), c) for e, c in tf.items()]
    pg = [(pack(e), c) for e, c in tg.items()]
    acc: dict[int, int] = {}
    get = acc.get
    for a, ca in pf:
        for b, cb in pg:
            k = a + b
            acc[k] = get(k, 0) + ca * cb
    den = df * dg
    out = {}
    for k, c in acc.items():
        if c:
            out[tuple((k >> (width * i)) & mask for i in range(n))] = Fraction(c, den)
    return TruncatedPolynomial._raw(n, out)


@lru_cache(maxsize=None)
def _power_sum(k: int, n: int) -> TruncatedPolynomial:
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = k
        terms[tuple(e)] = 1
    return TruncatedPolynomial(n, terms)


@lru_cache(maxsize=4096)
def _power_product(mu: Partition, n: int) -> TruncatedPolynomial:
    if not mu:
        return TruncatedPolynomial.constant(n)
    return _power_product(Partition(mu[1:]), n) * _power_sum(mu[0], n)


def truncate_symm(f: SymmElement, n: int) -> TruncatedPolynomial:
    """Substitute ``p_k <- x_1^k + ... + x_n^k`` and expand."""
    if n < 1:
        raise ValueError("need at least one variable")
    out = TruncatedPolynomial(n)
    for mu, c in f.items():
        out = out + _power_product(mu, n).scale(c)
    return out


# --- characters and the Schur transition ---------------------------------------


def mn_character(lam: Iterable[int], mu: Iterable[int]) -> int:
    """chi^lambda(mu) by Murnaghan-Nakayama ribbon stripping.

    Works on beta-sets: removing a rim hook of length r moves one bead from
    b to b - r, with sign (-1)**(beads strictly between).
    """
    lam, mu = Partition.from_parts(lam), Partition.from_parts(mu)
    if lam.weight != mu.weight:
        raise ValueError(f"weights differ: |{lam}| = {lam.weight}, |{mu}| = {mu.weight}")
    return _mn(lam, mu)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    r, rest = mu[0], Partition(mu[1:])
    m = len(lam)
    beta = [lam[i] + m - 1 - i for i in range(m)]
    beads = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in beads:
            continue
        height = sum(1 for c in beta if t < c < b)
        moved = sorted((beads - {b}) | {t}, reverse=True)
        smaller = Partition.from_parts(moved[i] - (m - 1 - i) for i in range(m))
        total += (-1) ** height * _mn(smaller, rest)
    return total


def character_table(n: int) -> tuple[list[Partition], list[Partition], list[list[int]]]:
    """``(lambdas, mus, rows)`` with ``rows[i][j] = chi^{lambdas[i]}(mus[j])``.

    Rows follow :func:`partitions_of`; columns run the other way so the
    identity class ``(1^n)`` comes first and column 0 holds the dimensions.
    """
    lambdas = partitions_of(n)
    mus = lambdas[::-1]
    return lambdas, mus, [[_mn(lam, mu) for mu in mus] for lam in lambdas]


def power_to_schur(f: SymmElement) -> SchurExpansion:
    """Rewrite ``sum c_mu p_mu`` as ``sum_lambda (sum_mu c_mu chi^lambda(mu)) s_lambda``."""
    table: dict = {}
    for mu, c in f.items():
        for lam in partitions_of(mu.weight):
            chi = _mn(lam, mu)
            if chi:
                table[lam] = table.get(lam, 0) + c * chi
    return SchurExpansion._from_clean({k: v for k, v in table.items() if v})


def schur_to_power(f: SchurExpansion) -> SymmElement:
    """``s_lambda = sum_mu chi^lambda(mu) / z_mu * p_mu``."""
    table: dict = {}
    for lam, c in f.items():
        for mu in partitions_of(lam.weight):
            chi = _mn(lam, mu)
            if chi:
                table[mu] = table.get(mu, 0) + c * Fraction(chi, z_mu(mu))
    return SymmElement._from_clean({k: v for k, v in table.items() if v})

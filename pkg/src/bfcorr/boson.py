"""Polynomials in the bosonic variables z_1, z_2, ... and the Fock product.

Distinct monomials are orthogonal and
``||z_1^k1 z_2^k2 ...||^2 = prod_j k_j! * j**k_j``.  The variable ``z_j``
carries weight ``j``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .combinatorics import Partition, partitions_of, z_mu
from .linear import LinearCombination, as_fraction


class ZMonomial:
    """``z_1^k1 z_2^k2 ...`` stored as sorted ``(j, k_j)`` pairs with ``k_j > 0``."""

    __slots__ = ("exponents",)

    def __init__(self, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        table: dict[int, int] = {}
        for j, k in items:
            j, k = int(j), int(k)
            if j < 1:
                raise ValueError(f"bosonic variables are z1, z2, ...; got index {j}")
            if k < 0:
                raise ValueError(f"negative exponent for z{j}")
            table[j] = table.get(j, 0) + k
        object.__setattr__(self, "exponents", tuple(sorted((j, k) for j, k in table.items() if k)))

    def __setattr__(self, name, value):
        raise AttributeError("ZMonomial is immutable")

    @classmethod
    def from_partition(cls, mu: Iterable[int]) -> "ZMonomial":
        """Part ``j`` of multiplicity ``k`` becomes ``z_j^k``."""
        return cls(Partition(mu).multiplicities())

    def to_partition(self) -> Partition:
        return Partition.from_multiplicities(dict(self.exponents))

    @property
    def weight(self) -> int:
        return sum(j * k for j, k in self.exponents)

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    def dense(self) -> tuple[int, ...]:
        """``(k_1, k_2, ..., k_top)``."""
        if not self.exponents:
            return ()
        top = self.exponents[-1][0]
        table = dict(self.exponents)
        return tuple(table.get(j, 0) for j in range(1, top + 1))

    def norm_squared(self) -> int:
        return z_mu(self.to_partition())

    def __mul__(self, other):
        if isinstance(other, ZMonomial):
            return ZMonomial(self.exponents + other.exponents)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, ZMonomial):
            return self.exponents == other.exponents
        return NotImplemented

    def __hash__(self):
        return hash(("z", self.exponents))

    def __repr__(self) -> str:
        return f"ZMonomial({dict(self.exponents)!r})"

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return "*".join(f"z{j}" if k == 1 else f"z{j}^{k}" for j, k in self.exponents)


ONE = ZMonomial()


class BosonPolynomial(LinearCombination):
    """Finite rational combination of :class:`ZMonomial`."""

    __slots__ = ()

    @classmethod
    def _coerce_key(cls, key):
        if isinstance(key, ZMonomial):
            return key
        return ZMonomial(key)

    @classmethod
    def constant(cls, c=1) -> "BosonPolynomial":
        return cls({ONE: c})

    @classmethod
    def monomial(cls, exponents, c=1) -> "BosonPolynomial":
        return cls({ZMonomial(exponents): c})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BosonPolynomial.constant(other)
        return super().__add__(other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BosonPolynomial.constant(other)
        return super().__sub__(other)

    def __mul__(self, other):
        if isinstance(other, BosonPolynomial):
            table: dict = {}
            for m1, c1 in self.items():
                for m2, c2 in other.items():
                    m = m1 * m2
                    table[m] = table.get(m, 0) + c1 * c2
            return BosonPolynomial._from_clean({m: c for m, c in table.items() if c})
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = BosonPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def degree(self) -> int:
        """Largest weight present; -1 for the zero polynomial."""
        return max((m.weight for m in self), default=-1)

    def is_homogeneous(self) -> bool:
        return len({m.weight for m in self}) <= 1

    def sort_key(self, key: ZMonomial):
        # graded (heaviest first), then lexicographic on (k_1, k_2, ...), largest first
        return (-key.weight, tuple(-k for k in key.dense()))

    def unit_key(self, key) -> bool:
        return key == ONE


def z(j: int, power: int = 1) -> BosonPolynomial:
    """The polynomial ``z_j**power``."""
    return BosonPolynomial.monomial({j: power})


def boson_add(f: BosonPolynomial, g: BosonPolynomial) -> BosonPolynomial:
    return f + g


def boson_scale(c, f: BosonPolynomial) -> BosonPolynomial:
    return f.scale(as_fraction(c))


def boson_mul(f: BosonPolynomial, g: BosonPolynomial) -> BosonPolynomial:
    return f * g


def boson_inner(f: BosonPolynomial, g: BosonPolynomial) -> Fraction:
    """Fock product: monomials orthogonal, ``<m, m> = prod k_j! j**k_j``."""
    return f.dot(g, ZMonomial.norm_squared)


def monomials_of_weight(n: int) -> list[ZMonomial]:
    """One z-monomial per partition of ``n``, in partition order."""
    return [ZMonomial.from_partition(mu) for mu in partitions_of(n)]

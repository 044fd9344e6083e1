"""Skew-symmetric functions and multiplication by the Vandermonde product.

The basis element ``S_l`` is the formal alternant
``sum_sigma sign(sigma) x_1^(w - l_sigma(1)) x_2^(w - l_sigma(2)) ...``
where ``w`` stands for the (infinite) number of variables.  Nothing here
ever assigns ``w`` a value except :func:`truncate_S`, which sets ``w = n``
and keeps only ``x_1..x_n``.

Multiplication by ``prod_{i<j} (x_i - x_j)`` sends ``s_lambda`` to
``S_l`` with ``l_j = j - lambda_j`` and coefficient +1; this is checked
against the finite-n expansion by :func:`verify_J_oracle`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from .combinatorics import MayaIndex, Partition, partition_to_maya
from .linear import LinearCombination
from .symm import (
    SchurExpansion,
    SymmElement,
    TruncatedPolynomial,
    power_to_schur,
    schur,
    schur_to_power,
    truncate_symm,
)


class AsymmVector(LinearCombination):
    """``sum_l c_l S_l``, keyed by :class:`MayaIndex`."""

    __slots__ = ()

    @classmethod
    def _coerce_key(cls, key):
        if isinstance(key, MayaIndex):
            return key
        return MayaIndex(key)

    def sort_key(self, l: MayaIndex):
        lam = l.partition
        return (-lam.weight, tuple(-x for x in lam))

    def format_key(self, l: MayaIndex) -> str:
        return f"S{l}"


def S(*prefix: int) -> AsymmVector:
    """Basis vector from a Maya prefix, e.g. ``S(-1, 1)``; ``S()`` is the vacuum."""
    return AsymmVector({MayaIndex.from_prefix(prefix): 1})


def _basis_sign(lam: Partition) -> int:
    # the single sign convention of s_lambda -> S_l
    return 1


def apply_J(f: SymmElement) -> AsymmVector:
    """Multiply by the Vandermonde product: ``s_lambda -> S_(j - lambda_j)``."""
    return power_to_schur(f).map_keys(
        AsymmVector, partition_to_maya, lambda lam: _basis_sign(lam)
    )


def apply_J_inverse(v: AsymmVector) -> SymmElement:
    sch = v.map_keys(SchurExpansion, lambda l: l.partition, lambda l: _basis_sign(l.partition))
    return schur_to_power(sch)


def asymm_inner(f: AsymmVector, g: AsymmVector) -> Fraction:
    """The ``S_l`` are orthonormal."""
    return f.dot(g, lambda _: 1)


# --- finite-n oracle ------------------------------------------------------------


def _parity(perm) -> int:
    inv = sum(1 for i, j in combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inv & 1 else 1


@lru_cache(maxsize=None)
def _signed_permutations(n: int) -> tuple:
    return tuple((perm, _parity(perm)) for perm in permutations(range(n)))


def alternant(exponents, n: int) -> TruncatedPolynomial:
    """``det(x_i^(exponents_j))`` for an ``n``-vector of exponents."""
    exponents = tuple(exponents)
    terms = {}
    for perm, sgn in _signed_permutations(n):
        e = tuple(exponents[perm[i]] for i in range(n))
        terms[e] = terms.get(e, 0) + sgn
    return TruncatedPolynomial(n, terms)


@lru_cache(maxsize=None)
def vandermonde(n: int) -> TruncatedPolynomial:
    """``prod_{1 <= i < j <= n} (x_i - x_j)``, expanded factor by factor."""
    out = TruncatedPolynomial.constant(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (TruncatedPolynomial.variable(n, i) - TruncatedPolynomial.variable(n, j))
    return out


def truncate_S(l: MayaIndex, n: int) -> TruncatedPolynomial:
    """``S_l`` with ``w = n`` and variables beyond ``x_n`` dropped: ``det(x_i^(n - l_j))``."""
    if not isinstance(l, MayaIndex):
        l = MayaIndex.from_prefix(l)
    if n < 1:
        raise ValueError("need at least one variable")
    if n < len(l.partition):
        raise ValueError(
            f"n = {n} is too small for S{l}: need n >= {len(l.partition)} "
            "so the dropped tail is exactly l_j = j"
        )
    return alternant((n - v for v in l.values(n)), n)


def truncate_asymm(v: AsymmVector, n: int) -> TruncatedPolynomial:
    out = TruncatedPolynomial(n)
    for l, c in v.items():
        out = out + truncate_S(l, n).scale(c)
    return out


def verify_J_oracle(lam, n: int) -> bool:
    """Check ``s_lambda(x_1..x_n) * V_n == truncate(J s_lambda)`` as polynomials.

    The left side never touches the Maya dictionary: it is the power-sum
    expansion of ``s_lambda`` substituted into ``n`` variables and multiplied
    by the expanded Vandermonde product.
    """
    lam = Partition.from_parts(lam)
    if n < lam.weight:
        raise ValueError(f"n = {n} must be at least |lambda| = {lam.weight}")
    f = schur_to_power(schur(*lam))
    lhs = truncate_symm(f, n) * vandermonde(n)
    rhs = truncate_asymm(apply_J(f), n)
    return lhs == rhs

"""Charge-zero fermionic Fock space.

A wedge monomial ``xi_l1 xi_l2 xi_l3 ...`` with ``l_1 < l_2 < ...`` and
``l_j = j`` eventually is keyed by its :class:`MayaIndex`; these monomials
are orthonormal.  Reordering anticommuting factors costs the sign of the
sorting permutation and a repeated factor kills the product.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, starmap
from operator import gt
from typing import Sequence

from .asymm import AsymmVector
from .combinatorics import MayaIndex
from .linear import LinearCombination


class ChargeError(ValueError):
    """The wedge does not settle into the tail ``l_j = j``."""


class FockVector(LinearCombination):
    """``sum c_l xi_l1 xi_l2 ...``, keyed by :class:`MayaIndex`."""

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
        return f"xi{l}"


WedgeMonomial = MayaIndex


def wedge(*prefix: int) -> FockVector:
    """Basis vector ``xi_prefix... xi_(m+1) xi_(m+2) ...`` from a sorted prefix."""
    return FockVector({MayaIndex.from_prefix(prefix): 1})


def _sorting_sign(values: Sequence[int]) -> int:
    # parity of the inversion count; the factor lists here are short
    return -1 if sum(starmap(gt, combinations(values, 2))) & 1 else 1


@lru_cache(maxsize=4096)
def _sorted_to_maya(prefix: tuple[int, ...]) -> MayaIndex:
    return MayaIndex.from_prefix(prefix)


def normalize_wedge(indices: Sequence[int], tail_start: int | None = None):
    """Bring ``xi_a1 ... xi_am xi_t xi_(t+1) ...`` to canonical order.

    ``tail_start`` defaults to ``m + 1``.  Returns ``(sign, MayaIndex)``, or
    ``None`` when the product vanishes (a repeated index, possibly one
    colliding with the tail).  Raises :class:`ChargeError` when the sorted
    sequence is not eventually ``l_j = j``.
    """
    indices = tuple(map(int, indices))
    ordered = tuple(sorted(indices))
    m = len(indices)
    t = m + 1 if tail_start is None else int(tail_start)
    if m and (ordered[-1] >= t or len(set(ordered)) < m):
        return None
    if t != m + 1:
        raise ChargeError(
            f"{m} factors before a tail starting at {t} give charge {m + 1 - t}, not 0"
        )
    return _sorting_sign(indices), _sorted_to_maya(ordered)


def wedge_product(indices: Sequence[int], tail_start: int | None = None) -> FockVector:
    """Like :func:`normalize_wedge` but as a vector (zero when it vanishes)."""
    out = normalize_wedge(indices, tail_start)
    if out is None:
        return FockVector()
    sign, l = out
    return FockVector({l: sign})


def fock_inner(f: FockVector, g: FockVector) -> Fraction:
    return f.dot(g, lambda _: 1)


def asymm_to_fermion(v: AsymmVector) -> FockVector:
    """``S_l -> xi_l1 xi_l2 ...``, coefficients untouched."""
    return v.map_keys(FockVector, lambda l: l)


def fermion_to_asymm(f: FockVector) -> AsymmVector:
    return f.map_keys(AsymmVector, lambda l: l)

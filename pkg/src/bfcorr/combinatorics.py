"""Partitions, Maya sequences and the constants z_mu shared by both Fock products.

A Maya sequence is a strictly increasing integer sequence ``l_1 < l_2 < ...``
with ``l_j = j`` for all large ``j``.  It is stored through the partition
``lambda_j = j - l_j``; the finite prefix ``l_1..l_m`` (``m`` = number of
parts) is only ever materialized for display or for validation.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Behaves like a plain tuple (hashable, ordered lexicographically), so
    ``sorted(ps, reverse=True)`` lists partitions of one weight in
    reverse-lexicographic order.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts in any order; zeros are dropped."""
        return cls(sorted((p for p in parts if p != 0), reverse=True))

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> "Partition":
        """Part ``j`` repeated ``mult[j]`` times."""
        parts: list[int] = []
        for j, k in mult.items():
            if j < 1 or k < 0:
                raise ValueError(f"bad multiplicity entry {j}: {k}")
            parts.extend([j] * k)
        return cls.from_parts(parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def __add__(self, other):
        # union of parts; keeps p_mu * p_nu = p_(mu u nu) a one-liner
        if isinstance(other, Partition):
            return Partition.from_parts(tuple.__add__(self, other))
        return NotImplemented

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")"


EMPTY = Partition()


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions_of(n))


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _bounded(n, n))


def _bounded(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _bounded(n - first, first):
            yield (first,) + rest


def z_mu(mu: Sequence[int]) -> int:
    """prod_j k_j! * j**k_j where k_j is the multiplicity of part j."""
    out = 1
    for j, k in Counter(mu).items():
        out *= factorial(k) * j**k
    return out


class MayaIndex:
    """A charge-zero Maya sequence, canonically stored as its partition."""

    __slots__ = ("_partition",)

    def __init__(self, partition: Iterable[int] = ()):
        object.__setattr__(self, "_partition", Partition(partition))

    def __setattr__(self, name, value):
        raise AttributeError("MayaIndex is immutable")

    @classmethod
    def from_prefix(cls, prefix: Sequence[int]) -> "MayaIndex":
        """Parse ``l_1..l_m``; the tail ``l_j = j`` for ``j > m`` is implied.

        Entries already equal to the tail (``l_m = m``) are allowed and dropped.
        """
        prefix = [int(v) for v in prefix]
        m = len(prefix)
        for a, b in zip(prefix, prefix[1:]):
            if a >= b:
                raise ValueError(f"Maya prefix must strictly increase: {prefix}")
        if m and prefix[-1] > m:
            raise ValueError(
                f"Maya prefix {prefix} does not stabilize to l_j = j "
                f"(last entry must be <= {m})"
            )
        return cls(Partition.from_parts(j - l for j, l in enumerate(prefix, start=1)))

    @property
    def partition(self) -> Partition:
        return self._partition

    @property
    def prefix(self) -> tuple[int, ...]:
        """``l_1..l_m``: exactly the entries that differ from the tail."""
        return tuple(j - lam for j, lam in enumerate(self._partition, start=1))

    def value(self, j: int) -> int:
        """The ``j``-th entry ``l_j`` (1-based)."""
        if j < 1:
            raise IndexError("Maya sequences are 1-indexed")
        lam = self._partition
        return j - lam[j - 1] if j <= len(lam) else j

    def values(self, count: int) -> tuple[int, ...]:
        return tuple(self.value(j) for j in range(1, count + 1))

    @property
    def is_vacuum(self) -> bool:
        return not self._partition

    def __eq__(self, other):
        if isinstance(other, MayaIndex):
            return self._partition == other._partition
        return NotImplemented

    def __hash__(self):
        return hash(("maya", tuple(self._partition)))

    def __lt__(self, other):
        # same order as the underlying partitions
        if isinstance(other, MayaIndex):
            return self._partition < other._partition
        return NotImplemented

    def __repr__(self) -> str:
        return f"MayaIndex({tuple(self._partition)!r})"

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.prefix) + "]"


VACUUM = MayaIndex()


def partition_to_maya(lam: Iterable[int]) -> MayaIndex:
    """``l_j = j - lambda_j``; the partition is the canonical storage anyway."""
    return MayaIndex(lam)


def maya_to_partition(l: MayaIndex | Sequence[int]) -> Partition:
    """Inverse of :func:`partition_to_maya`; also accepts a raw prefix."""
    if isinstance(l, MayaIndex):
        return l.partition
    return MayaIndex.from_prefix(l).partition

"""Finite binary relations over a universe {0, ..., n-1}.

A relation is stored as an n*n bitmask: pair (i, j) occupies bit i*n + j.
The mask doubles as the relation's index in the canonical enumeration
order, so ``enumerate_relations`` is just a counter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import UniverseMismatchError


def _check_size(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"universe size must be a positive integer, got {n!r}")


@dataclass(frozen=True)
class Relation:
    """An immutable binary relation on a universe of ``n`` elements."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        _check_size(self.n)
        if not 0 <= self.mask < 1 << (self.n * self.n):
            raise ValueError(f"mask {self.mask:#x} has bits outside an n={self.n} universe")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        _check_size(n)
        mask = 0
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"pair ({i}, {j}) lies outside a universe of size {n}")
            mask |= 1 << (i * n + j)
        return cls(n, mask)

    # -- set views ---------------------------------------------------------

    @property
    def pairs(self) -> frozenset[tuple[int, int]]:
        n = self.n
        return frozenset(
            (i, j) for i in range(n) for j in range(n) if self.mask >> (i * n + j) & 1
        )

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)

    def __contains__(self, pair: tuple[int, int]) -> bool:
        i, j = pair
        if not (0 <= i < self.n and 0 <= j < self.n):
            return False
        return bool(self.mask >> (i * self.n + j) & 1)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.sorted_pairs())

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __repr__(self) -> str:
        inside = ", ".join(f"({i}, {j})" for i, j in self.sorted_pairs())
        return f"Relation({self.n}, {{{inside}}})"

    # -- internals ---------------------------------------------------------

    def _same_universe(self, other: "Relation") -> None:
        if self.n != other.n:
            raise UniverseMismatchError(
                f"universe sizes differ: {self.n} vs {other.n}"
            )

    def _row(self, i: int) -> int:
        return self.mask >> (i * self.n) & ((1 << self.n) - 1)

    # -- boolean operations ------------------------------------------------

    def union(self, other: "Relation") -> "Relation":
        self._same_universe(other)
        return Relation(self.n, self.mask | other.mask)

    def intersect(self, other: "Relation") -> "Relation":
        self._same_universe(other)
        return Relation(self.n, self.mask & other.mask)

    def complement(self) -> "Relation":
        full = (1 << self.n * self.n) - 1
        return Relation(self.n, self.mask ^ full)

    __or__ = union
    __and__ = intersect
    __invert__ = complement

    def includes(self, other: "Relation") -> bool:
        """True iff self is a subset of other."""
        self._same_universe(other)
        return self.mask & ~other.mask == 0

    __le__ = includes

    def equals(self, other: "Relation") -> bool:
        self._same_universe(other)
        return self.mask == other.mask

    # -- relative operations -----------------------------------------------

    def compose(self, other: "Relation") -> "Relation":
        """Relational product: (i, j) related iff some k links i to k in
        self and k to j in other."""
        self._same_universe(other)
        n = self.n
        out = 0
        for i in range(n):
            row = self._row(i)
            acc = 0
            for k in range(n):
                if row >> k & 1:
                    acc |= other._row(k)
            out |= acc << i * n
        return Relation(n, out)

    def relative_sum(self, other: "Relation") -> "Relation":
        """De Morgan dual of composition: (i, j) related iff every k has
        (i, k) in self or (k, j) in other."""
        self._same_universe(other)
        n = self.n
        full_row = (1 << n) - 1
        out = 0
        for i in range(n):
            row = self._row(i)
            acc = full_row
            for k in range(n):
                if not row >> k & 1:
                    acc &= other._row(k)
            out |= acc << i * n
        return Relation(n, out)


# -- constants and enumeration ---------------------------------------------


def bottom(n: int) -> Relation:
    """The empty relation."""
    _check_size(n)
    return Relation(n, 0)


def top(n: int) -> Relation:
    """The universal relation: all n^2 pairs."""
    _check_size(n)
    return Relation(n, (1 << n * n) - 1)


def identity(n: int) -> Relation:
    """The diagonal {(i, i)}."""
    _check_size(n)
    mask = 0
    for i in range(n):
        mask |= 1 << i * n + i
    return Relation(n, mask)


def antidiagonal(n: int) -> Relation:
    """All pairs (i, j) with i != j."""
    return identity(n).complement()


def enumerate_relations(n: int) -> Iterator[Relation]:
    """Yield every relation on universe n once, in canonical mask order."""
    _check_size(n)
    for mask in range(1 << n * n):
        yield Relation(n, mask)

"""Binary relations and entourages on a finite carrier, as bit-set rows.

``rows[x]`` is the ball ``B(x; U) = {y : (x, y) in U}``.  Composition is a
masked word union, not a generic matrix product, because these inner loops
dominate enumeration runtime.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Iterator

from .finspace import bits

if TYPE_CHECKING:
    from .finspace import FinSpace


class SizeMismatch(ValueError):
    """Raised when two relations (or a relation and a space) disagree on carrier size."""


class DiagonalMissing(ValueError):
    """Raised when an Entourage is built from a relation missing part of the diagonal."""


@dataclass(frozen=True)
class Relation:
    """A binary relation on ``0..n-1``; no reflexivity requirement."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.rows) != self.n:
            raise SizeMismatch(f"need exactly {self.n} rows")
        full = (1 << self.n) - 1
        for r in self.rows:
            if r < 0 or r > full:
                raise SizeMismatch("row out of range for carrier")

    @property
    def is_reflexive(self) -> bool:
        return all((r >> x) & 1 for x, r in enumerate(self.rows))

    @property
    def is_symmetric(self) -> bool:
        return all(
            ((self.rows[y] >> x) & 1) == ((self.rows[x] >> y) & 1)
            for x in range(self.n)
            for y in range(x + 1, self.n)
        )

    @property
    def is_transitive(self) -> bool:
        for x in range(self.n):
            reach = 0
            for y in bits(self.rows[x]):
                reach |= self.rows[y]
            if reach & ~self.rows[x]:
                return False
        return True

    def contains_pair(self, x: int, y: int) -> bool:
        return bool((self.rows[x] >> y) & 1)

    def contains(self, other: "Relation") -> bool:
        """Relation containment: every pair of ``other`` lies in ``self``."""
        self._check_size(other)
        return all(o & ~s == 0 for s, o in zip(self.rows, other.rows))

    def _check_size(self, other: "Relation") -> None:
        if self.n != other.n:
            raise SizeMismatch(f"carrier sizes differ: {self.n} vs {other.n}")

    def _wrap(self, other: "Relation", rows: tuple[int, ...]) -> "Relation":
        cls = Entourage if isinstance(self, Entourage) and isinstance(other, Entourage) else Relation
        return cls(self.n, rows)

    def compose(self, other: "Relation") -> "Relation":
        """(x,z) in result iff some y has (x,y) in self and (y,z) in other."""
        self._check_size(other)
        rows = []
        for r in self.rows:
            acc = 0
            for y in bits(r):
                acc |= other.rows[y]
            rows.append(acc)
        return self._wrap(other, tuple(rows))

    def inverse(self) -> "Relation":
        """Transpose of the relation."""
        rows = [0] * self.n
        for x, r in enumerate(self.rows):
            for y in bits(r):
                rows[y] |= 1 << x
        return type(self)(self.n, tuple(rows))

    def power(self, k: int) -> "Relation":
        if k < 1:
            raise ValueError("power needs k >= 1")
        out = self
        for _ in range(k - 1):
            out = out.compose(self)
        return out

    def union(self, other: "Relation") -> "Relation":
        self._check_size(other)
        return self._wrap(other, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def intersection(self, other: "Relation") -> "Relation":
        self._check_size(other)
        rows = tuple(a & b for a, b in zip(self.rows, other.rows))
        cls = Entourage if isinstance(self, Entourage) and isinstance(other, Entourage) else Relation
        return cls(self.n, rows)

    def ball(self, a: int) -> int:
        """B(A; U): union of the rows over the points of ``a``."""
        if a < 0 or a > (1 << self.n) - 1:
            raise SizeMismatch("subset out of range")
        acc = 0
        for x in bits(a):
            acc |= self.rows[x]
        return acc

    def pairs(self) -> Iterator[tuple[int, int]]:
        for x, r in enumerate(self.rows):
            for y in bits(r):
                yield (x, y)

    def popcount(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def canon_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.popcount(), self.rows)

    def as_entourage(self) -> "Entourage":
        return Entourage(self.n, self.rows)


@dataclass(frozen=True)
class Entourage(Relation):
    """A reflexive relation: contains the diagonal."""

    def __post_init__(self) -> None:
        super().__post_init__()
        for x, r in enumerate(self.rows):
            if not (r >> x) & 1:
                raise DiagonalMissing(f"diagonal pair ({x},{x}) missing")


def diagonal(n: int) -> Entourage:
    return Entourage(n, tuple(1 << x for x in range(n)))


def full_relation(n: int) -> Entourage:
    full = (1 << n) - 1
    return Entourage(n, tuple(full for _ in range(n)))


def from_pairs(n: int, pairs: Iterable[tuple[int, int]], reflexive: bool = True) -> Relation:
    """Build a relation from explicit pairs, adding the diagonal when reflexive."""
    rows = [1 << x if reflexive else 0 for x in range(n)]
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise SizeMismatch(f"pair ({x},{y}) out of range")
        rows[x] |= 1 << y
    cls = Entourage if reflexive else Relation
    return cls(n, tuple(rows))


def topo_ops(u: Relation, s: "FinSpace") -> tuple[Entourage, Relation, Relation]:
    """Rowwise closure, interior, and interior-of-closure of ``u`` in ``s``.

    The closure of an entourage keeps the diagonal and comes back as an
    Entourage.  The interior may lose it, and on spaces that are not induced
    by ``u`` the interior of the closure may lose it too, so both come back
    as plain relations; use ``as_entourage()`` where context restores
    reflexivity.
    """
    if u.n != s.n:
        raise SizeMismatch(f"carrier sizes differ: {u.n} vs {s.n}")
    cl_rows = tuple(s.closure(r) for r in u.rows)
    int_rows = tuple(s.interior(r) for r in u.rows)
    intcl_rows = tuple(s.interior(c) for c in cl_rows)
    closure_rel = Entourage(u.n, cl_rows) if u.is_reflexive else Relation(u.n, cl_rows)
    return closure_rel, Relation(u.n, int_rows), Relation(u.n, intcl_rows)

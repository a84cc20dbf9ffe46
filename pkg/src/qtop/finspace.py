"""Finite (Alexandrov) topological spaces with an exact separation-axiom calculus.

Points are ``0..n-1`` and subsets are int bit sets.  The family of open sets
is kept duplicate-free in canonical (popcount, value) order and is closed
under pairwise union and intersection, so every point has a minimal open
neighborhood ``min_nbhd(x)`` and closure/interior are word operations.

Real-valued continuity on a finite space reduces to a combinatorial fact:
a function is continuous iff it is constant on every minimal neighborhood,
equivalently constant on the clopen classes of the equivalence generated by
``y in min_nbhd(x)``.  The functionally-Hausdorff and completely-regular
flags are decided through those classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_POINTS = 16


class EmptyCarrier(ValueError):
    """Raised when a space is requested on zero points."""


class SubsetOutOfRange(ValueError):
    """Raised when a subset mentions a point outside the carrier."""


class CarrierTooLarge(ValueError):
    """Raised when the carrier exceeds the bit-set word cap."""


class NotLatticeClosed(ValueError):
    """Strict-mode rejection of an open family that is not union/intersection closed."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canon_key(mask: int) -> tuple[int, int]:
    """Canonical sort key for subsets: popcount first, then numeric value."""
    return (mask.bit_count(), mask)


@dataclass(frozen=True)
class SeparationRecord:
    """Separation-axiom flags of one space, plus the derived T-composites."""

    t0: bool
    t1: bool
    t2: bool
    semi_hausdorff: bool
    functionally_hausdorff: bool
    regular: bool
    semiregular: bool
    completely_regular: bool

    @property
    def t3(self) -> bool:
        return self.regular and self.t1

    @property
    def semi_t3(self) -> bool:
        return self.semiregular and self.t1

    @property
    def tychonoff(self) -> bool:
        return self.completely_regular and self.t1

    def flags(self) -> dict[str, bool]:
        """All flags by name, including the derived composites."""
        return {
            "t0": self.t0,
            "t1": self.t1,
            "t2": self.t2,
            "semi_hausdorff": self.semi_hausdorff,
            "functionally_hausdorff": self.functionally_hausdorff,
            "regular": self.regular,
            "semiregular": self.semiregular,
            "completely_regular": self.completely_regular,
            "t3": self.t3,
            "semi_t3": self.semi_t3,
            "tychonoff": self.tychonoff,
        }


# Arrows of the axiom implication diagram, as (stronger, weaker) flag names.
IMPLICATIONS: tuple[tuple[str, str], ...] = (
    ("t1", "t0"),
    ("semi_hausdorff", "t1"),
    ("t2", "semi_hausdorff"),
    ("functionally_hausdorff", "t2"),
    ("regular", "semiregular"),
    ("completely_regular", "regular"),
    ("semi_t3", "semi_hausdorff"),
    ("semi_t3", "semiregular"),
    ("t3", "t2"),
    ("t3", "regular"),
    ("t3", "semi_t3"),
    ("tychonoff", "functionally_hausdorff"),
    ("tychonoff", "t3"),
    ("tychonoff", "completely_regular"),
)


def diagram_violations(record: SeparationRecord) -> list[tuple[str, str]]:
    """Arrows of the implication diagram violated by ``record`` (should be none)."""
    f = record.flags()
    return [(a, b) for a, b in IMPLICATIONS if f[a] and not f[b]]


@dataclass(frozen=True)
class FinSpace:
    """A finite topological space: point count plus canonical open-set family."""

    n: int
    opens: tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def opens_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    @cached_property
    def min_nbhds(self) -> tuple[int, ...]:
        """Per point, the intersection of all opens containing it (open itself)."""
        out = []
        for x in range(self.n):
            acc = self.full
            for o in self.opens:
                if (o >> x) & 1:
                    acc &= o
            out.append(acc)
        return tuple(out)

    def check_subset(self, a: int) -> None:
        if a < 0 or a > self.full:
            raise SubsetOutOfRange(f"subset {a:#x} out of range for {self.n} points")

    def is_open(self, a: int) -> bool:
        return a in self.opens_set

    def is_closed(self, a: int) -> bool:
        return (self.full ^ a) in self.opens_set

    def is_clopen(self, a: int) -> bool:
        return self.is_open(a) and self.is_closed(a)

    def min_nbhd(self, x: int) -> int:
        if not 0 <= x < self.n:
            raise SubsetOutOfRange(f"point {x} out of range")
        return self.min_nbhds[x]

    def interior(self, a: int) -> int:
        """Largest open subset of ``a``."""
        self.check_subset(a)
        out = 0
        for x in bits(a):
            if self.min_nbhds[x] & ~a == 0:
                out |= 1 << x
        return out

    def closure(self, a: int) -> int:
        """Smallest closed superset of ``a``."""
        self.check_subset(a)
        return self.full ^ self.interior(self.full ^ a)

    def reg_open_hull(self, a: int) -> int:
        """interior(closure(a)); its fixed points are the regular open sets."""
        return self.interior(self.closure(a))

    def is_regular_open(self, a: int) -> bool:
        return self.reg_open_hull(a) == a

    @cached_property
    def clopen_classes(self) -> tuple[int, ...]:
        """Per point, the class of the equivalence generated by y in min_nbhd(x).

        Continuous real-valued functions are exactly the functions constant on
        these classes, and each class is clopen.
        """
        cls = list(range(self.n))

        def find(i: int) -> int:
            while cls[i] != i:
                cls[i] = cls[cls[i]]
                i = cls[i]
            return i

        for x in range(self.n):
            for y in bits(self.min_nbhds[x]):
                rx, ry = find(x), find(y)
                if rx != ry:
                    cls[max(rx, ry)] = min(rx, ry)
        masks = [0] * self.n
        for x in range(self.n):
            masks[find(x)] |= 1 << x
        return tuple(masks[find(x)] for x in range(self.n))

    def classify(self) -> SeparationRecord:
        """Decide every separation axiom by exhaustive quantification."""
        mins = self.min_nbhds
        classes = self.clopen_classes
        t0 = t1 = t2 = semi_h = True
        regular = semiregular = True
        for x in range(self.n):
            cl_min = self.closure(mins[x])
            intcl_min = self.interior(cl_min)
            if cl_min & ~mins[x]:
                regular = False
            if intcl_min & ~mins[x]:
                semiregular = False
            others = self.full ^ (1 << x)
            if mins[x] & others:
                t1 = False
            if cl_min & others:
                t2 = False
            if intcl_min & others:
                semi_h = False
            for y in range(x + 1, self.n):
                if mins[x] == mins[y]:
                    t0 = False
        func_h = all(classes[x] == 1 << x for x in range(self.n))
        compl_reg = all(classes[x] == mins[x] for x in range(self.n))
        return SeparationRecord(
            t0=t0,
            t1=t1,
            t2=t2,
            semi_hausdorff=semi_h,
            functionally_hausdorff=func_h,
            regular=regular,
            semiregular=semiregular,
            completely_regular=compl_reg,
        )

    def is_continuous(self, values: Sequence) -> bool:
        """True iff the point-indexed function is constant on every minimal neighborhood."""
        if len(values) != self.n:
            raise SubsetOutOfRange("function must be total on the carrier")
        for x in range(self.n):
            vx = values[x]
            for y in bits(self.min_nbhds[x]):
                if values[y] != vx:
                    return False
        return True

    def subsets(self) -> Iterator[int]:
        return iter(range(1 << self.n))


def _lattice_close(n: int, family: set[int]) -> set[int]:
    family = set(family)
    family.add(0)
    family.add((1 << n) - 1)
    frontier = list(family)
    while frontier:
        fresh = []
        items = list(family)
        for a in frontier:
            for b in items:
                for c in (a | b, a & b):
                    if c not in family:
                        family.add(c)
                        fresh.append(c)
        frontier = fresh
    return family


def mk_space(n: int, opens: Iterable[Iterable[int] | int], strict: bool = False) -> FinSpace:
    """Build a FinSpace from point count and a family of open subsets.

    Subsets may be given as bit masks or as iterables of points.  The lattice
    of opens is completed automatically (empty set, full set, unions,
    intersections); in strict mode a family that is not already closed is
    rejected, for exact golden inputs.
    """
    if n < 1:
        raise EmptyCarrier("a space needs at least one point")
    if n > MAX_POINTS:
        raise CarrierTooLarge(f"carrier cap is {MAX_POINTS} points")
    full = (1 << n) - 1
    masks: set[int] = set()
    for item in opens:
        if isinstance(item, int):
            mask = item
        else:
            mask = 0
            for p in item:
                if not 0 <= p < n:
                    raise SubsetOutOfRange(f"point {p} out of range for {n} points")
                mask |= 1 << p
        if mask < 0 or mask > full:
            raise SubsetOutOfRange(f"subset {mask:#x} out of range for {n} points")
        masks.add(mask)
    closed = _lattice_close(n, masks)
    if strict and closed != masks:
        raise NotLatticeClosed(
            "strict mode: opens must already contain the empty and full sets "
            "and be closed under union and intersection"
        )
    return FinSpace(n, tuple(sorted(closed, key=canon_key)))

"""Exhaustive enumeration of labeled finite topologies and small groups.

Topologies on n points are in bijection with preorders (Alexandrov):
the minimal-neighborhood rows of a topology form a reflexive transitive
relation and the opens are exactly its up-sets.  The enumerator walks
preorder rows depth-first with pruning; an independent brute-force count
over union/intersection-closed set families backs it as an oracle.
"""

from __future__ import annotations

from typing import Iterator

from ..finspace import FinSpace, bits, canon_key

ENUM_CAP = 5

# labeled topologies on 1..5 points
KNOWN_TOPOLOGY_COUNTS = {1: 1, 2: 4, 3: 29, 4: 355, 5: 6942}


class TooLarge(ValueError):
    """Enumeration is capped; the counts above that are folklore, not computed here."""


def enumerate_preorders(n: int) -> Iterator[tuple[int, ...]]:
    """All reflexive transitive row tuples on n points, in lexicographic order."""
    if not 1 <= n <= ENUM_CAP:
        raise TooLarge(f"preorder enumeration capped at {ENUM_CAP} points")
    rows = [0] * n
    full = (1 << n) - 1

    def consistent(k: int) -> bool:
        # transitivity among the assigned rows 0..k only
        known = (1 << (k + 1)) - 1
        for x in range(k + 1):
            rx = rows[x]
            for y in bits(rx & known):
                if rows[y] & ~rx:
                    return False
        return True

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(rows)
            return
        bit = 1 << k
        for r in range(full + 1):
            if not r & bit:
                continue
            rows[k] = r
            if consistent(k):
                yield from rec(k + 1)

    yield from rec(0)


def preorder_space(rows: tuple[int, ...]) -> FinSpace:
    """The Alexandrov topology of a preorder: opens are the up-sets."""
    n = len(rows)
    opens = [
        w
        for w in range(1 << n)
        if all(rows[x] & ~w == 0 for x in bits(w))
    ]
    return FinSpace(n, tuple(sorted(opens, key=canon_key)))


def enumerate_topologies(n: int) -> Iterator[FinSpace]:
    """All labeled topologies on n points, canonical order, no duplicates."""
    for rows in enumerate_preorders(n):
        yield preorder_space(rows)


def count_topologies(n: int) -> int:
    return sum(1 for _ in enumerate_preorders(n))


def count_topologies_oracle(n: int) -> int:
    """Independent brute force: set families containing the empty and full
    sets that are closed under pairwise union and intersection."""
    if not 1 <= n <= 4:
        raise TooLarge("the family oracle is capped at 4 points")
    full = (1 << n) - 1
    middles = [m for m in range(1, full)]
    count = 0
    for pick in range(1 << len(middles)):
        fam = [0, full] + [middles[i] for i in bits(pick)]
        ok = True
        for i, a in enumerate(fam):
            for b in fam[i + 1 :]:
                if (a | b) not in fam or (a & b) not in fam:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def groups_of_order(k: int) -> list[tuple[str, tuple[tuple[int, ...], ...]]]:
    """Cayley tables of the groups of order up to 4, unit at index 0."""
    if not 1 <= k <= 4:
        raise TooLarge("group tables provided up to order 4")
    cyclic = tuple(tuple((i + j) % k for j in range(k)) for i in range(k))
    out = [(f"Z{k}", cyclic)]
    if k == 4:
        klein = tuple(tuple(i ^ j for j in range(4)) for i in range(4))
        out.append(("V4", klein))
    return out

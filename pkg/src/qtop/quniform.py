"""Quasi-uniformity bases on finite carriers.

A valid base satisfies (U1) (some member inside any pairwise intersection)
and (U2) (every member has a member whose square it contains).  On a finite
carrier these force the intersection of all members to be itself a member
and transitive; that minimum drives the induced topology and the chain
stabilization in the metrization engine.

Members are kept in canonical (popcount, rows) order so that every
"pick the first member" choice downstream is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Optional, Sequence

from .finspace import FinSpace, bits, canon_key
from .relalg import Entourage, Relation, SizeMismatch, topo_ops

if TYPE_CHECKING:
    from .metrize import Premetric

SUBSET_SWEEP_CAP = 12

ROTUND_KINDS = ("point", "set", "delta", "full")


class AxiomU1Violated(ValueError):
    """(U1) failure; carries the offending pair of members."""

    def __init__(self, pair: tuple[Entourage, Entourage]):
        self.pair = pair
        super().__init__("no member is contained in the intersection of a member pair")


class AxiomU2Violated(ValueError):
    """(U2) failure; carries the member with no composition-square refinement."""

    def __init__(self, member: Entourage):
        self.member = member
        super().__init__("no member V satisfies V o V inside the given member")


class NotPointRotund(ValueError):
    """Refutation path of complete regularity unavailable without point-rotundness."""


@dataclass(frozen=True)
class EntourageBase:
    """A validated quasi-uniformity base with cached structural flags."""

    n: int
    members: tuple[Entourage, ...]
    is_multiplicative: bool
    is_symmetric: bool
    is_base: bool = True

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def contains_member_inside(self, u: Relation) -> Optional[Entourage]:
        """First member contained in ``u``, in canonical order."""
        for m in self.members:
            if u.contains(m):
                return m
        return None


def canonical_members(entourages: Iterable[Entourage]) -> tuple[Entourage, ...]:
    """Duplicate-free members sorted by (popcount, rows)."""
    seen = {}
    for e in entourages:
        seen[e.rows] = e
    return tuple(sorted(seen.values(), key=Entourage.canon_key))


def validate_base(entourages: Sequence[Entourage]) -> EntourageBase:
    """Canonicalize a family of entourages and check the base axioms."""
    if not entourages:
        raise ValueError("a base needs at least one entourage")
    n = entourages[0].n
    for e in entourages:
        if e.n != n:
            raise SizeMismatch("members must share a carrier")
    members = canonical_members(entourages)
    member_set = {m.rows for m in members}
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            inter = u.intersection(v)
            if not any(inter.contains(w) for w in members):
                raise AxiomU1Violated((u, v))
    for u in members:
        if not any(u.contains(v.compose(v)) for v in members):
            raise AxiomU2Violated(u)
    multiplicative = all(
        u.compose(v).rows in member_set for u in members for v in members
    )
    symmetric = all(m.is_symmetric for m in members)
    return EntourageBase(n, members, multiplicative, symmetric)


def saturate_entourages(entourages: Sequence[Entourage]) -> tuple[Entourage, ...]:
    """Close a family of entourages under composition, to a fixpoint."""
    family = {e.rows: e for e in entourages}
    frontier = list(family.values())
    while frontier:
        fresh = []
        current = list(family.values())
        for a in frontier:
            for b in current:
                for c in (a.compose(b), b.compose(a)):
                    if c.rows not in family:
                        family[c.rows] = c
                        fresh.append(c)
        frontier = fresh
    return canonical_members(family.values())


def saturate_mult(base: EntourageBase) -> EntourageBase:
    """Composition-closure of a base; preserves the generated quasi-uniformity."""
    members = saturate_entourages(base.members)
    originals = base.members
    for m in members:
        assert any(m.contains(o) for o in originals), "saturation escaped the uniformity"
    return validate_base(members)


def min_entourage(base: EntourageBase) -> Entourage:
    """Intersection of all members: itself a member, transitive, and minimum."""
    acc = base.members[0]
    for m in base.members[1:]:
        acc = acc.intersection(m)
    assert acc.is_transitive, "finite base minimum must be transitive"
    assert all(m.contains(acc) for m in base.members)
    assert acc.rows in {m.rows for m in base.members}, "minimum must be a member"
    return acc


def induced_topology(base: EntourageBase) -> FinSpace:
    """Topology whose opens are the sets W with some ball B(x;U) inside W at each x."""
    tmin = min_entourage(base)
    n = base.n
    opens = []
    for w in range(1 << n):
        if all(tmin.rows[x] & ~w == 0 for x in bits(w)):
            opens.append(w)
    space = FinSpace(n, tuple(sorted(opens, key=canon_key)))
    # the balls form a neighborhood base at every point
    for x in range(n):
        assert space.min_nbhd(x) == tmin.rows[x]
        for m in base.members:
            assert m.rows[x] & ~space.full == 0
            assert space.min_nbhd(x) & ~m.rows[x] == 0, "ball is not a neighborhood"
    return space


@dataclass(frozen=True)
class RotundResult:
    kind: str
    holds: bool
    witness: Optional[tuple] = None


def rotund_check(base: EntourageBase, space: FinSpace, kind: str) -> RotundResult:
    """Exhaustively test one rotundness condition of the base on ``space``.

    point: cl B(x;V)  inside  intcl B(x;V o U)        for all x, V, U
    set:   cl A       inside  intcl B(A;U)            for all A, U
    delta: B(cl B(x;V); U)  inside  cl B(x;V o W o U) for all x, U, V, W
    full:  B(cl A; U)       inside  cl B(A;W o U)     for all A, U, W

    Returns the witnessing (point-or-set, entourages) tuple on failure.
    """
    if kind not in ROTUND_KINDS:
        raise ValueError(f"unknown rotundness kind {kind!r}")
    if base.n != space.n:
        raise SizeMismatch("base and space disagree on carrier size")
    if kind in ("set", "full") and space.n > SUBSET_SWEEP_CAP:
        raise SizeMismatch(f"subset sweep capped at {SUBSET_SWEEP_CAP} points")
    ms = base.members
    if kind == "point":
        for v in ms:
            for u in ms:
                vu = v.compose(u)
                for x in range(space.n):
                    lhs = space.closure(v.rows[x])
                    rhs = space.interior(space.closure(vu.rows[x]))
                    if lhs & ~rhs:
                        return RotundResult(kind, False, (x, v, u))
    elif kind == "set":
        for u in ms:
            for a in range(1, 1 << space.n):
                lhs = space.closure(a)
                rhs = space.interior(space.closure(u.ball(a)))
                if lhs & ~rhs:
                    return RotundResult(kind, False, (a, u))
    elif kind == "delta":
        for v in ms:
            for w in ms:
                for u in ms:
                    vwu = v.compose(w).compose(u)
                    for x in range(space.n):
                        lhs = u.ball(space.closure(v.rows[x]))
                        rhs = space.closure(vwu.rows[x])
                        if lhs & ~rhs:
                            return RotundResult(kind, False, (x, v, w, u))
    else:  # full
        for w in ms:
            for u in ms:
                wu = w.compose(u)
                for a in range(1, 1 << space.n):
                    lhs = u.ball(space.closure(a))
                    rhs = space.closure(wu.ball(a))
                    if lhs & ~rhs:
                        return RotundResult(kind, False, (a, w, u))
    return RotundResult(kind, True)


def rotund_flags(base: EntourageBase, space: FinSpace) -> dict[str, bool]:
    return {k: rotund_check(base, space, k).holds for k in ROTUND_KINDS}


def space_rotund_flags(space: FinSpace) -> dict[str, bool]:
    """Space-level rotundness, decided through the specialization preorder.

    Every quasi-uniformity compatible with a finite space has the
    specialization entourage (rows = minimal neighborhoods) as its minimum,
    and that minimum is a member of every base, so a space admits a
    kind-rotund multiplicative base exactly when the singleton base of the
    specialization entourage is kind-rotund.
    """
    mins = space.min_nbhds

    def hull(a: int) -> int:
        out = 0
        for x in bits(a):
            out |= mins[x]
        return out

    point = all(
        space.closure(mins[x]) & ~space.interior(space.closure(mins[x])) == 0
        for x in range(space.n)
    )
    delta = all(
        hull(space.closure(mins[x])) & ~space.closure(mins[x]) == 0
        for x in range(space.n)
    )
    set_r = True
    full_r = True
    for a in range(1, 1 << space.n):
        cl_a = space.closure(a)
        ball = hull(a)
        if cl_a & ~space.interior(space.closure(ball)):
            set_r = False
        if hull(cl_a) & ~space.closure(ball):
            full_r = False
        if not (set_r or full_r):
            break
    return {
        "point_rotund": point,
        "set_rotund": set_r,
        "delta_rotund": delta,
        "rotund": full_r,
    }


@dataclass(frozen=True)
class UniformRegularityRecord:
    """Uniform separation flags; complete regularity may be Unknown (None)."""

    regular: bool
    semiregular: bool
    completely_regular: Optional[bool]
    witnesses: Optional[dict] = None
    reason: Optional[str] = None


def _uniformly_regular(base: EntourageBase, space: FinSpace) -> bool:
    for u in base.members:
        if not any(
            all(space.closure(v.rows[x]) & ~u.rows[x] == 0 for x in range(base.n))
            for v in base.members
        ):
            return False
    return True


def _uniformly_semiregular(base: EntourageBase, space: FinSpace) -> bool:
    for u in base.members:
        found = False
        for v in base.members:
            _, _, intcl = topo_ops(v, space)
            if all(intcl.rows[x] & ~u.rows[x] == 0 for x in range(base.n)):
                found = True
                break
        if not found:
            return False
    return True


def uniform_regularity(base: EntourageBase, space: FinSpace) -> UniformRegularityRecord:
    """Uniform regularity / semiregularity by pair search; complete regularity
    certified constructively through the metrization engine, or refuted via the
    semiregularity equivalence when the base is point-rotund."""
    if base.n != space.n:
        raise SizeMismatch("base and space disagree on carrier size")
    regular = _uniformly_regular(base, space)
    semiregular = _uniformly_semiregular(base, space)
    point_rotund = rotund_check(base, space, "point").holds

    if not semiregular:
        if point_rotund:
            return UniformRegularityRecord(regular, semiregular, False)
        return UniformRegularityRecord(
            regular, semiregular, None, reason="not point-rotund: refutation path unavailable"
        )

    # constructive witness: for each member U pick V with intcl-balls inside
    # U-balls and synthesize the right-continuous premetric for V
    from . import metrize
    from .dyadic import Dyadic

    work = saturate_mult(base) if not base.is_multiplicative else base
    witnesses: dict[tuple[int, ...], "Premetric"] = {}
    for u in base.members:
        chosen = None
        for v in base.members:
            _, _, intcl = topo_ops(v, space)
            if all(intcl.rows[x] & ~u.rows[x] == 0 for x in range(base.n)):
                chosen = v
                break
        assert chosen is not None
        chain = metrize.build_chain(work, chosen)
        d = metrize.eval_d(chain)
        d_reg = metrize.regularize(d, space)
        ok_balls = all(
            d_reg.ball(x, Dyadic.one()) & ~u.rows[x] == 0 for x in range(base.n)
        )
        ok_cont = metrize.classify_continuity(d_reg, space, dist_variants=False).right_continuous
        ok_uniform = is_u_uniform(base, d_reg)
        if not (ok_balls and ok_cont and ok_uniform):
            if point_rotund:
                return UniformRegularityRecord(regular, semiregular, False)
            return UniformRegularityRecord(
                regular, semiregular, None, reason="constructive witness failed on a non-point-rotund base"
            )
        witnesses[u.rows] = d_reg
    return UniformRegularityRecord(regular, semiregular, True, witnesses=witnesses)


def is_u_uniform(base: EntourageBase, d: "Premetric") -> bool:
    """True iff every strict sublevel relation of ``d`` contains a member.

    The premetric takes finitely many values, so quantifying over its positive
    values plus 1 covers every distinct relation [d] below epsilon.
    """
    from .dyadic import Dyadic

    if base.n != d.n:
        raise SizeMismatch("base and premetric disagree on carrier size")
    thresholds = {v for v in d.distinct_values() if not v.is_zero}
    thresholds.add(Dyadic.one())
    for eps in sorted(thresholds):
        rel = d.below(eps)
        if not any(rel.contains(m) for m in base.members):
            return False
    return True

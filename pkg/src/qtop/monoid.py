"""Finite topological monoids: continuity diagnostics, the four canonical
quasi-uniformities, balancedness, and subinvariant quasi-pseudometric
synthesis.

Multiplication continuity on a finite space is the Alexandrov criterion
``min_nbhd(x) * min_nbhd(y) inside min_nbhd(x*y)``; the definitional
neighborhood quantifier is kept as a cross-check.  A right (left) unit only
is allowed, matching the semigroup setting of the subinvariant synthesis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .dyadic import Dyadic
from .finspace import FinSpace, bits
from .metrize import (
    MetricBundle,
    CheckResult,
    Premetric,
    classify_continuity,
    classify_premetric,
    verify_theorem_main,
)
from .quniform import (
    AxiomU1Violated,
    AxiomU2Violated,
    EntourageBase,
    induced_topology,
    rotund_check,
    validate_base,
)
from .relalg import DiagonalMissing, Entourage, SizeMismatch

UNIT_SIDES = ("two", "right", "left")
WHICH = ("L", "R", "LvR", "LwR")


class NotAssociative(ValueError):
    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) at {(a, b, c)}")


class UnitLawFails(ValueError):
    def __init__(self, a: int):
        self.point = a
        super().__init__(f"unit law fails at {a}")


class MultiplicationDiscontinuous(ValueError):
    def __init__(self, x: int, y: int):
        self.pair = (x, y)
        super().__init__(f"multiplication is discontinuous at {(x, y)}")


class NotABase(ValueError):
    """The requested canonical family is not a quasi-uniformity base here."""


class UnitKindUnsupported(ValueError):
    """The synthesis needs the matching open-unit kind."""


class NotAGroup(ValueError):
    def __init__(self, point: int):
        self.point = point
        super().__init__(f"{point} has no two-sided inverse")


@dataclass(frozen=True)
class TopMonoid:
    """A finite topological monoid (or semigroup with a one-sided unit)."""

    space: FinSpace
    mul: tuple[tuple[int, ...], ...]
    unit: int
    unit_side: str = "two"

    @property
    def n(self) -> int:
        return self.space.n

    def prod(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def left_translate(self, a: int, s: int) -> int:
        """The set a*S."""
        out = 0
        for y in bits(s):
            out |= 1 << self.mul[a][y]
        return out

    def right_translate(self, s: int, a: int) -> int:
        """The set S*a."""
        out = 0
        for x in bits(s):
            out |= 1 << self.mul[x][a]
        return out

    def product_set(self, s: int, t: int) -> int:
        """The set S*T."""
        out = 0
        for x in bits(s):
            out |= self.left_translate(x, t)
        return out

    def opens_at_unit(self) -> list[int]:
        return [o for o in self.space.opens if (o >> self.unit) & 1]

    def is_invariant(self, s: int) -> bool:
        """xS = Sx for every x."""
        return all(
            self.left_translate(x, s) == self.right_translate(s, x)
            for x in range(self.n)
        )

    def invariant_opens_at_unit(self) -> list[int]:
        return [o for o in self.opens_at_unit() if self.is_invariant(o)]


def validate_monoid(
    space: FinSpace,
    mul: Sequence[Sequence[int]],
    unit: int,
    unit_side: str = "two",
) -> TopMonoid:
    """Check associativity, the (one- or two-sided) unit law, and continuity."""
    n = space.n
    if unit_side not in UNIT_SIDES:
        raise ValueError(f"unit_side must be one of {UNIT_SIDES}")
    if len(mul) != n or any(len(r) != n for r in mul):
        raise SizeMismatch("Cayley table must be n by n")
    table = tuple(tuple(row) for row in mul)
    for row in table:
        for v in row:
            if not 0 <= v < n:
                raise SizeMismatch("Cayley table entry out of range")
    if not 0 <= unit < n:
        raise SizeMismatch("unit out of range")
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise NotAssociative(a, b, c)
    for a in range(n):
        if unit_side in ("two", "right") and table[a][unit] != a:
            raise UnitLawFails(a)
        if unit_side in ("two", "left") and table[unit][a] != a:
            raise UnitLawFails(a)
    m = TopMonoid(space, table, unit, unit_side)
    for x in range(n):
        for y in range(n):
            prod = m.product_set(space.min_nbhd(x), space.min_nbhd(y))
            if prod & ~space.min_nbhd(table[x][y]):
                raise MultiplicationDiscontinuous(x, y)
    return m


def mul_continuous_definitional(m: TopMonoid) -> bool:
    """Cross-check of the continuity criterion with the raw open-set quantifier."""
    sp = m.space
    for x in range(m.n):
        for y in range(m.n):
            for w in sp.opens:
                if not (w >> m.prod(x, y)) & 1:
                    continue
                if not any(
                    (u >> x) & 1 and (v >> y) & 1 and m.product_set(u, v) & ~w == 0
                    for u in sp.opens
                    for v in sp.opens
                ):
                    return False
    return True


@dataclass(frozen=True)
class ShiftRecord:
    left: bool
    right: bool
    central: bool


def shift_openness(m: TopMonoid) -> ShiftRecord:
    """Openness of left, right, and central shifts, by exhaustive image check."""
    sp = m.space
    left = all(
        sp.is_open(m.left_translate(a, o)) for a in range(m.n) for o in sp.opens
    )
    right = all(
        sp.is_open(m.right_translate(o, a)) for a in range(m.n) for o in sp.opens
    )
    central = all(
        sp.is_open(m.product_set(m.right_translate(o1, a), o2))
        for a in range(m.n)
        for o1 in sp.opens
        for o2 in sp.opens
    )
    return ShiftRecord(left, right, central)


@dataclass(frozen=True)
class UnitKindRecord:
    open_left_unit: Optional[bool]
    open_right_unit: Optional[bool]
    open_unit: Optional[bool]


def unit_kind(m: TopMonoid) -> UnitKindRecord:
    """Open-unit flags via minimal neighborhoods; None when the side is absent."""
    sp = m.space
    e_min = sp.min_nbhd(m.unit)
    right = left = both = None
    if m.unit_side in ("two", "right"):
        right = all(
            sp.min_nbhd(x) & ~m.left_translate(x, e_min) == 0 for x in range(m.n)
        )
    if m.unit_side in ("two", "left"):
        left = all(
            sp.min_nbhd(x) & ~m.right_translate(e_min, x) == 0 for x in range(m.n)
        )
    if m.unit_side == "two":
        both = all(
            sp.min_nbhd(x)
            & ~m.product_set(m.right_translate(e_min, x), e_min)
            == 0
            for x in range(m.n)
        )
    return UnitKindRecord(open_left_unit=left, open_right_unit=right, open_unit=both)


def entourage_of(m: TopMonoid, u: int, which: str = "L", v: Optional[int] = None) -> Entourage:
    """The canonical entourage of a unit neighborhood: rows are translates."""
    if which == "L":
        rows = tuple(m.left_translate(x, u) for x in range(m.n))
    elif which == "R":
        rows = tuple(m.right_translate(u, x) for x in range(m.n))
    elif which == "LvR":
        rows = tuple(
            m.left_translate(x, u) & m.right_translate(u, x) for x in range(m.n)
        )
    elif which == "LwR":
        if v is None:
            v = u
        rows = tuple(
            m.product_set(m.right_translate(u, x), v) for x in range(m.n)
        )
    else:
        raise ValueError(f"unknown uniformity {which!r}")
    try:
        return Entourage(m.n, rows)
    except DiagonalMissing as exc:
        raise NotABase(f"{which}-entourages are not reflexive here: {exc}") from exc


def canonical_uniformity(m: TopMonoid, which: str) -> EntourageBase:
    """Base of the left / right / join / meet quasi-uniformity of the monoid."""
    if which not in WHICH:
        raise ValueError(f"which must be one of {WHICH}")
    if which in ("L", "LvR", "LwR") and m.unit_side == "left":
        raise NotABase(f"{which} needs a right unit")
    if which in ("R", "LvR", "LwR") and m.unit_side == "right":
        raise NotABase(f"{which} needs a left unit")
    opens_e = m.opens_at_unit()
    if which == "LwR":
        members = [entourage_of(m, u, "LwR", v) for u in opens_e for v in opens_e]
    else:
        members = [entourage_of(m, u, which) for u in opens_e]
    try:
        base = validate_base(members)
    except (AxiomU1Violated, AxiomU2Violated) as exc:
        raise NotABase(f"{which}-family fails {type(exc).__name__}") from exc
    if which in ("L", "R"):
        # composition of translate entourages is the entourage of the product set
        for u in opens_e:
            for v in opens_e:
                eu, ev = entourage_of(m, u, which), entourage_of(m, v, which)
                uv = m.product_set(u, v) if which == "L" else m.product_set(v, u)
                assert eu.compose(ev) == entourage_of(m, uv, which)
    return base


def is_balanced(m: TopMonoid) -> bool:
    """The invariant open neighborhoods of the unit form a base at the unit."""
    e_min = m.space.min_nbhd(m.unit)
    return any(w & ~e_min == 0 for w in m.invariant_opens_at_unit())


def _le(a: Dyadic, b: Dyadic) -> bool:
    return not b < a


def _subinvariance(m: TopMonoid, d: Premetric, side: str) -> bool:
    for z in range(m.n):
        for x in range(m.n):
            for y in range(m.n):
                if side == "left":
                    if not _le(d.values[m.prod(z, x)][m.prod(z, y)], d.values[x][y]):
                        return False
                else:
                    if not _le(d.values[m.prod(x, z)][m.prod(y, z)], d.values[x][y]):
                        return False
    return True


@dataclass(frozen=True)
class SubinvariantBundle:
    """A synthesized (left or right) subinvariant quasi-pseudometric run."""

    bundle: MetricBundle
    side: str
    nbhd: int
    balanced: bool
    left_subinvariant: bool
    right_subinvariant: bool
    ball_in_translate: bool
    reg_ball_in_hull: bool
    report: tuple[CheckResult, ...]

    def failures(self) -> list[CheckResult]:
        return [c for c in self.report if c.status == "fail"]

    @property
    def all_passed(self) -> bool:
        return not self.failures()


def synth_subinvariant(m: TopMonoid, u: int, side: str = "left") -> SubinvariantBundle:
    """Theorem-6.1-style synthesis of a subinvariant quasi-pseudometric.

    Builds the left (right) translate base over the open unit neighborhoods,
    restricted to invariant ones when the unit is balanced, runs the
    metrization engine on the entourage of ``u``, and then checks
    subinvariance and the ball inclusions directly.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    kinds = unit_kind(m)
    needed = kinds.open_right_unit if side == "left" else kinds.open_left_unit
    if not needed:
        raise UnitKindUnsupported(
            f"side={side!r} synthesis needs an open {'right' if side == 'left' else 'left'} unit"
        )
    m.space.check_subset(u)
    if not m.space.is_open(u) or not (u >> m.unit) & 1:
        raise ValueError("the reference set must be an open neighborhood of the unit")
    which = "L" if side == "left" else "R"
    balanced = is_balanced(m)
    nbhds = m.invariant_opens_at_unit() if balanced else m.opens_at_unit()
    members = [entourage_of(m, w, which) for w in nbhds]
    base = validate_base(members)
    assert induced_topology(base) == m.space, "the translate base must generate the topology"
    target = entourage_of(m, u, which)
    bundle = verify_theorem_main(base, target, space=m.space)

    d, d_reg = bundle.d, bundle.d_reg
    left_sub = _subinvariance(m, d, "left") and _subinvariance(m, d_reg, "left")
    right_sub = _subinvariance(m, d, "right") and _subinvariance(m, d_reg, "right")
    one = Dyadic.one()
    if side == "left":
        translate = [m.left_translate(x, u) for x in range(m.n)]
    else:
        translate = [m.right_translate(u, x) for x in range(m.n)]
    ball_ok = all(d.ball(x, one) & ~translate[x] == 0 for x in range(m.n))
    hull_ok = all(
        d_reg.ball(x, one) & ~m.space.reg_open_hull(translate[x]) == 0
        for x in range(m.n)
    )

    cont_d = classify_continuity(d, m.space)
    cont_reg = classify_continuity(d_reg, m.space)
    ax_d, ax_reg = classify_premetric(d), classify_premetric(d_reg)
    own_sub = left_sub if side == "left" else right_sub
    checks = [
        CheckResult(
            "thm_6_1_item_1",
            1,
            "pass" if bundle.d_reg == bundle.d_semireg and d_reg.entrywise_le(d) else "fail",
        ),
        CheckResult(
            "thm_6_1_item_2",
            2,
            "pass"
            if own_sub
            and ax_d.triangle
            and cont_d.open_balls
            and bool(cont_d.reg_dist_continuous)
            else "fail",
        ),
        CheckResult(
            "thm_6_1_item_3",
            3,
            "pass"
            if own_sub
            and ax_reg.triangle
            and cont_reg.right_continuous
            and bool(cont_reg.reg_dist_continuous)
            else "fail",
        ),
        CheckResult("thm_6_1_item_4", 4, "pass" if ball_ok and hull_ok else "fail"),
    ]
    if balanced:
        checks.append(
            CheckResult(
                "thm_6_1_item_5", 5, "pass" if left_sub and right_sub else "fail"
            )
        )
    else:
        checks.append(
            CheckResult("thm_6_1_item_5", 5, "skip", "hypothesis-not-met: balanced unit")
        )
    return SubinvariantBundle(
        bundle=bundle,
        side=side,
        nbhd=u,
        balanced=balanced,
        left_subinvariant=left_sub,
        right_subinvariant=right_sub,
        ball_in_translate=ball_ok,
        reg_ball_in_hull=hull_ok,
        report=tuple(checks),
    )


@dataclass(frozen=True)
class GroupRecord:
    inverses: tuple[int, ...]
    is_paratopological_group: bool
    is_topological_group: bool
    weakly_invariant: Optional[dict] = None
    proposition_consistent: Optional[bool] = None


def group_checks(
    m: TopMonoid, premetrics: Optional[dict[str, Premetric]] = None
) -> GroupRecord:
    """Group-level flags: inversion continuity and weak invariance.

    When a generating family of premetrics is supplied, the family-level
    statement is checked finitely: left-continuous weakly invariant
    generators force continuous inversion.
    """
    if m.unit_side != "two":
        raise NotAGroup(m.unit)
    inv = []
    for x in range(m.n):
        found = None
        for y in range(m.n):
            if m.prod(x, y) == m.unit and m.prod(y, x) == m.unit:
                found = y
                break
        if found is None:
            raise NotAGroup(x)
        inv.append(found)
    inverses = tuple(inv)

    def inv_set(s: int) -> int:
        out = 0
        for p in bits(s):
            out |= 1 << inverses[p]
        return out

    sp = m.space
    topo_group = all(
        sp.min_nbhd(inverses[x]) & ~inv_set(sp.min_nbhd(x)) == 0 for x in range(m.n)
    )

    weakly = None
    consistent = None
    if premetrics is not None:
        weakly = {
            name: all(
                d.values[m.unit][x] == d.values[inverses[x]][m.unit]
                for x in range(m.n)
            )
            for name, d in premetrics.items()
        }
        from .metrize import ball_topology

        family = list(premetrics.values())
        left_cont = all(
            classify_continuity(d, sp, dist_variants=False).left_continuous
            for d in family
        )
        generates = bool(family) and ball_topology(family, m.n) == sp
        premise = bool(weakly) and all(weakly.values()) and left_cont and generates
        consistent = (not premise) or topo_group
    return GroupRecord(
        inverses=inverses,
        is_paratopological_group=True,
        is_topological_group=topo_group,
        weakly_invariant=weakly,
        proposition_consistent=consistent,
    )


@dataclass(frozen=True)
class UniformityEquivalence:
    which: str
    generates: bool
    unit_flag: Optional[bool]
    shift_flag: bool
    equivalent: bool
    rotund_when_generating: Optional[bool]


def uniformity_equivalences(m: TopMonoid) -> list[UniformityEquivalence]:
    """Finite check of the tau-generation / open-unit / open-shift equivalences
    for L, R, LvR, and LwR, with the rotundness consequence where stated."""
    shifts = shift_openness(m)
    kinds = unit_kind(m)
    out = []
    plan = [
        ("L", kinds.open_right_unit, shifts.left, "full"),
        ("R", kinds.open_left_unit, shifts.right, "full"),
        (
            "LvR",
            None
            if kinds.open_left_unit is None or kinds.open_right_unit is None
            else (kinds.open_left_unit and kinds.open_right_unit),
            shifts.left and shifts.right,
            None,
        ),
        ("LwR", kinds.open_unit, shifts.central, "full"),
    ]
    for which, unit_flag, shift_flag, rotund_kind in plan:
        try:
            base = canonical_uniformity(m, which)
            generates = induced_topology(base) == m.space
        except NotABase:
            base = None
            generates = False
        equivalent = (unit_flag is None) or (generates == unit_flag == shift_flag)
        rotund = None
        if rotund_kind is not None and generates and base is not None:
            rotund = rotund_check(base, m.space, rotund_kind).holds
        out.append(
            UniformityEquivalence(which, generates, unit_flag, shift_flag, equivalent, rotund)
        )
    return out

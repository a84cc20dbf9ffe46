"""Quasi-pseudometric synthesis on a finite quasi-uniform space.

Given a multiplicative base and a target entourage U, a descending chain
``U_1, U_2, ...`` is chosen with ``U_1^3`` inside U and ``U_{k+1}^6`` inside
``U_k``; dyadic rationals index entourages ``V_r`` through balanced products
over the sequential expansion of r, and the premetric is the exact infimum

    d(x, y) = inf { r in Q2 + {1} : (x, y) in V_r }.

On a finite carrier the chain stabilizes at a transitive entourage ``U_m``
and trailing balanced-product factors collapse, so the infimum is attained
on the closed grid {0} + {k/2^m} + {1} through the limit entourages

    V+_0 = U_m,   V+_q = P(U_expansion(q), U_m),   V+_1 = full,

with value 0 exactly on the pairs of ``U_m``.  A depth-limited truncation of
the raw infimum is kept alongside as an independent test oracle.

The verifier then recomputes every containment and continuity statement the
construction promises (grid submultiplicativity, rotundness consequences,
uniformity, open/closed balls, the closed-form descriptions of the
regularization and semiregularization, and the symmetric collapse) and
reports them claim by claim, skipping a conditional claim with a reason
when its rotundness hypothesis fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .dyadic import Dyadic, OutOfRange, balanced_product, expansion, le_sum, sum_lt, sum_lt_one
from .finspace import CarrierTooLarge, FinSpace, bits, canon_key, mk_space
from .quniform import EntourageBase, is_u_uniform, rotund_flags, saturate_mult
from .relalg import Entourage, Relation, SizeMismatch, full_relation, topo_ops

STAB_CAP = 12
DIST_SWEEP_CAP = 12


class NoHalving(ValueError):
    """No member composes into the requested entourage: the target is outside
    the quasi-uniformity or the base fails (U2) for it."""


class EmptySet(ValueError):
    """Distance functions need a non-empty reference set."""


@dataclass(frozen=True)
class Premetric:
    """An n-by-n matrix of dyadic values in [0,1] with zero diagonal."""

    n: int
    values: tuple[tuple[Dyadic, ...], ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.n or any(len(r) != self.n for r in self.values):
            raise SizeMismatch("premetric matrix must be n by n")
        for x in range(self.n):
            if not self.values[x][x].is_zero:
                raise ValueError("premetric needs a zero diagonal")

    def value(self, x: int, y: int) -> Dyadic:
        return self.values[x][y]

    def row(self, x: int) -> tuple[Dyadic, ...]:
        return self.values[x]

    def distinct_values(self) -> list[Dyadic]:
        return sorted({v for row in self.values for v in row})

    def row_thresholds(self, x: int) -> list[Dyadic]:
        return sorted(set(self.values[x]))

    def sublevel(self, x: int, v: Dyadic) -> int:
        """Bit set of points y with d(x,y) <= v."""
        mask = 0
        for y in range(self.n):
            if not v < self.values[x][y]:
                mask |= 1 << y
        return mask

    def ball(self, x: int, eps: Dyadic) -> int:
        """Open ball: points y with d(x,y) < eps."""
        mask = 0
        for y in range(self.n):
            if self.values[x][y] < eps:
                mask |= 1 << y
        return mask

    def below(self, eps: Dyadic) -> Relation:
        """The relation [d] below eps."""
        return Relation(self.n, tuple(self.ball(x, eps) for x in range(self.n)))

    def sublevel_rel(self, v: Dyadic) -> Relation:
        return Relation(self.n, tuple(self.sublevel(x, v) for x in range(self.n)))

    def entrywise_le(self, other: "Premetric") -> bool:
        if self.n != other.n:
            raise SizeMismatch("premetrics disagree on carrier size")
        return all(
            not other.values[x][y] < self.values[x][y]
            for x in range(self.n)
            for y in range(self.n)
        )


def premetric(values: Sequence[Sequence[Dyadic]]) -> Premetric:
    return Premetric(len(values), tuple(tuple(row) for row in values))


@dataclass(frozen=True)
class Chain:
    """A stabilized chain for one target entourage.

    links = U_1..U_m with U_1^3 inside the target, U_{k+1}^6 inside U_k,
    and U_m transitive; indices beyond m read as U_m.
    """

    target: Entourage
    links: tuple[Entourage, ...]

    def __post_init__(self) -> None:
        if not self.links:
            raise ValueError("a chain needs at least one link")
        n = self.target.n
        for u in self.links:
            if u.n != n:
                raise SizeMismatch("chain links must live on the target carrier")
        if not self.target.contains(self.links[0].power(3)):
            raise ValueError("U1^3 must lie inside the target")
        for k in range(len(self.links) - 1):
            if not self.links[k].contains(self.links[k + 1].power(6)):
                raise ValueError(f"U{k + 2}^6 must lie inside U{k + 1}")
        last = self.links[-1]
        if not last.is_transitive:
            raise ValueError("the stabilized link must be transitive")

    @property
    def n(self) -> int:
        return self.target.n

    @property
    def stab(self) -> int:
        return len(self.links)

    def link(self, k: int) -> Entourage:
        """U_k, with the constant tail U_m for k beyond the stabilization index."""
        if k < 1:
            raise OutOfRange("chain indices start at 1")
        return self.links[min(k, self.stab) - 1]


def _halve(base: EntourageBase, w: Relation) -> Entourage:
    for v in base.members:
        if w.contains(v.compose(v)):
            return v
    raise NoHalving("no member V has V o V inside the given entourage")


def build_chain(base: EntourageBase, target: Entourage) -> Chain:
    """Deterministic greedy chain for ``target``.

    halve(W) picks the first member in canonical order whose square lies in
    W; U_1 = halve(halve(U)) and U_{k+1} = halve^3(U_k) until the value
    repeats, which forces transitivity of the last link.  Termination is
    immediate on a finite base: every non-stable step strictly shrinks the
    relation, and the canonical-first qualifying member is the transitive
    minimum of the base, so the loop stops there.
    """
    if not base.is_multiplicative:
        raise ValueError("chain construction needs a multiplicative base")
    if base.n != target.n:
        raise SizeMismatch("target and base disagree on carrier size")
    if base.contains_member_inside(target) is None:
        raise NoHalving("target contains no member: it is outside the quasi-uniformity")
    u1 = _halve(base, _halve(base, target))
    links = [u1]
    while True:
        nxt = links[-1]
        for _ in range(3):
            nxt = _halve(base, nxt)
        if nxt == links[-1]:
            break
        links.append(nxt)
        if len(links) > base.n * base.n + 1:
            raise AssertionError("chain failed to stabilize")
    return Chain(target=target, links=tuple(links))


def v_family(chain: Chain, r: Dyadic) -> Entourage:
    """V_r: the balanced product over the sequential expansion of r.

    V_1 is the full relation; indices beyond the stabilization read as U_m.
    """
    if r.is_one:
        return full_relation(chain.n)
    if not r.in_q2:
        raise OutOfRange(f"{r} is not in (0,1]")
    return balanced_product([chain.link(i) for i in expansion(r)])


def v_plus(chain: Chain, q: Dyadic) -> Entourage:
    """Limit entourage over the stabilization grid: the balanced product of
    the expansion entries with one trailing stabilized link appended."""
    if q.is_one:
        return full_relation(chain.n)
    if q.is_zero:
        return chain.links[-1]
    if q.exp > chain.stab:
        raise OutOfRange("limit entourages live on the stabilization grid")
    entries = [chain.link(i) for i in expansion(q)]
    entries.append(chain.links[-1])
    return balanced_product(entries)


def grid(chain: Chain) -> list[Dyadic]:
    """The closed evaluation grid {0} + {k/2^m} + {1}, ascending."""
    m = chain.stab
    if m > STAB_CAP:
        raise CarrierTooLarge(f"stabilization grid capped at 2^{STAB_CAP}")
    out = [Dyadic.zero()]
    out.extend(Dyadic(k, m) for k in range(1, 1 << m))
    out.append(Dyadic.one())
    return out


def eval_d(chain: Chain) -> Premetric:
    """Exact infimum premetric of the chain, evaluated on the closed grid."""
    n = chain.n
    vals: list[list[Optional[Dyadic]]] = [[None] * n for _ in range(n)]
    remaining = n * n
    for q in grid(chain):
        rel = v_plus(chain, q)
        for x in range(n):
            row = rel.rows[x]
            for y in bits(row):
                if vals[x][y] is None:
                    vals[x][y] = q
                    remaining -= 1
        if not remaining:
            break
    assert not remaining, "V_1 is the full relation, every pair gets a value"
    return Premetric(n, tuple(tuple(row) for row in vals))  # type: ignore[arg-type]


def eval_d_truncated(chain: Chain, depth: int) -> Premetric:
    """Depth-limited truncation oracle for the infimum.

    Takes the raw minimum of r over all dyadics of exponent at most ``depth``
    (plus 1) with (x,y) in V_r, computing each V_r directly from its
    expansion.  A pair whose infimum is a limit rather than attained shows up
    here with the extra granularity term 2^-depth: the minimum then has
    exponent exactly ``depth`` (deeper than any attained grid value), and
    subtracting the term recovers the infimum.  The adjustment is forced: the
    raw minimum on the diagonal is 2^-depth, never 0.
    """
    n = chain.n
    if depth <= chain.stab:
        raise OutOfRange("oracle depth must exceed the stabilization index")
    one = Dyadic.one()
    vals: list[list[Dyadic]] = [[one] * n for _ in range(n)]
    for k in range(1, 1 << depth):
        r = Dyadic(k, depth)
        rel = v_family(chain, r)
        for x in range(n):
            for y in bits(rel.rows[x]):
                if r < vals[x][y]:
                    vals[x][y] = r
    step = Dyadic(1, depth)
    for x in range(n):
        for y in range(n):
            if vals[x][y].exp == depth:
                vals[x][y] = vals[x][y].minus(step)
    return Premetric(n, tuple(tuple(row) for row in vals))


def regularize(d: Premetric, space: FinSpace) -> Premetric:
    """d-bar: distance through closures of balls, exact on the value grid."""
    return _modify(d, space, lambda sub: space.closure(sub))


def semiregularize(d: Premetric, space: FinSpace) -> Premetric:
    """d-bar-circle: distance through balls joined with interiors of their closures."""
    return _modify(d, space, lambda sub: sub | space.interior(space.closure(sub)))


def _modify(d: Premetric, space: FinSpace, widen) -> Premetric:
    if d.n != space.n:
        raise SizeMismatch("premetric and space disagree on carrier size")
    n = d.n
    rows = []
    for x in range(n):
        out: list[Optional[Dyadic]] = [None] * n
        left = n
        for v in d.row_thresholds(x):
            w = widen(d.sublevel(x, v))
            for y in bits(w):
                if out[y] is None:
                    out[y] = v
                    left -= 1
            if not left:
                break
        assert not left, "the widened top sublevel covers the carrier"
        rows.append(tuple(out))
    return Premetric(n, tuple(rows))  # type: ignore[arg-type]


def dist_fn(
    d: Premetric, space: FinSpace, a: int, variant: str = "plain"
) -> tuple[Dyadic, ...]:
    """Set-distance function d_A (or its reg/semireg modification), pointwise exact."""
    if d.n != space.n:
        raise SizeMismatch("premetric and space disagree on carrier size")
    space.check_subset(a)
    if a == 0:
        raise EmptySet("distance functions need a non-empty set")
    n = d.n
    if variant == "plain":
        return tuple(min(d.values[x][y] for x in bits(a)) for y in range(n))
    if variant not in ("reg", "semireg"):
        raise ValueError(f"unknown variant {variant!r}")
    thresholds = sorted({v for x in bits(a) for v in d.values[x]})
    out: list[Optional[Dyadic]] = [None] * n
    left = n
    for v in thresholds:
        sub = 0
        for x in bits(a):
            sub |= d.sublevel(x, v)
        w = space.closure(sub) if variant == "reg" else sub | space.interior(space.closure(sub))
        for y in bits(w):
            if out[y] is None:
                out[y] = v
                left -= 1
        if not left:
            break
    assert not left
    return tuple(out)  # type: ignore[return-value]


@dataclass(frozen=True)
class PremetricAxioms:
    separated: bool  # (M2)
    symmetric: bool  # (M3)
    triangle: bool  # (M4)

    @property
    def labels(self) -> tuple[str, ...]:
        out = ["premetric"]
        if self.separated and self.symmetric:
            out.append("symmetric")
        if self.triangle:
            out.append("quasi-pseudometric")
            if self.separated:
                out.append("quasi-metric")
            if self.symmetric:
                out.append("pseudometric")
            if self.separated and self.symmetric:
                out.append("metric")
        return tuple(out)


def classify_premetric(d: Premetric) -> PremetricAxioms:
    """Exhaustive (M2)/(M3)/(M4) flags; (M1) holds by construction."""
    n = d.n
    separated = all(
        not d.values[x][y].is_zero for x in range(n) for y in range(n) if x != y
    )
    symmetric = all(
        d.values[x][y] == d.values[y][x] for x in range(n) for y in range(x + 1, n)
    )
    triangle = all(
        le_sum(d.values[x][z], d.values[x][y], d.values[y][z])
        for x in range(n)
        for y in range(n)
        for z in range(n)
    )
    return PremetricAxioms(separated, symmetric, triangle)


@dataclass(frozen=True)
class ContinuityRecord:
    open_balls: bool
    closed_balls: bool
    right_continuous: bool
    left_continuous: bool
    continuous: bool
    dist_continuous: Optional[bool] = None
    reg_dist_continuous: Optional[bool] = None
    semireg_dist_continuous: Optional[bool] = None

    @property
    def separately_continuous(self) -> bool:
        return self.right_continuous and self.left_continuous


def classify_continuity(
    d: Premetric, space: FinSpace, dist_variants: bool = True
) -> ContinuityRecord:
    """Ball and continuity flags of a premetric on a space.

    The ball maps are step functions of epsilon, so quantification runs over
    the finite value grid.  The dist-continuity flags sweep all non-empty
    subsets and are capped accordingly.
    """
    if d.n != space.n:
        raise SizeMismatch("premetric and space disagree on carrier size")
    n = d.n
    open_balls = True
    closed_balls = True
    for x in range(n):
        for v in d.row_thresholds(x):
            sub = d.sublevel(x, v)
            if not space.is_open(sub):
                open_balls = False
            if not space.is_closed(sub):
                closed_balls = False
    right = all(space.is_continuous(d.values[x]) for x in range(n))
    left = all(
        space.is_continuous([d.values[x][y] for x in range(n)]) for y in range(n)
    )
    jointly = True
    for x in range(n):
        for y in range(n):
            v = d.values[x][y]
            if any(
                d.values[xx][yy] != v
                for xx in bits(space.min_nbhd(x))
                for yy in bits(space.min_nbhd(y))
            ):
                jointly = False
                break
        if not jointly:
            break
    dist = reg_dist = semireg_dist = None
    if dist_variants:
        if n > DIST_SWEEP_CAP:
            raise CarrierTooLarge(f"dist-continuity sweep capped at {DIST_SWEEP_CAP} points")
        dist = reg_dist = semireg_dist = True
        for a in range(1, 1 << n):
            if dist and not space.is_continuous(dist_fn(d, space, a, "plain")):
                dist = False
            if reg_dist and not space.is_continuous(dist_fn(d, space, a, "reg")):
                reg_dist = False
            if semireg_dist and not space.is_continuous(dist_fn(d, space, a, "semireg")):
                semireg_dist = False
            if not (dist or reg_dist or semireg_dist):
                break
    return ContinuityRecord(
        open_balls=open_balls,
        closed_balls=closed_balls,
        right_continuous=right,
        left_continuous=left,
        continuous=jointly,
        dist_continuous=dist,
        reg_dist_continuous=reg_dist,
        semireg_dist_continuous=semireg_dist,
    )


def ball_topology(ds: Sequence[Premetric], n: int) -> FinSpace:
    """Topology generated by the open balls of a premetric family."""
    subbase = []
    for d in ds:
        if d.n != n:
            raise SizeMismatch("family members disagree on carrier size")
        for x in range(n):
            for v in d.row_thresholds(x):
                subbase.append(d.sublevel(x, v))
    return mk_space(n, subbase)


def combine(ds: Sequence[Premetric]) -> Premetric:
    """Single premetric max_i min(d_i, 2^-i) from a finite family (1-based i).

    When every input satisfies the triangle inequality the combination does
    too and generates the same ball topology as the family; both facts are
    asserted.
    """
    if not ds:
        raise ValueError("combine needs at least one premetric")
    n = ds[0].n
    for d in ds:
        if d.n != n:
            raise SizeMismatch("family members disagree on carrier size")
    vals = []
    for x in range(n):
        row = []
        for y in range(n):
            best = Dyadic.zero()
            for i, d in enumerate(ds, start=1):
                cap = Dyadic(1, i)
                term = min(d.values[x][y], cap)
                if best < term:
                    best = term
            row.append(best)
        vals.append(tuple(row))
    out = Premetric(n, tuple(vals))
    if all(classify_premetric(d).triangle for d in ds):
        assert classify_premetric(out).triangle, "max-min combination must keep (M4)"
        assert ball_topology([out], n) == ball_topology(ds, n), (
            "combination must generate the family ball topology"
        )
    return out


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    item: Optional[int]
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""


@dataclass(frozen=True)
class MetricBundle:
    """Everything one run of the synthesis produced, plus the claim report."""

    base: EntourageBase
    space: FinSpace
    target: Entourage
    chain: Chain
    d: Premetric
    d_reg: Premetric
    d_semireg: Premetric
    rotund: dict
    report: tuple[CheckResult, ...]

    def failures(self) -> list[CheckResult]:
        return [c for c in self.report if c.status == "fail"]

    @property
    def all_passed(self) -> bool:
        return not self.failures()


def _deep_values(depth: int) -> list[Dyadic]:
    return sorted({Dyadic(k, depth) for k in range(1, 1 << depth)})


def verify_theorem_main(
    base: EntourageBase, target: Entourage, space: Optional[FinSpace] = None
) -> MetricBundle:
    """Run the synthesis for one target entourage and check every claim.

    The base is saturated to a multiplicative family if needed.  Conditional
    claims whose rotundness (or symmetry) hypothesis fails are reported as
    skipped, not failed.
    """
    from .quniform import induced_topology

    work = base if base.is_multiplicative else saturate_mult(base)
    if space is None:
        space = induced_topology(work)
    chain = build_chain(work, target)
    return verify_bundle(work, target, chain, space)


def verify_bundle(
    base: EntourageBase, target: Entourage, chain: Chain, space: FinSpace
) -> MetricBundle:
    """Claim-by-claim verification for one admissible chain.

    The chain may be handcrafted; its links must be entourages of the
    quasi-uniformity generated by ``base`` with ``space`` the induced
    topology, or the theorem content does not apply.
    """
    work = base
    m = chain.stab
    d = eval_d(chain)
    d_reg = regularize(d, space)
    d_semireg = semiregularize(d, space)
    rotund = rotund_flags(work, space)
    symmetric = work.is_symmetric

    cache: dict[Dyadic, Entourage] = {}

    def v_of(r: Dyadic) -> Entourage:
        if r not in cache:
            cache[r] = v_family(chain, r)
        return cache[r]

    checks: list[CheckResult] = []
    deep = _deep_values(m + 2)

    # Claim 2.2: V_x inside the cube of the first chain entry inside U.
    ok = True
    detail = ""
    for r in deep:
        first = chain.link(expansion(r)[0])
        cube = first.power(3)
        if not (cube.contains(v_of(r)) and target.contains(cube)):
            ok, detail = False, f"r={r}"
            break
    checks.append(CheckResult("claim_2_2", 1, "pass" if ok else "fail", detail))

    # Claim 2.3 / item 1: V_q o V_r inside V_{q+r}, all inside U, V_1 full.
    ok = True
    detail = ""
    for q in deep:
        for r in deep:
            if not sum_lt_one(q, r):
                continue
            if not v_of(q.plus(r)).contains(v_of(q).compose(v_of(r))):
                ok, detail = False, f"q={q} r={r}"
                break
        if not ok:
            break
    if ok:
        for q in deep:
            if not target.contains(v_of(q)):
                ok, detail = False, f"V_{q} escapes the target"
                break
        if ok and v_family(chain, Dyadic.one()) != full_relation(chain.n):
            ok, detail = False, "V_1 must be the full relation"
    checks.append(CheckResult("claim_2_3", 1, "pass" if ok else "fail", detail))

    cl_cache: dict[Dyadic, tuple[Entourage, Relation, Relation]] = {}

    def ops_of(r: Dyadic) -> tuple[Entourage, Relation, Relation]:
        if r not in cl_cache:
            cl_cache[r] = topo_ops(v_of(r), space)
        return cl_cache[r]

    # Claim 2.4 / item 2: point-rotund gives cl V_r inside intcl V_q for r < q.
    if not rotund["point"]:
        checks.append(CheckResult("claim_2_4", 2, "skip", "hypothesis-not-met: point-rotund"))
    else:
        ok = True
        detail = ""
        for r in deep:
            for q in deep:
                if not r < q:
                    continue
                if not ops_of(q)[2].contains(ops_of(r)[0]):
                    ok, detail = False, f"r={r} q={q}"
                    break
            if not ok:
                break
        checks.append(CheckResult("claim_2_4", 2, "pass" if ok else "fail", detail))

    # Claim 2.5 / item 3: set-rotund gives B(cl A, V_r) inside intcl B(A, V_q).
    if not rotund["set"]:
        checks.append(CheckResult("claim_2_5", 3, "skip", "hypothesis-not-met: set-rotund"))
    else:
        ok = True
        detail = ""
        for r in deep:
            vr = v_of(r)
            for q in deep:
                if not r < q:
                    continue
                vq = v_of(q)
                for a in range(1, 1 << space.n):
                    lhs = vr.ball(space.closure(a))
                    rhs = space.interior(space.closure(vq.ball(a)))
                    if lhs & ~rhs:
                        ok, detail = False, f"A={a:#x} r={r} q={q}"
                        break
                if not ok:
                    break
            if not ok:
                break
        checks.append(CheckResult("claim_2_5", 3, "pass" if ok else "fail", detail))

    # Claim 2.6 / item 4: delta-rotund composes interiors of closures.
    if not rotund["delta"]:
        checks.append(CheckResult("claim_2_6", 4, "skip", "hypothesis-not-met: delta-rotund"))
    else:
        ok = True
        detail = ""
        target_intcl = topo_ops(target, space)[2]
        for p in deep:
            for q in deep:
                for r in deep:
                    if not sum_lt(p, q, r):
                        continue
                    mid = ops_of(p)[0].compose(ops_of(q)[0])
                    if not (
                        mid.contains(ops_of(p)[2].compose(ops_of(q)[2]))
                        and ops_of(r)[2].contains(mid)
                        and target_intcl.contains(ops_of(r)[2])
                    ):
                        ok, detail = False, f"p={p} q={q} r={r}"
                        break
                if not ok:
                    break
            if not ok:
                break
        checks.append(CheckResult("claim_2_6", 4, "pass" if ok else "fail", detail))

    # Claim 2.7 / item 5: d is a U-uniform quasi-pseudometric with open balls,
    # [d] below 1 inside the target.
    axioms = classify_premetric(d)
    cont_d = classify_continuity(d, space, dist_variants=space.n <= DIST_SWEEP_CAP)
    ok = (
        axioms.triangle
        and cont_d.open_balls
        and is_u_uniform(work, d)
        and target.contains(d.below(Dyadic.one()))
    )
    checks.append(CheckResult("claim_2_7", 5, "pass" if ok else "fail"))

    # Item 6: entrywise ordering of the modifications.
    ok = d_reg.entrywise_le(d_semireg) and d_semireg.entrywise_le(d)
    checks.append(CheckResult("item_6", 6, "pass" if ok else "fail"))

    # Claims 2.8 / 2.9, items 7 and 8: closed forms and ball/uniformity facts.
    target_cl, _, target_intcl = topo_ops(target, space)
    g = grid(chain)

    def grid_min(widen) -> Premetric:
        vals: list[list[Optional[Dyadic]]] = [[None] * space.n for _ in range(space.n)]
        left = space.n * space.n
        for q in g:
            rel = widen(v_plus(chain, q))
            for x in range(space.n):
                for y in bits(rel.rows[x]):
                    if vals[x][y] is None:
                        vals[x][y] = q
                        left -= 1
            if not left:
                break
        assert not left
        return Premetric(space.n, tuple(tuple(r) for r in vals))  # type: ignore[arg-type]

    formula_reg = grid_min(lambda rel: topo_ops(rel, space)[0])
    cont_reg = classify_continuity(d_reg, space, dist_variants=space.n <= DIST_SWEEP_CAP)
    ok = (
        formula_reg == d_reg
        and cont_reg.closed_balls
        and is_u_uniform(work, d_reg)
        and target_cl.contains(d_reg.below(Dyadic.one()))
    )
    checks.append(CheckResult("claim_2_8", 7, "pass" if ok else "fail"))

    formula_semireg = grid_min(lambda rel: topo_ops(rel, space)[2])
    cont_semireg = classify_continuity(d_semireg, space, dist_variants=space.n <= DIST_SWEEP_CAP)
    ok = (
        formula_semireg == d_semireg
        and cont_semireg.open_balls
        and is_u_uniform(work, d_semireg)
        and target_intcl.contains(d_semireg.below(Dyadic.one()))
    )
    checks.append(CheckResult("claim_2_9", 8, "pass" if ok else "fail"))

    # Claim 2.10 / item 9: point-rotund collapses the modifications and makes
    # them right-continuous.
    if not rotund["point"]:
        checks.append(CheckResult("claim_2_10", 9, "skip", "hypothesis-not-met: point-rotund"))
    else:
        ok = d_reg == d_semireg and cont_reg.right_continuous
        checks.append(CheckResult("claim_2_10", 9, "pass" if ok else "fail"))

    # Claim 2.11 / item 10: set-rotund makes d and d-bar dist-continuous
    # through closures.
    if not rotund["set"]:
        checks.append(CheckResult("claim_2_11", 10, "skip", "hypothesis-not-met: set-rotund"))
    elif cont_d.reg_dist_continuous is None:
        checks.append(CheckResult("claim_2_11", 10, "skip", "carrier too large for the subset sweep"))
    else:
        ok = cont_d.reg_dist_continuous and bool(cont_reg.reg_dist_continuous)
        checks.append(CheckResult("claim_2_11", 10, "pass" if ok else "fail"))

    # Claim 2.12 / item 11: delta-rotund gives the triangle inequality for d-bar.
    if not rotund["delta"]:
        checks.append(CheckResult("claim_2_12", 11, "skip", "hypothesis-not-met: delta-rotund"))
    else:
        ok = d_reg == d_semireg and classify_premetric(d_reg).triangle
        checks.append(CheckResult("claim_2_12", 11, "pass" if ok else "fail"))

    # Claim 2.13 / item 12: a symmetric base collapses everything to one
    # continuous pseudometric.
    if not symmetric:
        checks.append(CheckResult("claim_2_13", 12, "skip", "hypothesis-not-met: symmetric base"))
    else:
        ok = (
            d == d_reg == d_semireg
            and axioms.symmetric
            and axioms.triangle
            and cont_d.continuous
        )
        checks.append(CheckResult("claim_2_13", 12, "pass" if ok else "fail"))

    return MetricBundle(
        base=work,
        space=space,
        target=target,
        chain=chain,
        d=d,
        d_reg=d_reg,
        d_semireg=d_semireg,
        rotund=rotund,
        report=tuple(checks),
    )

"""Verification suites, the counterexample search harness, and reports.

Reports carry no timing or host information: the JSON rendering is a pure
function of (suite, scope, seed), so runs with different worker counts are
byte-identical.  Parallel execution maps work items through an ordered pool
and merges in submission order.
"""

from __future__ import annotations

import ast
import multiprocessing
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from ..dyadic import Dyadic
from ..finspace import (
    FinSpace,
    IMPLICATIONS,
    SeparationRecord,
    bits,
    diagram_violations,
    mk_space,
)
from ..metrize import (
    ball_topology,
    classify_continuity,
    classify_premetric,
    combine,
    dist_fn,
    eval_d_truncated,
    regularize,
    semiregularize,
    verify_theorem_main,
    Premetric,
)
from ..monoid import (
    TopMonoid,
    MultiplicationDiscontinuous,
    NotAssociative,
    UnitLawFails,
    canonical_uniformity,
    group_checks,
    is_balanced,
    mul_continuous_definitional,
    shift_openness,
    synth_subinvariant,
    unit_kind,
    uniformity_equivalences,
    validate_monoid,
)
from ..quniform import (
    EntourageBase,
    induced_topology,
    is_u_uniform,
    rotund_check,
    rotund_flags,
    saturate_mult,
    space_rotund_flags,
    uniform_regularity,
    validate_base,
)
from ..relalg import Entourage, from_pairs, full_relation
from .catalog import load_catalog
from .enumeration import (
    KNOWN_TOPOLOGY_COUNTS,
    count_topologies_oracle,
    enumerate_topologies,
    groups_of_order,
)
from .serialize import canonical_dumps, space_to_obj

REPORT_SCHEMA = "qtop.report.v1"

SUITES = ("claims", "separations", "monoids", "rotund")

SEARCH_FLAGS = tuple(
    [
        "t0",
        "t1",
        "t2",
        "semi_hausdorff",
        "functionally_hausdorff",
        "regular",
        "semiregular",
        "completely_regular",
        "t3",
        "semi_t3",
        "tychonoff",
        "point_rotund",
        "set_rotund",
        "delta_rotund",
        "rotund",
    ]
)


class UnknownSuite(ValueError):
    pass


class BudgetExceeded(ValueError):
    pass


class BadPredicate(ValueError):
    pass


@dataclass(frozen=True)
class Entry:
    entry_id: str
    status: str  # pass | fail | skip | info
    detail: str = ""


@dataclass(frozen=True)
class Report:
    suite: str
    scope: str
    seed: int
    entries: tuple[Entry, ...]

    @property
    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skip": 0, "info": 0}
        for e in self.entries:
            out[e.status] = out.get(e.status, 0) + 1
        return out

    @property
    def failed(self) -> bool:
        return self.counts["fail"] > 0

    def to_obj(self) -> dict:
        return {
            "schema_version": REPORT_SCHEMA,
            "suite": self.suite,
            "scope": self.scope,
            "seed": self.seed,
            "results": [
                {"id": e.entry_id, "status": e.status, "detail": e.detail}
                for e in self.entries
            ],
            "summary": self.counts,
        }

    def to_json(self) -> str:
        return canonical_dumps(self.to_obj())

    def to_text(self) -> str:
        lines = [f"suite {self.suite} (scope={self.scope}, seed={self.seed})"]
        for e in self.entries:
            mark = {"pass": "PASS", "fail": "FAIL", "skip": "SKIP", "info": "INFO"}[e.status]
            detail = f"  {e.detail}" if e.detail else ""
            lines.append(f"[{mark}] {e.entry_id}{detail}")
        c = self.counts
        lines.append(
            f"summary: {c['pass']} pass, {c['fail']} fail, {c['skip']} skip, {c['info']} info"
        )
        return "\n".join(lines) + "\n"


def _entry(entry_id: str, ok: bool, detail: str = "") -> Entry:
    return Entry(entry_id, "pass" if ok else "fail", detail if not ok else "")


# ---------------------------------------------------------------------------
# parallel plumbing: items are (tag, *payload); workers resolve tags through
# the registry, and pool.map keeps submission order, so merges are stable.

_ITEM_FUNCS: dict[str, Callable] = {}


def _register(tag: str):
    def deco(fn):
        _ITEM_FUNCS[tag] = fn
        return fn

    return deco


def _exec_item(item: tuple) -> list[Entry]:
    return _ITEM_FUNCS[item[0]](*item[1:])


def _run_items(items: Sequence[tuple], workers: int) -> list[Entry]:
    if workers <= 1 or len(items) <= 1:
        results = [_exec_item(it) for it in items]
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=min(workers, len(items))) as pool:
            results = pool.map(_exec_item, items, chunksize=1)
    out: list[Entry] = []
    for r in results:
        out.extend(r)
    return out


# ---------------------------------------------------------------------------
# distance-function laws shared by the claims suite and the random battery


def _distance_law_entries(prefix: str, d: Premetric, space: FinSpace) -> list[Entry]:
    entries = []
    cont = classify_continuity(d, space)
    d_reg = regularize(d, space)
    d_semireg = semiregularize(d, space)
    cont_reg = classify_continuity(d_reg, space)
    cont_semireg = classify_continuity(d_semireg, space)

    ok = cont_reg.closed_balls and (not cont.open_balls or cont_semireg.open_balls)
    entries.append(_entry(f"{prefix}/prop_1_4n", ok))

    if space.n <= 8:
        ok = True
        detail = ""
        for a in range(1, 1 << space.n):
            if dist_fn(d_reg, space, a, "reg") != dist_fn(d, space, a, "reg") or dist_fn(
                d_semireg, space, a, "semireg"
            ) != dist_fn(d, space, a, "semireg"):
                ok, detail = False, f"A={a:#x}"
                break
        entries.append(_entry(f"{prefix}/prop_1_4m", ok, detail))

    if not cont.open_balls:
        entries.append(Entry(f"{prefix}/prop_1_2n", "skip", "premetric lacks open balls"))
    else:
        ok = True
        detail = ""
        all_reg_eq_semireg = True
        for a in range(1, 1 << space.n):
            fa = dist_fn(d, space, a, "plain")
            fr = dist_fn(d, space, a, "reg")
            fs = dist_fn(d, space, a, "semireg")
            e1 = fr == fs
            e2 = space.is_continuous(fr)
            e3 = space.is_continuous(fs)
            f4 = space.is_continuous(fa)
            f5 = fr == fs == fa
            if not (e1 == e2 == e3 and f4 == f5 and (not f4 or e1)):
                ok, detail = False, f"A={a:#x}"
                break
            all_reg_eq_semireg = all_reg_eq_semireg and e1
        entries.append(_entry(f"{prefix}/prop_1_2n", ok, detail))
        if ok:
            c13 = (
                all_reg_eq_semireg
                == bool(cont.reg_dist_continuous)
                == bool(cont.semireg_dist_continuous)
            ) and (
                not cont.dist_continuous
                or (bool(cont.reg_dist_continuous) and cont.right_continuous)
            )
            entries.append(_entry(f"{prefix}/cor_1_3n", c13))
        if cont.reg_dist_continuous:
            ok = (
                d_reg == d_semireg
                and cont_reg.right_continuous
                and bool(cont_reg.reg_dist_continuous)
            )
            entries.append(_entry(f"{prefix}/cor_1_6n", ok))
        else:
            entries.append(
                Entry(f"{prefix}/cor_1_6n", "skip", "hypothesis-not-met: reg-dist continuity")
            )
    return entries


def _random_open_ball_premetric(space: FinSpace, rng: random.Random) -> Premetric:
    """Random premetric whose strict balls are open: values are forced to be
    non-increasing along specialization by a fixpoint repair."""
    n = space.n
    pool = [Dyadic.zero(), Dyadic(1, 2), Dyadic(1, 1), Dyadic(3, 2), Dyadic.one()]
    vals = [[rng.choice(pool) for _ in range(n)] for _ in range(n)]
    for x in range(n):
        vals[x][x] = Dyadic.zero()
    changed = True
    while changed:
        changed = False
        for x in range(n):
            for z in range(n):
                for y in bits(space.min_nbhd(z)):
                    if vals[x][z] < vals[x][y]:
                        vals[x][y] = vals[x][z]
                        changed = True
    return Premetric(n, tuple(tuple(row) for row in vals))


# ---------------------------------------------------------------------------
# claims suite

GOLDEN_D = ((Dyadic.zero(), Dyadic.zero()), (Dyadic.one(), Dyadic.zero()))


@_register("claims_base")
def _claims_base_item(name: str, base: EntourageBase) -> list[Entry]:
    entries = []
    work = base if base.is_multiplicative else saturate_mult(base)
    space = induced_topology(work)
    family = []
    for idx, member in enumerate(base.members):
        prefix = f"claims/{name}/U{idx}"
        bundle = verify_theorem_main(work, member, space)
        for c in bundle.report:
            entries.append(Entry(f"{prefix}/{c.check_id}", c.status, c.detail))
        oracle = eval_d_truncated(bundle.chain, bundle.chain.stab + 3)
        entries.append(_entry(f"{prefix}/oracle", oracle == bundle.d))
        ok = True
        for p in (bundle.d, bundle.d_reg, bundle.d_semireg):
            if is_u_uniform(work, p) and classify_premetric(p).triangle:
                if not classify_continuity(p, space, dist_variants=False).open_balls:
                    ok = False
        entries.append(_entry(f"{prefix}/prop_1_3", ok))
        entries.extend(_distance_law_entries(prefix, bundle.d, space))
        family.append(bundle.d)

    # the synthesized family reproduces the quasi-uniformity: each member
    # traps a sublevel relation and each sublevel relation traps a member
    ok = all(
        base.members[i].contains(family[i].below(Dyadic.one())) for i in range(len(family))
    ) and all(is_u_uniform(work, d) for d in family)
    entries.append(_entry(f"claims/{name}/theorem_3_1", ok))

    if rotund_check(work, space, "point").holds:
        reg = uniform_regularity(work, space)
        ok = (reg.semiregular == reg.regular == (reg.completely_regular is True))
        entries.append(_entry(f"claims/{name}/theorem_3_4", ok))
    else:
        entries.append(
            Entry(f"claims/{name}/theorem_3_4", "skip", "hypothesis-not-met: point-rotund")
        )
    return entries


@_register("claims_golden")
def _claims_golden_item(base: EntourageBase) -> list[Entry]:
    bundle = verify_theorem_main(base, base.members[0])
    zero = Dyadic.zero()
    flat = all(v == zero for row in bundle.d_reg.values for v in row) and all(
        v == zero for row in bundle.d_semireg.values for v in row
    )
    ax = classify_premetric(bundle.d)
    cont = classify_continuity(bundle.d, bundle.space, dist_variants=False)
    cont_reg = classify_continuity(bundle.d_reg, bundle.space, dist_variants=False)
    ok = (
        bundle.d.values == GOLDEN_D
        and flat
        and ax.triangle
        and not ax.symmetric
        and not ax.separated
        and not cont.right_continuous
        and cont_reg.right_continuous
    )
    return [_entry("claims/golden_sierpinski", ok)]


@_register("claims_random")
def _claims_random_item(seed: int, count: int) -> list[Entry]:
    rng = random.Random(seed)
    spaces: list[FinSpace] = []
    for n in (2, 3, 4):
        spaces.extend(enumerate_topologies(n))
    failures = []
    for i in range(count):
        space = rng.choice(spaces)
        d = _random_open_ball_premetric(space, rng)
        sub = _distance_law_entries(f"claims/random/{i}", d, space)
        failures.extend(e for e in sub if e.status == "fail")
    detail = failures[0].entry_id if failures else f"{count} premetrics checked"
    return [Entry("claims/random_premetrics", "fail" if failures else "pass", detail)]


def _suite_claims(scope: str, seed: int, workers: int) -> list[Entry]:
    catalog = load_catalog()
    items: list[tuple] = []
    for name, inst in sorted(catalog.items()):
        if inst.kind == "base":
            items.append(("claims_base", name, inst.value))
    items.append(("claims_golden", catalog["base:sierpinski_step"].value))
    items.append(("claims_random", seed, 100))
    return _run_items(items, workers)


# ---------------------------------------------------------------------------
# separations suite


def _two_valued_separation_oracle(space: FinSpace) -> tuple[bool, bool]:
    """functionally-Hausdorff and completely-regular, decided by quantifying
    over clopen sets (two-valued continuous witnesses)."""
    clopens = [o for o in space.opens if space.is_closed(o)]
    func_h = all(
        any(((c >> x) & 1) != ((c >> y) & 1) for c in clopens)
        for x in range(space.n)
        for y in range(x + 1, space.n)
    )
    compl_reg = all(
        any((c >> x) & 1 and c & ~space.min_nbhd(x) == 0 for c in clopens)
        for x in range(space.n)
    )
    return func_h, compl_reg


def _continuity_definitional(space: FinSpace, values: Sequence) -> bool:
    """Preimages of open rays are open."""
    for v in set(values):
        below = 0
        above = 0
        for x, w in enumerate(values):
            if w < v:
                below |= 1 << x
            if w > v:
                above |= 1 << x
        if not (space.is_open(below) and space.is_open(above)):
            return False
    return True


@_register("sep_level")
def _sep_level_item(n: int, crosscheck: bool) -> list[Entry]:
    entries = []
    count = 0
    bad_diagram = 0
    bad_cross = 0
    bad_cont = 0
    half = Dyadic(1, 1)
    one = Dyadic.one()
    zero = Dyadic.zero()
    fn_pool = (zero, half, one)
    for space in enumerate_topologies(n):
        count += 1
        rec = space.classify()
        if diagram_violations(rec):
            bad_diagram += 1
        if crosscheck:
            func_h, compl_reg = _two_valued_separation_oracle(space)
            if rec.functionally_hausdorff != func_h or rec.completely_regular != compl_reg:
                bad_cross += 1
            for pick in range(3**n):
                f = []
                p = pick
                for _ in range(n):
                    f.append(fn_pool[p % 3])
                    p //= 3
                if space.is_continuous(f) != _continuity_definitional(space, f):
                    bad_cont += 1
                    break
    expected = KNOWN_TOPOLOGY_COUNTS[n]
    entries.append(
        _entry(f"separations/counts/n{n}", count == expected, f"got {count}, want {expected}")
    )
    if n <= 4:
        oracle = count_topologies_oracle(n)
        entries.append(
            _entry(f"separations/oracle/n{n}", count == oracle, f"oracle {oracle}")
        )
    entries.append(
        _entry(f"separations/diagram/n{n}", bad_diagram == 0, f"{bad_diagram} violations")
    )
    if crosscheck:
        entries.append(
            _entry(
                f"separations/classifier_crosscheck/n{n}",
                bad_cross == 0 and bad_cont == 0,
                f"{bad_cross} flag mismatches, {bad_cont} continuity mismatches",
            )
        )
    return entries


@_register("sep_nonreversal")
def _sep_nonreversal_item(cap: int) -> list[Entry]:
    found: dict[tuple[str, str], str] = {}
    for n in range(1, cap + 1):
        for idx, space in enumerate(enumerate_topologies(n)):
            flags = space.classify().flags()
            for a, b in IMPLICATIONS:
                if (a, b) not in found and flags[b] and not flags[a]:
                    found[(a, b)] = f"witnessed at n={n} #{idx}"
        if len(found) == len(IMPLICATIONS):
            break
    return [
        Entry(
            f"separations/nonreversal/{b}_not_{a}",
            "info",
            found.get((a, b), f"no witness on carriers up to {cap} points"),
        )
        for a, b in IMPLICATIONS
    ]


def _suite_separations(scope: str, seed: int, workers: int) -> list[Entry]:
    cap = _scope_level(scope, default=4)
    items: list[tuple] = [("sep_level", n, n <= 4) for n in range(1, cap + 1)]
    items.append(("sep_nonreversal", min(cap, 5)))
    return _run_items(items, workers)


# ---------------------------------------------------------------------------
# monoids suite


@_register("monoid_item")
def _monoid_item(name: str, m: TopMonoid) -> list[Entry]:
    entries = []
    prefix = f"monoids/{name}"
    entries.append(_entry(f"{prefix}/continuity_crosscheck", mul_continuous_definitional(m)))
    for eq in uniformity_equivalences(m):
        ok = eq.equivalent and (eq.rotund_when_generating is not False)
        entries.append(
            _entry(
                f"{prefix}/equiv_{eq.which}",
                ok,
                f"generates={eq.generates} unit={eq.unit_flag} shifts={eq.shift_flag} rotund={eq.rotund_when_generating}",
            )
        )

    kinds = unit_kind(m)
    balanced = is_balanced(m)
    if balanced and kinds.open_right_unit:
        shifts = shift_openness(m)
        ok = shifts.left and shifts.right
        if ok and m.space.classify().t1:
            # under T1 the right unit becomes two-sided and an open left unit
            if all(m.prod(m.unit, x) == x for x in range(m.n)):
                two = m if m.unit_side == "two" else TopMonoid(m.space, m.mul, m.unit, "two")
                ok = bool(unit_kind(two).open_left_unit)
            else:
                ok = False
        entries.append(_entry(f"{prefix}/prop_5_7", ok))
    else:
        entries.append(
            Entry(f"{prefix}/prop_5_7", "skip", "hypothesis-not-met: balanced open right unit")
        )

    for side, flag in (("left", kinds.open_right_unit), ("right", kinds.open_left_unit)):
        if not flag:
            entries.append(
                Entry(f"{prefix}/synth_{side}", "skip", f"hypothesis-not-met: open unit for {side}")
            )
            continue
        family = []
        ok_all = True
        detail = ""
        for idx, u in enumerate(m.opens_at_unit()):
            sb = synth_subinvariant(m, u, side)
            if not (sb.all_passed and sb.bundle.all_passed):
                ok_all = False
                detail = f"U{idx}"
                break
            family.append(sb.bundle)
        entries.append(_entry(f"{prefix}/synth_{side}", ok_all, detail))
        if side == "left" and ok_all and family:
            ds = [b.d for b in family]
            entries.append(
                _entry(f"{prefix}/cor_6_2", ball_topology(ds, m.n) == m.space)
            )
            if m.space.classify().semiregular:
                regs = [b.d_reg for b in family]
                entries.append(
                    _entry(
                        f"{prefix}/cor_6_2_regularized",
                        ball_topology(regs, m.n) == m.space,
                    )
                )
            combined = combine(ds)
            sub_ok = True
            for z in range(m.n):
                for x in range(m.n):
                    for y in range(m.n):
                        if combined.values[x][y] < combined.values[m.prod(z, x)][m.prod(z, y)]:
                            sub_ok = False
            entries.append(
                _entry(
                    f"{prefix}/cor_6_3",
                    sub_ok and ball_topology([combined], m.n) == m.space,
                )
            )

    # group-level checks where the carrier is a group
    from ..monoid import NotAGroup

    try:
        rec = group_checks(m)
        is_group = True
    except NotAGroup:
        is_group = False
    if is_group:
        entries.append(_entry(f"{prefix}/group_inversion", rec.is_topological_group))
        if balanced and kinds.open_right_unit:
            prem = {}
            invariant_ok = True
            for idx, u in enumerate(m.opens_at_unit()):
                sb = synth_subinvariant(m, u, "left")
                prem[f"d{idx}"] = sb.bundle.d
                if not (sb.left_subinvariant and sb.right_subinvariant):
                    invariant_ok = False
            rec2 = group_checks(m, prem)
            ok = (
                invariant_ok
                and rec2.weakly_invariant is not None
                and all(rec2.weakly_invariant.values())
                and rec2.proposition_consistent is not False
            )
            entries.append(_entry(f"{prefix}/group_weak_invariance", ok))
    return entries


@_register("monoid_golden")
def _monoid_golden_item(m: TopMonoid) -> list[Entry]:
    sb = synth_subinvariant(m, 0b11, "left")
    ok = (
        sb.bundle.d.values == GOLDEN_D
        and sb.left_subinvariant
        and sb.ball_in_translate
        and sb.reg_ball_in_hull
        and sb.all_passed
    )
    return [_entry("monoids/sierpinski/golden_synthesis", ok)]


@_register("monoid_group_scan")
def _monoid_group_scan_item(order: int) -> list[Entry]:
    entries = []
    for gname, table in groups_of_order(order):
        para = 0
        bad = 0
        for space in enumerate_topologies(order):
            try:
                m = validate_monoid(space, table, 0)
            except (MultiplicationDiscontinuous, NotAssociative, UnitLawFails):
                continue
            para += 1
            if not group_checks(m).is_topological_group:
                bad += 1
        entries.append(
            _entry(
                f"monoids/group_scan/{gname}",
                bad == 0,
                f"{para} paratopological instances, {bad} with discontinuous inversion",
            )
        )
        if bad == 0:
            entries[-1] = Entry(
                f"monoids/group_scan/{gname}",
                "pass",
                f"{para} paratopological instances, all with continuous inversion",
            )
    return entries


def _suite_monoids(scope: str, seed: int, workers: int) -> list[Entry]:
    catalog = load_catalog()
    items: list[tuple] = []
    for name, inst in sorted(catalog.items()):
        if inst.kind == "monoid":
            items.append(("monoid_item", name.split(":", 1)[1], inst.value))
    items.append(("monoid_golden", catalog["monoid:sierpinski"].value))
    for order in (1, 2, 3, 4):
        items.append(("monoid_group_scan", order))
    return _run_items(items, workers)


# ---------------------------------------------------------------------------
# rotund suite


def _random_symmetric_base(rng: random.Random) -> EntourageBase:
    """A random valid symmetric base: an equivalence member plus random
    symmetric supersets of it."""
    n = rng.randint(2, 5)
    points = list(range(n))
    rng.shuffle(points)
    blocks: list[list[int]] = []
    for p in points:
        if blocks and rng.random() < 0.6:
            rng.choice(blocks).append(p)
        else:
            blocks.append([p])
    pairs = [(x, y) for blk in blocks for x in blk for y in blk if x != y]
    eq = from_pairs(n, pairs)
    members = [eq]
    for _ in range(rng.randint(0, 2)):
        extra = [
            (x, y)
            for x in range(n)
            for y in range(x + 1, n)
            if rng.random() < 0.4
        ]
        sym = from_pairs(n, [(x, y) for x, y in extra] + [(y, x) for x, y in extra])
        members.append(sym.union(eq).as_entourage())
    return validate_base(members)


@_register("rotund_random")
def _rotund_random_item(seed: int, count: int) -> list[Entry]:
    rng = random.Random(seed)
    bad = 0
    detail = ""
    for i in range(count):
        base = _random_symmetric_base(rng)
        assert base.is_symmetric
        space = induced_topology(base)
        res = rotund_check(base if base.is_multiplicative else saturate_mult(base), space, "full")
        if not res.holds:
            bad += 1
            detail = detail or f"case {i}"
    return [
        Entry(
            "rotund/prop_uT_random_symmetric",
            "fail" if bad else "pass",
            detail if bad else f"{count} symmetric bases, all fully rotund",
        )
    ]


@_register("rotund_square")
def _rotund_square_item(name: str, base: EntourageBase) -> list[Entry]:
    work = base if base.is_multiplicative else saturate_mult(base)
    space = induced_topology(work)
    flags = rotund_flags(work, space)
    ok = (
        (not flags["full"] or (flags["delta"] and flags["set"]))
        and (not flags["delta"] or flags["point"])
        and (not flags["set"] or flags["point"])
    )
    return [_entry(f"rotund/square/{name}", ok, str(flags))]


@_register("rotund_symmetric_path")
def _rotund_symmetric_path_item(name: str, base: EntourageBase) -> list[Entry]:
    work = base if base.is_multiplicative else saturate_mult(base)
    space = induced_topology(work)
    ok = True
    for member in base.members:
        bundle = verify_theorem_main(work, member, space)
        ax = classify_premetric(bundle.d)
        cont = classify_continuity(bundle.d, space, dist_variants=False)
        claim = next(c for c in bundle.report if c.check_id == "claim_2_13")
        if not (claim.status == "pass" and ax.symmetric and ax.triangle and cont.continuous):
            ok = False
    return [_entry(f"rotund/claim_2_13/{name}", ok)]


@_register("rotund_probe_t41")
def _rotund_probe_t41_item(cap: int) -> list[Entry]:
    hits = 0
    first = ""
    total = 0
    for n in range(1, cap + 1):
        for idx, space in enumerate(enumerate_topologies(n)):
            total += 1
            flags = space_rotund_flags(space)
            functional = all(
                space.clopen_classes[x]
                & ~space.interior(space.closure(space.min_nbhd(x)))
                == 0
                for x in range(space.n)
            )
            if functional and not flags["point_rotund"]:
                hits += 1
                if not first:
                    first = f"n={n} #{idx}"
    detail = (
        f"{hits} of {total} spaces satisfy the functional conclusion without point-rotundness"
    )
    if first:
        detail += f"; first {first}"
    return [Entry("rotund/probe_t41_converse", "info", detail)]


@_register("rotund_probe_lvr")
def _rotund_probe_lvr_item(name: str, m: TopMonoid) -> list[Entry]:
    try:
        base = canonical_uniformity(m, "LvR")
    except Exception as exc:
        return [Entry(f"rotund/probe_LvR/{name}", "info", f"no base: {exc}")]
    space = induced_topology(base)
    if space != m.space:
        return [Entry(f"rotund/probe_LvR/{name}", "info", "LvR does not generate the topology")]
    flags = rotund_flags(base if base.is_multiplicative else saturate_mult(base), space)
    return [Entry(f"rotund/probe_LvR/{name}", "info", f"rotund flags {flags}")]


def _suite_rotund(scope: str, seed: int, workers: int) -> list[Entry]:
    catalog = load_catalog()
    items: list[tuple] = [("rotund_random", seed, 50)]
    for name, inst in sorted(catalog.items()):
        if inst.kind == "base":
            items.append(("rotund_square", name.split(":", 1)[1], inst.value))
            if inst.value.is_symmetric:
                items.append(("rotund_symmetric_path", name.split(":", 1)[1], inst.value))
    items.append(("rotund_probe_t41", 4))
    for name, inst in sorted(catalog.items()):
        if inst.kind == "monoid" and inst.value.unit_side == "two":
            items.append(("rotund_probe_lvr", name.split(":", 1)[1], inst.value))
    return _run_items(items, workers)


# ---------------------------------------------------------------------------


def _scope_level(scope: str, default: int) -> int:
    if scope == "catalog":
        return default
    for shape in ("enumerated:", "enumerated(", "enumerated "):
        if scope.startswith(shape):
            digits = "".join(ch for ch in scope[len(shape):] if ch.isdigit())
            if digits:
                n = int(digits)
                if 1 <= n <= 5:
                    return n
    raise ValueError(f"bad scope {scope!r}; use 'catalog' or 'enumerated(n)' with n <= 5")


def _normalize_scope(scope: str) -> str:
    if scope == "catalog":
        return scope
    return f"enumerated({_scope_level(scope, 4)})"


_SUITE_FUNCS = {
    "claims": _suite_claims,
    "separations": _suite_separations,
    "monoids": _suite_monoids,
    "rotund": _suite_rotund,
}


def run_suite(name: str, scope: str = "catalog", seed: int = 0, workers: int = 1) -> Report:
    """Execute one invariant battery and collect a deterministic report."""
    if name not in _SUITE_FUNCS:
        raise UnknownSuite(f"unknown suite {name!r}; have {SUITES}")
    entries = _SUITE_FUNCS[name](_normalize_scope(scope), seed, workers)
    return Report(name, _normalize_scope(scope), seed, tuple(entries))


# ---------------------------------------------------------------------------
# search harness


@dataclass(frozen=True)
class SearchSpec:
    """A small predicate search over enumerated spaces."""

    n: int
    predicate: str
    budget: Optional[int] = None
    workers: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.n <= 5:
            raise ValueError("search carriers are capped at 5 points")
        _compile_predicate(self.predicate)


def _compile_predicate(expr: str):
    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise BadPredicate(f"cannot parse predicate: {exc}") from exc
    for node in ast.walk(tree):
        if isinstance(node, (ast.Expression, ast.BoolOp, ast.And, ast.Or, ast.Load)):
            continue
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Not):
            continue
        if isinstance(node, ast.Not):
            continue
        if isinstance(node, ast.Constant) and isinstance(node.value, bool):
            continue
        if isinstance(node, ast.Name):
            if node.id not in SEARCH_FLAGS:
                raise BadPredicate(
                    f"unknown flag {node.id!r}; documented flags: {', '.join(SEARCH_FLAGS)}"
                )
            continue
        raise BadPredicate(f"predicate may only use flags, and/or/not: got {type(node).__name__}")
    return compile(tree, "<predicate>", "eval")


def _space_flags(space: FinSpace) -> dict[str, bool]:
    flags = dict(space.classify().flags())
    flags.update(space_rotund_flags(space))
    return flags


@_register("search_chunk")
def _search_chunk_item(n: int, lo: int, hi: int, predicate: str) -> list[Entry]:
    import json

    code = _compile_predicate(predicate)
    out = []
    for idx, space in enumerate(enumerate_topologies(n)):
        if idx < lo:
            continue
        if idx >= hi:
            break
        if eval(code, {"__builtins__": {}}, _space_flags(space)):
            out.append(
                Entry(
                    f"space:n{n}:{idx:05d}",
                    "info",
                    json.dumps(space_to_obj(space), sort_keys=True, separators=(",", ":")),
                )
            )
    return out


@dataclass(frozen=True)
class SearchFindings:
    spec: SearchSpec
    findings: tuple[Entry, ...]
    examined: int
    partial: bool

    def to_obj(self) -> dict:
        return {
            "schema_version": REPORT_SCHEMA,
            "suite": "search",
            "predicate": self.spec.predicate,
            "n": self.spec.n,
            "examined": self.examined,
            "partial": self.partial,
            "results": [
                {"id": e.entry_id, "status": e.status, "detail": e.detail}
                for e in self.findings
            ],
            "summary": {"findings": len(self.findings)},
        }

    def to_json(self) -> str:
        return canonical_dumps(self.to_obj())

    def to_text(self) -> str:
        lines = [
            f"search n<={self.spec.n} predicate {self.spec.predicate!r}"
            + (" (partial)" if self.partial else "")
        ]
        for e in self.findings:
            lines.append(f"[HIT] {e.entry_id}  {e.detail}")
        lines.append(f"{len(self.findings)} findings over {self.examined} spaces")
        return "\n".join(lines) + "\n"


def search(spec: SearchSpec) -> SearchFindings:
    """Deterministic predicate scan over all labeled topologies up to spec.n."""
    findings: list[Entry] = []
    examined = 0
    partial = False
    for n in range(1, spec.n + 1):
        total = KNOWN_TOPOLOGY_COUNTS[n]
        take = total
        if spec.budget is not None and examined + total > spec.budget:
            take = max(0, spec.budget - examined)
            partial = True
        if take:
            chunk = max(1, (take + max(spec.workers, 1) * 4 - 1) // (max(spec.workers, 1) * 4))
            items = [
                ("search_chunk", n, lo, min(lo + chunk, take), spec.predicate)
                for lo in range(0, take, chunk)
            ]
            findings.extend(_run_items(items, spec.workers))
        examined += take
        if partial:
            break
    return SearchFindings(spec, tuple(findings), examined, partial)

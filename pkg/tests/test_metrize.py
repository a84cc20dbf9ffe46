import random
from fractions import Fraction

import pytest

from qtop.dyadic import Dyadic, OutOfRange
from qtop.finspace import mk_space
from qtop.metrize import (
    Chain,
    EmptySet,
    NoHalving,
    Premetric,
    ball_topology,
    build_chain,
    classify_continuity,
    classify_premetric,
    combine,
    dist_fn,
    eval_d,
    eval_d_truncated,
    regularize,
    semiregularize,
    v_family,
    v_plus,
    verify_bundle,
    verify_theorem_main,
)
from qtop.quniform import induced_topology, is_u_uniform, saturate_mult, validate_base
from qtop.relalg import Entourage, diagonal, from_pairs, full_relation

ZERO, ONE = Dyadic.zero(), Dyadic.one()
HALF, QUARTER = Dyadic(1, 1), Dyadic(1, 2)

D01 = from_pairs(2, [(0, 1)])
SIER_BASE = validate_base([D01])
SIER = induced_topology(SIER_BASE)


def dy(num, exp=0):
    return Dyadic(num, exp)


def pm(rows):
    return Premetric(len(rows), tuple(tuple(r) for r in rows))


GOLDEN = pm([[ZERO, ZERO], [ONE, ZERO]])


def line_entourage(n, k):
    rows = []
    for x in range(n):
        m = 0
        for y in range(x, min(x + k, n - 1) + 1):
            m |= 1 << y
        rows.append(m)
    return Entourage(n, tuple(rows))


def tensor(a, b):
    n = a.n * b.n
    rows = []
    for i in range(a.n):
        for j in range(b.n):
            mask = 0
            for i2 in range(a.n):
                if (a.rows[i] >> i2) & 1:
                    for j2 in range(b.n):
                        if (b.rows[j] >> j2) & 1:
                            mask |= 1 << (i2 * b.n + j2)
            rows.append(mask)
    return Entourage(n, tuple(rows))


# --- chains ------------------------------------------------------------------


def test_build_chain_examples():
    c = build_chain(SIER_BASE, D01)
    assert c.links == (D01,) and c.stab == 1
    b = validate_base([diagonal(2)])
    assert build_chain(b, diagonal(2)).links == (diagonal(2),)


def test_build_chain_rejects_outside_target():
    with pytest.raises(NoHalving):
        build_chain(SIER_BASE, from_pairs(2, [(1, 0)]))


def test_build_chain_stabilizes_at_base_minimum(catalog_bases):
    from qtop.quniform import min_entourage

    for base in catalog_bases.values():
        work = base if base.is_multiplicative else saturate_mult(base)
        tmin = min_entourage(work)
        for u in base.members:
            c = build_chain(work, u)
            assert c.links == (tmin,)


def test_chain_validation():
    n9 = [line_entourage(9, k) for k in (1, 6, 8)]
    Chain(target=n9[2], links=(n9[1], n9[0], diagonal(9)))  # valid
    with pytest.raises(ValueError):
        Chain(target=n9[0], links=(n9[1],))  # U1^3 escapes the target
    with pytest.raises(ValueError):
        Chain(target=n9[2], links=(n9[1], n9[1]))  # U2^6 escapes U1
    with pytest.raises(ValueError):
        Chain(target=full_relation(3), links=(from_pairs(3, [(0, 1), (1, 2)]),))


# --- the V family ------------------------------------------------------------


def test_v_family_examples():
    c = build_chain(SIER_BASE, D01)
    assert v_family(c, HALF) == D01
    assert v_family(c, dy(3, 2)) == D01  # transitivity collapse of T o T o T
    assert v_family(c, ONE) == full_relation(2)
    with pytest.raises(OutOfRange):
        v_family(c, ZERO)


def test_v_plus_grid():
    c = build_chain(SIER_BASE, D01)
    assert v_plus(c, ZERO) == D01
    assert v_plus(c, HALF) == D01
    assert v_plus(c, ONE) == full_relation(2)
    with pytest.raises(OutOfRange):
        v_plus(c, QUARTER)  # below the stabilization grid


# --- the premetric -----------------------------------------------------------


def test_eval_d_golden():
    c = build_chain(SIER_BASE, D01)
    assert eval_d(c) == GOLDEN


def test_eval_d_diagonal_base():
    b = validate_base([diagonal(2)])
    d = eval_d(build_chain(b, diagonal(2)))
    assert d == pm([[ZERO, ONE], [ONE, ZERO]])


def test_eval_d_full_base():
    b = validate_base([full_relation(2)])
    d = eval_d(build_chain(b, full_relation(2)))
    assert d == pm([[ZERO, ZERO], [ZERO, ZERO]])


def test_truncation_oracle_on_deep_chain():
    chain = Chain(
        target=line_entourage(9, 8),
        links=(line_entourage(9, 6), line_entourage(9, 1), diagonal(9)),
    )
    d = eval_d(chain)
    assert d.values[0][1] == QUARTER
    assert d.values[0][3] == HALF
    assert d.values[0][7] == dy(3, 2)
    assert d.values[8][0] == ONE
    assert eval_d_truncated(chain, chain.stab + 3) == d
    # deeper truncations agree as well
    assert eval_d_truncated(chain, chain.stab + 4) == d


def test_truncation_oracle_on_catalog(catalog_bases):
    for base in catalog_bases.values():
        work = base if base.is_multiplicative else saturate_mult(base)
        for u in base.members:
            chain = build_chain(work, u)
            assert eval_d_truncated(chain, chain.stab + 3) == eval_d(chain)


def test_verify_bundle_on_handcrafted_chain():
    t2 = from_pairs(2, [(0, 1)])
    members = [tensor(t2, line_entourage(5, k)) for k in range(5)]
    members[0] = tensor(t2, diagonal(5))
    base = validate_base(members)
    assert base.is_multiplicative
    space = induced_topology(base)
    chain = Chain(
        target=tensor(t2, line_entourage(5, 4)),
        links=(tensor(t2, line_entourage(5, 2)), tensor(t2, diagonal(5))),
    )
    bundle = verify_bundle(base, chain.target, chain, space)
    assert bundle.all_passed
    assert {str(v) for row in bundle.d.values for v in row} == {"0/2^0", "1/2^1", "1/2^0"}
    assert eval_d_truncated(chain, chain.stab + 3) == bundle.d


# --- regularization ----------------------------------------------------------


def test_regularize_examples():
    flat = pm([[ZERO, ZERO], [ZERO, ZERO]])
    assert regularize(GOLDEN, SIER) == flat
    assert semiregularize(GOLDEN, SIER) == flat
    disc = mk_space(2, [{0}, {1}])
    assert regularize(GOLDEN, disc) == GOLDEN
    assert semiregularize(GOLDEN, disc) == GOLDEN
    ind = mk_space(2, [])
    assert regularize(GOLDEN, ind) == flat


def test_dist_fn_examples():
    assert dist_fn(GOLDEN, SIER, 0b11, "plain") == (ZERO, ZERO)
    assert dist_fn(GOLDEN, SIER, 0b10, "plain") == (ONE, ZERO)
    assert dist_fn(GOLDEN, SIER, 0b10, "reg") == (ZERO, ZERO)
    for x in range(2):
        assert dist_fn(GOLDEN, SIER, 1 << x, "plain") == GOLDEN.values[x]
    with pytest.raises(EmptySet):
        dist_fn(GOLDEN, SIER, 0)
    with pytest.raises(ValueError):
        dist_fn(GOLDEN, SIER, 0b01, "bogus")


def test_dist_fn_reg_is_min_of_rows():
    # closures distribute over finite unions, so the reg distance of a set
    # is the pointwise minimum of the reg distances of its points
    rng = random.Random(37)
    spaces = [mk_space(3, [{0}, {0, 1}]), mk_space(3, [{1}, {2}]), SIER]
    pool = [ZERO, QUARTER, HALF, ONE]
    for space in spaces:
        n = space.n
        vals = [[rng.choice(pool) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            vals[i][i] = ZERO
        d = pm(vals)
        dr = regularize(d, space)
        for a in range(1, 1 << n):
            fr = dist_fn(d, space, a, "reg")
            for y in range(n):
                assert fr[y] == min(dr.values[x][y] for x in range(n) if (a >> x) & 1)


# --- classification ----------------------------------------------------------


def test_classify_premetric_examples():
    ax = classify_premetric(GOLDEN)
    assert ax.triangle and not ax.symmetric and not ax.separated
    assert "quasi-pseudometric" in ax.labels and "metric" not in ax.labels

    disc = pm([[ZERO, ONE], [ONE, ZERO]])
    ax2 = classify_premetric(disc)
    assert ax2.triangle and ax2.symmetric and ax2.separated
    assert "metric" in ax2.labels

    zero = pm([[ZERO, ZERO], [ZERO, ZERO]])
    ax3 = classify_premetric(zero)
    assert ax3.triangle and ax3.symmetric and not ax3.separated
    assert "pseudometric" in ax3.labels and "quasi-metric" not in ax3.labels


def test_classify_premetric_triangle_failure():
    d = pm(
        [
            [ZERO, QUARTER, ONE],
            [ONE, ZERO, QUARTER],
            [ONE, ONE, ZERO],
        ]
    )
    assert not classify_premetric(d).triangle  # d(0,2) > d(0,1) + d(1,2)


def test_classify_continuity_examples():
    rec = classify_continuity(GOLDEN, SIER)
    assert rec.open_balls
    assert not rec.right_continuous
    assert not rec.closed_balls

    flat = pm([[ZERO, ZERO], [ZERO, ZERO]])
    rec2 = classify_continuity(flat, SIER)
    assert rec2.right_continuous and rec2.left_continuous and rec2.continuous
    assert rec2.dist_continuous and rec2.reg_dist_continuous

    disc = mk_space(2, [{0}, {1}])
    rec3 = classify_continuity(GOLDEN, disc)
    assert rec3.open_balls and rec3.closed_balls and rec3.continuous


def test_open_and_closed_balls_iff_right_continuous():
    rng = random.Random(41)
    pool = [ZERO, QUARTER, HALF, dy(3, 2), ONE]
    for space in [SIER, mk_space(3, [{0}, {0, 1}]), mk_space(3, [])]:
        for _ in range(60):
            vals = [[rng.choice(pool) for _ in range(space.n)] for _ in range(space.n)]
            for i in range(space.n):
                vals[i][i] = ZERO
            d = pm(vals)
            rec = classify_continuity(d, space, dist_variants=False)
            assert (rec.open_balls and rec.closed_balls) == rec.right_continuous


def test_combine_examples():
    single = combine([GOLDEN])
    assert single == pm([[ZERO, ZERO], [HALF, ZERO]])  # min(d, 1/2)
    zero = pm([[ZERO, ZERO], [ZERO, ZERO]])
    assert combine([zero, zero]) == zero
    disc = pm([[ZERO, ONE], [ONE, ZERO]])
    two = combine([disc, disc])
    assert two == pm([[ZERO, HALF], [HALF, ZERO]])


def test_ball_topology():
    assert ball_topology([GOLDEN], 2) == SIER
    flat = pm([[ZERO, ZERO], [ZERO, ZERO]])
    assert ball_topology([flat], 2) == mk_space(2, [])


# --- the theorem engine ------------------------------------------------------


def test_verify_theorem_main_golden():
    bundle = verify_theorem_main(SIER_BASE, D01)
    assert bundle.all_passed
    assert bundle.d == GOLDEN
    flat = pm([[ZERO, ZERO], [ZERO, ZERO]])
    assert bundle.d_reg == flat and bundle.d_semireg == flat
    ids = {c.check_id: c.status for c in bundle.report}
    assert ids["claim_2_13"] == "skip"  # base is not symmetric
    assert all(
        v == "pass" for k, v in ids.items() if k != "claim_2_13"
    )


def test_verify_theorem_main_symmetric_path():
    base = validate_base([from_pairs(2, [(0, 1), (1, 0)])])
    bundle = verify_theorem_main(base, base.members[0])
    assert bundle.all_passed
    claim = next(c for c in bundle.report if c.check_id == "claim_2_13")
    assert claim.status == "pass"
    ax = classify_premetric(bundle.d)
    assert ax.symmetric and ax.triangle
    assert bundle.d == bundle.d_reg == bundle.d_semireg


def test_verify_theorem_main_saturates():
    base = validate_base([from_pairs(3, [(0, 1)]), from_pairs(3, [(0, 1), (1, 2)])])
    assert not base.is_multiplicative
    bundle = verify_theorem_main(base, base.members[1])
    assert bundle.base.is_multiplicative
    assert bundle.all_passed


def test_uniformity_of_synthesized_family(catalog_bases):
    for base in catalog_bases.values():
        work = base if base.is_multiplicative else saturate_mult(base)
        space = induced_topology(work)
        for u in base.members:
            bundle = verify_theorem_main(work, u, space)
            assert u.contains(bundle.d.below(ONE))
            assert is_u_uniform(work, bundle.d)


def test_theorem_3_4_equivalences_on_point_rotund_bases(catalog_bases):
    from qtop.quniform import rotund_check, uniform_regularity

    for base in catalog_bases.values():
        work = base if base.is_multiplicative else saturate_mult(base)
        space = induced_topology(work)
        if not rotund_check(work, space, "point").holds:
            continue
        rec = uniform_regularity(work, space)
        assert rec.semiregular == rec.regular == (rec.completely_regular is True)

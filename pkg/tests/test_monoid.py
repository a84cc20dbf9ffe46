import pytest

from qtop.dyadic import Dyadic
from qtop.finspace import mk_space
from qtop.metrize import Premetric, ball_topology, classify_continuity, combine
from qtop.monoid import (
    MultiplicationDiscontinuous,
    NotAGroup,
    NotAssociative,
    TopMonoid,
    UnitKindUnsupported,
    UnitLawFails,
    canonical_uniformity,
    entourage_of,
    group_checks,
    is_balanced,
    mul_continuous_definitional,
    shift_openness,
    synth_subinvariant,
    unit_kind,
    uniformity_equivalences,
    validate_monoid,
)
from qtop.quniform import induced_topology
from qtop.relalg import diagonal, from_pairs

ZERO, ONE, HALF = Dyadic.zero(), Dyadic.one(), Dyadic(1, 1)

SIER_SPACE = mk_space(2, [{1}])
SIER_MONOID = validate_monoid(SIER_SPACE, [[0, 1], [1, 1]], 0)
DISC2 = mk_space(2, [{0}, {1}])
Z2 = validate_monoid(DISC2, [[0, 1], [1, 0]], 0)


def pm(rows):
    return Premetric(len(rows), tuple(tuple(r) for r in rows))


GOLDEN = pm([[ZERO, ZERO], [ONE, ZERO]])


def test_validate_examples():
    assert SIER_MONOID.unit == 0
    # any monoid is valid on a discrete space
    validate_monoid(mk_space(2, [{0}, {1}]), [[0, 1], [1, 1]], 0)
    with pytest.raises(MultiplicationDiscontinuous) as exc:
        validate_monoid(SIER_SPACE, [[0, 1], [1, 0]], 0)
    assert exc.value.pair in {(0, 1), (1, 0)}
    with pytest.raises(NotAssociative):
        validate_monoid(DISC2, [[0, 1], [0, 0]], 0)
    with pytest.raises(UnitLawFails):
        validate_monoid(DISC2, [[1, 1], [1, 1]], 0)


def test_validate_one_sided_unit():
    # left-zero semigroup: x*y = x, so 0 is a right unit only
    m = validate_monoid(mk_space(2, [{0}, {1}]), [[0, 0], [1, 1]], 0, unit_side="right")
    assert m.unit_side == "right"
    with pytest.raises(UnitLawFails):
        validate_monoid(mk_space(2, [{0}, {1}]), [[0, 0], [1, 1]], 0, unit_side="two")


def test_continuity_crosscheck(catalog_monoids):
    for m in catalog_monoids.values():
        assert mul_continuous_definitional(m)


def test_shift_openness_and_unit_kind():
    rec = shift_openness(SIER_MONOID)
    assert rec.left and rec.right and rec.central
    kinds = unit_kind(SIER_MONOID)
    assert kinds.open_left_unit and kinds.open_right_unit and kinds.open_unit
    disc = validate_monoid(DISC2, [[0, 1], [1, 0]], 0)
    rec2 = shift_openness(disc)
    assert rec2.left and rec2.right and rec2.central
    assert unit_kind(disc).open_unit


def test_shift_openness_failure():
    # max-semilattice with the *lower*-set topology has non-open left shifts:
    # the image of the open {e} under l_b is {b}, which is not open
    space = mk_space(3, [{0}, {0, 1}])
    m = validate_monoid(space, [[max(i, j) for j in range(3)] for i in range(3)], 0)
    rec = shift_openness(m)
    assert not rec.left and not rec.right
    kinds = unit_kind(m)
    assert not kinds.open_right_unit and not kinds.open_left_unit
    for eq in uniformity_equivalences(m):
        assert eq.equivalent


def test_canonical_uniformity_examples():
    L = canonical_uniformity(SIER_MONOID, "L")
    assert L.members == (from_pairs(2, [(0, 1)]),)
    assert induced_topology(L) == SIER_SPACE  # the L-uniformity generates the topology
    disc = canonical_uniformity(Z2, "L")
    assert diagonal(2) in disc.members
    for which in ("R", "LvR", "LwR"):
        canonical_uniformity(SIER_MONOID, which)
    with pytest.raises(ValueError):
        canonical_uniformity(SIER_MONOID, "bogus")


def test_entourage_product_identity(catalog_monoids):
    for m in catalog_monoids.values():
        if m.unit_side == "left":
            continue
        opens = m.opens_at_unit()
        for u in opens:
            for v in opens:
                lhs = entourage_of(m, u, "L").compose(entourage_of(m, v, "L"))
                assert lhs == entourage_of(m, m.product_set(u, v), "L")


def test_is_balanced():
    assert is_balanced(SIER_MONOID)  # commutative
    assert is_balanced(Z2)
    leftzero = validate_monoid(
        mk_space(3, [{0}, {1}, {2}]), [[i] * 3 for i in range(3)], 0, unit_side="right"
    )
    assert not is_balanced(leftzero)


def test_synth_golden_sierpinski():
    sb = synth_subinvariant(SIER_MONOID, 0b11, "left")
    assert sb.bundle.d == GOLDEN
    assert sb.left_subinvariant and sb.right_subinvariant  # balanced instance
    assert sb.ball_in_translate and sb.reg_ball_in_hull
    assert sb.all_passed and sb.bundle.all_passed
    # left-subinvariance on all eight triples, explicitly
    d = sb.bundle.d.values
    mul = SIER_MONOID.mul
    for z in range(2):
        for x in range(2):
            for y in range(2):
                assert not d[x][y] < d[mul[z][x]][mul[z][y]]
    # ball inclusions of the theorem
    assert sb.bundle.d.ball(1, ONE) == 0b10  # B_d(a,1) = {a} = aX


def test_synth_discrete_group():
    sb = synth_subinvariant(Z2, 0b01, "left")
    assert sb.bundle.d == pm([[ZERO, ONE], [ONE, ZERO]])
    assert sb.left_subinvariant and sb.right_subinvariant
    assert sb.all_passed


def test_synth_requires_unit_kind():
    # lower-set topology monoid has no open right unit
    space = mk_space(3, [{0}, {0, 1}])
    m = validate_monoid(space, [[max(i, j) for j in range(3)] for i in range(3)], 0)
    with pytest.raises(UnitKindUnsupported):
        synth_subinvariant(m, space.min_nbhd(0), "left")
    with pytest.raises(ValueError):
        synth_subinvariant(SIER_MONOID, 0b01, "left")  # {e} is not open here


def test_synth_right_side():
    sb = synth_subinvariant(Z2, 0b01, "right")
    assert sb.right_subinvariant and sb.all_passed


def test_balanced_commutative_monoid_subinvariant_both_sides(catalog_monoids):
    m = catalog_monoids["monoid:z2_x_sierpinski"]
    assert is_balanced(m)
    for u in m.opens_at_unit():
        sb = synth_subinvariant(m, u, "left")
        assert sb.left_subinvariant and sb.right_subinvariant
        item5 = next(c for c in sb.report if c.check_id == "thm_6_1_item_5")
        assert item5.status == "pass"


def test_family_generates_topology(catalog_monoids):
    for name, m in catalog_monoids.items():
        if not unit_kind(m).open_right_unit:
            continue
        ds = [synth_subinvariant(m, u, "left").bundle.d for u in m.opens_at_unit()]
        assert ball_topology(ds, m.n) == m.space
        combined = combine(ds)
        assert ball_topology([combined], m.n) == m.space
        for z in range(m.n):
            for x in range(m.n):
                for y in range(m.n):
                    assert not combined.values[x][y] < combined.values[m.prod(z, x)][m.prod(z, y)]


def test_group_checks():
    rec = group_checks(Z2)
    assert rec.inverses == (0, 1)
    assert rec.is_topological_group
    with pytest.raises(NotAGroup):
        group_checks(SIER_MONOID)  # a has no inverse
    sb = synth_subinvariant(Z2, 0b01, "left")
    rec2 = group_checks(Z2, {"d": sb.bundle.d})
    assert rec2.weakly_invariant == {"d": True}
    assert rec2.proposition_consistent


def test_uniformity_equivalences_on_catalog(catalog_monoids):
    for m in catalog_monoids.values():
        for eq in uniformity_equivalences(m):
            assert eq.equivalent
            assert eq.rotund_when_generating is not False


def test_prop_5_7_on_balanced_right_units(catalog_monoids):
    for m in catalog_monoids.values():
        kinds = unit_kind(m)
        if not (is_balanced(m) and kinds.open_right_unit):
            continue
        shifts = shift_openness(m)
        assert shifts.left and shifts.right
        if m.space.classify().t1:
            assert all(m.prod(m.unit, x) == x for x in range(m.n))
            two = m if m.unit_side == "two" else TopMonoid(m.space, m.mul, m.unit, "two")
            assert unit_kind(two).open_left_unit

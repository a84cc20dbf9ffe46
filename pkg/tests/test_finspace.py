import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtop.cli.enumeration import enumerate_topologies
from qtop.finspace import (
    EmptyCarrier,
    CarrierTooLarge,
    FinSpace,
    NotLatticeClosed,
    SubsetOutOfRange,
    bits,
    diagram_violations,
    mk_space,
)

SIER = mk_space(2, [{1}])
DISC2 = mk_space(2, [{0}, {1}])
INDISC2 = mk_space(2, [])


# --- independent oracles -----------------------------------------------------


def closure_oracle(s: FinSpace, a: int) -> int:
    """Smallest closed superset, by scanning every closed set."""
    best = s.full
    for o in s.opens:
        c = s.full ^ o
        if a & ~c == 0 and c.bit_count() < best.bit_count():
            best = c
    return best


def interior_oracle(s: FinSpace, a: int) -> int:
    """Largest open subset, by scanning every open set."""
    best = 0
    for o in s.opens:
        if o & ~a == 0 and o.bit_count() > best.bit_count():
            best = o
    return best


def spaces_strategy():
    return st.integers(1, 4).flatmap(
        lambda n: st.lists(st.integers(0, (1 << n) - 1), max_size=5).map(
            lambda opens: mk_space(n, opens)
        )
    )


# --- construction ------------------------------------------------------------


def test_mk_space_examples():
    assert SIER.opens == (0, 0b10, 0b11)
    assert len(DISC2.opens) == 4
    assert mk_space(1, []).opens == (0, 1)


def test_mk_space_errors():
    with pytest.raises(EmptyCarrier):
        mk_space(0, [])
    with pytest.raises(SubsetOutOfRange):
        mk_space(2, [{2}])
    with pytest.raises(CarrierTooLarge):
        mk_space(17, [])
    with pytest.raises(NotLatticeClosed):
        mk_space(2, [{1}], strict=True)
    # a complete family passes strict mode
    mk_space(2, [set(), {1}, {0, 1}], strict=True)


def test_canonical_order():
    s = mk_space(3, [{0, 1}, {1}, {2}])
    assert list(s.opens) == sorted(s.opens, key=lambda m: (bin(m).count("1"), m))
    assert len(set(s.opens)) == len(s.opens)


# --- closure / interior ------------------------------------------------------


def test_closure_examples():
    assert SIER.closure(0b10) == 0b11  # cl{1} = X
    assert SIER.closure(0b01) == 0b01  # {0} closed
    assert DISC2.closure(0b01) == 0b01


def test_interior_examples():
    assert SIER.interior(0b01) == 0
    assert SIER.interior(0b10) == 0b10
    assert INDISC2.interior(0b01) == 0


def test_closure_interior_against_oracle():
    for n in (1, 2, 3):
        for space in enumerate_topologies(n):
            for a in range(1 << n):
                assert space.closure(a) == closure_oracle(space, a)
                assert space.interior(a) == interior_oracle(space, a)


def test_closure_laws_and_de_morgan():
    for space in enumerate_topologies(3):
        for a in range(8):
            ca = space.closure(a)
            assert ca & a == a  # extensive
            assert space.closure(ca) == ca  # idempotent
            assert space.closure(a) == space.full ^ space.interior(space.full ^ a)
            for b in range(8):
                if a & ~b == 0:
                    assert ca & ~space.closure(b) == 0  # monotone


def test_reg_open_hull():
    assert SIER.reg_open_hull(0b10) == 0b11  # {1} is not regular open
    assert not SIER.is_regular_open(0b10)
    assert SIER.reg_open_hull(0) == 0
    for a in range(4):
        assert DISC2.reg_open_hull(a) == a
        assert DISC2.is_regular_open(a)
    for space in enumerate_topologies(3):
        for a in range(8):
            h = space.reg_open_hull(a)
            assert space.reg_open_hull(h) == h  # idempotent


def test_min_nbhd():
    assert SIER.min_nbhd(0) == 0b11
    assert SIER.min_nbhd(1) == 0b10
    assert DISC2.min_nbhd(0) == 0b01
    with pytest.raises(SubsetOutOfRange):
        SIER.min_nbhd(2)


# --- separation axioms -------------------------------------------------------


def test_classify_sierpinski():
    rec = SIER.classify()
    assert rec.flags() == {
        "t0": True,
        "t1": False,
        "t2": False,
        "semi_hausdorff": False,
        "functionally_hausdorff": False,
        "regular": False,
        "semiregular": False,
        "completely_regular": False,
        "t3": False,
        "semi_t3": False,
        "tychonoff": False,
    }


def test_classify_discrete_indiscrete():
    assert all(DISC2.classify().flags().values())
    rec = INDISC2.classify()
    assert not rec.t0 and not rec.t1
    assert rec.regular and rec.semiregular and rec.completely_regular


def test_diagram_holds_up_to_five_points():
    for n in range(1, 6):
        for space in enumerate_topologies(n):
            assert diagram_violations(space.classify()) == []


def test_completely_regular_iff_min_nbhds_clopen():
    for n in (1, 2, 3, 4):
        for space in enumerate_topologies(n):
            rec = space.classify()
            clopen = all(
                space.is_clopen(space.min_nbhd(x)) for x in range(space.n)
            )
            assert rec.completely_regular == clopen


def test_two_valued_oracles():
    # functionally Hausdorff: some clopen set separates every pair;
    # completely regular: every point has a clopen set inside its minimal nbhd
    for n in (1, 2, 3, 4):
        for space in enumerate_topologies(n):
            rec = space.classify()
            clopens = [o for o in space.opens if space.is_closed(o)]
            func_h = all(
                any(((c >> x) & 1) != ((c >> y) & 1) for c in clopens)
                for x in range(space.n)
                for y in range(x + 1, space.n)
            )
            compl = all(
                any((c >> x) & 1 and c & ~space.min_nbhd(x) == 0 for c in clopens)
                for x in range(space.n)
            )
            assert rec.functionally_hausdorff == func_h
            assert rec.completely_regular == compl


# --- continuity --------------------------------------------------------------


def continuity_definitional(space: FinSpace, values) -> bool:
    for v in set(values):
        below = sum(1 << x for x, w in enumerate(values) if w < v)
        above = sum(1 << x for x, w in enumerate(values) if w > v)
        if not (space.is_open(below) and space.is_open(above)):
            return False
    return True


def test_is_continuous_examples():
    assert SIER.is_continuous([0, 0])
    assert not SIER.is_continuous([1, 0])
    assert DISC2.is_continuous([1, 0])


def test_is_continuous_matches_definitional():
    vals = (0, 1, 2)
    for n in (1, 2, 3, 4):
        for space in enumerate_topologies(n):
            for pick in range(3**n):
                f, p = [], pick
                for _ in range(n):
                    f.append(vals[p % 3])
                    p //= 3
                assert space.is_continuous(f) == continuity_definitional(space, f)


def test_clopen_classes_are_clopen():
    for space in enumerate_topologies(4):
        for x in range(space.n):
            c = space.clopen_classes[x]
            assert space.is_clopen(c)
            assert (c >> x) & 1


@settings(max_examples=200, deadline=None)
@given(spaces_strategy())
def test_random_space_invariants(space):
    assert 0 in space.opens_set and space.full in space.opens_set
    for a in space.opens:
        for b in space.opens:
            assert (a | b) in space.opens_set
            assert (a & b) in space.opens_set
    assert diagram_violations(space.classify()) == []

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtop.finspace import mk_space
from qtop.relalg import (
    DiagonalMissing,
    Entourage,
    Relation,
    SizeMismatch,
    diagonal,
    from_pairs,
    full_relation,
    topo_ops,
)

D01 = from_pairs(2, [(0, 1)])
SIER = mk_space(2, [{1}])


def compose_oracle(u: Relation, v: Relation) -> Relation:
    """Naive pairwise composition."""
    rows = [0] * u.n
    for x in range(u.n):
        for y in range(u.n):
            if not u.contains_pair(x, y):
                continue
            for z in range(u.n):
                if v.contains_pair(y, z):
                    rows[x] |= 1 << z
    return Relation(u.n, tuple(rows))


def random_entourage(rng: random.Random, n: int) -> Entourage:
    rows = tuple((1 << x) | rng.randrange(1 << n) for x in range(n))
    return Entourage(n, rows)


def entourages_strategy(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(*[st.integers(0, (1 << n) - 1) for _ in range(n)]).map(
            lambda rows: Entourage(n, tuple(r | (1 << x) for x, r in enumerate(rows)))
        )
    )


def test_entourage_requires_diagonal():
    with pytest.raises(DiagonalMissing):
        Entourage(2, (0b01, 0b01))
    Relation(2, (0b01, 0b01))  # plain relations may drop it


def test_compose_examples():
    assert D01.compose(D01) == D01  # a preorder squares to itself
    v = from_pairs(2, [(1, 0)])
    assert diagonal(2).compose(v) == v
    assert full_relation(2).compose(full_relation(2)) == full_relation(2)


def test_compose_matches_oracle():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 5)
        u, v = random_entourage(rng, n), random_entourage(rng, n)
        assert u.compose(v).rows == compose_oracle(u, v).rows


def test_compose_size_mismatch():
    with pytest.raises(SizeMismatch):
        D01.compose(diagonal(3))


def test_inverse():
    assert D01.inverse() == from_pairs(2, [(1, 0)])
    assert D01.inverse().inverse() == D01
    assert diagonal(3).inverse() == diagonal(3)


def test_inverse_antidistributes():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 5)
        u, v = random_entourage(rng, n), random_entourage(rng, n)
        assert u.compose(v).inverse() == v.inverse().compose(u.inverse())


def test_power():
    assert D01.power(1) == D01
    assert D01.power(6) == D01
    step = from_pairs(4, [(0, 1), (1, 2), (2, 3)])
    # brute-force path enumeration: reachability within 3 steps
    rows = [0] * 4
    for x in range(4):
        frontier = {x}
        seen = {x}
        for _ in range(3):
            frontier = {
                z for y in frontier for z in range(4) if step.contains_pair(y, z)
            }
            seen |= frontier
        for z in seen:
            rows[x] |= 1 << z
    assert step.power(3) == Entourage(4, tuple(rows))
    with pytest.raises(ValueError):
        D01.power(0)


def test_ball():
    assert D01.ball(0b01) == 0b11
    assert D01.ball(0b10) == 0b10
    assert D01.ball(0) == 0


def test_ball_composition_law():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(1, 5)
        u, v = random_entourage(rng, n), random_entourage(rng, n)
        for a in range(1 << n):
            assert v.ball(u.ball(a)) == u.compose(v).ball(a)


def test_compose_associative_on_random_triples():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(1, 6)
        u, v, w = (random_entourage(rng, n) for _ in range(3))
        assert u.compose(v).compose(w) == u.compose(v.compose(w))


def test_is_transitive():
    assert D01.is_transitive
    assert diagonal(3).is_transitive
    cyc = from_pairs(3, [(0, 1), (1, 2), (2, 0)])
    assert not cyc.is_transitive  # (0,2) reachable but absent


def test_topo_ops_examples():
    cl, interior, intcl = topo_ops(D01, SIER)
    assert cl == full_relation(2)  # cl{0,1}=X and cl{1}=X
    disc = mk_space(2, [{0}, {1}])
    cl2, int2, intcl2 = topo_ops(D01, disc)
    assert cl2.rows == int2.rows == intcl2.rows == D01.rows
    cl3, _, _ = topo_ops(diagonal(2), SIER)
    assert cl3.rows == (0b01, 0b11)  # (cl{0}, cl{1})
    with pytest.raises(SizeMismatch):
        topo_ops(D01, mk_space(3, []))


def test_topo_ops_interior_of_closure_can_lose_diagonal():
    _, _, intcl = topo_ops(diagonal(2), SIER)
    assert not intcl.is_reflexive  # intcl{0} is empty in the Sierpinski space


def test_topo_ops_containments_on_catalog(catalog_bases):
    from qtop.quniform import induced_topology, saturate_mult

    for base in catalog_bases.values():
        work = base if base.is_multiplicative else saturate_mult(base)
        space = induced_topology(work)
        for u in base.members:
            cl, interior, intcl = topo_ops(u, space)
            assert cl.contains(u)
            assert u.contains(interior.intersection(u))
            assert cl.contains(intcl)


@settings(max_examples=150, deadline=None)
@given(entourages_strategy(), entourages_strategy())
def test_compose_keeps_reflexivity(u, v):
    if u.n != v.n:
        return
    assert u.compose(v).is_reflexive
    assert isinstance(u.compose(v), Entourage)

import random

import pytest
from hypothesis import given, strategies as st

from vgit.exact.cone import Membership, cone_contains
from vgit.exact.linalg import dot
from vgit.oracle import brute_force_ss_supports
from vgit.toric import (EmptySemistableLocus, MonomialIdeal, NotSurjective, chamber_data,
                        chambers_equal, interior_walls, is_projective_regime, lift_character,
                        make_weight_configuration, secondary_chambers, semistable_support_test,
                        stable_equals_semistable)

P1_FAN_RAYS = ((-1,), (1,))
X1, Y1, X2, Y2 = range(4)


def test_configurations(p1, w4):
    assert p1.nu == ((1,), (-1,))
    assert p1.c_beta.generators == ((1,),)
    opp = make_weight_configuration([(1,), (-1,)])
    assert opp.nu == ((1,), (1,))
    assert not opp.c_beta.is_strongly_convex()
    assert w4.nu == ((1,), (-1,), (-1,), (1,))
    assert set(w4.c_beta.facet_normals) == {(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)}


def test_not_surjective():
    with pytest.raises(NotSurjective):
        make_weight_configuration([(2,), (2,)])
    with pytest.raises(NotSurjective):
        make_weight_configuration([(1, 1)])


def test_lifts(p1, w4):
    assert lift_character(p1, (1,)).lift_a == (1, 0)
    assert lift_character(p1, (0,)).lift_a == (0, 0)
    a = lift_character(w4, (1, 1, 1)).lift_a
    assert w4.apply(a) == (1, 1, 1)


def test_p1_quotient(p1):
    d = chamber_data(p1, (1,))
    assert d.polyhedron.vertices == ((-1,), (0,))
    assert d.fan.rays == P1_FAN_RAYS and d.fan.max_cones == ((0,), (1,))
    assert d.i_empty == frozenset()
    assert d.ideal.index_lists() == [[0], [1]]
    assert d.flags.stable_equals_semistable


def test_trivial_character(p1):
    d = chamber_data(p1, (0,))
    assert d.polyhedron.vertices == ((0,),)
    assert d.fan.rays == () and d.fan.lineality == ((1,),)
    assert d.i_empty == frozenset()
    assert d.ideal.generators == (frozenset(),)
    assert all(d.ideal.avoids_zero_locus(s) for s in [(), (0,), (0, 1)])


def test_outside_weight_cone(p1, w4):
    with pytest.raises(EmptySemistableLocus):
        chamber_data(p1, (-1,))
    with pytest.raises(EmptySemistableLocus):
        chamber_data(w4, (1, 1, 3))


def test_n4_chamber_221(w4):
    d = chamber_data(w4, (2, 2, 1), lift=(1, 1, 2, 0))
    assert d.polyhedron.vertices == ((0,), (1,))
    assert d.fan.rays == P1_FAN_RAYS
    assert d.i_empty == frozenset({X1, X2})
    assert d.ideal.index_lists() == [[X1, Y1, X2], [X1, X2, Y2]]
    for bits in range(16):
        support = {i for i in range(4) if bits >> i & 1}
        assert d.ideal.avoids_zero_locus(support) == semistable_support_test(w4, (2, 2, 1), support)


def test_support_examples(w4):
    assert semistable_support_test(w4, (2, 2, 1), range(4))
    assert semistable_support_test(w4, (1, 1, 1), {X1, X2, Y2})
    assert not semistable_support_test(w4, (1, 1, 1), {X1, Y1})


def test_stable_equals_semistable(p1, w4):
    assert stable_equals_semistable(p1, (1,))
    assert not stable_equals_semistable(w4, (1, 1, 1))
    assert stable_equals_semistable(w4, (2, 2, 1))
    d = chamber_data(w4, (1, 1, 1))
    assert not d.flags.stable_equals_semistable


def test_projective_regime(p1):
    assert is_projective_regime(p1)
    assert not is_projective_regime(make_weight_configuration([(1,), (-1,)]))
    assert not is_projective_regime(make_weight_configuration([(1,), (0,)]))


def test_secondary_chambers_small(p1):
    ch = secondary_chambers(p1)
    assert len(ch) == 1 and ch[0].representative == (1,)
    ch = secondary_chambers(make_weight_configuration([(1,), (-1,)]))
    assert len(ch) == 2


def test_secondary_chambers_n4(w4):
    assert set(interior_walls(w4)) == {(1, 0, -1), (0, 1, -1)}
    ch = secondary_chambers(w4)
    assert [c.representative for c in ch] == [(2, 2, 1), (1, 3, 2), (3, 1, 2), (2, 2, 3)]
    assert all(c.data.fan.rays == P1_FAN_RAYS for c in ch)
    assert len({c.data.ideal for c in ch}) == 4
    assert all(len(c.cells) == 1 for c in ch)
    assert ch[0].contains((4, 4, 2)) and not ch[0].contains((2, 2, 3))


def test_chambers_equal(w4):
    a = chamber_data(w4, (2, 2, 1))
    assert chambers_equal(a, a)
    assert not chambers_equal(a, chamber_data(w4, (2, 2, 3)))
    assert chambers_equal(a, chamber_data(w4, (4, 4, 2)))


def test_ideal_antichain():
    ideal = MonomialIdeal.from_supports([{0, 1}, {0}, {2, 3}, {0, 2}])
    assert ideal.index_lists() == [[0], [2, 3]]


def test_n5_chambers(w5):
    ch = secondary_chambers(w5)
    assert len(ch) == 18
    full = [c for c in ch if not c.data.i_empty]
    assert len(full) == 1
    assert set(full[0].data.fan.rays) == {(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)}


def test_chamber_invariants(w5):
    for c in secondary_chambers(w5):
        d = c.data
        contributing = {i for i in range(w5.r) if w5.nu[i] in d.fan.rays}
        assert not (d.i_empty & contributing)
        assert all(d.i_empty <= g for g in d.ideal.generators)
        assert d.flags.stable_equals_semistable and d.flags.projective_regime
        assert cone_contains(w5.c_beta, c.representative) is Membership.INTERIOR


def test_constant_on_chambers(w4):
    rng = random.Random(5)
    for c in secondary_chambers(w4):
        closure = c.cells[0].closure
        for _ in range(5):
            lam = [rng.randint(1, 9) for _ in closure.generators]
            chi = tuple(sum(l * g[k] for l, g in zip(lam, closure.generators)) for k in range(3))
            if any(dot(h, chi) == 0 for h in interior_walls(w4)):
                continue
            assert chambers_equal(chamber_data(w4, chi), c.data)


def test_oracle_equivalence_on_walls(w4):
    for chi in [(1, 1, 1), (1, 2, 1), (1, 1, 0), (2, 1, 1), (0, 1, 0)]:
        d = chamber_data(w4, chi)
        ss = brute_force_ss_supports(w4, chi)
        for bits in range(16):
            support = frozenset(i for i in range(4) if bits >> i & 1)
            assert d.ideal.avoids_zero_locus(support) == (support in ss), (chi, support)


configs = st.sampled_from([
    [(1,), (1,)], [(1,), (2,), (3,)], [(1, 0), (0, 1), (1, 1)], [(1, 0), (1, 1), (1, 2), (0, 1)],
    [(1, 0, 0), (1, 0, 1), (0, 1, 0), (0, 1, 1)], [(1, 0), (0, 1), (1, 1), (2, 1)],
])


@given(configs, st.lists(st.integers(0, 4), min_size=4, max_size=4),
       st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_lift_independence(beta, x, k):
    w = make_weight_configuration(beta)
    a = tuple(x[:w.r]) + (0,) * max(0, w.r - len(x))
    chi = w.apply(a)
    a2 = list(a)
    for row in w.m_basis:
        c = k[0] if k else 0
        a2 = [u + c * v for u, v in zip(a2, row)]
        k = k[1:] + k[:1]
    assert w.apply(a2) == chi
    d1, d2 = chamber_data(w, chi, lift=a), chamber_data(w, chi, lift=a2)
    assert d1.fan == d2.fan and d1.i_empty == d2.i_empty and d1.ideal == d2.ideal


@given(configs, st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_ideal_matches_oracle(beta, x):
    w = make_weight_configuration(beta)
    chi = w.apply(tuple(x[:w.r]) + (0,) * max(0, w.r - len(x)))
    d = chamber_data(w, chi)
    ss = brute_force_ss_supports(w, chi)
    for bits in range(2 ** w.r):
        support = frozenset(i for i in range(w.r) if bits >> i & 1)
        assert d.ideal.avoids_zero_locus(support) == (support in ss)


def test_injectivity(w5):
    # distinct chambers have distinct irrelevant ideals
    ch = secondary_chambers(w5)
    assert len({c.data.ideal for c in ch}) == len(ch)
    assert len({c.data.identity() for c in ch}) == len(ch)


def test_parallel_map_is_equivalent(w4):
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(2) as pool:
        par = secondary_chambers(w4, map_fn=pool.map)
    seq = secondary_chambers(w4)
    assert [c.to_json() for c in par] == [c.to_json() for c in seq]


@given(st.integers(0, 2**32))
def test_polyhedron_always_pointed(seed):
    # the nu span the dual of M because the kernel map is injective, so P_a has vertices
    from vgit.exact.linalg import rank

    rng = random.Random(seed)
    while True:
        n = rng.randint(1, 3)
        beta = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(rng.randint(n, n + 3))]
        try:
            w = make_weight_configuration(beta)
            break
        except NotSurjective:
            continue
    assert rank(w.nu) == w.kernel_rank
    chi = w.apply([rng.randint(0, 3) for _ in range(w.r)])
    assert chamber_data(w, chi).polyhedron.vertices

import pytest

from vgit.exact.polyhedron import Fan
from vgit.oracle import (SampleConfig, TooLarge, brute_force_facets, brute_force_ss_supports,
                         fan_equal_labeled, in_cone, sample_chamber_count)
from vgit.toric import make_weight_configuration

DP6 = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))


def cyclic_fan(rays):
    k = len(rays)
    return Fan(2, tuple(rays), tuple(tuple(sorted((i, (i + 1) % k))) for i in range(k)))


def test_in_cone():
    assert in_cone([(1, 0), (0, 1)], (2, 3))
    assert not in_cone([(1, 0), (0, 1)], (-1, 3))
    assert in_cone([(1, 0)], (0, 0))
    assert in_cone([(1, 1), (1, -1)], (1, 0))


def test_brute_force_facets():
    assert brute_force_facets([(1, 0), (1, 1), (1, 2)], 2) == [(0, 1), (2, -1)]


def test_sampling_examples(w4):
    assert sample_chamber_count([(1, 0), (0, 1)], [], dim=2) == 4
    assert sample_chamber_count([(1, -1)], [(1, 0), (0, 1)]) == 2
    assert sample_chamber_count([(1, 0, -1), (0, 1, -1)], list(w4.c_beta.facet_normals)) == 4
    with pytest.raises(ValueError):
        sample_chamber_count([(1, 0)], [])


def test_sampling_deterministic():
    walls, region = [(1, -1), (1, -2), (2, -1)], [(1, 0), (0, 1)]
    cfg = SampleConfig(seed=11, samples_per_cell=50)
    assert sample_chamber_count(walls, region, cfg) == sample_chamber_count(walls, region, cfg) == 4


def test_supports_examples(p1, w4):
    assert brute_force_ss_supports(p1, (1,)) == {frozenset({0}), frozenset({1}), frozenset({0, 1})}
    assert len(brute_force_ss_supports(p1, (0,))) == 4
    ss = brute_force_ss_supports(w4, (2, 2, 1))
    gens = [frozenset({0, 1, 2}), frozenset({0, 2, 3})]
    for bits in range(16):
        s = frozenset(i for i in range(4) if bits >> i & 1)
        assert (s in ss) == any(g <= s for g in gens)


def test_supports_too_large():
    w = make_weight_configuration([(1,)] * 17)
    with pytest.raises(TooLarge):
        brute_force_ss_supports(w, (1,))


def test_fan_equal_labeled():
    f = cyclic_fan(DP6)
    assert fan_equal_labeled(f, f)
    p1 = Fan(1, ((-1,), (1,)), ((0,), (1,)))
    ray = Fan(1, ((1,),), ((0,),))
    assert not fan_equal_labeled(p1, ray)
    shuffled = (DP6[3], DP6[0], DP6[5], DP6[1], DP6[4], DP6[2])
    index = {r: i for i, r in enumerate(shuffled)}
    g = Fan(2, shuffled, tuple(sorted(tuple(sorted(index[DP6[k]] for k in c))
                                      for c in f.max_cones)))
    assert fan_equal_labeled(f, g)


def test_fan_unimodular():
    f = cyclic_fan(DP6)
    # (x, y) -> (x, x + y) is unimodular; the image of dP6 is again a hexagon fan
    image = [(x, x + y) for x, y in DP6]
    g = cyclic_fan(image)
    assert not fan_equal_labeled(f, g)
    assert fan_equal_labeled(f, g, unimodular=True)
    square = cyclic_fan([(1, 0), (0, 1), (-1, 0), (0, -1)])
    assert not fan_equal_labeled(f, square, unimodular=True)

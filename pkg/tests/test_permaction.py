import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symdig.constructions import OrbitClass, sl2_action
from symdig.errors import CapExceededError, InvalidParameterError
from symdig.finfield import field_of_order
from symdig.permaction import (
    GeneratedAction,
    VacuousTransitivityWarning,
    WreathElement,
    group_enumerate,
    identity,
    is_transitive_on,
    orbit,
    orbit_length_duality_check,
    orbits,
    pair_orbit,
    perm_compose,
    perm_inverse,
    symmetric_group_generators,
    transposition,
    wreath_apply,
    wreath_generators,
)

SYM3 = GeneratedAction(3, tuple(symmetric_group_generators(3)))


@pytest.fixture(scope="module")
def sl2_7():
    return sl2_action(field_of_order(7))


def test_compose_examples():
    g = (2, 0, 1)
    assert perm_compose(identity(3), g) == g
    t = transposition(2, 0, 1)
    assert perm_compose(t, t) == identity(2)
    # 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1
    assert perm_compose(transposition(3, 0, 1), transposition(3, 1, 2)) == (2, 0, 1)
    with pytest.raises(InvalidParameterError):
        perm_compose((0, 1), (0, 1, 2))


def test_wreath_apply_examples():
    swap = WreathElement((1, 0), (identity(4), identity(4)))
    assert wreath_apply(swap, (2, 1)) == (1, 2)
    h = (1, 2, 3, 0)
    g = WreathElement((0, 1), (h, identity(4)))
    assert wreath_apply(g, (3, 3)) == (0, 3)
    with pytest.raises(InvalidParameterError):
        wreath_apply(g, (0, 1, 2))


def test_wreath_apply_follows_coordinate_formula():
    # Coordinate i of the image is t[i^{sigma^-1}] moved by h_i, for sigma a 3-cycle.
    sigma = (1, 2, 0)  # 0 -> 1 -> 2 -> 0
    hs = ((1, 0, 2), (0, 2, 1), (2, 1, 0))
    g = WreathElement(sigma, hs)
    t = (0, 1, 2)
    # sigma^-1: 0 -> 2, 1 -> 0, 2 -> 1
    assert wreath_apply(g, t) == (hs[0][t[2]], hs[1][t[0]], hs[2][t[1]])


def _random_wreath(rng, n, m):
    top = list(range(n))
    rng.shuffle(top)
    base = []
    for _ in range(n):
        h = list(range(m))
        rng.shuffle(h)
        base.append(tuple(h))
    return WreathElement(tuple(top), tuple(base))


def test_wreath_composition_is_a_right_action():
    rng = random.Random(7)
    elems = [_random_wreath(rng, 2, 4) for _ in range(60)]
    tuples = list(itertools.product(range(4), repeat=2))
    for g in elems:
        for h in elems:
            gh = g.compose(h)
            for t in tuples:
                assert wreath_apply(gh, t) == wreath_apply(h, wreath_apply(g, t))


def test_wreath_generators_sym3_order_72():
    W = wreath_generators(SYM3, 2)
    assert W.size == 9
    assert len(group_enumerate(W)) == 72  # 6^2 * 2


def test_wreath_generators_n1_is_base():
    W = wreath_generators(SYM3, 1)
    assert W.generators == SYM3.generators
    with pytest.raises(InvalidParameterError):
        wreath_generators(SYM3, 0)


def test_wreath_generators_mixed_radix_labels():
    W = wreath_generators(GeneratedAction(3, (), ("a", "b", "c")), 2)
    assert W.labels[:4] == (("a", "a"), ("a", "b"), ("a", "c"), ("b", "a"))


def test_wreath_of_sl2_transitive_on_256(sl2_7):
    W = wreath_generators(sl2_7, 2)
    assert W.size == 256
    assert len(orbit(W, 0)) == 256


def test_orbit_examples(sl2_7):
    assert orbit(GeneratedAction(5, (identity(5),)), 3) == [3]
    assert orbit(sl2_7, sl2_7.index_of(OrbitClass(1, 0))) == list(range(16))
    with pytest.raises(InvalidParameterError):
        orbit(sl2_7, 16)


def test_pair_orbit_examples(sl2_7):
    assert pair_orbit(GeneratedAction(4, (identity(4),)), (1, 2)) == {(1, 2)}
    assert pair_orbit(SYM3, (0, 1)) == {(a, b) for a in range(3) for b in range(3) if a != b}
    seed = (sl2_7.index_of(OrbitClass(1, 0)), sl2_7.index_of(OrbitClass(0, 1)))
    assert len(pair_orbit(sl2_7, seed)) == 112


def test_is_transitive_on():
    assert is_transitive_on(SYM3, range(3))
    sym2_on_3 = GeneratedAction(3, (transposition(3, 0, 1),))
    assert not is_transitive_on(sym2_on_3, range(3))
    # An orbit that leaves S must fail too.
    assert not is_transitive_on(SYM3, {0, 1})
    with pytest.warns(VacuousTransitivityWarning):
        assert is_transitive_on(SYM3, set())


def test_group_enumerate(sl2_7):
    elems = group_enumerate(sl2_7)
    assert len(elems) == 336 == 7 * (7**2 - 1)
    involutions = [g for g in elems if g != identity(16) and perm_compose(g, g) == identity(16)]
    assert len(involutions) == 1
    assert group_enumerate(GeneratedAction(4, (identity(4),))) == [identity(4)]
    with pytest.raises(CapExceededError):
        group_enumerate(sl2_7, cap=100)


def test_orbit_length_duality(sl2_7):
    ok, a, b = orbit_length_duality_check(sl2_7, 0, 0)
    assert ok and a == b == 1
    eta = sl2_7.index_of(OrbitClass(1, 0))
    nu = sl2_7.index_of(OrbitClass(0, 1))
    assert orbit_length_duality_check(sl2_7, eta, nu) == (True, 7, 7)
    assert orbit_length_duality_check(SYM3, 0, 1) == (True, 2, 2)


def test_duality_holds_for_every_pair(sl2_7):
    for nu in range(16):
        ok, _, _ = orbit_length_duality_check(sl2_7, 0, nu)
        assert ok


def test_orbits_partition_and_orbit_stabilizer(sl2_7):
    B = GeneratedAction(16, (sl2_7.generators[0],))
    parts = orbits(B)
    assert sorted(x for p in parts for x in p) == list(range(16))
    elems = group_enumerate(sl2_7)
    stab = [g for g in elems if g[0] == 0]
    assert len(elems) == 16 * len(stab)


def test_pair_orbit_is_invariant(sl2_7):
    orb = pair_orbit(sl2_7, (0, 5))
    for g in sl2_7.generators:
        assert {(g[a], g[b]) for a, b in orb} == orb


def test_generator_validation():
    with pytest.raises(InvalidParameterError):
        GeneratedAction(3, ((0, 1),))
    with pytest.raises(InvalidParameterError):
        GeneratedAction(3, ((0, 0, 1),))


@settings(max_examples=50)
@given(st.permutations(range(6)), st.permutations(range(6)))
def test_inverse_and_compose(g, h):
    g, h = tuple(g), tuple(h)
    assert perm_compose(g, perm_inverse(g)) == identity(6)
    gh = perm_compose(g, h)
    assert all(gh[x] == h[g[x]] for x in range(6))

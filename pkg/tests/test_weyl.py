"""Weyl group elements, enumeration and the long/short factorisation."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shortroots import (
    SizeLimitExceeded,
    build,
    closure,
    coxeter_element,
    coxeter_orbits,
    decompose_semidirect,
    enumerate_group,
    identity,
    is_in_long_subgroup,
    long_root_base,
    long_subgroup,
    reflection,
    short_parabolic,
    simple_reflection,
)


def test_reflection_is_an_involution():
    rs = build("F4")
    for r in [rs.theta, rs.theta_short, rs.simple_root(1)]:
        w = reflection(rs, r)
        assert (w * w).is_identity
        assert w.act_root(r) == -r


def test_reflection_fixes_orthogonal_roots():
    rs = build("B2")
    e1 = rs.root_at(rs.index((1, 1)))   # epsilon_1
    e2 = rs.root_at(rs.index((0, 1)))   # epsilon_2
    assert rs.inner(e1, e2) == 0
    assert reflection(rs, e1).act_root(e2) == e2


def test_reflection_rejects_non_roots():
    rs = build("G2")
    with pytest.raises(ValueError):
        reflection(rs, (1, 2))


def test_length_and_inversions():
    rs = build("G2")
    e = identity(rs)
    assert e.length() == 0 and e.inversions() == ()
    for i in range(rs.rank):
        s = simple_reflection(rs, i)
        assert s.length() == 1
        assert s.inversions() == (rs.simple_root(i),)
    longest = max(enumerate_group(rs), key=lambda w: w.length())
    assert longest.length() == rs.num_positive == 6


@pytest.mark.parametrize("name,order", [("A1", 2), ("G2", 12), ("B3", 48), ("F4", 1152)])
def test_enumeration(name, order):
    rs = build(name)
    group = enumerate_group(rs)
    assert len(group) == len(set(group)) == order == rs.weyl_order
    for w in group[: 200]:
        assert len(w.word) == w.length()  # breadth-first words are reduced
        composed = identity(rs)
        for i in w.word:
            composed = composed * simple_reflection(rs, i)
        assert composed == w


def test_enumeration_refuses_large_groups():
    with pytest.raises(SizeLimitExceeded, match="46080"):
        enumerate_group(build("B6"))


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "F4"])
def test_coxeter_element_order_is_h(name):
    rs = build(name)
    orderings = [tuple(range(rs.rank)), tuple(reversed(range(rs.rank)))]
    random.Random(7).shuffle(order := list(range(rs.rank)))
    orderings.append(tuple(order))
    for ordering in orderings:
        assert coxeter_element(rs, ordering).order() == rs.coxeter_number


def test_coxeter_element_rejects_bad_orderings():
    rs = build("B3")
    with pytest.raises(ValueError):
        coxeter_element(rs, (0, 0, 1))


@pytest.mark.parametrize(
    "name,orbit_count,short_orbits",
    [("G2", 2, 1), ("C3", 3, 2), ("F4", 4, 2), ("B4", 4, 1)],
)
def test_coxeter_orbits(name, orbit_count, short_orbits):
    rs = build(name)
    orbits = coxeter_orbits(rs, coxeter_element(rs))
    assert len(orbits) == orbit_count
    assert all(len(o) == rs.coxeter_number for o in orbits)
    kinds = [{rs.roots[i].length_class for i in o} for o in orbits]
    assert all(len(k) == 1 for k in kinds)  # orbits never mix lengths
    assert sum(1 for k in kinds if k == {"short"}) == short_orbits


def test_long_root_base():
    g2 = build("G2")
    assert {r.coeffs for r in long_root_base(g2)} == {(0, 1), (3, 1)}
    b2 = build("B2")
    assert {r.coeffs for r in long_root_base(b2)} == {(1, 0), (1, 2)}
    f4 = build("F4")
    assert len(long_root_base(f4)) == 4  # long subsystem has full rank


def test_decompose_trivial_cases():
    rs = build("C3")
    e = identity(rs)
    ws, wl = decompose_semidirect(rs, e)
    assert ws.is_identity and wl.is_identity
    r_long = reflection(rs, rs.theta)
    ws, wl = decompose_semidirect(rs, r_long)
    assert ws.is_identity and wl == r_long
    r_short = simple_reflection(rs, 0)
    ws, wl = decompose_semidirect(rs, r_short)
    assert ws == r_short and wl.is_identity


def test_decompose_rejects_simply_laced():
    from shortroots import UnsupportedRootSystem

    rs = build("A3")
    with pytest.raises(UnsupportedRootSystem):
        decompose_semidirect(rs, identity(rs))


@pytest.mark.parametrize("name", ["G2", "B2", "B3", "C3"])
def test_decompose_exhaustively(name):
    rs = build(name)
    group = enumerate_group(rs)
    w_l = closure(rs, long_subgroup(rs).generators)
    w_s = closure(rs, short_parabolic(rs).generators)
    assert len(w_s) * len(w_l) == len(group)
    assert len(w_l & w_s) == 1
    pairs = set()
    p = rs.num_positive
    long_pos = [rs.index(r) for r in rs.long_positive_roots()]
    for w in group:
        ws, wl = decompose_semidirect(rs, w)
        assert ws * wl == w
        assert ws in w_s and wl in w_l
        assert all(ws.perm[i] < p for i in long_pos)  # ws keeps long positives positive
        pairs.add((ws.perm, wl.perm))
    assert len(pairs) == len(group)


def test_long_subgroup_is_normal_in_small_groups():
    for name in ["G2", "B3"]:
        rs = build(name)
        w_l = closure(rs, long_subgroup(rs).generators)
        for i in range(rs.rank):
            g = simple_reflection(rs, i)
            gi = g.inverse()
            for r in rs.long_positive_roots():
                assert g * reflection(rs, r) * gi in w_l


def test_stability_characterises_the_short_parabolic():
    rs = build("B3")
    group = enumerate_group(rs)
    w_s = closure(rs, short_parabolic(rs).generators)
    p = rs.num_positive
    long_pos = [rs.index(r) for r in rs.long_positive_roots()]
    stable = {w for w in group if all(w.perm[i] < p for i in long_pos)}
    assert stable == set(w_s)


def test_membership_in_long_subgroup():
    rs = build("F4")
    assert is_in_long_subgroup(rs, reflection(rs, rs.theta))
    assert not is_in_long_subgroup(rs, simple_reflection(rs, rs.short_simple_indices[0]))


def test_decompose_sampled_large_rank():
    rs = build("B5")
    w_l = closure(rs, long_subgroup(rs).generators)   # type D5, order 1920
    assert len(w_l) == 1920
    w_s = closure(rs, short_parabolic(rs).generators)
    assert len(w_s) == 2
    rng = random.Random(20120523)
    p = rs.num_positive
    long_pos = [rs.index(r) for r in rs.long_positive_roots()]
    for _ in range(60):
        w = identity(rs)
        for _ in range(rng.randrange(1, 25)):
            w = w * simple_reflection(rs, rng.randrange(rs.rank))
        ws, wl = decompose_semidirect(rs, w)
        assert ws * wl == w
        assert wl in w_l and ws in w_s
        assert all(ws.perm[i] < p for i in long_pos)


def test_closure_refuses_past_the_bound():
    rs = build("B3")
    gens = [simple_reflection(rs, i) for i in range(3)]
    with pytest.raises(SizeLimitExceeded):
        closure(rs, gens, bound=10)


def test_inverse_and_identity():
    rs = build("C3")
    w = coxeter_element(rs)
    assert (w * w.inverse()).is_identity
    assert (w.inverse() * w).is_identity
    assert w ** rs.coxeter_number == identity(rs)


def test_weight_action_matches_root_action():
    rs = build("F4")
    w = coxeter_element(rs, (2, 0, 3, 1))
    for r in rs.positive_roots()[: 8]:
        assert w.act_weight(rs.weight_of(r)) == rs.weight_of(w.act_root(r))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=12))
def test_word_length_properties(word):
    rs = build("B3")
    w = identity(rs)
    for i in word:
        w = w * simple_reflection(rs, i)
    length = w.length()
    assert length <= len(word)
    assert (length - len(word)) % 2 == 0
    assert length == len(w.inversions())
    assert w.sign() == (-1) ** len(word)

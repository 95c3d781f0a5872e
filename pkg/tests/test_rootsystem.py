"""Root system construction against classical tables and hand-built
epsilon-coordinate models."""

from fractions import Fraction

import pytest
from helpers import B3_POSITIVES, C3_POSITIVES, G2_POSITIVES, classical

from shortroots import (
    NotFiniteType,
    RootSystemSpec,
    Weight,
    build,
    cartan_matrix,
    classify_cartan,
    dual_coxeter_of_dual,
)

SYSTEMS = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 5),
    ("B", 2), ("B", 3), ("B", 4), ("B", 6),
    ("C", 2), ("C", 3), ("C", 5), ("C", 6),
    ("D", 3), ("D", 4), ("D", 5),
    ("E", 6), ("E", 7), ("E", 8),
    ("F", 4), ("G", 2),
]


@pytest.mark.parametrize("family,rank", SYSTEMS)
def test_classical_table(family, rank):
    rs = build(family, rank)
    pos, h, hd, exps = classical(family, rank)
    assert rs.num_positive == pos
    assert rs.coxeter_number == h
    assert rs.dual_coxeter_number == hd
    assert rs.exponents == exps
    assert len(rs.roots) == rank * h
    assert sum(rs.exponents) == rs.num_positive
    assert rs.coxeter_number == rs.theta.height + 1


@pytest.mark.parametrize(
    "name,expected",
    [("B3", B3_POSITIVES), ("C3", C3_POSITIVES), ("G2", G2_POSITIVES)],
)
def test_epsilon_models(name, expected):
    rs = build(name)
    got = {(r.coeffs, r.length_class) for r in rs.positive_roots()}
    assert got == expected


@pytest.mark.parametrize("family,rank", SYSTEMS)
def test_roots_are_signed_and_negation_closed(family, rank):
    rs = build(family, rank)
    for i, r in enumerate(rs.roots):
        signs = {c > 0 for c in r.coeffs if c}
        assert len(signs) == 1
        assert rs.roots[rs.negation(i)].coeffs == (-r).coeffs


@pytest.mark.parametrize("name", ["A3", "B3", "C4", "D4", "F4", "G2"])
def test_reflection_closure(name):
    rs = build(name)
    A = rs.cartan
    n = rs.rank
    for i in range(n):
        for r in rs.roots:
            p = sum(A[i][j] * r.coeffs[j] for j in range(n))
            image = tuple(c - p * int(i == j) for j, c in enumerate(r.coeffs))
            assert rs.is_root(image)


@pytest.mark.parametrize("name", ["A2", "B2", "B3", "C3", "D4", "F4", "G2", "C6", "B6"])
def test_half_coroot_sum_measures_height(name):
    rs = build(name)
    for r in rs.roots:
        assert rs.inner(rs.sigma, r) == r.height


@pytest.mark.parametrize("name", ["B2", "B5", "C3", "C5", "F4", "G2"])
def test_rho_against_short_dominant_coroot(name):
    rs = build(name)
    assert rs.inner(rs.rho, rs.coroot(rs.theta_short)) == rs.coxeter_number - 1


def test_theta_short_is_the_unique_short_dominant_root():
    for name in ["B4", "C4", "F4", "G2"]:
        rs = build(name)
        dominant_short = [
            r for r in rs.positive_roots()
            if r.is_short and rs.weight_of(r).is_dominant
        ]
        assert dominant_short == [rs.theta_short]
        assert rs.theta != rs.theta_short
    simply = build("A3")
    assert simply.theta == simply.theta_short  # single length: all roots short


def test_inner_product_examples():
    g2 = build("G2")
    assert g2.inner(g2.theta_short, g2.theta_short) == 2
    assert g2.inner(g2.theta, g2.theta) == 6
    assert g2.inner(g2.sigma, g2.theta) == 5
    f4 = build("F4")
    assert f4.inner(f4.rho, f4.coroot(f4.theta_short)) == 11
    assert f4.inner(f4.sigma, f4.theta_short) == 8


def test_inner_is_symmetric_and_positive():
    rs = build("F4")
    xs = [rs.rho, rs.sigma, rs.weight_of(rs.theta), rs.fundamental_weight(2)]
    for x in xs:
        assert rs.inner(x, x) > 0
        for y in xs:
            assert rs.inner(x, y) == rs.inner(y, x)


@pytest.mark.parametrize("name", ["B3", "C3", "G2", "F4"])
def test_inner_is_reflection_invariant(name):
    from shortroots import simple_reflection

    rs = build(name)
    for i in range(rs.rank):
        w = simple_reflection(rs, i)
        for r in rs.positive_roots()[: 6]:
            assert rs.inner(w.act_weight(rs.rho), w.act_root(r)) == rs.inner(rs.rho, r)


def test_coroot_pairing_and_errors():
    rs = build("C4")
    for r in [rs.theta, rs.theta_short, rs.simple_root(0)]:
        assert rs.inner(rs.coroot(r), r) == 2
    with pytest.raises(ValueError):
        rs.coroot((0, 0, 0, 0))
    with pytest.raises(ValueError):
        rs.coroot((1, 1, 1, 2))  # not a root of C4


@pytest.mark.parametrize("family,rank", SYSTEMS)
def test_weight_root_coordinate_roundtrip(family, rank):
    rs = build(family, rank)
    for r in rs.positive_roots():
        back = rs.root_coords(rs.weight_of(r))
        assert back == tuple(Fraction(c) for c in r.coeffs)


def test_dual_coxeter_of_dual_values():
    assert dual_coxeter_of_dual(build("G2")) == 4
    assert dual_coxeter_of_dual(build("F4")) == 9
    for n in [2, 3, 4, 5, 6]:
        assert dual_coxeter_of_dual(build("C", n)) == 2 * n - 1
        assert dual_coxeter_of_dual(build("B", n)) == n + 1
    # a simply-laced system is self-dual
    a3 = build("A3")
    assert dual_coxeter_of_dual(a3) == a3.dual_coxeter_number


@pytest.mark.parametrize(
    "family,rank",
    [("B", 1), ("C", 1), ("D", 2), ("E", 5), ("E", 9), ("F", 3), ("F", 5),
     ("G", 1), ("G", 3), ("Z", 2), ("A", 0)],
)
def test_spec_validation(family, rank):
    with pytest.raises(ValueError):
        RootSystemSpec(family, rank)


def test_build_accepts_several_spellings():
    assert build("C3") is build("C", 3) is build(RootSystemSpec("C", 3))
    with pytest.raises(ValueError):
        build("Q")


def test_cartan_convention():
    # cartan[i][j] must be the pairing of alpha_j against the coroot of alpha_i
    for name in ["B3", "C3", "F4", "G2"]:
        rs = build(name)
        for i in range(rs.rank):
            for j in range(rs.rank):
                expected = rs.pairing(rs.simple_root(j), rs.simple_root(i))
                assert rs.cartan[i][j] == expected


@pytest.mark.parametrize("family,rank", SYSTEMS)
def test_classify_roundtrip(family, rank):
    spec = RootSystemSpec(family, rank)
    got = classify_cartan(cartan_matrix(spec))
    canonical = {("C", 2): ("B", 2), ("D", 3): ("A", 3)}
    want = canonical.get((family, rank), (family, rank))
    assert got == [RootSystemSpec(*want)]


def test_classify_reducible_and_permuted():
    a1 = [[2]]
    two_blocks = [[2, 0], [0, 2]]
    assert classify_cartan(a1) == [RootSystemSpec("A", 1)]
    assert classify_cartan(two_blocks) == [RootSystemSpec("A", 1), RootSystemSpec("A", 1)]
    # B3 with its nodes listed in a scrambled order
    spec = RootSystemSpec("B", 3)
    A = cartan_matrix(spec)
    order = [2, 0, 1]
    scrambled = [[A[i][j] for j in order] for i in order]
    assert classify_cartan(scrambled) == [spec]
    mixed = [
        [2, -1, 0, 0, 0],
        [-1, 2, 0, 0, 0],
        [0, 0, 2, -1, 0],
        [0, 0, -2, 2, -1],
        [0, 0, 0, -1, 2],
    ]
    assert classify_cartan(mixed) == [RootSystemSpec("A", 2), RootSystemSpec("C", 3)]


@pytest.mark.parametrize(
    "matrix",
    [
        [[2, -2], [-2, 2]],                              # affine
        [[2, -1], [-4, 2]],                              # bond multiplicity 4
        [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],         # cycle
        [[2, -1, 0], [-1, 2, -3], [0, -1, 2]],           # triple bond in rank 3
        [[2, -2, 0], [-1, 2, -1], [0, -2, 2]],           # two double bonds
        [[2, 0], [-1, 2]],                               # asymmetric zero pattern
        [[2, 1], [1, 2]],                                # positive off-diagonal
        [[2, -1], [-1, 3]],                              # bad diagonal
    ],
)
def test_classify_rejects_non_finite_type(matrix):
    with pytest.raises(NotFiniteType):
        classify_cartan(matrix)


def test_weight_arithmetic():
    a = Weight.of([1, 0])
    b = Weight.of([0, 2])
    assert (a + b).fund == (Fraction(1), Fraction(2))
    assert (a - b).fund == (Fraction(1), Fraction(-2))
    assert (2 * a).fund == (Fraction(2), Fraction(0))
    assert (-a).fund == (Fraction(-1), Fraction(0))
    assert Weight.of([Fraction(1, 2), 0]).is_integral is False
    assert Weight.zero(2).is_zero


def test_dominant_representative():
    rs = build("G2")
    dom, sign = rs.dominant_representative((-1, 2))
    assert Weight.of(dom).is_dominant
    assert dom == (1, 1) and sign == -1
    # a weight on a wall reports sign 0
    dom0, sign0 = rs.dominant_representative((-1, 1))
    assert sign0 == 0
    assert dom0 == (1, 0)
    # regular orbits keep the parity of the conjugating word
    w = rs.dominant_representative(tuple(int(c) for c in rs.rho.fund))
    assert w == ((1, 1), 1)

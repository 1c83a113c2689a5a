import itertools
from fractions import Fraction

import pytest

from polychar import (
    AlgebraId,
    algebra,
    build_algebra,
    dominance_leq,
    inner_product,
    parse_algebra,
    weight_to_root_basis,
)
from polychar.rootsystem import (
    POSITIVE_ROOT_COUNTS,
    InvalidAlgebraError,
    root_to_weight,
    simple_reflection_root,
)

ALL_SMALL = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4", "A4", "B4", "C4"]


def test_parse_algebra():
    assert parse_algebra("a2") == AlgebraId("A", 2)
    assert parse_algebra(" G2 ") == AlgebraId("G", 2)
    with pytest.raises(InvalidAlgebraError):
        parse_algebra("H3")
    with pytest.raises(InvalidAlgebraError):
        parse_algebra("E9")
    with pytest.raises(InvalidAlgebraError):
        parse_algebra("D3")
    with pytest.raises(InvalidAlgebraError):
        parse_algebra("A0")


def test_a2_positive_roots():
    rs = algebra("A2")
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert rs.theta == (1, 1)


def test_a1_trivial():
    rs = algebra("A1")
    assert rs.positive_roots == ((1,),)
    assert rs.rho == (1,)
    assert rs.theta == (1,)


def test_g2_root_count():
    assert len(algebra("G2").positive_roots) == 6


@pytest.mark.parametrize("name", ALL_SMALL)
def test_positive_root_counts(name):
    rs = algebra(name)
    expected = POSITIVE_ROOT_COUNTS[rs.algebra.series](rs.rank)
    assert len(rs.positive_roots) == expected


@pytest.mark.parametrize("name", ALL_SMALL)
def test_two_rho_is_sum_of_positive_roots(name):
    rs = algebra(name)
    total = tuple(sum(g[j] for g in rs.positive_roots) for j in range(rs.rank))
    assert weight_to_root_basis(rs, tuple(2 * x for x in rs.rho)) == total


@pytest.mark.parametrize("name", ALL_SMALL)
def test_basis_roundtrip(name):
    rs = algebra(name)
    for mu in itertools.product((-2, 0, 1, 3), repeat=rs.rank):
        coords = weight_to_root_basis(rs, mu)
        assert root_to_weight(rs, coords) == mu


@pytest.mark.parametrize("name", ALL_SMALL)
def test_root_closure_under_simple_reflections(name):
    rs = algebra(name)
    roots = set(rs.positive_roots)
    for gamma in rs.positive_roots:
        for i in range(rs.rank):
            img = simple_reflection_root(rs, i, gamma)
            neg = tuple(-c for c in img)
            assert img in roots or neg in roots


def test_weight_to_root_basis_examples(a1, a2):
    assert weight_to_root_basis(a2, (1, 0)) == (Fraction(2, 3), Fraction(1, 3))
    assert weight_to_root_basis(a2, (0, 0)) == (0, 0)
    assert weight_to_root_basis(a1, (1,)) == (Fraction(1, 2),)


def test_dominance_examples(a2):
    assert dominance_leq(a2, (1, 0), (3, 2))
    assert dominance_leq(a2, (2, 1), (3, 2))
    assert dominance_leq(a2, (1, 0), (2, 1))
    assert dominance_leq(a2, (3, 2), (3, 2))
    assert not dominance_leq(a2, (0, 1), (1, 0))


def test_dominance_partial_order(a2, b2):
    for rs in (a2, b2):
        weights = [w for w in itertools.product(range(3), repeat=2)]
        for mu in weights:
            assert dominance_leq(rs, mu, mu)
        for mu, nu in itertools.product(weights, repeat=2):
            if dominance_leq(rs, mu, nu) and dominance_leq(rs, nu, mu):
                assert mu == nu
        for mu, nu, ka in itertools.product(weights, repeat=3):
            if dominance_leq(rs, mu, nu) and dominance_leq(rs, nu, ka):
                assert dominance_leq(rs, mu, ka)


def test_inner_product_normalization(a2, g2):
    theta_w = root_to_weight(a2, a2.theta)
    assert inner_product(a2, theta_w, theta_w) == 2
    assert inner_product(a2, (1, 0), (1, 0)) == Fraction(2, 3)
    # G2: first simple root is short
    short = root_to_weight(g2, g2.simple_roots[0])
    long_ = root_to_weight(g2, g2.simple_roots[1])
    assert inner_product(g2, short, short) == Fraction(2, 3)
    assert inner_product(g2, long_, long_) == 2
    theta_w = root_to_weight(g2, g2.theta)
    assert inner_product(g2, theta_w, theta_w) == 2


def test_rank_ceiling():
    with pytest.raises(InvalidAlgebraError):
        build_algebra(AlgebraId("A", 7))
    build_algebra(AlgebraId("A", 7), rank_ceiling=7)

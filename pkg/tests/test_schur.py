from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from schurgas.partitions import gen_partitions
from schurgas.qpoly import qp_eval_fraction
from schurgas.schur import (
    DistinctnessViolation,
    kostka,
    monomial_sym,
    schur_bialternant,
    schur_qpoly,
    schur_tableau,
)


@st.composite
def small_partition(draw, max_weight=6):
    n = draw(st.integers(min_value=0, max_value=max_weight))
    options = gen_partitions(n, max(n, 1))
    return draw(st.sampled_from(options))


@st.composite
def distinct_point(draw, max_size=4):
    size = draw(st.integers(min_value=1, max_value=max_size))
    fracs = st.fractions(min_value=Fraction(-5), max_value=Fraction(5), max_denominator=6)
    coords = draw(st.lists(fracs, min_size=size, max_size=size, unique=True))
    return tuple(coords)


def brute_schur(lam, point):
    # row-by-row SSYT enumeration written independently of the library:
    # build every filling with rows weakly increasing, columns strictly
    m = len(point)
    if not lam:
        return Fraction(1)
    if len(lam) > m:
        return Fraction(0)
    rows = [[]]
    for r, width in enumerate(lam):
        new_rows = []
        for partial in rows:
            def fills(row_so_far, col):
                if col == width:
                    yield tuple(row_so_far)
                    return
                lo = row_so_far[-1] if row_so_far else 1
                if r > 0 and col < len(partial[r - 1]):
                    lo = max(lo, partial[r - 1][col] + 1)
                for v in range(lo, m + 1):
                    yield from fills(row_so_far + [v], col + 1)

            for row in fills([], 0):
                new_rows.append(partial + [row])
        rows = new_rows
    total = Fraction(0)
    for filling in rows:
        term = Fraction(1)
        for row in filling:
            for v in row:
                term *= point[v - 1]
        total += term
    return total


def test_schur_tableau_known_values():
    assert schur_tableau((1,), (Fraction(2), Fraction(3), Fraction(5))) == 10
    assert schur_tableau((1, 1), (Fraction(2), Fraction(3))) == 6
    assert schur_tableau((2, 1), (Fraction(2), Fraction(3))) == 30
    assert schur_tableau((), (Fraction(7),)) == 1


def test_schur_tableau_vanishes_beyond_m():
    assert schur_tableau((1, 1, 1), (Fraction(2), Fraction(3))) == 0
    assert schur_tableau((2, 2, 1), (Fraction(1), Fraction(4))) == 0


def test_schur_tableau_handles_zero_coordinates():
    assert schur_tableau((1,), (Fraction(0), Fraction(2))) == 2
    assert schur_tableau((1, 1), (Fraction(0), Fraction(2))) == 0
    assert schur_tableau((2,), (Fraction(0), Fraction(2))) == 4


def test_schur_bialternant_known_values():
    assert schur_bialternant((2,), (Fraction(2), Fraction(3))) == 19
    assert schur_bialternant((1, 1), (Fraction(2), Fraction(3))) == 6
    pt = (Fraction(1), Fraction(2), Fraction(3))
    assert schur_bialternant((3, 1), pt) == schur_tableau((3, 1), pt)


def test_schur_bialternant_rejects_repeats():
    with pytest.raises(DistinctnessViolation):
        schur_bialternant((2,), (Fraction(2), Fraction(2)))


def test_schur_bialternant_allows_zero_if_distinct():
    pt = (Fraction(0), Fraction(2), Fraction(3))
    assert schur_bialternant((2, 1), pt) == schur_tableau((2, 1), pt)


@settings(max_examples=60)
@given(lam=small_partition(), point=distinct_point())
def test_backends_agree_on_distinct_points(lam, point):
    assert schur_bialternant(lam, point) == schur_tableau(lam, point)


@settings(max_examples=40)
@given(lam=small_partition(max_weight=5), point=distinct_point(max_size=3))
def test_tableau_matches_independent_enumeration(lam, point):
    assert schur_tableau(lam, point) == brute_schur(lam, point)


@given(lam=small_partition(), point=distinct_point(), c=st.sampled_from(
    [Fraction(2), Fraction(1, 3), Fraction(-1), Fraction(5, 2)]))
def test_homogeneity(lam, point, c):
    scaled = tuple(c * x for x in point)
    n = sum(lam)
    assert schur_tableau(lam, scaled) == c**n * schur_tableau(lam, point)


@given(lam=small_partition(max_weight=5))
def test_symmetry_under_coordinate_permutation(lam):
    pt = (Fraction(2), Fraction(1, 2), Fraction(-3))
    base = schur_tableau(lam, pt)
    for perm in permutations(pt):
        assert schur_tableau(lam, perm) == base


def test_kostka_known_values():
    assert kostka((2, 1), (1, 1, 1)) == 2
    for n in range(1, 6):
        assert kostka((n,), (n,)) == 1
    assert kostka((1, 1), (2,)) == 0
    assert kostka((2, 1), (2, 1)) == 1
    assert kostka((2, 2), (2, 1)) == 0  # weight mismatch


def test_monomial_sym_known_values():
    assert monomial_sym((2, 1), (Fraction(2), Fraction(3))) == 30
    assert monomial_sym((1,), (Fraction(2), Fraction(3), Fraction(5))) == 10
    assert monomial_sym((1, 1), (Fraction(2), Fraction(3))) == 6
    assert monomial_sym((1, 1, 1), (Fraction(2), Fraction(3))) == 0


@settings(max_examples=40)
@given(lam=small_partition(), point=distinct_point())
def test_kostka_monomial_expansion(lam, point):
    n = sum(lam)
    total = sum(
        (kostka(lam, mu) * monomial_sym(mu, point) for mu in gen_partitions(n, max(n, 1))),
        Fraction(0),
    )
    assert total == schur_tableau(lam, point)


def test_schur_qpoly_known_values():
    assert schur_qpoly((1,), (1, 2), 10) == [0, 1, 1]
    assert schur_qpoly((1, 1), (1, 2), 10) == [0, 0, 0, 1]
    assert schur_qpoly((2,), (1, 2), 3) == [0, 0, 1, 1]
    assert schur_qpoly((), (1, 2), 5) == [1]


@settings(max_examples=40)
@given(lam=small_partition(max_weight=5),
       exps=st.lists(st.integers(0, 3), min_size=1, max_size=4))
def test_schur_qpoly_matches_tableau_substitution(lam, exps):
    q = Fraction(1, 3)
    emax = sum(lam) * max(exps) if lam else 0
    poly = schur_qpoly(lam, tuple(exps), emax)
    point = tuple(q**e for e in exps)
    assert qp_eval_fraction(poly, q) == schur_tableau(lam, point)


@given(lam=small_partition(max_weight=5),
       exps=st.lists(st.integers(0, 3), min_size=1, max_size=4))
def test_schur_qpoly_coefficients_nonnegative(lam, exps):
    for c in schur_qpoly(lam, tuple(exps), 12):
        assert c >= 0

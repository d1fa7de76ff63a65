"""Canonical N-particle partition functions: restricted Schur sums over the
admitted partitions, plus elementary occupation-number oracles for the two
classical statistics."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .qpoly import QPoly, qp_add
from .schur import Rational, as_point, schur_qpoly, schur_tableau
from .statistics import StatisticsKind, UnsupportedKind, admitted_partitions


def z_canonical(kind: StatisticsKind, point: Sequence[Rational], n: int) -> Fraction:
    """Z_N for an M-level system (M = number of coordinates): the sum of
    s_lam over the partitions of n admitted by `kind`, with length <= M.

    Z_0 = 1 for every kind.
    """
    xs = as_point(point)
    total = Fraction(0)
    for lam in admitted_partitions(kind, n, len(xs)):
        total += schur_tableau(lam, xs)
    return total


def z_occupation_oracle(kind: StatisticsKind, point: Sequence[Rational], n: int) -> Fraction:
    """Textbook occupation-number sum, independent of any Schur machinery.

    Fermi: over subsets of n distinct levels. Bose: over multisets of n
    levels. Only these two statistics have an elementary occupation rule;
    anything else raises UnsupportedKind.
    """
    xs = as_point(point)
    if kind.family == "fermi":
        picks = combinations(range(len(xs)), n)
    elif kind.family == "bose":
        picks = combinations_with_replacement(range(len(xs)), n)
    else:
        raise UnsupportedKind(f"no occupation oracle for {kind}")
    total = Fraction(0)
    for pick in picks:
        term = Fraction(1)
        for i in pick:
            term *= xs[i]
        total += term
    return total


def z_canonical_qpoly(
    kind: StatisticsKind, exponents: Sequence[int], n: int, emax: int
) -> QPoly:
    """Z_N on an integer energy grid x_i = q^(e_i), as an exact integer
    coefficient list in q truncated at degree emax.

    Coefficients count the n-particle states of each total energy, so they
    are nonnegative.
    """
    total: QPoly = []
    for lam in admitted_partitions(kind, n, len(exponents)):
        total = qp_add(total, schur_qpoly(lam, exponents, emax))
    return total

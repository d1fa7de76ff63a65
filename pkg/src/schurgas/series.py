"""Truncated fugacity series and the grand canonical partition functions.

A FugacitySeries stores exact rational coefficients c_0..c_nmax of a power
series in the fugacity z. The grand series of a statistics comes in two
independently computed flavours:

* `gpf_definition` is the defining sum, coefficient N = z_canonical(kind, N).
  Works for every statistics.
* `gpf_product` and `gpf_parafermi_det` are the closed product and
  determinant forms, for the statistics that have one.

`verify_identity` compares the two coefficientwise and reports the first
mismatch, if any. Throughout, X_i = z * x_i, so a factor in X_i X_j or
X_i^2 carries z^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .canonical import z_canonical
from .schur import DistinctnessViolation, EvalPoint, Rational, as_point
from .statistics import StatisticsKind, UnsupportedKind, kind_name


class TruncationMismatch(ValueError):
    """Two series with different truncation orders were combined."""


class DivisionInconsistency(ArithmeticError):
    """The determinant ratio could not be expanded as a power series."""


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class FugacitySeries:
    """Coefficients c_0..c_nmax of sum c_N z^N, exact rationals."""

    nmax: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.nmax < 0:
            raise ValueError("nmax must be nonnegative")
        if len(self.coeffs) != self.nmax + 1:
            raise ValueError("need exactly nmax + 1 coefficients")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def __mul__(self, other: "FugacitySeries") -> "FugacitySeries":
        return series_mul(self, other)

    def json_coeffs(self) -> list[str]:
        return [frac_str(c) for c in self.coeffs]


def series_one(nmax: int) -> FugacitySeries:
    return FugacitySeries(nmax, (Fraction(1),) + (Fraction(0),) * nmax)


def series_mul(a: FugacitySeries, b: FugacitySeries) -> FugacitySeries:
    """Cauchy product truncated at the common nmax."""
    if a.nmax != b.nmax:
        raise TruncationMismatch(f"nmax {a.nmax} vs {b.nmax}")
    n = a.nmax
    coeffs = []
    for k in range(n + 1):
        coeffs.append(sum((a.coeffs[i] * b.coeffs[k - i] for i in range(k + 1)), Fraction(0)))
    return FugacitySeries(n, tuple(coeffs))


def expand_factor(a_exp: int, coef: Rational, power: int, nmax: int) -> FugacitySeries:
    """Truncated expansion of (1 - coef*z^a_exp)^(-1) for power = -1, or the
    binomial (1 + coef*z^a_exp) for power = +1."""
    if a_exp < 1:
        raise ValueError("a_exp must be positive")
    coef = Fraction(coef)
    coeffs = [Fraction(0)] * (nmax + 1)
    if power == -1:
        acc = Fraction(1)
        for k in range(0, nmax + 1, a_exp):
            coeffs[k] = acc
            acc *= coef
    elif power == 1:
        coeffs[0] = Fraction(1)
        if a_exp <= nmax:
            coeffs[a_exp] = coef
    else:
        raise ValueError("power must be +1 or -1")
    return FugacitySeries(nmax, tuple(coeffs))


def gpf_definition(kind: StatisticsKind, point: Sequence[Rational], nmax: int) -> FugacitySeries:
    """The grand series straight from its definition: coefficient of z^N is
    the canonical Z_N. Available for every statistics."""
    xs = as_point(point)
    return FugacitySeries(nmax, tuple(z_canonical(kind, xs, n) for n in range(nmax + 1)))


def gpf_product(kind: StatisticsKind, point: Sequence[Rational], nmax: int) -> FugacitySeries:
    """Closed product form of the grand series.

    bose:       prod_i 1/(1 - X_i)
    fermi:      prod_i (1 + X_i)
    hst:        prod_i 1/(1 - X_i) * prod_{i<j} 1/(1 - X_i X_j)
    even-rows:  prod_i 1/(1 - X_i^2) * prod_{i<j} 1/(1 - X_i X_j)
    even-cols:  prod_{i<j} 1/(1 - X_i X_j)

    Raises UnsupportedKind for parabose and pq (no closed form exists) and
    for parafermi (see gpf_parafermi_det).
    """
    xs = as_point(point)
    factors: list[tuple[int, Fraction, int]] = []
    fam = kind.family
    if fam == "bose":
        factors += [(1, x, -1) for x in xs]
    elif fam == "fermi":
        factors += [(1, x, +1) for x in xs]
    elif fam == "hst":
        factors += [(1, x, -1) for x in xs]
        factors += [(2, xi * xj, -1) for k, xi in enumerate(xs) for xj in xs[k + 1 :]]
    elif fam == "even-rows":
        factors += [(2, x * x, -1) for x in xs]
        factors += [(2, xi * xj, -1) for k, xi in enumerate(xs) for xj in xs[k + 1 :]]
    elif fam == "even-cols":
        factors += [(2, xi * xj, -1) for k, xi in enumerate(xs) for xj in xs[k + 1 :]]
    else:
        raise UnsupportedKind(f"no closed product form for {kind_name(kind)}")
    series = series_one(nmax)
    for a_exp, coef, power in factors:
        if a_exp > nmax:
            continue
        series = series_mul(series, expand_factor(a_exp, coef, power, nmax))
    return series


# ---------------------------------------------------------------------------
# Parafermi determinant ratio: polynomials in z with exact coefficients.

ZPoly = list[Fraction]


def _zp_trim(p: ZPoly) -> ZPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _zp_sub(a: ZPoly, b: ZPoly) -> ZPoly:
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _zp_trim(out)


def _zp_mul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _zp_trim(out)


def _zp_divexact(a: ZPoly, b: ZPoly) -> ZPoly:
    """Exact polynomial quotient; Bareiss guarantees divisibility."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(b) - 1] / lead
        quot[k] = c
        if c:
            for i, cb in enumerate(b):
                rem[k + i] -= c * cb
    if any(rem):
        raise ArithmeticError("inexact polynomial division in elimination")
    return _zp_trim(quot)


def _zp_det_bareiss(matrix: list[list[ZPoly]]) -> ZPoly:
    """Fraction-free (Bareiss) determinant of a matrix of z-polynomials."""
    n = len(matrix)
    m = [[list(e) for e in row] for row in matrix]
    sign = 1
    prev: ZPoly = [Fraction(1)]
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return []
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _zp_sub(_zp_mul(m[k][k], m[i][j]), _zp_mul(m[i][k], m[k][j]))
                m[i][j] = _zp_divexact(num, prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return [-c for c in det] if sign < 0 else det


def _monomial_diff(x: Fraction, hi: int, lo: int) -> ZPoly:
    """x^hi z^hi - x^lo z^lo as a z-polynomial (hi > lo >= 1)."""
    poly = [Fraction(0)] * (hi + 1)
    poly[hi] = x ** hi
    poly[lo] -= x ** lo
    return _zp_trim(poly)


def gpf_parafermi_det(p: int, point: Sequence[Rational], nmax: int) -> FugacitySeries:
    """Closed grand series for row-bounded (order-p) statistics, as the exact
    ratio of two determinants with entries X_j^(2M+p+1-i) - X_j^i over
    X_j^(2M+1-i) - X_j^i, expanded as a truncated series in z.

    The point must have pairwise-distinct coordinates; a coincidence raises
    DistinctnessViolation. If after cancelling the shared power of z the
    denominator still starts with a zero coefficient (a degenerate point that
    slipped through, e.g. a zero coordinate), DivisionInconsistency is raised.
    """
    if p < 1:
        raise ValueError("order p must be positive")
    xs = as_point(point)
    m = len(xs)
    if len(set(xs)) != m:
        raise DistinctnessViolation(f"repeated coordinate in point {xs}")
    num = _zp_det_bareiss(
        [[_monomial_diff(xs[j], 2 * m + p + 1 - i, i) for j in range(m)] for i in range(1, m + 1)]
    )
    den = _zp_det_bareiss(
        [[_monomial_diff(xs[j], 2 * m + 1 - i, i) for j in range(m)] for i in range(1, m + 1)]
    )
    if not den:
        raise DivisionInconsistency("denominator determinant is identically zero")
    common = min(
        next(i for i, c in enumerate(den) if c),
        next((i for i, c in enumerate(num) if c), len(den)),
    )
    num = num[common:]
    den = den[common:]
    if not den or den[0] == 0:
        raise DivisionInconsistency("denominator has no constant term after cancellation")
    coeffs = []
    for n in range(nmax + 1):
        acc = num[n] if n < len(num) else Fraction(0)
        for k in range(n):
            dk = den[n - k] if n - k < len(den) else Fraction(0)
            acc -= coeffs[k] * dk
        coeffs.append(acc / den[0])
    return FugacitySeries(nmax, tuple(coeffs))


# ---------------------------------------------------------------------------
# Identity verification.


@dataclass(frozen=True)
class IdentityReport:
    """Coefficientwise comparison of the defining sum against a closed form."""

    kind: StatisticsKind
    point: EvalPoint
    nmax: int
    lhs: FugacitySeries
    rhs: FugacitySeries
    equal: bool
    first_mismatch: int | None

    def to_json_dict(self) -> dict:
        return {
            "kind": kind_name(self.kind),
            "point": [frac_str(x) for x in self.point],
            "nmax": self.nmax,
            "equal": self.equal,
            "first_mismatch": self.first_mismatch,
            "lhs": self.lhs.json_coeffs(),
            "rhs": self.rhs.json_coeffs(),
        }


def gpf_closed_form(kind: StatisticsKind, point: Sequence[Rational], nmax: int) -> FugacitySeries:
    """Dispatch to the closed form available for this statistics."""
    if kind.family == "parafermi":
        return gpf_parafermi_det(kind.p, point, nmax)
    return gpf_product(kind, point, nmax)


def verify_identity(kind: StatisticsKind, point: Sequence[Rational], nmax: int) -> IdentityReport:
    """Compare the defining Schur sum against the closed form, exactly."""
    xs = as_point(point)
    lhs = gpf_definition(kind, xs, nmax)
    rhs = gpf_closed_form(kind, xs, nmax)
    mismatch = next((n for n in range(nmax + 1) if lhs.coeffs[n] != rhs.coeffs[n]), None)
    return IdentityReport(
        kind=kind,
        point=xs,
        nmax=nmax,
        lhs=lhs,
        rhs=rhs,
        equal=mismatch is None,
        first_mismatch=mismatch,
    )

"""Minimal helpers for integer-coefficient polynomials in one variable q.

A polynomial is a plain list of coefficients indexed by power, with trailing
zeros stripped; the zero polynomial is the empty list. This is all the series
work the q-side of the package needs (addition, shifted addition under a
degree cap, evaluation), so there is no class.
"""

from __future__ import annotations

from fractions import Fraction

QPoly = list[int]


def qp_normalize(coeffs) -> QPoly:
    """Strip trailing zeros; the zero polynomial becomes []."""
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def qp_add(a: QPoly, b: QPoly) -> QPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return qp_normalize(out)


def qp_add_shifted(dst: list[int], src: QPoly, shift: int, emax: int) -> None:
    """In-place dst += q^shift * src, dropping powers above emax.

    dst must already have length emax + 1.
    """
    if shift > emax:
        return
    stop = min(len(src), emax + 1 - shift)
    for i in range(stop):
        dst[shift + i] += src[i]


def qp_eval_fraction(poly: QPoly, q: Fraction) -> Fraction:
    """Exact evaluation by Horner's rule."""
    acc = Fraction(0)
    for c in reversed(poly):
        acc = acc * q + c
    return acc


def qp_eval_float(poly: QPoly, q: float) -> float:
    acc = 0.0
    for c in reversed(poly):
        acc = acc * q + c
    return acc


def qp_weighted_eval_float(poly: QPoly, q: float, scale: float) -> float:
    """Sum of scale * t * c_t * q^t, the energy-weighted companion of
    qp_eval_float when powers of q carry energy."""
    acc = 0.0
    qt = 1.0
    for t, c in enumerate(poly):
        if t:
            qt *= q
        acc += scale * t * c * qt
    return acc

"""Numeric thermodynamics on top of the exact canonical polynomials.

Everything upstream is exact; floating point enters only here, at the final
substitution. For a spectrum on the half-quantum grid the N-particle weight
is an integer polynomial in qh = e^(-beta hw / 2), computed once per
(statistics, spectrum, truncation) and cached; evaluating at a given beta
and chemical potential is then a handful of Horner passes, so the mu-solver
pays the combinatorial price exactly once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .canonical import z_canonical_qpoly
from .equivalence import SpectrumSpec
from .qpoly import qp_eval_float, qp_weighted_eval_float
from .statistics import StatisticsKind

TAIL_BOUND = 1e-9
MU_REL_TOL = 1e-8


class TruncationTail(ArithmeticError):
    """The last kept particle-number term is not negligible; nmax is too
    small for this fugacity, or the requested target is unreachable. The
    overflow flag records whether the failure was a float-range overflow
    rather than the tail bound itself."""

    def __init__(self, message: str, *, overflow: bool = False):
        super().__init__(message)
        self.overflow = overflow


class BracketFailure(ArithmeticError):
    """The mu search could not bracket the target mean particle number."""


@dataclass(frozen=True)
class ThermoParams:
    beta_hw: float
    mu_over_hw: float
    nmax: int

    def __post_init__(self):
        if not self.beta_hw > 0:
            raise ValueError("beta_hw must be positive")
        if self.nmax < 1:
            raise ValueError("nmax must be at least 1")


class ThermoResult(NamedTuple):
    logZ: float
    mean_n: float
    mean_e_over_hw: float


@lru_cache(maxsize=None)
def _weight_polys(kind: StatisticsKind, exponents: tuple[int, ...], nmax: int):
    """Exact integer polynomials in qh for N = 0..nmax, full degree kept so
    no truncation error enters before the float substitution."""
    top = max(exponents)
    return tuple(
        tuple(z_canonical_qpoly(kind, exponents, n, n * top if n else 0))
        for n in range(nmax + 1)
    )


def evaluate(kind: StatisticsKind, spec: SpectrumSpec, params: ThermoParams) -> ThermoResult:
    """Truncated grand sum sum_N z^N Z_N at z = e^(beta hw mu/hw) and
    qh = e^(-beta hw/2), with the mean particle number and the mean energy
    in units of hw. Raises TruncationTail unless the last term is below
    TAIL_BOUND of the total."""
    exponents = spec.qpoly_exponents()
    polys = _weight_polys(kind, exponents, params.nmax)
    qh = math.exp(-params.beta_hw / 2)
    logz = params.beta_hw * params.mu_over_hw
    # Work with log weights so no fugacity, however extreme, overflows
    # before the tail check can classify the point.
    try:
        values = [qp_eval_float(polys[n], qh) for n in range(params.nmax + 1)]
    except OverflowError:
        raise TruncationTail(
            "canonical weight exceeded float range; reduce nmax or beta",
            overflow=True,
        ) from None
    logw = [n * logz + math.log(v) if v > 0.0 else None for n, v in enumerate(values)]
    top = max(lw for lw in logw if lw is not None)
    scaled = [math.exp(lw - top) if lw is not None else 0.0 for lw in logw]
    total = math.fsum(scaled)
    if not scaled[params.nmax] < TAIL_BOUND * total:
        raise TruncationTail(
            f"tail fraction {scaled[params.nmax] / total:.3e} at "
            f"mu/hw = {params.mu_over_hw}; increase nmax or lower mu"
        )
    mean_n = math.fsum(n * w for n, w in enumerate(scaled)) / total
    # half-quantum grid: energy in hw units is t/2 for the q^t coefficient;
    # per-N mean energy is a ratio of same-scale sums, so no overflow either
    mean_e = (
        math.fsum(
            w * (qp_weighted_eval_float(polys[n], qh, 0.5) / values[n]) if w else 0.0
            for n, w in enumerate(scaled)
        )
        / total
    )
    return ThermoResult(top + math.log(total), mean_n, mean_e)


def solve_mu(
    kind: StatisticsKind,
    spec: SpectrumSpec,
    beta_hw: float,
    target_mean_n: float,
    nmax: int,
) -> float:
    """Chemical potential (in hw units) at which the mean particle number
    hits the target, to MU_REL_TOL relative. Bisection over a bracket found
    by doubling steps; the mean number must not decrease along the upward
    hunt, else BracketFailure. Points where the truncation check fails are
    treated as lying above the target, so the search backs away from them;
    if the target itself sits beyond the feasible region, TruncationTail."""
    if not target_mean_n > 0:
        raise ValueError("target mean particle number must be positive")
    tol = MU_REL_TOL * max(1.0, target_mean_n)
    WALL, OVER = "wall", "overflow"

    def mean_at(mu: float) -> float | str:
        try:
            return evaluate(kind, spec, ThermoParams(beta_hw, mu, nmax)).mean_n
        except TruncationTail as exc:
            return OVER if exc.overflow else WALL

    # occupation ~ e^-50 here: far below any sane target, and always feasible
    start = spec.levels[0][0] / 2 - 50.0 / beta_hw
    f0 = mean_at(start)
    if not isinstance(f0, float):
        raise TruncationTail("truncation fails even in the dilute limit; increase nmax")
    lo = hi = start
    f_lo = f_hi = f0
    step = 1.0 / beta_hw
    hunts = 0
    # Upward hunt. A tail-bound wall stops it (the target must then live
    # below the wall); an overflow point does not, because a series that is
    # truncation-limited trips the tail bound long before float range ends,
    # so overflow during the hunt means the mean number has saturated below
    # the target and the 200-step cap should diagnose that.
    while f_hi == OVER or (isinstance(f_hi, float) and f_hi < target_mean_n):
        hunts += 1
        if hunts > 200:
            raise BracketFailure(
                f"no bracket after 200 upward steps (last mean {f_lo}); "
                f"target {target_mean_n} looks unreachable (saturation?)"
            )
        if isinstance(f_hi, float):
            lo, f_lo = hi, f_hi
        hi += step
        step *= 2.0
        f_hi = mean_at(hi)
        if isinstance(f_hi, float) and f_hi < f_lo - 1e-9 * max(1.0, abs(f_lo)):
            raise BracketFailure(
                f"mean number fell from {f_lo} to {f_hi} while raising mu"
            )
    while f_lo > target_mean_n:
        hunts += 1
        if hunts > 200:
            raise BracketFailure(f"no lower bracket for target {target_mean_n}")
        hi, f_hi = lo, f_lo
        lo -= step
        step *= 2.0
        f_lo = mean_at(lo)
        if not isinstance(f_lo, float):
            raise TruncationTail("truncation fails while lowering mu; increase nmax")

    wall_hit = not isinstance(f_hi, float)
    for _ in range(400):
        mid = 0.5 * (lo + hi)
        f_mid = mean_at(mid)
        if not isinstance(f_mid, float):
            wall_hit = True
            hi = mid
        elif abs(f_mid - target_mean_n) <= tol:
            return mid
        elif f_mid < target_mean_n:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-15 * max(1.0, abs(lo), abs(hi)):
            break
    if wall_hit:
        raise TruncationTail(
            f"target {target_mean_n} lies beyond the truncation-feasible region"
        )
    raise BracketFailure(f"bisection stalled between {lo} and {hi}")


def sweep_csv(kind: StatisticsKind, spec: SpectrumSpec, runs: Iterable[ThermoParams]) -> str:
    """One evaluate per row; columns fixed for downstream tooling."""
    lines = ["beta_hw,mu_over_hw,meanN,meanE_over_hw,logZ"]
    for params in runs:
        r = evaluate(kind, spec, params)
        lines.append(
            f"{params.beta_hw!r},{params.mu_over_hw!r},{r.mean_n!r},{r.mean_e_over_hw!r},{r.logZ!r}"
        )
    return "\n".join(lines) + "\n"

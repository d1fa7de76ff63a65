"""The eight admissibility rules that turn a restricted partition sum into a
quantum statistics.

Each statistics is a predicate on partitions. The parameter-free families are
exposed as module constants (BOSE, FERMI, HST, EVEN_ROWS, EVEN_COLS); the
parametrised ones through `parafermi(p)`, `parabose(p)` and `pq(p, q)`.
String names follow the fixed grammar "bose", "fermi", "parafermi:p",
"parabose:p", "pq:p:q", "hst", "even-rows", "even-cols" used by the CLI and
JSON output.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .partitions import Partition, conjugate, gen_partitions

_FAMILIES = (
    "bose",
    "fermi",
    "parafermi",
    "parabose",
    "pq",
    "hst",
    "even-rows",
    "even-cols",
)


class UnsupportedKind(ValueError):
    """An operation was asked for a statistics it does not cover."""


@dataclass(frozen=True)
class StatisticsKind:
    """Tagged statistics family.

    `p` is the order of parafermi/parabose, or the row-count bound of pq;
    `q` is the column-count bound of pq (unrelated to the Boltzmann variable
    of the series modules). Both are None for the parameter-free families.
    """

    family: str
    p: int | None = None
    q: int | None = None

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown statistics family: {self.family!r}")
        if self.family in ("parafermi", "parabose"):
            if self.p is None or self.p < 1 or self.q is not None:
                raise ValueError(f"{self.family} needs a single positive order")
        elif self.family == "pq":
            if self.p is None or self.q is None or self.p < 1 or self.q < 1:
                raise ValueError("pq needs two positive bounds")
        elif self.p is not None or self.q is not None:
            raise ValueError(f"{self.family} takes no parameters")

    def __str__(self) -> str:
        return kind_name(self)


BOSE = StatisticsKind("bose")
FERMI = StatisticsKind("fermi")
HST = StatisticsKind("hst")
EVEN_ROWS = StatisticsKind("even-rows")
EVEN_COLS = StatisticsKind("even-cols")


def parafermi(p: int) -> StatisticsKind:
    """Row lengths bounded: admits lam iff lam_1 <= p."""
    return StatisticsKind("parafermi", p=p)


def parabose(p: int) -> StatisticsKind:
    """Row count bounded: admits lam iff length(lam) <= p."""
    return StatisticsKind("parabose", p=p)


def pq(p: int, q: int) -> StatisticsKind:
    """Both bounds at once: length(lam) <= p and lam_1 <= q."""
    return StatisticsKind("pq", p=p, q=q)


def kind_name(kind: StatisticsKind) -> str:
    if kind.family in ("parafermi", "parabose"):
        return f"{kind.family}:{kind.p}"
    if kind.family == "pq":
        return f"pq:{kind.p}:{kind.q}"
    return kind.family


def parse_kind(text: str) -> StatisticsKind:
    """Parse the fixed string grammar; raises UnsupportedKind on anything
    malformed, including bad order parameters."""
    head, _, rest = text.partition(":")
    try:
        params = [int(s) for s in rest.split(":")] if rest else []
        if head in ("parafermi", "parabose"):
            if len(params) != 1:
                raise ValueError(f"{head} needs exactly one order: {text!r}")
            return StatisticsKind(head, p=params[0])
        if head == "pq":
            if len(params) != 2:
                raise ValueError(f"pq needs two bounds: {text!r}")
            return StatisticsKind(head, p=params[0], q=params[1])
        if params:
            raise ValueError(f"{head} takes no parameters: {text!r}")
        return StatisticsKind(head)
    except UnsupportedKind:
        raise
    except ValueError as exc:
        raise UnsupportedKind(str(exc)) from None


def admits(kind: StatisticsKind, lam: Partition) -> bool:
    """Does this statistics admit the partition?

    The empty partition is admitted by every kind, so every canonical
    partition function has Z_0 = 1.
    """
    fam = kind.family
    if fam == "hst":
        return True
    if fam == "bose":
        return len(lam) <= 1
    if fam == "fermi":
        return not lam or lam[0] <= 1
    if fam == "parafermi":
        return not lam or lam[0] <= kind.p
    if fam == "parabose":
        return len(lam) <= kind.p
    if fam == "pq":
        return len(lam) <= kind.p and (not lam or lam[0] <= kind.q)
    if fam == "even-rows":
        return all(part % 2 == 0 for part in lam)
    if fam == "even-cols":
        # all part multiplicities even <=> conjugate(lam) has all parts even
        return all(mult % 2 == 0 for mult in Counter(lam).values())
    raise UnsupportedKind(kind_name(kind))


def admitted_partitions(kind: StatisticsKind, n: int, max_parts: int) -> list[Partition]:
    """gen_partitions(n, max_parts) filtered by admits, order preserved."""
    return [lam for lam in gen_partitions(n, max_parts) if admits(kind, lam)]


def even_cols_by_conjugate(lam: Partition) -> bool:
    """Definition-level check for the even-columns rule, via the conjugate.

    Kept as an independently testable alternative to the multiplicity route
    used in `admits`.
    """
    return all(part % 2 == 0 for part in conjugate(lam))

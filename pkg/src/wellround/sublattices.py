"""Finite-index sublattices of a planar lattice.

Every finite-index sublattice of Z^2 has a unique Hermite normal form basis,
the columns of [[m, k], [0, l]] with m, l >= 1 and 0 <= k < m; its index is
m*l.  Enumerating these and classifying the restricted Gram form gives an
exhaustive census of sublattice types up to a given index, the brute-force
oracle against which every generating-function counter is checked.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .gram import GramForm, LatticeType, _reduce_int, classify_reduced, gauss_reduce
from .scalar import Scalar


class UnsupportedDimensionError(ValueError):
    """Only the planar case is implemented."""


@dataclass(frozen=True)
class SublatticeBasis:
    """Hermite form basis: generator columns (m, 0) and (k, l), 0 <= k < m."""

    m: int
    k: int
    l: int

    def __post_init__(self):
        if self.m < 1 or self.l < 1 or not 0 <= self.k < self.m:
            raise ValueError(f"not a normal form triple: {self}")

    @property
    def index(self) -> int:
        return self.m * self.l

    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.m, self.k), (0, self.l))


def hnf_enumerate(n: int) -> list[SublatticeBasis]:
    """All index-n sublattices, one canonical basis each; length sigma_1(n)."""
    if n < 1:
        raise ValueError("index must be positive")
    out = []
    for m in range(1, n + 1):
        if n % m:
            continue
        l = n // m
        out.extend(SublatticeBasis(m, k, l) for k in range(m))
    return out


def g_count(n: int, d: int = 2) -> int:
    """Number of index-n sublattices in dimension d; only d=2 supported."""
    if d != 2:
        raise UnsupportedDimensionError(f"dimension {d} not supported")
    if n < 1:
        raise ValueError("index must be positive")
    return sum(m for m in range(1, n + 1) if n % m == 0)


def sublattice_gram(B: SublatticeBasis, g: GramForm) -> GramForm:
    """Gram form of the sublattice basis (restriction of g)."""
    m, k, l = B.m, B.k, B.l
    a = g.a * (m * m)
    b = g.a * (m * k) + g.b * (m * l)
    c = g.a * (k * k) + g.b * (2 * k * l) + g.c * (l * l)
    return GramForm(a, b, c)


_TYPE_ORDER = [
    LatticeType.GENERAL,
    LatticeType.RECTANGULAR,
    LatticeType.CENTRED_RECTANGULAR,
    LatticeType.RHOMBIC,
    LatticeType.SQUARE,
    LatticeType.HEXAGONAL,
]

_CSV_HEADER = [
    "n",
    "total",
    "general",
    "rectangular",
    "centred_rect",
    "rhombic",
    "square",
    "hexagonal",
    "well_rounded",
]


@dataclass
class CensusReport:
    """Per-index tallies of sublattice types up to a bound N.

    ``by_type[t][n-1]`` counts index-n sublattices of geometric type t.
    Reports over disjoint index ranges merge by elementwise addition, so a
    census may be split across workers and recombined in any order.
    """

    N: int
    by_type: dict[LatticeType, list[int]] = field(default_factory=dict)

    def __post_init__(self):
        for t in _TYPE_ORDER:
            self.by_type.setdefault(t, [0] * self.N)

    def tally(self, n: int, t: LatticeType) -> None:
        self.by_type[t][n - 1] += 1

    def total(self, n: int) -> int:
        return sum(self.by_type[t][n - 1] for t in _TYPE_ORDER)

    def well_rounded(self, n: int) -> int:
        return (
            self.by_type[LatticeType.RHOMBIC][n - 1]
            + self.by_type[LatticeType.SQUARE][n - 1]
            + self.by_type[LatticeType.HEXAGONAL][n - 1]
        )

    def well_rounded_list(self) -> list[int]:
        return [self.well_rounded(n) for n in range(1, self.N + 1)]

    def summatory_well_rounded(self, x: int) -> int:
        return sum(self.well_rounded(n) for n in range(1, x + 1))

    def merge(self, other: "CensusReport") -> "CensusReport":
        if other.N != self.N:
            raise ValueError("census bounds differ")
        out = CensusReport(self.N)
        for t in _TYPE_ORDER:
            out.by_type[t] = [
                u + v for u, v in zip(self.by_type[t], other.by_type[t])
            ]
        return out

    def row(self, n: int) -> list[int]:
        return (
            [n, self.total(n)]
            + [self.by_type[t][n - 1] for t in _TYPE_ORDER]
            + [self.well_rounded(n)]
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(_CSV_HEADER)
        for n in range(1, self.N + 1):
            writer.writerow(self.row(n))
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {
                "N": self.N,
                "columns": _CSV_HEADER,
                "rows": [self.row(n) for n in range(1, self.N + 1)],
            }
        )


def _classify_int(a: int, b: int, c: int) -> LatticeType:
    return classify_reduced(*_reduce_int(a, b, c))


def wr_census_bruteforce(
    g: GramForm, N: int, index_range: tuple[int, int] | None = None
) -> CensusReport:
    """Classify every sublattice of index <= N; exhaustive oracle.

    ``index_range`` restricts tallying to a half-open slice of [1, N] so the
    work can be partitioned; merging the slice reports reproduces the full
    census.
    """
    g.check_positive_definite()
    if N < 1:
        raise ValueError("census bound must be positive")
    lo, hi = index_range if index_range is not None else (1, N + 1)
    report = CensusReport(N)
    if g.is_integral():
        ga = int(g.a.rat)
        gb = int(g.b.rat)
        gc = int(g.c.rat)
        for n in range(lo, hi):
            for m in range(1, n + 1):
                if n % m:
                    continue
                l = n // m
                for k in range(m):
                    a = ga * m * m
                    b = ga * m * k + gb * m * l
                    c = ga * k * k + 2 * gb * k * l + gc * l * l
                    report.tally(n, _classify_int(a, b, c))
        return report
    for n in range(lo, hi):
        for B in hnf_enumerate(n):
            sub = sublattice_gram(B, g)
            r, _ = gauss_reduce(sub)
            report.tally(n, classify_reduced(r.a, r.b, r.c))
    return report

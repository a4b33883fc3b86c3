"""Formula-vs-oracle sweeps over cyclic quotient points."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import gcd

from termsing.catalog import HilbertQuadratic, is_terminal_quotient
from termsing.descent import quotient_multiplicity
from termsing.oracle import (
    DEFAULT_MAX_K,
    DEFAULT_MAX_R,
    WeightedQuotientMonoid,
    order_filtration,
)
from termsing.surface import surface_graded_dim, surface_multiplicity

__all__ = [
    "CSV_COLUMNS",
    "CellResult",
    "ProbeResult",
    "coprime_cells",
    "check_cell",
    "check_surface_cell",
    "sweep",
    "surface_sweep",
    "probe",
    "parse_probe",
]

CSV_COLUMNS = (
    "r", "a", "mult_formula", "mult_oracle", "embdim_formula", "embdim_oracle",
    "graded_match", "seconds",
)


@dataclass(frozen=True)
class CellResult:
    r: int
    a: int
    mult_formula: int
    mult_oracle: int
    embdim_formula: int
    embdim_oracle: int
    graded_match: bool
    seconds: float
    counts: tuple[int, ...] = ()
    stabilized: bool = True

    @property
    def ok(self) -> bool:
        return (
            self.graded_match
            and self.mult_formula == self.mult_oracle
            and self.embdim_formula == self.embdim_oracle
        )

    def csv_row(self):
        return [
            self.r, self.a, self.mult_formula, self.mult_oracle, self.embdim_formula,
            self.embdim_oracle, "true" if self.graded_match else "false", f"{self.seconds:.6f}",
        ]

    def as_dict(self):
        d = asdict(self)
        d["counts"] = list(self.counts)
        d["ok"] = self.ok
        return d


def coprime_cells(r_max: int, r_min: int = 2):
    return [(r, a) for r in range(r_min, r_max + 1) for a in range(1, r) if gcd(r, a) == 1]


def _check_k(k_max):
    if k_max < 3:
        raise ValueError(f"k-max must be >= 3 to extract a multiplicity, got {k_max}")


def _lead(counts, d):
    seq = list(counts)
    for _ in range(d - 1):
        seq = [b - a for a, b in zip(seq, seq[1:])]
    return seq[-1]


def check_cell(r: int, a: int, k_max: int = 4, max_r: int = DEFAULT_MAX_R,
               max_k: int = DEFAULT_MAX_K) -> CellResult:
    """Compare the descent formula with the lattice oracle on Z_r(a, r-a, 1)."""
    _check_k(k_max)
    t0 = time.perf_counter()
    mult = quotient_multiplicity(r, a)
    hq = HilbertQuadratic(mult)
    table = order_filtration(WeightedQuotientMonoid(r, (a, r - a, 1)), k_max,
                             max_r=max_r, max_k=max_k)
    graded = all(c == hq(k) for k, c in enumerate(table.counts))
    seconds = time.perf_counter() - t0
    return CellResult(r, a, mult, _lead(table.counts, 3), mult + 2, table.embdim,
                      graded, seconds, table.counts, table.stabilized)


def check_surface_cell(n: int, q: int, k_max: int = 4, max_r: int = DEFAULT_MAX_R,
                       max_k: int = DEFAULT_MAX_K) -> CellResult:
    """Same comparison for C^2/Z_n(q, 1) against the chain formula."""
    _check_k(k_max)
    t0 = time.perf_counter()
    mult = surface_multiplicity(n, q)
    table = order_filtration(WeightedQuotientMonoid(n, (q, 1)), k_max, max_r=max_r, max_k=max_k)
    graded = all(c == surface_graded_dim(n, q, k) for k, c in enumerate(table.counts))
    seconds = time.perf_counter() - t0
    return CellResult(n, q, mult, _lead(table.counts, 2), mult + 1, table.embdim,
                      graded, seconds, table.counts, table.stabilized)


def _run(fn, cells, k_max, jobs, max_r, max_k):
    args = [(r, a, k_max, max_r, max_k) for r, a in cells]
    if jobs <= 1 or len(cells) < 2:
        return [fn(*x) for x in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map keeps input order regardless of completion order
        return list(pool.map(fn, *zip(*args)))


def sweep(r_max: int = 12, k_max: int = 4, jobs: int = 1, max_r: int = DEFAULT_MAX_R,
          max_k: int = DEFAULT_MAX_K) -> list[CellResult]:
    return _run(check_cell, coprime_cells(r_max), k_max, jobs, max_r, max_k)


def surface_sweep(n_max: int = 15, k_max: int = 4, jobs: int = 1, max_r: int = DEFAULT_MAX_R,
                  max_k: int = DEFAULT_MAX_K) -> list[CellResult]:
    return _run(check_surface_cell, coprime_cells(n_max), k_max, jobs, max_r, max_k)


@dataclass(frozen=True)
class ProbeResult:
    r: int
    weights: tuple[int, int, int]
    group_order: int
    gorenstein_index: int
    mult_oracle: int
    embdim_oracle: int
    stabilized: bool
    counts: tuple[int, ...]
    formula_applicable: bool
    normal_form_a: int | None
    mult_formula: int | None
    embdim_below_mult_plus_2: bool
    mult_exceeds_order_plus_2: bool

    @property
    def mismatch(self) -> bool:
        """Only a terminal point can contradict the formula."""
        if not self.formula_applicable:
            return False
        return (
            self.mult_oracle != self.mult_formula
            or self.embdim_oracle != self.mult_formula + 2
        )

    def as_dict(self):
        d = asdict(self)
        d["weights"] = list(self.weights)
        d["counts"] = list(self.counts)
        d["mismatch"] = self.mismatch
        return d


def probe(r: int, weights, k_max: int = 4, max_r: int = DEFAULT_MAX_R,
          max_k: int = DEFAULT_MAX_K) -> ProbeResult:
    """Run the oracle on an arbitrary C^3/Z_r(w) and say whether the formula applies.

    The two flags compare against the group order r, which is the index
    whenever the point is terminal.
    """
    weights = tuple(int(w) % r for w in weights)
    Q = WeightedQuotientMonoid(r, weights)
    table = order_filtration(Q, max(k_max, 3), max_r=max_r, max_k=max_k)
    mult = _lead(table.counts, 3)
    embdim = table.embdim
    a = is_terminal_quotient(r, weights)
    formula = quotient_multiplicity(r, a) if a is not None else None
    return ProbeResult(
        r=r,
        weights=weights,
        group_order=r,
        gorenstein_index=r // gcd(r, sum(weights)),
        mult_oracle=mult,
        embdim_oracle=embdim,
        stabilized=table.stabilized,
        counts=table.counts,
        formula_applicable=a is not None,
        normal_form_a=a,
        mult_formula=formula,
        embdim_below_mult_plus_2=embdim < mult + 2,
        mult_exceeds_order_plus_2=mult > r + 2,
    )


def parse_probe(text: str) -> tuple[int, tuple[int, int, int]]:
    """Parse "r:w1,w2,w3"."""
    try:
        r_s, w_s = text.split(":")
        r = int(r_s)
        ws = tuple(int(x) for x in w_s.split(","))
    except ValueError:
        raise ValueError(f"malformed probe {text!r}; expected 'r:w1,w2,w3'") from None
    if len(ws) != 3:
        raise ValueError(f"probe {text!r} needs exactly three weights")
    if r < 2:
        raise ValueError(f"probe order must be >= 2, got {r}")
    return r, ws

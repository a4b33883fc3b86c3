"""Brute-force invariants of cyclic quotient points by lattice enumeration.

The invariant ring of C^d/Z_r(w) is the monoid algebra of
{e in N^d : w.e = 0 mod r}. Its Hilbert basis gives the embedding dimension
and the order function ord(e) (the largest number of nonzero members summing
to e) gives the graded pieces of the maximal-ideal filtration. Nothing here
uses a closed formula for the answers; that is the point.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from termsing import _kernels

__all__ = [
    "OracleGuardError",
    "WeightedQuotientMonoid",
    "OrderFiltrationTable",
    "hilbert_basis",
    "order_filtration",
    "oracle_multiplicity",
    "hypersurface_graded_dim",
    "DEFAULT_MAX_R",
    "DEFAULT_MAX_K",
]

DEFAULT_MAX_R = 30
DEFAULT_MAX_K = 6


class OracleGuardError(ValueError):
    """Requested enumeration exceeds the configured size guard."""


@dataclass(frozen=True)
class WeightedQuotientMonoid:
    r: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if len(self.weights) not in (2, 3):
            raise ValueError(f"only dimensions 2 and 3 are supported, got {len(self.weights)}")
        object.__setattr__(self, "weights", tuple(int(w) % self.r for w in self.weights))

    @property
    def dim(self) -> int:
        return len(self.weights)

    def __contains__(self, e) -> bool:
        return len(e) == self.dim and min(e) >= 0 and (
            sum(w * x for w, x in zip(self.weights, e)) % self.r == 0
        )


@dataclass(frozen=True)
class OrderFiltrationTable:
    hilbert_basis: tuple[tuple[int, ...], ...]
    counts: tuple[int, ...]
    stabilized: bool

    @property
    def embdim(self) -> int:
        return len(self.hilbert_basis)


def _lattice_size(d, degree):
    return comb(degree + d, d)


def hilbert_basis(Q: WeightedQuotientMonoid) -> frozenset:
    """Minimal generators, searched in the box [0, r]^d.

    A member with some coordinate >= r splits off r times that unit vector,
    so the box is complete.
    """
    return frozenset(_kernels.hilbert_basis(Q.r, Q.weights))


def _differences(counts, d):
    # (d-1)-th finite differences of the graded counts
    seq = list(counts)
    for _ in range(d - 1):
        seq = [b - a for a, b in zip(seq, seq[1:])]
    return seq


def order_filtration(
    Q: WeightedQuotientMonoid,
    K: int,
    *,
    basis=None,
    max_r: int = DEFAULT_MAX_R,
    max_k: int = DEFAULT_MAX_K,
) -> OrderFiltrationTable:
    """Count monoid elements of each order 0..K by dynamic programming.

    ``basis`` may be supplied in any order (it must be the Hilbert basis);
    the result does not depend on it. Pass larger ``max_r``/``max_k`` to
    lift the size guard.
    """
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if Q.r > max_r or K > max_k:
        est = _lattice_size(Q.dim, K * Q.r)
        raise OracleGuardError(
            f"r={Q.r}, K={K} exceeds guard r<={max_r}, K<={max_k} "
            f"(estimated lattice size {est})"
        )
    if basis is None:
        basis = _kernels.hilbert_basis(Q.r, Q.weights)
    basis = [tuple(h) for h in basis]
    max_degree = K * max(sum(h) for h in basis)
    counts = _kernels.order_counts(Q.r, Q.weights, basis, max_degree, K)
    diffs = _differences(counts, Q.dim)
    stabilized = len(diffs) >= 2 and diffs[-1] == diffs[-2]
    return OrderFiltrationTable(tuple(sorted(basis)), tuple(counts), stabilized)


def oracle_multiplicity(Q: WeightedQuotientMonoid, K: int, **guards) -> tuple[int, bool]:
    """Leading coefficient of the graded counts via finite differences.

    Returns (estimate, stabilized); stabilized means the last two
    differences agree.
    """
    if K < 3:
        raise ValueError(f"K must be >= 3, got {K}")
    table = order_filtration(Q, K, **guards)
    diffs = _differences(table.counts, Q.dim)
    return diffs[-1], table.stabilized


def hypersurface_graded_dim(ambient: int, form_degree: int, k: int) -> int:
    """Degree-k piece of k[x_1..x_n]/(F) for a form F of the given degree.

    Only the quadric cone in four variables is supported.
    """
    if (ambient, form_degree) != (4, 2):
        raise ValueError("only ambient=4, form_degree=2 is supported")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return comb(k + 3, 3) - comb(k + 1, 3)

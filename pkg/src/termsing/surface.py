"""Cyclic quotient surface points C^2/Z_n(q, 1) via their resolution chain.

The exceptional locus of the minimal resolution is a chain of rational
curves with self-intersections -b_i, where n/q = [b_1, ..., b_s] is the
Hirzebruch-Jung expansion. Every b_i >= 2, so the fundamental cycle is the
reduced sum of the curves and -Z^2 = sum(b_i) - 2s + 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = [
    "HJChain",
    "hj_expand",
    "hj_value",
    "surface_multiplicity",
    "surface_embdim",
    "surface_graded_dim",
]


@dataclass(frozen=True)
class HJChain:
    n: int
    q: int
    b: tuple[int, ...]

    @property
    def self_intersection(self) -> int:
        """Z^2 of the reduced chain cycle."""
        return -sum(self.b) + 2 * (len(self.b) - 1)


def _check(n, q):
    if not isinstance(n, int) or not isinstance(q, int):
        raise TypeError(f"n and q must be integers, got {n!r}, {q!r}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got n={n}")
    if not 1 <= q < n:
        raise ValueError(f"q must lie in [1, {n - 1}], got q={q}")
    if gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) must be 1, got gcd({n}, {q}) = {gcd(n, q)}")


def hj_value(b) -> Fraction:
    """Evaluate b_1 - 1/(b_2 - 1/(... - 1/b_s)) exactly."""
    if not b:
        raise ValueError("empty chain")
    val = Fraction(b[-1])
    for bi in reversed(b[:-1]):
        val = bi - 1 / val
    return val


def hj_expand(n: int, q: int) -> HJChain:
    """Hirzebruch-Jung expansion of n/q (ceiling recursion, all entries >= 2)."""
    _check(n, q)
    b = []
    num, den = n, q
    while den:
        c = -(-num // den)
        b.append(c)
        num, den = den, c * den - num
    return HJChain(n, q, tuple(b))


def surface_multiplicity(n: int, q: int) -> int:
    if n == 1:
        return 1
    return -hj_expand(n, q).self_intersection


def surface_embdim(n: int, q: int) -> int:
    if n == 1:
        return 2
    return surface_multiplicity(n, q) + 1


def surface_graded_dim(n: int, q: int, k: int) -> int:
    """dim m^k/m^{k+1} of the local ring at the image of the origin."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if n == 1:
        return k + 1
    return k * surface_multiplicity(n, q) + 1

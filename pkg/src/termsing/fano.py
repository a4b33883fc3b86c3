"""Exact arithmetic behind the volume and index bounds for terminal Q-Fano 3-folds."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

__all__ = [
    "FanoBound",
    "fano_volume_bound",
    "legendre_exponent",
    "index_divides_factorial",
    "index_divides_24fact",
    "lemma32_bound",
    "lemma32_check",
]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23)


@dataclass(frozen=True)
class FanoBound:
    value: int
    base: int = 6
    exponent: int = 3
    additive: int = 2
    factorial_arg: int = 24

    @property
    def expression(self) -> str:
        return f"{self.base ** self.exponent} * ({self.factorial_arg}! + {self.additive})"

    def __str__(self):
        return f"{self.expression} = {self.value}"


def fano_volume_bound() -> FanoBound:
    """Upper bound 6^3 * (2 + 24!) on (-K_X)^3."""
    return FanoBound(6 ** 3 * (2 + factorial(24)))


def legendre_exponent(n: int, p: int) -> int:
    """Exponent of the prime p in n!."""
    e, q = 0, p
    while q <= n:
        e += n // q
        q *= p
    return e


def index_divides_factorial(I: int, n: int) -> bool:
    """Whether I | n!, by Legendre's formula on the prime factors of I."""
    if I < 1:
        raise ValueError(f"I must be >= 1, got {I}")
    rest = I
    p = 2
    while p <= n:
        if rest % p == 0:
            k = 0
            while rest % p == 0:
                rest //= p
                k += 1
            if k > legendre_exponent(n, p):
                return False
        p += 1
    # any leftover factor is a prime > n, absent from n!
    return rest == 1


def index_divides_24fact(I: int) -> bool:
    return index_divides_factorial(I, 24)


def lemma32_bound(n: int, r: int, d: int) -> int:
    """r * d^n: the bound on D^n given a point of multiplicity r and D.l <= d."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    return r * d ** n


def lemma32_check(Dn, n: int, r: int, d: int) -> bool:
    return Fraction(Dn) <= lemma32_bound(n, r, d)

"""Euclidean descent for terminal cyclic quotient points C^3/Z_r(a, r-a, 1)."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = ["DescentSequence", "descend", "quotient_multiplicity", "check_pair"]


def check_pair(r: int, a: int) -> None:
    """Validate an (r, a) pair; each failure mode gets its own message."""
    if not isinstance(r, int) or not isinstance(a, int):
        raise TypeError(f"r and a must be integers, got {r!r}, {a!r}")
    if r < 2:
        raise ValueError(f"r must be >= 2, got r={r}")
    if not 1 <= a < r:
        raise ValueError(f"a must lie in [1, {r - 1}], got a={a}")
    if gcd(r, a) != 1:
        raise ValueError(f"gcd(r, a) must be 1, got gcd({r}, {a}) = {gcd(r, a)}")


@dataclass(frozen=True)
class DescentSequence:
    rs: tuple[int, ...]
    as_: tuple[int, ...]
    floors: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.floors)

    @property
    def multiplicity(self) -> int:
        return sum(self.floors) + 2

    def as_dict(self) -> dict:
        return {"rs": list(self.rs), "as": list(self.as_), "floors": list(self.floors)}


def descend(r: int, a: int) -> DescentSequence:
    """Run the descent r_{i+1} = min(r_i - a_i, a_i), a_{i+1} = r_i mod r_{i+1}.

    >>> descend(13, 5)
    DescentSequence(rs=(13, 5, 2, 1), as_=(5, 3, 1), floors=(2, 2, 2))
    """
    check_pair(r, a)
    rs = [r]
    as_ = [a]
    while True:
        nxt = min(rs[-1] - as_[-1], as_[-1])
        rs.append(nxt)
        if nxt == 1:
            break
        as_.append(rs[-2] % nxt)
    floors = tuple(rs[i] // rs[i + 1] for i in range(len(rs) - 1))
    return DescentSequence(tuple(rs), tuple(as_), floors)


def quotient_multiplicity(r: int, a: int) -> int:
    """Multiplicity of C^3/Z_r(a, r-a, 1) (and of cA/r with the same r, a)."""
    return descend(r, a).multiplicity

"""Mori's list of 3-fold terminal singularities and their invariants."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, gcd
from typing import Optional, Union

from termsing.descent import check_pair, descend

__all__ = [
    "Smooth",
    "GorensteinCDV",
    "CyclicQuotient",
    "CAr",
    "CAx4",
    "CAx2",
    "CD2",
    "CD3",
    "CE2",
    "SingularityClass",
    "CLASS_NAMES",
    "HilbertQuadratic",
    "InvariantReport",
    "make_class",
    "class_name",
    "invariants",
    "graded_dim",
    "case_basis_count",
    "is_terminal_quotient",
    "all_fixed_classes",
]


@dataclass(frozen=True)
class Smooth:
    pass


@dataclass(frozen=True)
class GorensteinCDV:
    note: str = field(default="", compare=False)


@dataclass(frozen=True)
class CyclicQuotient:
    """C^3/Z_r(a, r-a, 1)."""
    r: int
    a: int

    def __post_init__(self):
        check_pair(self.r, self.a)


@dataclass(frozen=True)
class CAr:
    """cA/r: xy + f(z, u^r) = 0 in C^4/Z_r(a, r-a, r, 1)."""
    r: int
    a: int

    def __post_init__(self):
        check_pair(self.r, self.a)


@dataclass(frozen=True)
class CAx4:
    note: str = field(default="", compare=False)


@dataclass(frozen=True)
class CAx2:
    note: str = field(default="", compare=False)


@dataclass(frozen=True)
class CD2:
    # which of the three cD/2 equation shapes was meant, free text
    note: str = field(default="", compare=False)


@dataclass(frozen=True)
class CD3:
    note: str = field(default="", compare=False)


@dataclass(frozen=True)
class CE2:
    note: str = field(default="", compare=False)


SingularityClass = Union[Smooth, GorensteinCDV, CyclicQuotient, CAr, CAx4, CAx2, CD2, CD3, CE2]

CLASS_NAMES = {
    Smooth: "smooth",
    GorensteinCDV: "cDV",
    CyclicQuotient: "quotient",
    CAr: "cA/r",
    CAx4: "cAx/4",
    CAx2: "cAx/2",
    CD2: "cD/2",
    CD3: "cD/3",
    CE2: "cE/2",
}
_BY_NAME = {v: k for k, v in CLASS_NAMES.items()}

# (index, mult) for the parameter-free singular classes
_FIXED = {
    GorensteinCDV: (1, 2),
    CAx4: (4, 6),
    CAx2: (2, 4),
    CD2: (2, 4),
    CD3: (3, 5),
    CE2: (2, 4),
}


def class_name(c: SingularityClass) -> str:
    return CLASS_NAMES[type(c)]


def make_class(name: str, r: Optional[int] = None, a: Optional[int] = None) -> SingularityClass:
    """Build a class from its serialized name ("quotient", "cAx/4", ...)."""
    try:
        cls = _BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown class {name!r}; expected one of {sorted(_BY_NAME)}") from None
    if cls in (CyclicQuotient, CAr):
        if r is None or a is None:
            raise ValueError(f"class {name!r} needs both r and a")
        return cls(r, a)
    if r is not None or a is not None:
        raise ValueError(f"class {name!r} takes no r/a parameters")
    return cls()


def all_fixed_classes():
    return [Smooth(), GorensteinCDV(), CAx4(), CAx2(), CD2(), CD3(), CE2()]


@dataclass(frozen=True)
class HilbertQuadratic:
    """k -> mult * k(k+1)/2 + k + 1."""
    mult: int

    def __call__(self, k: int) -> int:
        if k < 0:
            raise ValueError(f"k must be >= 0, got {k}")
        return self.mult * k * (k + 1) // 2 + k + 1

    eval = __call__


@dataclass(frozen=True)
class InvariantReport:
    index: int
    mult: int
    embdim: int
    hilbert: HilbertQuadratic
    theorem_applicable: bool = True


def invariants(c: SingularityClass) -> InvariantReport:
    if isinstance(c, Smooth):
        return InvariantReport(1, 1, 3, HilbertQuadratic(1))
    if isinstance(c, (CyclicQuotient, CAr)):
        mult = descend(c.r, c.a).multiplicity
        applicable = True
        if isinstance(c, CyclicQuotient):
            applicable = is_terminal_quotient(c.r, (c.a, c.r - c.a, 1)) is not None
        return InvariantReport(c.r, mult, mult + 2, HilbertQuadratic(mult), applicable)
    try:
        index, mult = _FIXED[type(c)]
    except KeyError:
        raise TypeError(f"not a singularity class: {c!r}") from None
    return InvariantReport(index, mult, mult + 2, HilbertQuadratic(mult))


def graded_dim(c: SingularityClass, k: int) -> int:
    """dim m^k/m^{k+1} at the singular point."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if isinstance(c, Smooth):
        return comb(k + 2, 2)
    return invariants(c).hilbert(k)


def _count_cdv(k):
    # degree-k part of k[x,y,z,t]/(t^2 + f): all monomials minus t^2 * (degree k-2)
    return 2 * (k + 2) * (k + 1) // 2 - (k + 1)


def _count_cax4(k):
    total = 0
    for t in range(k + 1):
        # (yu)^t u^{4(k-t)-2s} z^s, 0 <= s <= 2(k-t)
        total += len(range(0, 2 * (k - t) + 1))
        # (yu)^t x u^{4(k-t)-2s-1} z^s, 0 <= s <= 2(k-t)-1
        total += len(range(0, 2 * (k - t)))
        # (yu)^t (x^2 z)(yx)^s (z^2)^{k-s-t-1}, 0 <= s <= k-t-1
        total += len(range(0, k - t))
        # (yu)^t (yx)^s (z^2)^{k-s-t}, 1 <= s <= k-t
        total += len(range(1, k - t + 1))
    return total


def _count_cax2(k):
    # y^s (z,u)^{2(k-s)} and x y^t (z,u)^{2(k-t)-1}
    first = sum(2 * k - 2 * s + 1 for s in range(k + 1))
    second = sum(2 * k - 2 * t for t in range(k))
    return first + second


def _count_cd3(k):
    # u^t (x(y,z))^{k-t}; u^t (x(y,z))^{k-t-1} (y,z)^3; u^t (x(y,z))^s (y,z)^{6+3(k-2-s-t)}
    first = sum(k - t + 1 for t in range(k + 1))
    second = sum(k - t + 3 for t in range(k))
    third = sum(3 for t in range(k - 1) for s in range(k - t - 1))
    return first + second + third


_CASE_COUNTS = {
    GorensteinCDV: _count_cdv,
    CAx4: _count_cax4,
    CAx2: _count_cax2,
    CD3: _count_cd3,
}


def case_basis_count(c: SingularityClass, k: int) -> int:
    """Count the explicit graded basis written down for this class, term by term."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    try:
        fn = _CASE_COUNTS[type(c)]
    except KeyError:
        raise ValueError(
            f"no explicit basis count for class {class_name(c) if type(c) in CLASS_NAMES else c!r}"
        ) from None
    return fn(k)


def is_terminal_quotient(r: int, weights) -> Optional[int]:
    """Return a with weights ~ (a, r-a, 1) up to a unit and a permutation, else None.

    The coordinate mapped to 1 must carry a unit weight; scaling by its
    inverse fixes the unit, so only three candidates need checking.
    """
    if r < 2:
        raise ValueError(f"r must be >= 2, got r={r}")
    w = [int(x) % r for x in weights]
    if len(w) != 3:
        raise ValueError(f"expected three weights, got {len(w)}")
    for third in (2, 1, 0):
        if gcd(w[third], r) != 1:
            continue
        c = pow(w[third], -1, r)
        x, y = (c * w[i] % r for i in range(3) if i != third)
        if x and (x + y) % r == 0 and gcd(x, r) == 1:
            return x
    return None

"""Numerical freeness conditions at a nonhypersurface terminal point of index r >= 2.

Thresholds are compared as p-th powers so all arithmetic stays rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Threshold",
    "FujitaInput",
    "ConditionVerdict",
    "FujitaVerdict",
    "parse_rational",
    "fujita_minimums",
    "fujita_check",
]


def parse_rational(text) -> Fraction:
    """Parse "p/q" (or an integer) into an exact rational; floats are refused."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"expected a 'p/q' string, got {text!r}")
    parts = text.strip().split("/")
    if len(parts) > 2 or not all(p.strip().lstrip("+-").isdigit() for p in parts):
        raise ValueError(f"malformed rational {text!r}; expected 'p/q'")
    num = int(parts[0])
    den = int(parts[1]) if len(parts) == 2 else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Threshold:
    p: int
    power_minimum: Fraction  # bound on sigma_p ** p
    strict: bool

    def satisfied_by(self, sigma: Fraction) -> bool:
        val = sigma ** self.p
        return val > self.power_minimum if self.strict else val >= self.power_minimum

    def __str__(self):
        op = ">" if self.strict else ">="
        lhs = "sigma_1" if self.p == 1 else f"sigma_{self.p}^{self.p}"
        return f"{lhs} {op} {_fmt(self.power_minimum)}"


@dataclass(frozen=True)
class FujitaInput:
    r: int
    sigma: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"index r must be >= 2, got r={self.r}")
        sig = tuple(parse_rational(s) for s in self.sigma)
        if len(sig) != 3:
            raise ValueError("exactly three sigma values are required")
        for p, s in enumerate(sig, 1):
            if s <= 0:
                raise ValueError(f"sigma_{p} must be positive, got {_fmt(s)}")
        object.__setattr__(self, "sigma", sig)


@dataclass(frozen=True)
class ConditionVerdict:
    p: int
    sigma: Fraction
    threshold: Threshold
    holds: bool


@dataclass(frozen=True)
class FujitaVerdict:
    input: FujitaInput
    conditions: tuple[ConditionVerdict, ConditionVerdict, ConditionVerdict]

    @property
    def passes(self) -> bool:
        return all(c.holds for c in self.conditions)

    @property
    def failed(self) -> list[int]:
        return [c.p for c in self.conditions if not c.holds]


def fujita_minimums(r: int) -> tuple[Threshold, Threshold, Threshold]:
    if r < 2:
        raise ValueError(f"index r must be >= 2, got r={r}")
    base = 1 + Fraction(1, r)
    return (
        Threshold(1, base, strict=False),
        Threshold(2, base ** 2 * (r + 3), strict=False),
        Threshold(3, base ** 3 * (r + 2), strict=True),
    )


def fujita_check(inp: FujitaInput) -> FujitaVerdict:
    """Check the three sigma conditions; passing means the sufficient
    conditions hold, nothing more."""
    ths = fujita_minimums(inp.r)
    conds = tuple(
        ConditionVerdict(t.p, s, t, t.satisfied_by(s)) for t, s in zip(ths, inp.sigma)
    )
    return FujitaVerdict(inp, conds)

"""Ampleness cone test for twisted classes on the one-point blow-up.

On the plane blown up at a point (equivalently the projectivization of
``O + O(-1)`` over the line), a class ``a * C0 + b * f`` in the
zero-section/fiber basis is ample iff three strict inequalities hold:

    ``a + b > 0``,  ``2*a - b*log(3) > 0``,  ``b**2 * log(3) > 4 * a**2``.

The twist studied here produces candidate coefficients from an integer
pair ``(m1, m2)``:

    ``a = (m1 + m2*log(3)) / (2 + 3*log(3))``,
    ``b = (2*m2 - 3*m1) / (2 + 3*log(3))``,

and the point of the scan is that no nonzero integer pair satisfies all
three inequalities simultaneously: the window is empty.  Floating-point
evaluation is fine for generic pairs; any inequality within 1e-12 of its
boundary is flagged marginal rather than silently decided.  The knife-edge
case is ``m1 = 0``, where the second inequality is exactly zero and fails
the strict test; the third inequality fails decisively there, so the
infeasibility conclusion never rests on the marginal comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .exactnum import RationalLike, as_fraction, format_rational

LOG3 = math.log(3.0)
MARGINAL_BAND = 1e-12

_INEQUALITY_NAMES = ("a+b>0", "2a-b*log3>0", "b^2*log3-4a^2>0")


@dataclass(frozen=True)
class ConeCheck:
    """Outcome of the three strict ampleness inequalities for one class.

    ``values`` holds the left-hand sides normalized so each inequality
    reads ``value > 0``; ``marginal`` marks values within 1e-12 of zero,
    where floating point cannot certify a strict sign.
    """

    a: float
    b: float
    m1: Fraction | None
    m2: Fraction | None
    values: tuple[float, float, float]
    holds: tuple[bool, bool, bool]
    marginal: tuple[bool, bool, bool]

    @property
    def feasible(self) -> bool:
        return all(self.holds)

    @property
    def decisive(self) -> bool:
        """Whether the feasibility verdict survives flipping every marginal
        comparison: an infeasible class must have some inequality failing
        outside the band, a feasible one must have no marginal pass."""
        if self.feasible:
            return not any(self.marginal)
        return any(not h and not m for h, m in zip(self.holds, self.marginal))

    def to_json_dict(self) -> dict:
        return {
            "m1": None if self.m1 is None else format_rational(self.m1),
            "m2": None if self.m2 is None else format_rational(self.m2),
            "a": self.a,
            "b": self.b,
            "inequalities": [
                {"name": name, "value": v, "holds": h, "marginal": m}
                for name, v, h, m in zip(
                    _INEQUALITY_NAMES, self.values, self.holds, self.marginal
                )
            ],
            "feasible": self.feasible,
        }


def coefficients_from_m(m1: RationalLike, m2: RationalLike) -> tuple[float, float]:
    """Candidate ``(a, b)`` coefficients for the twist pair ``(m1, m2)``."""
    m1f = float(as_fraction(m1))
    m2f = float(as_fraction(m2))
    denom = 2.0 + 3.0 * LOG3
    return (m1f + m2f * LOG3) / denom, (2.0 * m2f - 3.0 * m1f) / denom


def nakai_check(
    a: float,
    b: float,
    m1: Fraction | None = None,
    m2: Fraction | None = None,
) -> ConeCheck:
    """Evaluate the three strict inequalities at given ``(a, b)``."""
    values = (a + b, 2.0 * a - b * LOG3, b * b * LOG3 - 4.0 * a * a)
    holds = tuple(v > 0.0 for v in values)
    marginal = tuple(abs(v) <= MARGINAL_BAND for v in values)
    return ConeCheck(a, b, m1, m2, values, holds, marginal)


def check_from_m(m1: RationalLike, m2: RationalLike) -> ConeCheck:
    m1f, m2f = as_fraction(m1), as_fraction(m2)
    a, b = coefficients_from_m(m1f, m2f)
    return nakai_check(a, b, m1f, m2f)


def derived_inequalities(m1: Fraction, m2: Fraction) -> tuple[bool, bool, bool]:
    """The three inequalities restated over the pair ``(m1, m2)`` itself.

    Clearing the positive denominator, ``a + b > 0`` iff
    ``-2*m1 + (2 + log3)*m2 > 0`` and ``2*a - b*log3 > 0`` iff ``m1 > 0``;
    those two are equivalences.  The third inequality only *implies*
    ``(9*log3 - 4)*m1**2 > 20*log3*m1*m2``, because the restatement drops
    the negative term ``4*log3*(1 - log3)*m2**2``; it is a necessary
    consequence, not an equivalence.
    """
    m1f, m2f = float(m1), float(m2)
    e1 = -2.0 * m1f + (2.0 + LOG3) * m2f > 0.0
    e2 = m1f > 0.0
    e3 = (9.0 * LOG3 - 4.0) * m1f * m1f > 20.0 * LOG3 * m1f * m2f
    return e1, e2, e3


@dataclass(frozen=True)
class ScanResult:
    """Aggregate of an infeasibility scan over many ``(m1, m2)`` pairs."""

    checked: int
    feasible_pairs: tuple[tuple[str, str], ...]
    marginal_pairs: tuple[tuple[str, str], ...]
    grid_bound: int
    random_samples: int
    seed: int

    @property
    def all_infeasible(self) -> bool:
        return not self.feasible_pairs

    def to_json_dict(self) -> dict:
        return {
            "checked": self.checked,
            "grid_bound": self.grid_bound,
            "random_samples": self.random_samples,
            "seed": self.seed,
            "all_infeasible": self.all_infeasible,
            "feasible_pairs": [list(p) for p in self.feasible_pairs],
            "marginal_pairs": [list(p) for p in self.marginal_pairs],
        }


def infeasibility_scan(
    grid_bound: int = 50,
    random_samples: int = 10_000,
    seed: int = 42,
) -> ScanResult:
    """Scan integer pairs ``|m1|, |m2| <= grid_bound`` plus seeded random
    rational pairs, recording any pair passing all three inequalities.

    Pairs whose verdict rests entirely on marginal comparisons (every
    failed inequality within 1e-12 of zero) are reported separately so a
    reader can audit that no conclusion was decided by float noise; the
    scan's claim is that ``feasible_pairs`` and ``marginal_pairs`` both
    stay empty.
    """
    if grid_bound < 1:
        raise ValueError("grid bound must be at least 1")
    feasible: list[tuple[str, str]] = []
    marginal: list[tuple[str, str]] = []
    checked = 0

    def visit(m1: Fraction, m2: Fraction) -> None:
        nonlocal checked
        checked += 1
        res = check_from_m(m1, m2)
        key = (format_rational(m1), format_rational(m2))
        if res.feasible:
            feasible.append(key)
        elif not res.decisive:
            marginal.append(key)

    for i in range(-grid_bound, grid_bound + 1):
        for j in range(-grid_bound, grid_bound + 1):
            if i == 0 and j == 0:
                continue
            visit(Fraction(i), Fraction(j))

    rng = Random(seed)
    for _ in range(random_samples):
        m1 = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
        m2 = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
        if m1 == 0 and m2 == 0:
            continue
        visit(m1, m2)

    return ScanResult(
        checked=checked,
        feasible_pairs=tuple(feasible),
        marginal_pairs=tuple(marginal),
        grid_bound=grid_bound,
        random_samples=random_samples,
        seed=seed,
    )

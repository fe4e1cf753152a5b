"""Compression planning: split extra key shortening between secrecy and reliability.

Subtracting g extra bits during privacy amplification bounds the
eavesdropper's mutual information by 2**-g / ln 2 -- but only on average
over the hash family.  The bound that holds for the one hash actually
drawn needs two parameters: g' fixes the per-draw information bound
2**-g' / ln 2, and g'' = g - g' fixes the probability 2**-g'' that the
draw misses it.  Picking g' = g therefore means a certain miss (failure
probability 1): some of the subtracted bits must always be spent on
reliability.

This module turns (information target, failure target) into the cheapest
integer split, and tabulates the full tradeoff curve for a given g.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InfeasibleTarget

LN2 = math.log(2.0)


def _check_nonneg(value: int, name: str) -> None:
    if not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {value!r}")


def apa_bound(g: int) -> float:
    """Family-averaged bound on the eavesdropper's information: 2**-g / ln 2."""
    _check_nonneg(g, "g")
    return 2.0**-g / LN2


def ppa_bound(g_prime: int) -> float:
    """Per-draw bound on the eavesdropper's information: 2**-g' / ln 2."""
    _check_nonneg(g_prime, "g_prime")
    return 2.0**-g_prime / LN2


def failure_probability(g_dprime: int) -> float:
    """Probability 2**-g'' that the sampled hash misses the per-draw bound."""
    _check_nonneg(g_dprime, "g_dprime")
    return 2.0**-g_dprime


@dataclass(frozen=True)
class PlanParams:
    """An integer split g = g' + g'' with its derived bounds.

    The exponents are the exact form; the float bounds are derived views,
    so the invariants i_bound = 2**-g'/ln 2, p_fail = 2**-g'' and
    i_bound * p_fail = apa_bound hold by construction.
    """

    g_prime: int
    g_dprime: int

    def __post_init__(self) -> None:
        _check_nonneg(self.g_prime, "g_prime")
        _check_nonneg(self.g_dprime, "g_dprime")

    @property
    def g(self) -> int:
        return self.g_prime + self.g_dprime

    @property
    def i_bound(self) -> float:
        return ppa_bound(self.g_prime)

    @property
    def p_fail(self) -> float:
        return failure_probability(self.g_dprime)

    @property
    def apa_bound(self) -> float:
        return apa_bound(self.g)

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "g_prime": self.g_prime,
            "g_dprime": self.g_dprime,
            "i_bound": self.i_bound,
            "p_fail": self.p_fail,
            "apa_bound": self.apa_bound,
        }


def _least_exponent(bound_at, target: float) -> int:
    """Smallest integer e >= 0 with bound_at(e) <= target.

    bound_at halves per unit step; seed near the answer with a log, then
    settle exactly in the same float arithmetic the bounds use, so the
    result is minimal for the values actually reported.
    """
    e = 0
    if bound_at(0) > target:
        # log difference, not a ratio: a ratio overflows for subnormal targets
        e = max(0, math.ceil(math.log2(bound_at(0)) - math.log2(target)) - 2)
    while bound_at(e) > target:
        e += 1
    while e > 0 and bound_at(e - 1) <= target:
        e -= 1
    return e


def plan_from_targets(i_max: float, pf_max: float) -> PlanParams:
    """Cheapest split meeting an information bound i_max and failure bound pf_max.

    Targets are met by taking the minimal integer exponents (never rounding
    down, which would overshoot a target); total cost g = g' + g'' is then
    minimal as well.
    """
    if not 0.0 < i_max <= 1.0 / LN2:
        raise InfeasibleTarget(f"i_max must lie in (0, 1/ln 2], got {i_max!r}")
    if not 0.0 < pf_max <= 1.0:
        raise InfeasibleTarget(f"pf_max must lie in (0, 1], got {pf_max!r}")
    g_prime = _least_exponent(ppa_bound, i_max)
    g_dprime = _least_exponent(failure_probability, pf_max)
    return PlanParams(g_prime, g_dprime)


def tradeoff_table(g: int) -> list[PlanParams]:
    """All g+1 integer splits of g, in ascending g' order.

    Along the table i_bound * p_fail stays pinned at apa_bound(g): trading
    secrecy against reliability moves along a straight line in log-log
    space, one curve per g.
    """
    _check_nonneg(g, "g")
    return [PlanParams(g_prime, g - g_prime) for g_prime in range(g + 1)]

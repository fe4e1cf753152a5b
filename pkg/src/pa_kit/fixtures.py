"""Synthetic adversary distributions for desk-scale experiments.

The set spans the collision-entropy range the hashing bounds depend on:
uniform (maximal), a point mass (zero), a two-key coin flip, geometric
decay over the whole keyspace, and seeded sparse random laws.
"""

from __future__ import annotations

import random

from .distributions import EveDistribution, validate

FIXTURE_NAMES = ("uniform", "point-mass", "two-point", "geometric", "random-sparse")


def uniform(n: int) -> EveDistribution:
    p = 2.0**-n
    return validate(EveDistribution(n, {i: p for i in range(1 << n)}))


def point_mass(n: int, index: int = 0) -> EveDistribution:
    return validate(EveDistribution(n, {index: 1.0}))


def two_point(n: int, first: int = 0, second: int = 1) -> EveDistribution:
    if first == second:
        raise ValueError("two-point law needs two distinct keys")
    return validate(EveDistribution(n, {first: 0.5, second: 0.5}))


def geometric(n: int, ratio: float = 0.5) -> EveDistribution:
    """Masses proportional to ratio**i over the whole keyspace."""
    if not 0.0 < ratio < 1.0:
        raise ValueError(f"ratio must lie in (0, 1), got {ratio!r}")
    weights = [ratio**i for i in range(1 << n)]
    total = sum(weights)
    return validate(EveDistribution(n, {i: w / total for i, w in enumerate(weights)}))


def random_sparse(n: int, seed: int, support_size: int | None = None) -> EveDistribution:
    """Seeded random law on a random sparse support (an eighth of the space
    by default, at least two keys)."""
    size = 1 << n
    if support_size is None:
        support_size = max(2, size // 8)
    if not 1 <= support_size <= size:
        raise ValueError(f"support_size must lie in [1, {size}], got {support_size}")
    rng = random.Random(seed)
    support = rng.sample(range(size), support_size)
    weights = [rng.expovariate(1.0) for _ in support]
    total = sum(weights)
    return validate(
        EveDistribution(n, {i: w / total for i, w in zip(support, weights)})
    )


def by_name(name: str, n: int, seed: int = 1) -> EveDistribution:
    """Build a fixture from its CLI name; ``seed`` only matters for random-sparse."""
    if name == "uniform":
        return uniform(n)
    if name == "point-mass":
        return point_mass(n)
    if name == "two-point":
        return two_point(n)
    if name == "geometric":
        return geometric(n)
    if name == "random-sparse":
        return random_sparse(n, seed)
    raise ValueError(f"unknown fixture {name!r}; expected one of {FIXTURE_NAMES}")

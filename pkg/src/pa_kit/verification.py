"""Brute-force verification of the hashing bounds at desk scale.

Against a known adversary law the uniformity deficit of every family
member can simply be computed -- exhaustively below the enumeration cap
(exact counts over the whole family) or by seeded Monte Carlo sampling
above it.  Three checks come out of one sweep:

* average bound: the family-mean deficit stays below 2**(k - R) / ln 2,
  where R is the order-2 entropy of the adversary's law;
* tail bound: the family fraction with deficit >= beta stays below
  alpha/beta (first-moment tail inequality), with alpha taken both as the
  measured mean and as the theoretical average bound, side by side;
* failure rate: the fraction of members whose deficit exceeds a chosen
  per-draw bound 2**-g' / ln 2 stays below 2**-g''.

Exhaustive mode is the normative one: its tail fractions are exact
rationals (counts over the family size) and identical inputs produce
bit-identical reports.  Monte Carlo exists only to probe dimensions past
the cap, with sample count and PRNG seed recorded.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .distributions import EveDistribution, renyi_entropy, validate
from .errors import (
    EnumerationTooLarge,
    InsufficientSamples,
    NonPositiveBeta,
)
from .hashing import (
    ENUMERATION_CAP_BITS,
    BitString,
    HashSpec,
    apply_hash,
    outputs_for_seed_block,
    seed_length,
)

LN2 = math.log(2.0)

MIN_MC_SAMPLES = 10_000

DEFAULT_BETA_GRID = (0.1, 0.25, 0.5, 1.0, 2.0)


@dataclass(frozen=True)
class Exhaustive:
    """Enumerate every family member; seed length capped at 24 bits."""


@dataclass(frozen=True)
class MonteCarlo:
    """Sample members uniformly with a fixed PRNG seed."""

    samples: int
    rng_seed: int


Mode = Exhaustive | MonteCarlo


def _mode_dict(mode: Mode) -> dict:
    if isinstance(mode, Exhaustive):
        return {"kind": "exhaustive"}
    return {"kind": "monte_carlo", "samples": mode.samples, "rng_seed": mode.rng_seed}


def _mode_tag(mode: Mode) -> str:
    if isinstance(mode, Exhaustive):
        return "exhaustive"
    return f"mc{mode.samples}s{mode.rng_seed}"


def theoretical_average_bound(renyi_bits: float, k: int) -> float:
    """Guaranteed ceiling on the family-mean deficit: 2**(k - R) / ln 2."""
    return 2.0 ** (k - renyi_bits) / LN2


def _deficits_for_seeds(
    support: Sequence[BitString],
    masses: Sequence[float],
    family: str,
    n: int,
    k: int,
    seeds: np.ndarray,
) -> np.ndarray:
    """Uniformity deficit of each member in ``seeds``, vectorized.

    Must agree with pushforward + security_deficit member by member; the
    test suite cross-checks the two paths.
    """
    cols = np.arange(len(seeds))
    q = np.zeros((1 << k, len(seeds)))
    for key_bits, p in zip(support, masses):
        outs = outputs_for_seed_block(family, n, k, key_bits, seeds)
        q[outs, cols] += p
    logq = np.log2(q, out=np.zeros_like(q), where=q > 0.0)
    entropy = -(q * logq).sum(axis=0)
    return np.maximum(float(k) - entropy, 0.0)


def _sparse_deficit(
    support: Sequence[BitString], masses: Sequence[float], spec: HashSpec
) -> float:
    """Deficit of one member without materializing the 2**k output vector.

    Needed past the vectorization width, where k can be large but the
    adversary law's support is small.
    """
    buckets: dict[int, float] = {}
    for key_bits, p in zip(support, masses):
        y = apply_hash(spec, key_bits).as_int()
        buckets[y] = buckets.get(y, 0.0) + p
    entropy = 0.0
    for y in sorted(buckets):
        p = buckets[y]
        if p > 0.0:
            entropy -= p * math.log2(p)
    return max(0.0, spec.k - entropy)


def _deficits_python(
    support: Sequence[BitString],
    masses: Sequence[float],
    family: str,
    n: int,
    k: int,
    seed_ints: Sequence[int],
    nbits: int,
) -> np.ndarray:
    out = np.empty(len(seed_ints))
    for idx, value in enumerate(seed_ints):
        spec = HashSpec(family, n, k, BitString.from_int(value, nbits))
        out[idx] = _sparse_deficit(support, masses, spec)
    return out


def _iter_deficit_chunks(
    eve: EveDistribution, family: str, k: int, mode: Mode
) -> tuple[Iterator[np.ndarray], int]:
    """Stream deficits over the family, chunked, plus the member count.

    Exhaustive mode walks seeds in ascending order; Monte Carlo draws them
    from the stdlib Mersenne PRNG so the sweep is reproducible for a fixed
    rng_seed.
    """
    n = eve.n
    nbits = seed_length(family, n, k)
    support = [BitString.from_int(i, n) for i, _ in eve.items()]
    masses = [p for _, p in eve.items()]
    chunk = max(1, min(1 << 16, (1 << 22) >> k))

    if isinstance(mode, Exhaustive):
        if nbits > ENUMERATION_CAP_BITS:
            raise EnumerationTooLarge(
                f"seed length {nbits} exceeds the {ENUMERATION_CAP_BITS}-bit cap; "
                "use Monte Carlo mode"
            )
        total = 1 << nbits

        def gen() -> Iterator[np.ndarray]:
            for start in range(0, total, chunk):
                seeds = np.arange(start, min(start + chunk, total), dtype=np.uint64)
                yield _deficits_for_seeds(support, masses, family, n, k, seeds)

        return gen(), total

    if mode.samples < MIN_MC_SAMPLES:
        raise InsufficientSamples(
            f"need at least {MIN_MC_SAMPLES} samples, got {mode.samples}"
        )
    total = mode.samples
    rng = random.Random(mode.rng_seed)

    def gen_mc() -> Iterator[np.ndarray]:
        remaining = total
        while remaining:
            take = min(chunk, remaining)
            values = [rng.getrandbits(nbits) for _ in range(take)]
            if nbits <= 63:
                seeds = np.array(values, dtype=np.uint64)
                yield _deficits_for_seeds(support, masses, family, n, k, seeds)
            else:
                yield _deficits_python(support, masses, family, n, k, values, nbits)
            remaining -= take

    return gen_mc(), total


def _sweep(
    eve: EveDistribution,
    family: str,
    k: int,
    mode: Mode,
    thresholds_ge: Sequence[float] = (),
    thresholds_gt: Sequence[float] = (),
) -> tuple[int, float, list[int], list[int]]:
    """One pass over the family: total deficit plus exceedance counts."""
    chunks, total = _iter_deficit_chunks(eve, family, k, mode)
    deficit_sum = 0.0
    counts_ge = [0] * len(thresholds_ge)
    counts_gt = [0] * len(thresholds_gt)
    for deficits in chunks:
        deficit_sum += float(np.sum(deficits))
        for i, t in enumerate(thresholds_ge):
            counts_ge[i] += int(np.count_nonzero(deficits >= t))
        for i, t in enumerate(thresholds_gt):
            counts_gt[i] += int(np.count_nonzero(deficits > t))
    return total, deficit_sum, counts_ge, counts_gt


@dataclass(frozen=True)
class TailCheck:
    """One row of the tail-bound grid: fraction with deficit >= beta."""

    beta: float
    tail_count: int
    member_count: int
    chebyshev_bound_measured: float
    chebyshev_bound_theoretical: float
    holds_measured: bool
    holds_theoretical: bool

    @property
    def tail_fraction(self) -> Fraction:
        return Fraction(self.tail_count, self.member_count)

    def to_dict(self) -> dict:
        return {
            "beta": self.beta,
            "tail_count": self.tail_count,
            "member_count": self.member_count,
            "tail_fraction": self.tail_count / self.member_count,
            "chebyshev_bound_measured": self.chebyshev_bound_measured,
            "chebyshev_bound_theoretical": self.chebyshev_bound_theoretical,
            "holds_measured": self.holds_measured,
            "holds_theoretical": self.holds_theoretical,
        }


@dataclass(frozen=True)
class VerificationReport:
    """Measured quantities next to their guaranteed ceilings, with pass flags."""

    experiment_id: str
    family: str
    n: int
    k: int
    eve_digest: str
    renyi_bits: float
    member_count: int
    mean_deficit: float
    theoretical_average_bound: float
    average_bound_holds: bool
    tail_checks: tuple[TailCheck, ...]
    mode: Mode

    @property
    def mean_output_entropy(self) -> float:
        return self.k - self.mean_deficit

    @property
    def passed(self) -> bool:
        return self.average_bound_holds and all(
            t.holds_measured and t.holds_theoretical for t in self.tail_checks
        )

    def to_dict(self) -> dict:
        return {
            "format": "pa-kit v1",
            "experiment_id": self.experiment_id,
            "family": self.family,
            "n": self.n,
            "k": self.k,
            "eve_digest": self.eve_digest,
            "renyi_bits": self.renyi_bits,
            "member_count": self.member_count,
            "mean_deficit": self.mean_deficit,
            "mean_output_entropy": self.mean_output_entropy,
            "theoretical_average_bound": self.theoretical_average_bound,
            "average_bound_holds": self.average_bound_holds,
            "tail_checks": [t.to_dict() for t in self.tail_checks],
            "mode": _mode_dict(self.mode),
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def _base_report(
    eve: EveDistribution,
    family: str,
    k: int,
    mode: Mode,
    member_count: int,
    mean_deficit: float,
    tail_checks: tuple[TailCheck, ...],
) -> VerificationReport:
    renyi = renyi_entropy(eve)
    bound = theoretical_average_bound(renyi, k)
    digest = eve.digest()
    exp_id = f"{family}-n{eve.n}-k{k}-{digest[7:15]}-{_mode_tag(mode)}"
    return VerificationReport(
        experiment_id=exp_id,
        family=family,
        n=eve.n,
        k=k,
        eve_digest=digest,
        renyi_bits=renyi,
        member_count=member_count,
        mean_deficit=mean_deficit,
        theoretical_average_bound=bound,
        average_bound_holds=mean_deficit <= bound,
        tail_checks=tail_checks,
        mode=mode,
    )


def verify_average_bound(
    eve: EveDistribution, family: str, k: int, mode: Mode = Exhaustive()
) -> VerificationReport:
    """Measure the family-mean deficit and check it against 2**(k - R) / ln 2.

    Equivalently: the expected output entropy over the family stays above
    k minus that bound.
    """
    validate(eve)
    total, deficit_sum, _, _ = _sweep(eve, family, k, mode)
    return _base_report(eve, family, k, mode, total, deficit_sum / total, ())


def verify_tail_bound(
    eve: EveDistribution,
    family: str,
    k: int,
    beta_grid: Sequence[float] = DEFAULT_BETA_GRID,
    mode: Mode = Exhaustive(),
) -> VerificationReport:
    """Check, for every beta, that P(deficit >= beta) <= alpha / beta.

    Both alphas are recorded: the measured mean deficit (the tighter
    choice) and the theoretical average bound (the guaranteed one); the
    gap between the two columns shows the slack.
    """
    validate(eve)
    betas = [float(b) for b in beta_grid]
    for b in betas:
        if not b > 0.0:
            raise NonPositiveBeta(f"beta must be positive, got {b!r}")
    total, deficit_sum, counts_ge, _ = _sweep(
        eve, family, k, mode, thresholds_ge=betas
    )
    mean_deficit = deficit_sum / total
    theory = theoretical_average_bound(renyi_entropy(eve), k)
    checks = []
    for b, count in zip(betas, counts_ge):
        fraction = Fraction(count, total)
        bound_measured = mean_deficit / b
        bound_theory = theory / b
        checks.append(
            TailCheck(
                beta=b,
                tail_count=count,
                member_count=total,
                chebyshev_bound_measured=bound_measured,
                chebyshev_bound_theoretical=bound_theory,
                holds_measured=fraction <= bound_measured,
                holds_theoretical=fraction <= bound_theory,
            )
        )
    return _base_report(eve, family, k, mode, total, mean_deficit, tuple(checks))


@dataclass(frozen=True)
class FailureRateResult:
    """Measured miss rate of a per-draw bound next to its guarantee.

    The implied average exponent is R - k, the g for which the family-mean
    deficit of this law is guaranteed below 2**-g / ln 2; both it and the
    raw alpha are recorded rather than assuming one accounting.  A bound
    above 1 is vacuous (the law is too concentrated for this g') but the
    fraction is still reported.
    """

    family: str
    n: int
    k: int
    g_prime: int
    threshold: float
    renyi_bits: float
    implied_g: float
    g_dprime: float
    bound: float
    exceed_count: int
    member_count: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.exceed_count, self.member_count)

    @property
    def holds(self) -> bool:
        return self.fraction <= self.bound

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "k": self.k,
            "g_prime": self.g_prime,
            "threshold": self.threshold,
            "renyi_bits": self.renyi_bits,
            "implied_g": self.implied_g,
            "g_dprime": self.g_dprime,
            "bound": self.bound,
            "exceed_count": self.exceed_count,
            "member_count": self.member_count,
            "fraction": self.exceed_count / self.member_count,
            "holds": self.holds,
        }


def empirical_failure_rate(
    eve: EveDistribution,
    family: str,
    k: int,
    g_prime: int,
    mode: Mode = Exhaustive(),
) -> FailureRateResult:
    """Fraction of members with deficit above 2**-g' / ln 2, with its bound 2**-g''.

    g'' is derived from the implied average exponent g = R - k, so the
    bound equals (average bound) / (per-draw bound).
    """
    validate(eve)
    if not isinstance(g_prime, int) or g_prime < 0:
        raise ValueError(f"g_prime must be a non-negative integer, got {g_prime!r}")
    threshold = 2.0**-g_prime / LN2
    total, _, _, counts_gt = _sweep(
        eve, family, k, mode, thresholds_gt=(threshold,)
    )
    renyi = renyi_entropy(eve)
    implied_g = renyi - k
    g_dprime = implied_g - g_prime
    return FailureRateResult(
        family=family,
        n=eve.n,
        k=k,
        g_prime=g_prime,
        threshold=threshold,
        renyi_bits=renyi,
        implied_g=implied_g,
        g_dprime=g_dprime,
        bound=2.0**-g_dprime,
        exceed_count=counts_gt[0],
        member_count=total,
    )

"""Finite probability distributions over n-bit keyspaces.

An adversary's conditional law over the shared key is stored sparsely
(index -> mass), since laws of interest often concentrate on a few keys
inside a large space.  Hashed-output distributions live on the small 2**k
output space and are stored densely.  All entropies are base-2 (bits) with
the usual 0*log(0) = 0 convention, and every sum accumulates in index
order so repeated runs print identical digits.
"""

from __future__ import annotations

import csv
import hashlib
import math
from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NegativeProbability,
    NotNormalized,
)
from .hashing import BitString, HashSpec, apply_hash

NORMALIZATION_TOL = 1e-9


@dataclass(frozen=True)
class EveDistribution:
    """Sparse distribution over a 2**n keyspace.

    Zero-mass entries are dropped at construction, so absence from the map
    always means zero mass.  Instances are treated as immutable and are
    safe to share across threads.
    """

    n: int
    probs: dict[int, float]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("key bit-length n must be >= 1")
        object.__setattr__(
            self, "probs", {i: p for i, p in self.probs.items() if p != 0.0}
        )

    def items(self) -> list[tuple[int, float]]:
        """(index, mass) pairs in ascending index order."""
        return sorted(self.probs.items())

    def digest(self) -> str:
        """Stable content digest, used to identify a law in reports."""
        h = hashlib.sha256()
        h.update(f"n={self.n}".encode())
        for index, p in self.items():
            h.update(f";{index}:{p!r}".encode())
        return "sha256:" + h.hexdigest()


@dataclass(frozen=True)
class OutputDistribution:
    """Dense distribution over the 2**k hashed-output space."""

    k: int
    probs: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("output bit-length k must be >= 1")
        object.__setattr__(self, "probs", tuple(self.probs))
        if len(self.probs) != 1 << self.k:
            raise ValueError(
                f"need {1 << self.k} masses for k={self.k}, got {len(self.probs)}"
            )
        total = 0.0
        for y, p in enumerate(self.probs):
            if p < 0.0:
                raise NegativeProbability(f"probs[{y}] = {p}")
            total += p
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise NotNormalized(f"masses sum to {total!r}")


def validate(dist: EveDistribution) -> EveDistribution:
    """Check all invariants, returning the distribution unchanged."""
    total = 0.0
    for index, p in dist.items():
        if p < 0.0:
            raise NegativeProbability(f"probs[{index}] = {p}")
        if index < 0 or index >> dist.n:
            raise IndexOutOfRange(f"index {index} outside [0, 2**{dist.n})")
        total += p
    if abs(total - 1.0) > NORMALIZATION_TOL:
        raise NotNormalized(f"masses sum to {total!r}")
    return dist


def _masses(dist: EveDistribution | OutputDistribution):
    if isinstance(dist, EveDistribution):
        return (p for _, p in dist.items())
    return iter(dist.probs)


def shannon_entropy(dist: EveDistribution | OutputDistribution) -> float:
    """Shannon entropy in bits: -sum p*log2(p)."""
    acc = 0.0
    for p in _masses(dist):
        if p > 0.0:
            acc -= p * math.log2(p)
    return acc


def renyi_entropy(dist: EveDistribution) -> float:
    """Order-2 (collision) entropy in bits: -log2 sum p**2.

    Never exceeds the Shannon entropy; it is the quantity that limits how
    much near-uniform key material hashing can extract.
    """
    acc = 0.0
    for _, p in dist.items():
        acc += p * p
    return -math.log2(acc) + 0.0  # avoid -0.0 for a point mass


def pushforward(dist: EveDistribution, spec: HashSpec) -> OutputDistribution:
    """Image of the law under one hash: Q(y) sums the masses of y's fiber.

    Key index w corresponds to the bit string ``BitString.from_int(w, n)``.
    Total mass is conserved exactly up to reordering of the input masses.
    """
    if spec.n != dist.n:
        raise DimensionMismatch(f"distribution over {dist.n} bits, hash expects {spec.n}")
    masses = [0.0] * (1 << spec.k)
    for index, p in dist.items():
        y = apply_hash(spec, BitString.from_int(index, dist.n))
        masses[y.as_int()] += p
    return OutputDistribution(spec.k, tuple(masses))


def security_deficit(q: OutputDistribution) -> float:
    """Bits separating a hashed output from uniform: k - H(Q).

    Zero exactly when Q is uniform; clamped at zero against float rounding.
    """
    return max(0.0, q.k - shannon_entropy(q))


CSV_HEADER = ("index", "probability")


def load_eve_csv(path, n: int) -> EveDistribution:
    """Read an ``index,probability`` CSV into a validated distribution.

    Lines starting with ``#`` are skipped; explicit zero-mass rows are
    rejected, matching the invariant that absent means zero.
    """
    probs: dict[int, float] = {}
    with open(path, "r", encoding="ascii", newline="") as fh:
        rows = csv.reader(line for line in fh if not line.startswith("#"))
        header = next(rows, None)
        if header is None or tuple(h.strip() for h in header) != CSV_HEADER:
            raise ValueError(f"expected header {','.join(CSV_HEADER)!r}, got {header}")
        for row in rows:
            if not row:
                continue
            index, p = int(row[0]), float(row[1])
            if p == 0.0:
                raise ValueError(f"zero-probability row for index {index} not allowed")
            if index in probs:
                raise ValueError(f"duplicate index {index}")
            probs[index] = p
    return validate(EveDistribution(n, probs))


def save_eve_csv(dist: EveDistribution, path) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write("# pa-kit v1\n")
        fh.write(",".join(CSV_HEADER) + "\n")
        for index, p in dist.items():
            fh.write(f"{index},{p!r}\n")

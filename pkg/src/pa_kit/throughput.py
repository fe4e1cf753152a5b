"""Parametric secret-key throughput model.

Five parameters stand in for a full link budget: pulse rate, detection
probability, sifting fraction, error-correction disclosure fraction, and
privacy-amplification block size.  The quantity treated exactly is the
marginal cost of extra compression: each subtracted bit costs one bit per
processed block, so the secret rate is affine in g with slope
-(sifted rate) / (block size).  Absolute rates are only as good as the
five inputs; the g-dependence is the point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BlockExhausted


@dataclass(frozen=True)
class LinkModel:
    """Link and post-processing parameters at one operating point."""

    prf_hz: float
    p_click: float
    leak_fraction: float
    block_size_m: int
    sift_fraction: float = 0.5

    def __post_init__(self) -> None:
        if not self.prf_hz > 0.0:
            raise ValueError(f"prf_hz must be positive, got {self.prf_hz!r}")
        if not 0.0 < self.p_click <= 1.0:
            raise ValueError(f"p_click must lie in (0, 1], got {self.p_click!r}")
        if not 0.0 < self.sift_fraction <= 1.0:
            raise ValueError(f"sift_fraction must lie in (0, 1], got {self.sift_fraction!r}")
        if not 0.0 <= self.leak_fraction < 1.0:
            raise ValueError(f"leak_fraction must lie in [0, 1), got {self.leak_fraction!r}")
        if not isinstance(self.block_size_m, int) or self.block_size_m < 1:
            raise ValueError(f"block_size_m must be a positive integer, got {self.block_size_m!r}")

    @property
    def sifted_rate_hz(self) -> float:
        return self.prf_hz * self.p_click * self.sift_fraction

    @property
    def block_rate_hz(self) -> float:
        return self.sifted_rate_hz / self.block_size_m


def secret_rate(model: LinkModel, g: int) -> float:
    """Secret bits per second after disclosure and g extra bits per block.

    Subtracting exactly everything the block has left yields rate 0; asking
    for more raises BlockExhausted.
    """
    if not isinstance(g, int) or g < 0:
        raise ValueError(f"g must be a non-negative integer, got {g!r}")
    if model.block_size_m * (1.0 - model.leak_fraction) - g < 0.0:
        raise BlockExhausted(
            f"g={g} exceeds the {model.block_size_m}-bit block's budget after disclosure"
        )
    return model.sifted_rate_hz * (1.0 - model.leak_fraction) - g * model.block_rate_hz


def throughput_curve(
    model_at_period: Sequence[tuple[float, LinkModel]],
    g_values: Iterable[int],
) -> list[tuple[float, int, float]]:
    """Rows (period_s, g, rate_bps) over operating points and compression amounts.

    For each period the rows at different g differ by a fixed multiple of
    that point's block rate, so curves for different g never cross.
    """
    g_values = list(g_values)
    if not model_at_period or not g_values:
        raise ValueError("need at least one operating point and one g value")
    rows = []
    for period_s, model in model_at_period:
        for g in g_values:
            rows.append((float(period_s), int(g), secret_rate(model, g)))
    return rows

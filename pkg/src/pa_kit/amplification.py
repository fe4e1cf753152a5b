"""The privacy-amplification step: length accounting and the hash itself.

How many bits to subtract is decided elsewhere (the planner); estimating
how many bits leaked before amplification is out of scope and enters only
as an input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distributions import EveDistribution, pushforward, security_deficit
from .errors import DimensionMismatch, KeyExhausted
from .hashing import BitString, HashSpec, apply_hash


def output_length(n_input: int, leaked_bits: int, g: int) -> int:
    """Final key length after removing leaked bits and g extra compression bits."""
    if leaked_bits < 0 or g < 0:
        raise ValueError("leaked_bits and g must be non-negative")
    k = n_input - leaked_bits - g
    if k < 1:
        raise KeyExhausted(f"{n_input} - {leaked_bits} - {g} = {k}: no key left")
    return k


@dataclass(frozen=True)
class CompressionAccount:
    """Bookkeeping for one privacy-amplification pass over an n-bit sifted key."""

    n_input: int
    leaked_bits: int
    g: int

    def __post_init__(self) -> None:
        output_length(self.n_input, self.leaked_bits, self.g)

    @property
    def k_output(self) -> int:
        return output_length(self.n_input, self.leaked_bits, self.g)


def amplify(key: BitString, spec: HashSpec) -> BitString:
    """Compress a shared key with the agreed hash.

    Purely deterministic: both parties applying the same spec to the same
    key obtain bit-identical outputs.
    """
    return apply_hash(spec, key)


def uniformizer_deficit(eve: EveDistribution, spec: HashSpec) -> float:
    """How many bits short of uniform the hashed key is against a known adversary law.

    This is a verification-time tool: it needs the adversary's full
    distribution, which a deployed protocol never has.  Zero iff the
    pushforward is exactly uniform.
    """
    if eve.n != spec.n:
        raise DimensionMismatch(f"distribution over {eve.n} bits, hash expects {spec.n}")
    return security_deficit(pushforward(eve, spec))

"""Carter-Wegman universal hashing over GF(2).

Two families are provided, both drawn from short random seeds:

* ``toeplitz`` -- the k x n binary Toeplitz matrix built from n+k-1 seed
  bits, applied as y_j = XOR_i T[j,i] x_i with T[j,i] = seed[(j-i)+(n-1)].
* ``toeplitz-affine`` -- the same matrix followed by an XOR with k extra
  seed bits (a random offset), for strong universality.

For any two distinct inputs, the fraction of family members mapping them
to the same output is exactly 2**-k, which is what makes these families
suitable for privacy amplification.

Bit order is MSB-first within each byte: bit i of a BitString is
``(data[i // 8] >> (7 - i % 8)) & 1``, and trailing pad bits are zero.
The naive O(n*k) bit loop is the normative definition of ``apply_hash``;
the fast paths here (carry-less convolution on machine integers, the
vectorized whole-family sweep) must match it bit for bit and are checked
against it in the test suite.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import (
    DimensionMismatch,
    EnumerationTooLarge,
    EqualInputs,
    InvalidDimensions,
)

FAMILIES = ("toeplitz", "toeplitz-affine")

# Exhaustive sweeps stop at 2**24 family members so desk-scale experiments
# finish in minutes.
ENUMERATION_CAP_BITS = 24

_SEED_CHUNK = 1 << 18


@dataclass(frozen=True)
class BitString:
    """Immutable fixed-length bit sequence, MSB-first within each byte."""

    length: int
    data: bytes

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError("BitString length must be >= 1")
        nbytes = (self.length + 7) // 8
        if len(self.data) != nbytes:
            raise ValueError(
                f"{self.length} bits need {nbytes} bytes, got {len(self.data)}"
            )
        pad = 8 * nbytes - self.length
        if pad and self.data[-1] & ((1 << pad) - 1):
            raise ValueError("padding bits in the final byte must be zero")

    @classmethod
    def from_int(cls, value: int, length: int) -> "BitString":
        """Read ``value`` as ``length`` bits, bit 0 being the 2**(length-1) place."""
        if value < 0 or value >> length:
            raise ValueError(f"value {value} does not fit in {length} bits")
        nbytes = (length + 7) // 8
        return cls(length, (value << (8 * nbytes - length)).to_bytes(nbytes, "big"))

    @classmethod
    def from_bits(cls, bits) -> "BitString":
        bits = list(bits)
        value = 0
        for b in bits:
            value = (value << 1) | (b & 1)
        return cls.from_int(value, len(bits))

    @classmethod
    def from_hex(cls, text: str, length: int | None = None) -> "BitString":
        data = bytes.fromhex(text.strip())
        if length is None:
            length = 8 * len(data)
        return cls(length, data)

    @classmethod
    def zeros(cls, length: int) -> "BitString":
        return cls.from_int(0, length)

    def as_int(self) -> int:
        pad = 8 * len(self.data) - self.length
        return int.from_bytes(self.data, "big") >> pad

    def bit(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.data[i // 8] >> (7 - i % 8)) & 1

    def bits(self) -> list[int]:
        value = self.as_int()
        return [(value >> (self.length - 1 - i)) & 1 for i in range(self.length)]

    def to_hex(self) -> str:
        return self.data.hex()

    def __len__(self) -> int:
        return self.length

    def __xor__(self, other: "BitString") -> "BitString":
        if self.length != other.length:
            raise DimensionMismatch(
                f"cannot xor {self.length}-bit and {other.length}-bit strings"
            )
        return BitString(self.length, bytes(a ^ b for a, b in zip(self.data, other.data)))


def _check_dims(family: str, n: int, k: int) -> None:
    if family not in FAMILIES:
        raise InvalidDimensions(f"unknown family {family!r}; expected one of {FAMILIES}")
    if not 1 <= k <= n:
        raise InvalidDimensions(f"need 1 <= k <= n, got n={n}, k={k}")


def seed_length(family: str, n: int, k: int) -> int:
    """Seed bits a family member needs: n+k-1, plus k more for the affine offset."""
    _check_dims(family, n, k)
    if family == "toeplitz":
        return n + k - 1
    return n + 2 * k - 1


def family_size(family: str, n: int, k: int) -> int:
    return 1 << seed_length(family, n, k)


@dataclass(frozen=True)
class HashSpec:
    """One concrete family member: family tag, dimensions, and its seed bits.

    For ``toeplitz-affine`` the seed is the n+k-1 Toeplitz bits followed by
    the k offset bits.
    """

    family: str
    n: int
    k: int
    seed: BitString

    def __post_init__(self) -> None:
        want = seed_length(self.family, self.n, self.k)
        if self.seed.length != want:
            raise InvalidDimensions(
                f"{self.family} with n={self.n}, k={self.k} needs a {want}-bit seed, "
                f"got {self.seed.length}"
            )

    def to_json(self) -> str:
        doc = {
            "format": "pa-kit v1",
            "family": self.family,
            "n": self.n,
            "k": self.k,
            "seed_hex": self.seed.to_hex(),
        }
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "HashSpec":
        doc = json.loads(text)
        family, n, k = doc["family"], doc["n"], doc["k"]
        seed = BitString.from_hex(doc["seed_hex"], seed_length(family, n, k))
        return cls(family, n, k, seed)


def sample_hash(family: str, n: int, k: int, rng_seed: int) -> HashSpec:
    """Draw one family member from a deterministic PRNG.

    Identical (family, n, k, rng_seed) always yields the identical spec, so
    both parties can derive the hash from one shared seed value.  The PRNG
    is for experiments and key-agreement plumbing, not a cryptographic
    seed source.
    """
    nbits = seed_length(family, n, k)
    rng = random.Random(rng_seed)
    return HashSpec(family, n, k, BitString.from_int(rng.getrandbits(nbits), nbits))


def apply_hash(spec: HashSpec, x: BitString) -> BitString:
    """Hash an n-bit input down to k bits.

    Equivalent to the defining bit loop y_j = XOR_i T[j,i] x_i, computed as
    a carry-less convolution: output bit j is coefficient n-1+j of the
    GF(2) polynomial product seed(z) * x(z).
    """
    if x.length != spec.n:
        raise DimensionMismatch(f"input has {x.length} bits, spec expects {spec.n}")
    n, k = spec.n, spec.k
    seed_int = spec.seed.as_int()
    if spec.family == "toeplitz-affine":
        toeplitz_int, offset = seed_int >> k, seed_int & ((1 << k) - 1)
    else:
        toeplitz_int, offset = seed_int, 0
    conv = 0
    a = x.as_int()
    while a:
        low = a & -a
        conv ^= toeplitz_int << (low.bit_length() - 1)
        a ^= low
    out = ((conv >> (n - 1)) & ((1 << k) - 1)) ^ offset
    return BitString.from_int(out, k)


def enumerate_family(family: str, n: int, k: int) -> Iterator[HashSpec]:
    """Yield every family member exactly once, in ascending seed order."""
    nbits = seed_length(family, n, k)
    if nbits > ENUMERATION_CAP_BITS:
        raise EnumerationTooLarge(
            f"seed length {nbits} exceeds the {ENUMERATION_CAP_BITS}-bit enumeration cap"
        )
    for value in range(1 << nbits):
        yield HashSpec(family, n, k, BitString.from_int(value, nbits))


def _lsb_first_int(x: BitString) -> int:
    """Integer with input bit i at binary place i (the reverse of as_int)."""
    value = x.as_int()
    acc = 0
    for i in range(x.length):
        acc |= ((value >> (x.length - 1 - i)) & 1) << i
    return acc


def _parity(values: np.ndarray) -> np.ndarray:
    return np.bitwise_count(values).astype(np.uint64) & np.uint64(1)


def outputs_for_seed_block(
    family: str, n: int, k: int, x: BitString, seed_values: np.ndarray
) -> np.ndarray:
    """Hash one input under many family members at once.

    ``seed_values`` holds seed integers in the same encoding as
    ``HashSpec.seed.as_int()``; the result holds ``apply_hash`` outputs as
    integers, member by member.  Only valid while seeds fit in 64 bits,
    which the enumeration cap guarantees.
    """
    _check_dims(family, n, k)
    if x.length != n:
        raise DimensionMismatch(f"input has {x.length} bits, expected {n}")
    seeds = seed_values.astype(np.uint64, copy=False)
    if family == "toeplitz-affine":
        toeplitz_part = seeds >> np.uint64(k)
        out = seeds & np.uint64((1 << k) - 1)
    else:
        toeplitz_part = seeds
        out = np.zeros(len(seeds), dtype=np.uint64)
    x_lsb = _lsb_first_int(x)
    for j in range(k):
        shift = k - 1 - j
        mask = np.uint64(x_lsb << shift)
        out = out ^ (_parity(toeplitz_part & mask) << np.uint64(shift))
    return out


def collision_count(
    family: str, n: int, k: int, x: BitString, x2: BitString
) -> tuple[int, int]:
    """Count family members hashing two distinct inputs to the same output.

    Exhaustive over the whole family; both values are exact integers.  For
    these families collisions/size is exactly 2**-k for every distinct pair.
    """
    nbits = seed_length(family, n, k)
    if x.length != n or x2.length != n:
        raise DimensionMismatch(
            f"inputs have {x.length} and {x2.length} bits, expected {n}"
        )
    if x.data == x2.data:
        raise EqualInputs("collision counting needs x != x'")
    if nbits > ENUMERATION_CAP_BITS:
        raise EnumerationTooLarge(
            f"seed length {nbits} exceeds the {ENUMERATION_CAP_BITS}-bit enumeration cap"
        )
    size = 1 << nbits
    collisions = 0
    for start in range(0, size, _SEED_CHUNK):
        seeds = np.arange(start, min(start + _SEED_CHUNK, size), dtype=np.uint64)
        a = outputs_for_seed_block(family, n, k, x, seeds)
        b = outputs_for_seed_block(family, n, k, x2, seeds)
        collisions += int(np.count_nonzero(a == b))
    return collisions, size


def write_key_file(key: BitString, path, fmt: str = "hex") -> None:
    """Write a key as raw padded bytes or as lowercase hex text."""
    if fmt == "raw":
        with open(path, "wb") as fh:
            fh.write(key.data)
    elif fmt == "hex":
        with open(path, "w", encoding="ascii") as fh:
            fh.write(key.to_hex() + "\n")
    else:
        raise ValueError(f"unknown key format {fmt!r}")


def read_key_file(path, fmt: str = "hex", length: int | None = None) -> BitString:
    """Read a key file; ``length`` trims trailing pad bits when the bit
    count is not a byte multiple (otherwise all stored bits are taken)."""
    if fmt == "raw":
        with open(path, "rb") as fh:
            data = fh.read()
        if length is None:
            length = 8 * len(data)
        return BitString(length, data)
    if fmt == "hex":
        with open(path, "r", encoding="ascii") as fh:
            return BitString.from_hex(fh.read(), length)
    raise ValueError(f"unknown key format {fmt!r}")
